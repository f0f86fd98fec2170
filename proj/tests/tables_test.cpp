#include "doctest.h"
#include "garside/moebius.hpp"
#include "garside/series.hpp"
#include "garside/tables.hpp"
#include "test_util.hpp"

using namespace garside;
using test::big_vec;

TEST_CASE("type A: the displayed A3 table") {
    const GrowthTable t = build_table_a(3, 6);
    CHECK(t.rows[0] == big_vec({1, 1, 1, 1}));
    CHECK(t.rows[1] == big_vec({1, 2, 3, 3}));
    CHECK(t.rows[2] == big_vec({2, 5, 8, 8}));
    CHECK(t.rows[3] == big_vec({4, 11, 19, 19}));
    CHECK(t.rows[4] == big_vec({8, 24, 43, 43}));
    CHECK(t.rows[5] == big_vec({16, 51, 94, 94}));
    CHECK(t.rows[6] == big_vec({33, 108, 202, 202}));
}

TEST_CASE("type A: A5 row 8 and the trivial A1 column") {
    CHECK(build_table_a(5, 8).rows[8] == big_vec({317, 1241, 3279, 6786, 10829, 10829}));
    CHECK(build_table_a(1, 4).column(2) == big_vec({1, 1, 1, 1, 1}));
}

TEST_CASE("type B: displayed B3 rows") {
    const GrowthTable t = build_table_b(3, 6);
    CHECK(t.rows[3] == big_vec({4, 12, 20, 20}));
    CHECK(t.rows[6] == big_vec({45, 150, 263, 263}));
    const GrowthTable zero_rows = build_table_b(5, 0);
    CHECK(zero_rows.rows[0] == big_vec({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("type D: displayed D4 rows") {
    const GrowthTable t = build_table_d(4, 6);
    CHECK(t.rows[1] == big_vec({1, 2, 4, 4}));
    CHECK(t.rows[2] == big_vec({2, 6, 13, 13}));
    CHECK(t.rows[6] == big_vec({72, 277, 732, 732}));
}

TEST_CASE("row invariants: monotone columns, equal last pair") {
    for (const char* name : {"A4", "B4", "D5"}) {
        const MonoidSpec spec = MonoidSpec::parse(name);
        GrowthTable t;
        if (spec.family == Family::A) t = build_table_a(spec.rank, 12);
        if (spec.family == Family::B) t = build_table_b(spec.rank, 12);
        if (spec.family == Family::D) t = build_table_d(spec.rank, 12);
        for (int k = 0; k < t.row_count(); ++k) {
            const auto& row = t.rows[static_cast<std::size_t>(k)];
            for (std::size_t i = 1; i < row.size(); ++i) CHECK(row[i - 1] <= row[i]);
            CHECK(row[row.size() - 2] == row.back());
        }
    }
}

TEST_CASE("alpha series: displayed last columns") {
    CHECK(alpha_series(MonoidSpec::parse("A3"), 6) == big_vec({1, 3, 8, 19, 43, 94, 202}));
    CHECK(alpha_series(MonoidSpec::parse("B3"), 6) == big_vec({1, 3, 8, 20, 48, 113, 263}));
    CHECK(alpha_series(MonoidSpec::parse("D4"), 6) == big_vec({1, 4, 13, 38, 105, 280, 732}));
}

TEST_CASE("series/recurrence duality") {
    for (Family family : {Family::A, Family::B, Family::D}) {
        const int lo = family == Family::D ? 2 : 1;
        for (int n = lo; n <= 6; ++n) {
            const MonoidSpec spec = MonoidSpec::make(family, n);
            CAPTURE(spec.to_string());
            const auto from_table = alpha_series(spec, 40);
            const auto from_series = invert_series(moebius_polynomial(spec).polynomial, 40);
            CHECK(from_table == from_series);
        }
    }
}

TEST_CASE("stabilization: small entries agree across ranks") {
    const GrowthTable t5 = build_table_a(5, 8);
    const GrowthTable t6 = build_table_a(6, 8);
    const GrowthTable t9 = build_table_a(9, 8);
    for (int k = 0; k <= 8; ++k)
        for (int i = 1; i <= 6; ++i) {
            if (k + i - 1 > 5) continue;  // only entries stabilized at n = 5
            CAPTURE(k);
            CAPTURE(i);
            CHECK(t5.entry(k, i) == t6.entry(k, i));
            CHECK(t5.entry(k, i) == t9.entry(k, i));
        }
}

TEST_CASE("limit table: both routes and stabilized entries") {
    const GrowthTable direct = build_limit_table(10, 8);
    const GrowthTable delegated = build_limit_table_delegated(10, 8);
    CHECK(direct.rows == delegated.rows);

    const auto first_column = direct.column(1);
    const auto published_prefix = big_vec({1, 1, 2, 4, 9, 21, 52, 133});
    REQUIRE(first_column.size() >= published_prefix.size());
    for (std::size_t k = 0; k < published_prefix.size(); ++k) CHECK(first_column[k] == published_prefix[k]);
    CHECK(direct.entry(5, 2) == 76);   // stabilized entry of the rank-6 table
    CHECK(direct.entry(4, 3) == 69);   // stabilized entry of the rank-6 table
    CHECK(direct.entry(0, 7) == 1);

    // wider route agreement, k + i <= 30
    const GrowthTable wide = build_limit_table(24, 6);
    const GrowthTable wide_check = build_limit_table_delegated(24, 6);
    CHECK(wide.rows == wide_check.rows);
}

TEST_CASE("column deltas are nonnegative strata sizes") {
    const GrowthTable t = build_table_b(4, 10);
    for (int k = 1; k <= 10; ++k)
        for (int i = 2; i <= t.column_count; ++i)
            CHECK(t.entry(k, i) >= t.entry(k, i - 1));
}
