#include "garside/tables.hpp"

#include <cassert>
#include <stdexcept>

namespace garside {

namespace {
const BigInt kZero(0);
const BigInt kOne(1);
}  // namespace

const BigInt& GrowthTable::entry(int k, int i) const {
    if (k < 0) return kZero;
    if (k == 0) return kOne;
    if (i == 0) return kZero;
    if (k >= row_count() || i > column_count) throw std::out_of_range("GrowthTable::entry");
    return rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i) - 1];
}

std::vector<BigInt> GrowthTable::last_column() const { return column(column_count); }

std::vector<BigInt> GrowthTable::column(int i) const {
    if (i < 1 || i > column_count) throw std::out_of_range("GrowthTable::column");
    std::vector<BigInt> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[static_cast<std::size_t>(i) - 1]);
    return out;
}

namespace {

// Rows are filled top-down, left-to-right: the recurrences read earlier
// columns of the same row and earlier rows only.
GrowthTable finite_table(const MonoidSpec& spec, int max_k) {
    const int n = spec.rank;
    const bool type_d = spec.family == Family::D;
    const int cols = type_d ? n : n + 1;

    GrowthTable table;
    table.spec = spec;
    table.column_count = cols;
    table.rows.assign(static_cast<std::size_t>(max_k) + 1,
                      std::vector<BigInt>(static_cast<std::size_t>(cols), kOne));

    auto get = [&](int k, int col) -> const BigInt& {
        if (k < 0) return kZero;
        return table.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(col) - 1];
    };

    for (int k = 1; k <= max_k; ++k) {
        auto& row = table.rows[static_cast<std::size_t>(k)];
        for (int i = 1; i < cols; ++i) {
            BigInt v = i > 1 ? row[static_cast<std::size_t>(i) - 2] : kZero;
            switch (spec.family) {
                case Family::A:
                    for (int j = i; j <= n; ++j) {
                        const std::int64_t off = binom2(j - i + 2);
                        if (off > k) break;
                        const BigInt& term = get(k - static_cast<int>(off), j + 1);
                        if ((j - i) % 2 == 0)
                            v += term;
                        else
                            v -= term;
                    }
                    break;
                case Family::B: {
                    for (int j = i; j <= n - 1; ++j) {
                        const std::int64_t off = binom2(j - i + 2);
                        if (off > k) break;
                        const BigInt& term = get(k - static_cast<int>(off), j + 1);
                        if ((j - i) % 2 == 0)
                            v += term;
                        else
                            v -= term;
                    }
                    const std::int64_t off = static_cast<std::int64_t>(n - i + 1) * (n - i + 1);
                    if (off <= k) {
                        const BigInt& term = get(k - static_cast<int>(off), n + 1);
                        if ((n - i) % 2 == 0)
                            v += term;
                        else
                            v -= term;
                    }
                    break;
                }
                case Family::D: {
                    for (int j = i; j <= n - 1; ++j) {
                        const std::int64_t off = binom2(j - i + 2);
                        if (off > k) break;
                        const BigInt& term = get(k - static_cast<int>(off), j + 1);
                        if ((j - i) % 2 == 0)
                            v += term;
                        else
                            v -= term;
                    }
                    const std::int64_t off_sq = binom2(n - i + 1);
                    const std::int64_t off_prod = static_cast<std::int64_t>(n - i + 1) * (n - i);
                    BigInt pair(0);
                    if (off_sq <= k) pair += get(k - static_cast<int>(off_sq), n);
                    if (off_prod <= k) pair -= get(k - static_cast<int>(off_prod), n);
                    if ((n - i - 1) % 2 == 0)
                        v += pair;
                    else
                        v -= pair;
                    break;
                }
                default:
                    throw std::invalid_argument("tables exist only for families A, B, D");
            }
            row[static_cast<std::size_t>(i) - 1] = std::move(v);
        }
        row[static_cast<std::size_t>(cols) - 1] = row[static_cast<std::size_t>(cols) - 2];
    }
    return table;
}

}  // namespace

GrowthTable build_table_a(int n, int max_k) {
    if (n < 1 || max_k < 0) throw std::invalid_argument("build_table_a: need n >= 1, K >= 0");
    return finite_table(MonoidSpec::make(Family::A, n), max_k);
}

GrowthTable build_table_b(int n, int max_k) {
    if (n < 1 || max_k < 0) throw std::invalid_argument("build_table_b: need n >= 1, K >= 0");
    return finite_table(MonoidSpec::make(Family::B, n), max_k);
}

GrowthTable build_table_d(int n, int max_k) {
    if (n < 2 || max_k < 0) throw std::invalid_argument("build_table_d: need n >= 2, K >= 0");
    return finite_table(MonoidSpec::make(Family::D, n), max_k);
}

GrowthTable build_limit_table(int max_k, int columns) {
    if (max_k < 0 || columns < 1)
        throw std::invalid_argument("build_limit_table: need K >= 0, columns >= 1");

    // Row k is computed out to columns + (max_k - k) entries: the term at
    // row offset d(d+1)/2 reads d columns to the right, and d(d+1)/2 >= d.
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(max_k) + 1);
    auto width = [&](int k) { return columns + (max_k - k); };
    rows[0].assign(static_cast<std::size_t>(width(0)), kOne);
    for (int k = 1; k <= max_k; ++k) {
        auto& row = rows[static_cast<std::size_t>(k)];
        row.resize(static_cast<std::size_t>(width(k)));
        for (int i = 1; i <= width(k); ++i) {
            BigInt v = i > 1 ? row[static_cast<std::size_t>(i) - 2] : kZero;
            for (int d = 1;; ++d) {
                const std::int64_t off = binom2(d + 1);
                if (off > k) break;
                const int kk = k - static_cast<int>(off);
                const int col = i + d;
                assert(kk == 0 || col <= width(kk));
                const BigInt& term =
                    kk == 0 ? kOne : rows[static_cast<std::size_t>(kk)][static_cast<std::size_t>(col) - 1];
                if (d % 2 == 1)
                    v += term;
                else
                    v -= term;
            }
            row[static_cast<std::size_t>(i) - 1] = std::move(v);
        }
    }

    GrowthTable table;
    table.spec = std::nullopt;
    table.column_count = columns;
    table.rows = std::move(rows);
    for (auto& row : table.rows) row.resize(static_cast<std::size_t>(columns));
    return table;
}

GrowthTable build_limit_table_delegated(int max_k, int columns) {
    if (max_k < 0 || columns < 1)
        throw std::invalid_argument("build_limit_table_delegated: need K >= 0, columns >= 1");
    const int n = max_k + columns - 1;
    GrowthTable finite = build_table_a(n < 1 ? 1 : n, max_k);
    GrowthTable table;
    table.spec = std::nullopt;
    table.column_count = columns;
    table.rows = std::move(finite.rows);
    for (auto& row : table.rows) row.resize(static_cast<std::size_t>(columns));
    return table;
}

std::vector<BigInt> alpha_series(const MonoidSpec& spec, int max_k) {
    switch (spec.family) {
        case Family::A: return build_table_a(spec.rank, max_k).last_column();
        case Family::B: return build_table_b(spec.rank, max_k).last_column();
        case Family::D: return build_table_d(spec.rank, max_k).last_column();
        default: throw std::invalid_argument("alpha_series: tables exist only for A, B, D");
    }
}

}  // namespace garside
