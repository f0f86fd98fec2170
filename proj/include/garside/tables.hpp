#pragma once

#include <optional>
#include <vector>

#include "garside/bigint.hpp"
#include "garside/presentations.hpp"

namespace garside {

// Stratified counting table: rows indexed by length k, columns by stratum
// index i (1-based). Row 0 is all ones; the last column holds alpha_k. For
// families A and B the columns are m_{k,i} (n+1 of them), for D the d_{k,i}
// (n of them); spec == nullopt marks the stabilized limit table.
struct GrowthTable {
    std::optional<MonoidSpec> spec;
    int column_count = 0;
    std::vector<std::vector<BigInt>> rows;

    int row_count() const { return static_cast<int>(rows.size()); }

    // Total accessor: 0 for k < 0 and for i == 0 with k > 0, 1 on row 0.
    const BigInt& entry(int k, int i) const;

    std::vector<BigInt> last_column() const;
    std::vector<BigInt> column(int i) const;
};

GrowthTable build_table_a(int n, int max_k);
GrowthTable build_table_b(int n, int max_k);
GrowthTable build_table_d(int n, int max_k);

// Stabilized table for the direct limit: entry (k, i) is the common value of
// the finite tables for every n >= k + i - 1. Computed by the infinite-sum
// recurrence (the sum is finite since offsets must stay nonnegative).
GrowthTable build_limit_table(int max_k, int columns);

// Same table via delegation to one large finite type-A table; the
// independent route for cross-checking.
GrowthTable build_limit_table_delegated(int max_k, int columns);

// Last table column alpha_0..alpha_K; families A, B, D.
std::vector<BigInt> alpha_series(const MonoidSpec& spec, int max_k);

}  // namespace garside
