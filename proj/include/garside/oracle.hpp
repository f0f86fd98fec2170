#pragma once

#include <cstdint>
#include <vector>

#include "garside/presentations.hpp"

namespace garside {

// One monoid element of length k, discovered by closing a seed word under
// the defining relations. canonical is the lexicographically maximal member
// (atoms ordered a_1 < a_2 < ...), i.e. the lex-representative.
struct WordClass {
    std::vector<int> canonical;
    std::uint64_t class_size = 0;
    int length = 0;
};

// Word cap for the enumeration (number of length-k words, atom_count^k).
// 0 means "use the default", which is 10^7 unless GARSIDE_ORACLE_BUDGET
// overrides it.
std::uint64_t default_oracle_budget();

// Partitions all length-k words into equivalence classes by breadth-first
// closure under the relations, applied in both directions at every position.
// The class count is alpha_k. Throws std::invalid_argument when
// atom_count^k exceeds the budget.
std::vector<WordClass> enumerate_classes(const MonoidSpec& spec, int k, std::uint64_t budget = 0);

// |L_k^(i)| for i = 1..n: classes bucketed by the first letter of the
// lex-representative. Partial sums give the table columns.
std::vector<std::uint64_t> count_by_first_letter(const MonoidSpec& spec, int k,
                                                 std::uint64_t budget = 0);

// L_k of the theta series, counted as the length-k elements of A_max(k,1)
// whose lex-representative starts with a_1 (stabilization makes the finite
// rank sufficient).
std::uint64_t count_theta_term(int k, std::uint64_t budget = 0);

}  // namespace garside
