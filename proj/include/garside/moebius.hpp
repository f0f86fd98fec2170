#pragma once

#include "garside/polymatrix.hpp"
#include "garside/polynomial.hpp"
#include "garside/presentations.hpp"

namespace garside {

enum class MoebiusMethod { inclusion_exclusion, determinant, recurrence };

// Two expansions of the same determinant: along the first row (within the
// family) and along the last column (in terms of the type-A polynomials).
// Family A has a single expansion; both selectors return it there.
enum class RecurrenceVariant { within_family, via_type_a };

struct MoebiusResult {
    MonoidSpec spec;
    IntPolynomial polynomial;
    MoebiusMethod method = MoebiusMethod::inclusion_exclusion;
};

// Sum over all atom subsets S of (-1)^|S| t^(||vee S||). Works for every
// supported family; the subset walk is exponential in the rank, capped by
// max_rank.
MoebiusResult moebius_by_inclusion_exclusion(const MonoidSpec& spec, int max_rank = 20);

// The determinant matrices. Order n+1 for A and B, order n for D; zero below
// the first subdiagonal, ones on the subdiagonal and diagonal.
PolyMatrix matrix_a(int n);
PolyMatrix matrix_b(int n);
PolyMatrix matrix_d(int n);

// Determinant route; families A, B, D only.
MoebiusResult moebius_by_determinant(const MonoidSpec& spec);

// Rank recurrences; families A, B, D only.
MoebiusResult moebius_by_recurrence(const MonoidSpec& spec,
                                    RecurrenceVariant variant = RecurrenceVariant::within_family);

// Default route: determinant for A/B/D, inclusion-exclusion otherwise.
MoebiusResult moebius_polynomial(const MonoidSpec& spec);

}  // namespace garside
