#include "garside/moebius.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "garside/bigint.hpp"

namespace garside {

MoebiusResult moebius_by_inclusion_exclusion(const MonoidSpec& spec, int max_rank) {
    const int n = spec.rank;
    if (n > max_rank)
        throw std::invalid_argument("inclusion-exclusion capped at rank " +
                                    std::to_string(max_rank) + " (2^n subsets)");
    const CoxeterDiagram diagram = CoxeterDiagram::for_spec(spec);

    std::vector<std::uint32_t> adjacent(n, 0);
    for (const auto& e : diagram.edges) {
        adjacent[e.a - 1] |= 1u << (e.b - 1);
        adjacent[e.b - 1] |= 1u << (e.a - 1);
    }

    // lcm_of[S] = ||vee S||, split off the connected component of the lowest
    // atom; both pieces are smaller masks, so one ascending pass suffices.
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::int64_t> lcm_of(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int low = std::countr_zero(mask);
        std::uint32_t comp = 1u << low;
        for (std::uint32_t frontier = comp; frontier;) {
            std::uint32_t grown = comp;
            for (std::uint32_t f = frontier; f; f &= f - 1)
                grown |= adjacent[std::countr_zero(f)] & mask;
            frontier = grown & ~comp;
            comp = grown;
        }
        if (comp == mask) {
            std::vector<int> nodes;
            for (std::uint32_t f = mask; f; f &= f - 1) nodes.push_back(std::countr_zero(f) + 1);
            lcm_of[mask] = positive_root_count(classify_component(diagram, nodes));
        } else {
            lcm_of[mask] = lcm_of[comp] + lcm_of[mask ^ comp];
        }
    }

    std::vector<BigInt> coeffs(static_cast<std::size_t>(lcm_of[full]) + 1, BigInt(0));
    coeffs[0] += 1;  // empty subset
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) % 2 == 0)
            coeffs[static_cast<std::size_t>(lcm_of[mask])] += 1;
        else
            coeffs[static_cast<std::size_t>(lcm_of[mask])] -= 1;
    }
    return {spec, IntPolynomial(std::move(coeffs)), MoebiusMethod::inclusion_exclusion};
}

namespace {

IntPolynomial t_power(std::int64_t e) {
    return IntPolynomial::monomial(1, static_cast<std::size_t>(e));
}

PolyMatrix staircase_matrix(int order) {
    PolyMatrix m(static_cast<std::size_t>(order));
    for (int i = 1; i <= order; ++i)
        for (int j = i - 1; j <= order; ++j)
            if (j >= 1) m.at(i - 1, j - 1) = t_power(binom2(j - i + 1));
    return m;
}

}  // namespace

PolyMatrix matrix_a(int n) {
    if (n < 1) throw std::invalid_argument("matrix_a: n must be >= 1");
    return staircase_matrix(n + 1);
}

PolyMatrix matrix_b(int n) {
    if (n < 1) throw std::invalid_argument("matrix_b: n must be >= 1");
    PolyMatrix m = staircase_matrix(n + 1);
    for (int i = 1; i <= n + 1; ++i) {
        const std::int64_t e = static_cast<std::int64_t>(n - i + 1) * (n - i + 1);
        m.at(i - 1, n) = t_power(e);
    }
    return m;
}

PolyMatrix matrix_d(int n) {
    if (n < 2) throw std::invalid_argument("matrix_d: n must be >= 2 (D2 = Z x Z, D3 = A3)");
    PolyMatrix m = staircase_matrix(n);
    for (int i = 1; i <= n; ++i) {
        IntPolynomial entry = IntPolynomial::monomial(2, static_cast<std::size_t>(binom2(n - i + 1)));
        entry -= t_power(static_cast<std::int64_t>(n - i + 1) * (n - i));
        m.at(i - 1, n - 1) = entry;
    }
    return m;
}

MoebiusResult moebius_by_determinant(const MonoidSpec& spec) {
    IntPolynomial det;
    switch (spec.family) {
        case Family::A: det = determinant(matrix_a(spec.rank)); break;
        case Family::B: det = determinant(matrix_b(spec.rank)); break;
        case Family::D: det = determinant(matrix_d(spec.rank)); break;
        default:
            throw std::invalid_argument("determinant route exists only for families A, B, D");
    }
    return {spec, std::move(det), MoebiusMethod::determinant};
}

namespace {

// H_n for type A with H_{-1} = H_0 = 1; entry [k] holds H_{k-1}.
std::vector<IntPolynomial> type_a_polys(int n) {
    std::vector<IntPolynomial> h(static_cast<std::size_t>(n) + 2);
    h[0] = IntPolynomial::one();  // H_{-1}
    h[1] = IntPolynomial::one();  // H_0
    for (int m = 1; m <= n; ++m) {
        IntPolynomial acc;
        for (int i = 1; i <= m + 1; ++i) {
            IntPolynomial term = t_power(binom2(i)) * h[static_cast<std::size_t>(m - i) + 1];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        h[static_cast<std::size_t>(m) + 1] = std::move(acc);
    }
    return h;
}

IntPolynomial type_b_within(int n) {
    std::vector<IntPolynomial> f(static_cast<std::size_t>(n) + 1);
    f[0] = IntPolynomial::one();  // F_0
    for (int m = 1; m <= n; ++m) {
        IntPolynomial acc;
        for (int i = 1; i <= m; ++i) {
            IntPolynomial term = t_power(binom2(i)) * f[static_cast<std::size_t>(m - i)];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        IntPolynomial last = t_power(static_cast<std::int64_t>(m) * m);
        if (m % 2 == 0)
            acc += last;
        else
            acc -= last;
        f[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return f[static_cast<std::size_t>(n)];
}

IntPolynomial type_b_via_a(int n) {
    const auto h = type_a_polys(n);
    IntPolynomial acc;
    for (int i = 0; i <= n; ++i) {
        IntPolynomial term =
            t_power(static_cast<std::int64_t>(i) * i) * h[static_cast<std::size_t>(n - 1 - i) + 1];
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// 2t^C(i,2) - t^(i(i-1)), the type-D last-column entry shape.
IntPolynomial d_column_entry(int i) {
    IntPolynomial e = IntPolynomial::monomial(2, static_cast<std::size_t>(binom2(i)));
    e -= t_power(static_cast<std::int64_t>(i) * (i - 1));
    return e;
}

IntPolynomial type_d_within(int n) {
    std::vector<IntPolynomial> g(static_cast<std::size_t>(n) + 1);
    g[1] = IntPolynomial::one();  // G_1
    for (int m = 2; m <= n; ++m) {
        IntPolynomial acc;
        for (int i = 1; i <= m - 1; ++i) {
            IntPolynomial term = t_power(binom2(i)) * g[static_cast<std::size_t>(m - i)];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        IntPolynomial last = d_column_entry(m);
        if (m % 2 == 1)
            acc += last;
        else
            acc -= last;
        g[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return g[static_cast<std::size_t>(n)];
}

IntPolynomial type_d_via_a(int n) {
    const auto h = type_a_polys(n);
    IntPolynomial acc;
    for (int i = 1; i <= n; ++i) {
        IntPolynomial term = d_column_entry(i) * h[static_cast<std::size_t>(n - i - 1) + 1];
        if (i % 2 == 1)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace

MoebiusResult moebius_by_recurrence(const MonoidSpec& spec, RecurrenceVariant variant) {
    IntPolynomial poly;
    switch (spec.family) {
        case Family::A:
            poly = type_a_polys(spec.rank)[static_cast<std::size_t>(spec.rank) + 1];
            break;
        case Family::B:
            poly = variant == RecurrenceVariant::within_family ? type_b_within(spec.rank)
                                                               : type_b_via_a(spec.rank);
            break;
        case Family::D:
            poly = variant == RecurrenceVariant::within_family ? type_d_within(spec.rank)
                                                               : type_d_via_a(spec.rank);
            break;
        default:
            throw std::invalid_argument("recurrence route exists only for families A, B, D");
    }
    return {spec, std::move(poly), MoebiusMethod::recurrence};
}

MoebiusResult moebius_polynomial(const MonoidSpec& spec) {
    switch (spec.family) {
        case Family::A:
        case Family::B:
        case Family::D: return moebius_by_determinant(spec);
        default: return moebius_by_inclusion_exclusion(spec);
    }
}

}  // namespace garside
