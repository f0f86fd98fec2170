#include <gmp.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "garside/theta.hpp"

// Newton solver for f(-xi, y) = 0 over Z[[y]]. Series multiplication packs
// coefficients into single large integers (Kronecker substitution) so GMP's
// FFT multiplication does the heavy lifting; the theta equation itself is
// evaluated with Paterson-Stockmeyer baby/giant steps, truncating every
// product to the y-precision that can still reach the target degree.

namespace garside {

namespace {

using Series = std::vector<BigInt>;

std::size_t top_nonzero(const Series& a, std::size_t len) {
    std::size_t top = std::min(a.size(), len);
    while (top > 0 && a[top - 1] == 0) --top;
    return top;  // number of coefficients up to the last nonzero one
}

std::size_t max_coeff_bits(const Series& a, std::size_t len) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < len; ++i)
        if (a[i] != 0) bits = std::max(bits, mpz_sizeinbase(a[i].get_mpz_t(), 2));
    return bits;
}

void pack(const Series& a, std::size_t len, std::size_t slot_limbs, bool negate,
          const BigInt& slot_mod, BigInt& out) {
    std::vector<mp_limb_t> buf(slot_limbs * len + 1, 0);
    BigInt t;
    int borrow = 0;
    for (std::size_t j = 0; j < len; ++j) {
        if (negate)
            t = -a[j];
        else
            t = a[j];
        if (borrow) t -= 1;
        borrow = 0;
        if (sgn(t) < 0) {
            t += slot_mod;
            borrow = 1;
        }
        const std::size_t sz = mpz_size(t.get_mpz_t());
        assert(sz <= slot_limbs);
        const mp_limb_t* limbs = mpz_limbs_read(t.get_mpz_t());
        std::copy(limbs, limbs + sz, buf.begin() + static_cast<std::ptrdiff_t>(j * slot_limbs));
    }
    assert(borrow == 0);  // the leading packed coefficient is positive
    mpz_import(out.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
}

Series unpack(const BigInt& packed, std::size_t n, std::size_t slot_limbs, bool negative,
              const BigInt& slot_mod, const BigInt& slot_half) {
    Series out(n, BigInt(0));
    const std::size_t total = mpz_size(packed.get_mpz_t());
    const mp_limb_t* limbs = mpz_limbs_read(packed.get_mpz_t());
    BigInt s;
    int carry = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t off = j * slot_limbs;
        if (off >= total && carry == 0) break;
        const std::size_t count = off >= total ? 0 : std::min(slot_limbs, total - off);
        if (count)
            mpz_import(s.get_mpz_t(), count, -1, sizeof(mp_limb_t), 0, 0, limbs + off);
        else
            s = 0;
        if (carry) {
            s += carry;
            carry = 0;
        }
        if (s >= slot_half) {
            s -= slot_mod;
            carry = 1;
        }
        if (negative)
            out[j] = -s;
        else
            out[j] = s;
    }
    return out;
}

Series mul_trunc(const Series& a, const Series& b, std::size_t n) {
    Series out(n, BigInt(0));
    if (n == 0) return out;
    const std::size_t la = top_nonzero(a, n);
    const std::size_t lb = top_nonzero(b, n);
    if (la == 0 || lb == 0) return out;

    if (std::min(la, lb) <= 24 || n <= 64) {
        for (std::size_t i = 0; i < la; ++i) {
            if (a[i] == 0) continue;
            const std::size_t jmax = std::min(lb, n - i);
            for (std::size_t j = 0; j < jmax; ++j) {
                if (b[j] == 0) continue;
                mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
            }
        }
        return out;
    }

    const std::size_t terms = std::min({la, lb, n});
    std::size_t log2_terms = 0;
    while ((std::size_t{1} << log2_terms) < terms) ++log2_terms;
    const std::size_t need_bits = max_coeff_bits(a, la) + max_coeff_bits(b, lb) + log2_terms + 2;
    const std::size_t slot_limbs = (need_bits + 63) / 64;
    BigInt slot_mod = BigInt(1) << (64 * slot_limbs);
    BigInt slot_half = slot_mod >> 1;

    const bool neg_a = sgn(a[la - 1]) < 0;
    const bool neg_b = sgn(b[lb - 1]) < 0;
    BigInt pa, pb;
    pack(a, la, slot_limbs, neg_a, slot_mod, pa);
    pack(b, lb, slot_limbs, neg_b, slot_mod, pb);
    pa *= pb;
    return unpack(pa, n, slot_limbs, neg_a != neg_b, slot_mod, slot_half);
}

// dest[shift + i] += sign * scale * src[i], staying below trunc_len.
void add_shifted_scaled(Series& dest, const Series& src, std::size_t shift, long sign,
                        unsigned long scale, std::size_t trunc_len) {
    if (shift >= trunc_len) return;
    const std::size_t count = std::min(src.size(), trunc_len - shift);
    for (std::size_t i = 0; i < count; ++i) {
        if (src[i] == 0) continue;
        if (sign > 0)
            mpz_addmul_ui(dest[shift + i].get_mpz_t(), src[i].get_mpz_t(), scale);
        else
            mpz_submul_ui(dest[shift + i].get_mpz_t(), src[i].get_mpz_t(), scale);
    }
}

struct BabyPowers {
    int block = 0;               // baby block size m_B
    std::vector<Series> pow;     // pow[b] = z^b truncated to len - C(b,2)
};

BabyPowers make_babies(const Series& z, std::size_t len, int max_power) {
    BabyPowers babies;
    babies.block = std::max(1, static_cast<int>(std::ceil(std::sqrt(double(max_power) + 1.0))));
    babies.pow.resize(static_cast<std::size_t>(babies.block) + 1);
    babies.pow[0] = Series{BigInt(1)};
    for (int b = 1; b <= babies.block; ++b) {
        const std::int64_t cut = static_cast<std::int64_t>(len) - binom2(b);
        if (cut <= 0) break;
        babies.pow[static_cast<std::size_t>(b)] =
            mul_trunc(babies.pow[static_cast<std::size_t>(b) - 1], z, static_cast<std::size_t>(cut));
    }
    return babies;
}

// Giant-step Horner over W = z^mB with per-level truncation; term(r) supplies
// the y-shift, sign and scalar of the r-th power's coefficient.
template <typename TermFn>
Series paterson_stockmeyer(const BabyPowers& babies, std::size_t len, int max_power, TermFn term) {
    const int block = babies.block;
    const int giants = max_power / block;
    auto valuation = [&](int a) { return term(a * block).shift; };

    auto build_block = [&](int a) {
        const std::size_t v = valuation(a);
        const std::size_t block_len = len - v;  // callers guarantee v < len
        Series acc(block_len, BigInt(0));
        for (int b = 0; b < block; ++b) {
            const int r = a * block + b;
            if (r > max_power) break;
            const auto t = term(r);
            add_shifted_scaled(acc, babies.pow[static_cast<std::size_t>(b)], t.shift - v, t.sign,
                               t.scale, block_len);
        }
        return acc;
    };

    Series acc = build_block(giants);
    for (int a = giants - 1; a >= 0; --a) {
        const std::size_t v_here = valuation(a);
        const std::size_t v_next = valuation(a + 1);
        Series prod = mul_trunc(babies.pow[static_cast<std::size_t>(block)], acc, len - v_next);
        acc = build_block(a);
        for (std::size_t i = 0; i < prod.size(); ++i) {
            if (prod[i] == 0) continue;
            acc[v_next - v_here + i] += prod[i];
        }
    }
    acc.resize(len, BigInt(0));
    return acc;
}

struct TermShape {
    std::size_t shift;
    long sign;
    unsigned long scale;
};

// f(-z, y) = sum_r (-1)^r y^C(r,2) z^r, truncated to len coefficients.
Series eval_f(const Series& z, std::size_t len, const BabyPowers& babies) {
    int max_power = 0;
    while (binom2(max_power + 1) < static_cast<std::int64_t>(len)) ++max_power;
    return paterson_stockmeyer(babies, len, max_power, [](int r) {
        return TermShape{static_cast<std::size_t>(binom2(r)), r % 2 == 0 ? 1L : -1L, 1UL};
    });
}

// d/dx of f(-x, y) at x = z: sum_s (-1)^(s+1) (s+1) y^C(s+1,2) z^s.
Series eval_fprime(const Series& z, std::size_t len, const BabyPowers& babies) {
    int max_power = 0;
    while (binom2(max_power + 2) < static_cast<std::int64_t>(len)) ++max_power;
    return paterson_stockmeyer(babies, len, max_power, [](int s) {
        return TermShape{static_cast<std::size_t>(binom2(s + 1)), s % 2 == 0 ? -1L : 1L,
                         static_cast<unsigned long>(s) + 1};
    });
}

// 1/f for |f_0| = 1, first len coefficients.
Series invert_unit(const Series& f, std::size_t len) {
    if (f.empty() || (f[0] != 1 && f[0] != -1))
        throw std::invalid_argument("invert_unit: constant term must be a unit");
    const bool neg = f[0] == -1;
    Series w(len, BigInt(0));
    w[0] = f[0];
    for (std::size_t j = 1; j < len; ++j) {
        BigInt s(0);
        const std::size_t imax = std::min(j, f.size() - 1);
        for (std::size_t i = 1; i <= imax; ++i) s += f[i] * w[j - i];
        w[j] = neg ? s : -s;
    }
    return w;
}

}  // namespace

std::vector<BigInt> theta_by_newton(int max_k) {
    if (max_k < 0) throw std::invalid_argument("theta_by_newton: need K >= 0");
    const std::size_t target = static_cast<std::size_t>(max_k) + 1;
    std::size_t m = std::min<std::size_t>(64, target);
    Series z = theta_by_recurrence(static_cast<int>(m) - 1);
    if (m == target) return z;

    {
        const std::size_t wlen = (m + 1) / 2;
        int seed_power = 0;
        while (binom2(seed_power + 2) < static_cast<std::int64_t>(wlen)) ++seed_power;
        BabyPowers babies = make_babies(z, wlen, seed_power);
        Series fp = eval_fprime(z, wlen, babies);
        Series w = invert_unit(fp, wlen);
        while (m < target) {
            const std::size_t m2 = std::min(2 * m, target);
            int max_power = 0;
            while (binom2(max_power + 1) < static_cast<std::int64_t>(m2)) ++max_power;
            BabyPowers round = make_babies(z, m2, max_power);

            Series f = eval_f(z, m2, round);
            Series fp_now = eval_fprime(z, m, round);

            // W <- W (2 - F' W), correct mod y^m afterwards.
            Series t = mul_trunc(fp_now, w, m);
            for (auto& c : t) c = -c;
            t[0] += 2;
            w = mul_trunc(w, t, m);

            // Z <- Z - F(Z) W; F(Z) vanishes mod y^m, so only the tail moves.
            for (std::size_t j = 0; j < m; ++j)
                if (f[j] != 0) throw std::logic_error("theta newton: residual not divisible");
            Series tail(f.begin() + static_cast<std::ptrdiff_t>(m), f.end());
            Series u = mul_trunc(tail, w, m2 - m);
            z.resize(m2, BigInt(0));
            for (std::size_t j = 0; j < m2 - m; ++j) z[m + j] -= u[j];
            m = m2;
        }
    }

    // Final certificate: the theta equation has a unique root with constant
    // term 1, so a vanishing residual proves z is its prefix.
    {
        int max_power = 0;
        while (binom2(max_power + 1) < static_cast<std::int64_t>(target)) ++max_power;
        BabyPowers babies = make_babies(z, target, max_power);
        const Series residual = eval_f(z, target, babies);
        for (std::size_t j = 0; j < target; ++j)
            if (residual[j] != 0)
                throw std::logic_error("theta newton: nonzero residual at degree " +
                                       std::to_string(j));
    }
    return z;
}

}  // namespace garside
