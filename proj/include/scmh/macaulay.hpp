#pragma once

// Binomial calculus behind Macaulay-style bounds: canonical binomial
// representations, shadow operators and M-sequence tests.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scmh {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer addition overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer multiplication overflow");
    return r;
}

/// C(n, k) with exact 64-bit arithmetic; out-of-range k gives 0, overflow throws.
inline Int binomial(Int n, Int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // exact: r holds C(n-k+i, i) * i! / i! at each step
    }
    return r;
}

/// Canonical expansion p = C(a_l, l) + C(a_{l-1}, l-1) + ... + C(a_e, e)
/// with a_l > a_{l-1} > ... > a_e >= e >= 1.
struct LRepresentation {
    int ell = 0;
    std::vector<std::pair<Int, int>> terms;  // (a_k, k), k strictly decreasing

    Int value() const {
        Int s = 0;
        for (auto [a, k] : terms) s = checked_add(s, binomial(a, k));
        return s;
    }
};

/// Greedy construction of the l-representation of p >= 1.
inline LRepresentation l_representation(Int p, int ell) {
    if (p < 1) throw std::invalid_argument("l_representation: p must be positive");
    if (ell < 1) throw std::invalid_argument("l_representation: ell must be positive");
    LRepresentation rep;
    rep.ell = ell;
    Int rem = p;
    for (int k = ell; k >= 1 && rem > 0; --k) {
        Int a;
        if (k == 1) {
            a = rem;
        } else {
            a = k;  // C(k, k) = 1 <= rem
            while (binomial(a + 1, k) <= rem) ++a;
        }
        rep.terms.emplace_back(a, k);
        rem -= binomial(a, k);
    }
    if (rem != 0) throw std::logic_error("l_representation: greedy failed");
    return rep;
}

/// Shadow operator: if p = sum C(a_k, k) then boundary(p, l) = sum C(a_k - 1, k - 1).
/// boundary(0, l) = 0.
inline Int boundary(Int p, int ell) {
    if (ell < 1) throw std::invalid_argument("boundary: ell must be positive");
    if (p < 0) throw std::invalid_argument("boundary: p must be non-negative");
    if (p == 0) return 0;
    Int s = 0;
    for (auto [a, k] : l_representation(p, ell).terms) s = checked_add(s, binomial(a - 1, k - 1));
    return s;
}

/// Iterated shadow in closed form: sum of C(a_k - j, k - j) over the terms of
/// the l-representation, dropping terms with k < j.  j = 0 is the identity,
/// j = 1 is boundary().
inline Int generalized_boundary(Int p, int ell, int j) {
    if (ell < 1) throw std::invalid_argument("generalized_boundary: ell must be positive");
    if (j < 0 || j > ell) throw std::invalid_argument("generalized_boundary: need 0 <= j <= ell");
    if (p < 0) throw std::invalid_argument("generalized_boundary: p must be non-negative");
    if (p == 0) return 0;
    if (j == 0) return p;
    Int s = 0;
    for (auto [a, k] : l_representation(p, ell).terms)
        if (k >= j) s = checked_add(s, binomial(a - j, k - j));
    return s;
}

/// True iff f is the f-vector of some multicomplex: f_0 = 1 and
/// boundary(f_l, l) <= f_{l-1} for every l >= 1.  Trailing zeros are fine,
/// the empty vector is not an M-sequence.
inline bool is_m_sequence(const IntVec& f) {
    if (f.empty() || f[0] != 1) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] < 0) return false;
    for (std::size_t l = 1; l < f.size(); ++l)
        if (boundary(f[l], static_cast<int>(l)) > f[l - 1]) return false;
    return true;
}

}  // namespace scmh
