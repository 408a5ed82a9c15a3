#pragma once

// Square-free strongly stable monomial ideals, their generator arrays, the
// resulting Betti tables, and the translation between shelling triangles of
// shifted complexes and generator arrays.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "characterization.hpp"
#include "complex.hpp"
#include "multicomplex.hpp"

namespace scmh {

struct MonomialIdeal {
    int n = 0;                    // ambient variables x_1..x_n
    std::vector<Monomial> gens;   // minimal generators, an antichain

    auto operator<=>(const MonomialIdeal&) const = default;
};

/// Keeps only the divisibility-minimal generators, deduplicated and sorted.
inline MonomialIdeal make_ideal(int n, std::vector<Monomial> gens) {
    if (n < 0) throw std::invalid_argument("make_ideal: negative variable count");
    for (const auto& g : gens)
        if (g.vars() != n) throw std::invalid_argument("make_ideal: generator has wrong variable count");
    MonomialIdeal out;
    out.n = n;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i]) && !(gens[i].divides(gens[j]) && j > i)) redundant = true;
        if (!redundant) out.gens.push_back(gens[i]);
    }
    return out;
}

inline bool ideal_contains(const MonomialIdeal& I, const Monomial& m) {
    for (const auto& g : I.gens)
        if (g.divides(m)) return true;
    return false;
}

inline bool is_squarefree(const Monomial& m) {
    for (int x : m.e)
        if (x > 1) return false;
    return true;
}

/// Largest variable index occurring in g, 0 for the unit monomial.
inline int max_index(const Monomial& g) {
    for (int i = g.vars() - 1; i >= 0; --i)
        if (g.e[i] > 0) return i + 1;
    return 0;
}

/// For every generator u, every x_j dividing u and every i < j with x_i not
/// dividing u, the swap x_i*(u/x_j) must land back in the ideal.
inline bool is_sqfree_strongly_stable(const MonomialIdeal& I) {
    for (const auto& g : I.gens)
        if (!is_squarefree(g)) throw std::invalid_argument("is_sqfree_strongly_stable: generator is not square-free");
    for (const auto& g : I.gens)
        for (int j = 0; j < I.n; ++j) {
            if (g.e[j] == 0) continue;
            for (int i = 0; i < j; ++i) {
                if (g.e[i] != 0) continue;
                Monomial swapped = g;
                --swapped.e[j];
                ++swapped.e[i];
                if (!ideal_contains(I, swapped)) return false;
            }
        }
    return true;
}

/// Counts per (index k, degree): columns[deg - min_degree][k-1]. Trailing
/// zeros are trimmed so equal arrays compare equal.
struct GeneratorArray {
    int min_degree = 1;
    std::vector<IntVec> columns;

    int max_degree() const { return min_degree + static_cast<int>(columns.size()) - 1; }
    Int at(int k, int deg) const {
        if (k < 1 || deg < min_degree || deg > max_degree()) return 0;
        const IntVec& col = columns[static_cast<size_t>(deg - min_degree)];
        return k <= static_cast<int>(col.size()) ? col[static_cast<size_t>(k) - 1] : 0;
    }

    auto operator<=>(const GeneratorArray&) const = default;
};

namespace detail {

inline void trim_columns(GeneratorArray& a) {
    for (auto& col : a.columns)
        while (!col.empty() && col.back() == 0) col.pop_back();
    while (!a.columns.empty() && a.columns.back().empty()) a.columns.pop_back();
    while (!a.columns.empty() && a.columns.front().empty()) {
        a.columns.erase(a.columns.begin());
        ++a.min_degree;
    }
}

}  // namespace detail

/// Reduced counts: entry (k, deg) is the number of generators of that degree
/// whose largest variable index is k + deg - 1.
inline GeneratorArray m_array(const MonomialIdeal& I) {
    if (!is_sqfree_strongly_stable(I))
        throw std::invalid_argument("m_array: ideal is not square-free strongly stable");
    GeneratorArray a;
    if (I.gens.empty()) return a;
    int dmin = I.gens[0].degree(), dmax = dmin;
    for (const auto& g : I.gens) {
        dmin = std::min(dmin, g.degree());
        dmax = std::max(dmax, g.degree());
    }
    a.min_degree = dmin;
    a.columns.assign(static_cast<size_t>(dmax - dmin) + 1, {});
    for (const auto& g : I.gens) {
        const int deg = g.degree();
        const int k = max_index(g) - deg + 1;
        if (k < 1) throw std::logic_error("m_array: generator index below degree range");
        auto& col = a.columns[static_cast<size_t>(deg - dmin)];
        if (static_cast<int>(col.size()) < k) col.resize(static_cast<size_t>(k), 0);
        ++col[static_cast<size_t>(k) - 1];
    }
    detail::trim_columns(a);
    return a;
}

namespace detail {

/// Columns at their full logical width: a square-free generator of degree k
/// in nvars variables has index offset at most nvars - k + 1. The cumulative
/// recursion is only exact over the full width, since entries past the
/// trimmed length of the previous column still feed the running sum.
inline void widen_columns(GeneratorArray& a, int nvars) {
    for (size_t c = 0; c < a.columns.size(); ++c) {
        const int deg = a.min_degree + static_cast<int>(c);
        const int width = nvars - deg + 1;
        if (static_cast<int>(a.columns[c].size()) > width)
            throw std::invalid_argument("generator array: column of degree " + std::to_string(deg) +
                                        " is wider than " + std::to_string(nvars) + " variables allow");
        a.columns[c].resize(static_cast<size_t>(width > 0 ? width : 0), 0);
    }
}

}  // namespace detail

/// Cumulative counts from reduced ones: each column adds the running prefix
/// sums of the previous column, mu(k, deg) = m(k, deg) + sum_{q<=k} mu(q, deg-1),
/// taken over full-width columns for an ideal in nvars variables.
inline GeneratorArray cumulative_from_reduced(const GeneratorArray& m, int nvars) {
    GeneratorArray mu = m;
    detail::widen_columns(mu, nvars);
    for (size_t c = 1; c < mu.columns.size(); ++c) {
        const IntVec& prev = mu.columns[c - 1];
        IntVec& col = mu.columns[c];
        Int run = 0;
        for (size_t q = 0; q < col.size(); ++q) {
            if (q < prev.size()) run = checked_add(run, prev[q]);
            col[q] = checked_add(col[q], run);
        }
    }
    detail::trim_columns(mu);
    return mu;
}

inline GeneratorArray reduced_from_cumulative(const GeneratorArray& mu, int nvars) {
    GeneratorArray m = mu;
    detail::widen_columns(m, nvars);
    for (size_t c = m.columns.size(); c-- > 1;) {
        const IntVec& prev = m.columns[c - 1];
        IntVec& col = m.columns[c];
        Int run = 0;
        for (size_t q = 0; q < col.size(); ++q) {
            if (q < prev.size()) run = checked_add(run, prev[q]);
            col[q] -= run;
        }
    }
    detail::trim_columns(m);
    return m;
}

inline GeneratorArray mu_array(const MonomialIdeal& I) { return cumulative_from_reduced(m_array(I), I.n); }

/// Graded Betti numbers as a sparse map from (s, s+deg) to the count.
struct BettiTable {
    std::map<std::pair<Int, Int>, Int> b;

    Int at(Int s, Int total) const {
        auto it = b.find({s, total});
        return it == b.end() ? 0 : it->second;
    }

    auto operator<=>(const BettiTable&) const = default;
};

/// b_{s,s+deg} = sum_k binomial(k-1, s) * m(k, deg).
inline BettiTable betti_table_from_reduced(const GeneratorArray& m) {
    BettiTable t;
    for (int deg = m.min_degree; deg <= m.max_degree(); ++deg) {
        const IntVec& col = m.columns[static_cast<size_t>(deg - m.min_degree)];
        for (int k = 1; k <= static_cast<int>(col.size()); ++k) {
            const Int cnt = col[static_cast<size_t>(k) - 1];
            if (cnt == 0) continue;
            for (int s = 0; s < k; ++s) {
                const Int term = checked_mul(binomial(k - 1, s), cnt);
                auto& cell = t.b[{s, s + deg}];
                cell = checked_add(cell, term);
            }
        }
    }
    return t;
}

inline BettiTable betti_table(const MonomialIdeal& I) { return betti_table_from_reduced(m_array(I)); }

/// Betti table of the face ideal of the Alexander dual, read off the shelling
/// triangle: the reduced count at (s+1, n-i) is entry (i, s) of the triangle.
inline BettiTable betti_from_complex(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("betti_from_complex: void complex");
    if (!is_shifted(c)) throw std::invalid_argument("betti_from_complex: complex is not shifted");
    const Triangle t = h_triangle_shelling(c);
    GeneratorArray m;
    m.min_degree = c.n - t.top();
    m.columns.assign(static_cast<size_t>(t.top()) + 1, {});
    for (int i = 0; i <= t.top(); ++i) {
        const int deg = c.n - i;
        IntVec& col = m.columns[static_cast<size_t>(deg - m.min_degree)];
        for (int s = 0; s <= i; ++s) {
            if (t.at(i, s) == 0) continue;
            if (static_cast<int>(col.size()) < s + 1) col.resize(static_cast<size_t>(s) + 1, 0);
            col[static_cast<size_t>(s)] = t.at(i, s);
        }
    }
    detail::trim_columns(m);
    return betti_table_from_reduced(m);
}

/// Decides whether mu is the cumulative generator array of an r-regular
/// componentwise linear ideal in n variables with smallest generator degree
/// d: rebuild the matching triangle on N = n+r-1 and delegate. Column of
/// degree k fills row N-k; rows below N-r carry no generators, so they are
/// the forced partial sums of the row above.
inline Verdict check_generator_array(const GeneratorArray& mu, int n, int r, int d,
                                     ValuePolicy policy = ValuePolicy::admit_zero) {
    if (n < 1) throw std::invalid_argument("check_generator_array: n must be at least 1");
    if (d < 1 || d > r) throw std::invalid_argument("check_generator_array: need 1 <= d <= r");
    if (mu.min_degree < d || mu.max_degree() > r)
        throw std::invalid_argument("check_generator_array: column degrees fall outside [d, r]");
    const int N = n + r - 1;
    for (int k = mu.min_degree; k <= mu.max_degree(); ++k)
        if (static_cast<int>(mu.columns[static_cast<size_t>(k - mu.min_degree)].size()) > N - k + 1)
            throw std::invalid_argument("check_generator_array: column of degree " + std::to_string(k) +
                                        " is longer than its row");
    Triangle t;
    t.rows.resize(static_cast<size_t>(N - d) + 1);
    for (int i = 0; i <= N - d; ++i) {
        IntVec row(static_cast<size_t>(i) + 1, 0);
        const int k = N - i;
        for (int j = 0; j <= i; ++j) row[static_cast<size_t>(j)] = mu.at(j + 1, k);
        t.rows[static_cast<size_t>(i)] = std::move(row);
    }
    for (int i = N - r - 1; i >= 0; --i)
        for (int j = 0; j <= i; ++j) {
            Int s = 0;
            for (int l = 0; l <= j; ++l) s = checked_add(s, t.at(i + 1, l));
            t.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
    return check_htriangle(t, policy);
}

}  // namespace scmh
