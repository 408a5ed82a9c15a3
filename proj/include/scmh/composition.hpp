#pragma once

// Capped monomial value assignments: q maps every monomial of degree <= cap
// on u_1..u_vars to a non-negative integer, constrained by exchange
// monotonicity, Macaulay boundaries, a floor row h, and total mass r.
// sigma_top sums the values on monomials divisible by the top variable u_vars;
// rho is its minimum over all valid assignments, computed either by the
// greedy prefix-maximal construction or by exhaustive search.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "macaulay.hpp"
#include "multicomplex.hpp"

namespace scmh {

enum class ValuePolicy { admit_zero, strict_positive };

struct CompositionSpace {
    int vars = 1;  // u_1..u_vars
    int cap = 1;   // maximum monomial degree
    IntVec h;      // floor row; prefix h[0..cap] is used

    auto operator<=>(const CompositionSpace&) const = default;
};

inline void require_valid(const CompositionSpace& sp) {
    if (sp.vars < 1) throw std::invalid_argument("CompositionSpace: vars must be at least 1");
    if (sp.cap < 1) throw std::invalid_argument("CompositionSpace: cap must be at least 1");
    if (static_cast<int>(sp.h.size()) < sp.cap + 1)
        throw std::invalid_argument("CompositionSpace: h needs at least cap+1 entries");
    if (!is_m_sequence(sp.h)) throw std::invalid_argument("CompositionSpace: h is not an M-sequence");
}

/// Total order: compare exponents from the highest variable index down,
/// larger exponent means larger monomial. Refines divisibility and every
/// exchange u_i -> u_j with i < j; all u_vars-free monomials come first.
inline bool pi_less(const Monomial& x, const Monomial& y) {
    if (x.vars() != y.vars()) throw std::invalid_argument("pi_less: different variable counts");
    for (int i = x.vars() - 1; i >= 0; --i)
        if (x.e[i] != y.e[i]) return x.e[i] < y.e[i];
    return false;
}

namespace detail {

inline void collect_monomials(int vars, int max_deg, int pos, Monomial& cur, std::vector<Monomial>& out) {
    if (pos == vars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= max_deg; ++e) {
        cur.e[pos] = e;
        collect_monomials(vars, max_deg - e, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
}

}  // namespace detail

/// All monomials of the given degree, largest in pi order first.
inline std::vector<Monomial> monomials_of_degree(int vars, int deg) {
    if (vars < 0 || deg < 0) throw std::invalid_argument("monomials_of_degree: negative argument");
    std::vector<Monomial> all;
    Monomial cur = Monomial::unit(vars);
    detail::collect_monomials(vars, deg, 0, cur, all);
    std::vector<Monomial> out;
    for (auto& m : all)
        if (m.degree() == deg) out.push_back(std::move(m));
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return pi_less(b, a); });
    return out;
}

/// Same-degree reverse lexicographic precedence: x comes first when it has
/// the smaller exponent at the lowest variable index where the two differ.
/// Agrees with descending pi order on up to two variables.
inline bool revlex_before(const Monomial& x, const Monomial& y) {
    if (x.vars() != y.vars()) throw std::invalid_argument("revlex_before: different variable counts");
    for (size_t i = 0; i < x.e.size(); ++i)
        if (x.e[i] != y.e[i]) return x.e[i] < y.e[i];
    return false;
}

/// The count first monomials of the degree in reverse lexicographic order.
/// These prefixes are closed under up-exchanges, and their shadows are again
/// prefixes, so per-degree counts forming an M-sequence assemble into a
/// shifted multicomplex (the compressed one).
inline std::vector<Monomial> first_monomials_of_degree(int vars, int deg, Int count) {
    auto all = monomials_of_degree(vars, deg);
    if (count < 0 || count > static_cast<Int>(all.size()))
        throw std::invalid_argument("first_monomials_of_degree: count out of range");
    std::sort(all.begin(), all.end(), revlex_before);
    all.resize(static_cast<size_t>(count));
    return all;
}

struct Composition {
    CompositionSpace space;
    std::map<Monomial, Int> q;
};

struct CompositionDiagnosis {
    bool ok = true;
    std::string why;
};

/// Raised by the construction when no assignment of mass r exists.
struct CompositionInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Slot {
    Monomial mon;
    int deg = 0;
    std::vector<int> divisors;    // indices of mon/u_i
    std::vector<int> exch_preds;  // indices of u_i * (mon/u_j), i < j
};

struct CompTable {
    int vars = 0, cap = 0;
    std::vector<Slot> slots;  // increasing pi order
    std::map<Monomial, int> index;

    int size() const { return static_cast<int>(slots.size()); }
};

inline CompTable make_comp_table(int vars, int cap) {
    CompTable t;
    t.vars = vars;
    t.cap = cap;
    std::vector<Monomial> mons;
    Monomial cur = Monomial::unit(vars);
    collect_monomials(vars, cap, 0, cur, mons);
    std::sort(mons.begin(), mons.end(), pi_less);
    for (auto& m : mons) {
        Slot s;
        s.deg = m.degree();
        s.mon = std::move(m);
        t.index.emplace(s.mon, t.size());
        t.slots.push_back(std::move(s));
    }
    for (int i = 0; i < t.size(); ++i) {
        auto& s = t.slots[i];
        for (int v = 0; v < vars; ++v) {
            if (s.mon.e[v] == 0) continue;
            Monomial div = s.mon;
            --div.e[v];
            s.divisors.push_back(t.index.at(div));
            for (int u = 0; u < v; ++u) {
                Monomial pred = div;
                ++pred.e[u];
                s.exch_preds.push_back(t.index.at(pred));
            }
        }
    }
    return t;
}

// Shared state for the construction and the exhaustive walk. Slots are
// filled in increasing pi order, so divisors and exchange predecessors of
// the current slot are always assigned.
struct Engine {
    const CompositionSpace& sp;
    ValuePolicy policy;
    Int r;
    const CompTable& tab;
    IntVec q;            // -1 while unassigned
    Int sum = 0;
    Int sigma_partial = 0;
    IntVec max_at_deg;   // largest assigned value per degree, -1 if none

    Engine(const CompositionSpace& sp_, ValuePolicy policy_, Int r_, const CompTable& tab_)
        : sp(sp_), policy(policy_), r(r_), tab(tab_),
          q(static_cast<size_t>(tab_.size()), -1),
          max_at_deg(static_cast<size_t>(sp_.cap) + 1, -1) {}

    bool top_divisible(int idx) const { return tab.slots[idx].mon.e[sp.vars - 1] > 0; }

    Int floor_at(int deg) const {
        Int lo = sp.h[static_cast<size_t>(sp.cap - deg)];
        if (policy == ValuePolicy::strict_positive || deg == sp.cap) lo = std::max<Int>(lo, 1);
        return lo;
    }

    // Largest forced lower bound from h, the policy, assigned divisors and
    // assigned exchange predecessors.
    Int lower_bound(int idx) const {
        const Slot& s = tab.slots[idx];
        const int ell = sp.cap - s.deg;
        Int lo = floor_at(s.deg);
        for (int di : s.divisors)
            if (q[di] >= 0) lo = std::max(lo, boundary(q[di], ell + 1));
        for (int pi : s.exch_preds)
            if (q[pi] >= 0) lo = std::max(lo, q[pi]);
        return lo;
    }

    // Budget check for assigning p at idx: already-spent mass, plus p, plus
    // one reservation per later slot. A later slot of degree D >= deg(idx)
    // reserves max{floor, iterated boundary of p}; a lower degree reserves
    // the largest value already assigned at that degree.
    Int step_total(int idx, Int p) const {
        const Slot& s = tab.slots[idx];
        const int ell = sp.cap - s.deg;
        Int total = checked_add(sum, p);
        IntVec per(static_cast<size_t>(sp.cap) + 1, -1);
        for (int j = idx + 1; j < tab.size(); ++j) {
            const int d = tab.slots[j].deg;
            if (per[d] < 0) {
                if (d == s.deg)
                    per[d] = std::max(floor_at(d), p);
                else if (d > s.deg)
                    per[d] = std::max(floor_at(d), generalized_boundary(p, ell, d - s.deg));
                else
                    per[d] = std::max(floor_at(d), max_at_deg[d]);
            }
            total = checked_add(total, per[d]);
        }
        return total;
    }

    void assign(int idx, Int p) {
        q[idx] = p;
        sum += p;
        if (top_divisible(idx)) sigma_partial += p;
        max_at_deg[tab.slots[idx].deg] = std::max(max_at_deg[tab.slots[idx].deg], p);
    }

    Composition to_composition() const {
        Composition out;
        out.space = sp;
        for (int i = 0; i < tab.size(); ++i) out.q.emplace(tab.slots[i].mon, q[i]);
        return out;
    }
};

}  // namespace detail

/// Checks the five axioms in order and names the first one violated:
/// (1) exchange monotonicity, (2) top-degree values are 1, (3) boundary
/// images bound multiples, (4) values respect the floor row, (5) mass is r.
/// Missing or extraneous assignments are errors, not diagnoses.
inline CompositionDiagnosis validate_composition(const Composition& comp, Int r,
                                                 ValuePolicy policy = ValuePolicy::admit_zero) {
    require_valid(comp.space);
    const auto tab = detail::make_comp_table(comp.space.vars, comp.space.cap);
    if (static_cast<int>(comp.q.size()) != tab.size())
        throw std::invalid_argument("validate_composition: assignment does not cover the monomials exactly");
    IntVec q(static_cast<size_t>(tab.size()));
    for (int i = 0; i < tab.size(); ++i) {
        auto it = comp.q.find(tab.slots[i].mon);
        if (it == comp.q.end())
            throw std::invalid_argument("validate_composition: missing assignment for " +
                                        to_string(tab.slots[i].mon, "u"));
        q[i] = it->second;
    }
    const Int min_value = policy == ValuePolicy::strict_positive ? 1 : 0;
    for (int i = 0; i < tab.size(); ++i)
        if (q[i] < min_value)
            return {false, "value at " + to_string(tab.slots[i].mon, "u") +
                               (min_value == 1 ? " is not positive" : " is negative")};
    for (int i = 0; i < tab.size(); ++i)
        for (int pi : tab.slots[i].exch_preds)
            if (q[pi] > q[i])
                return {false, "exchange monotonicity fails: value at " + to_string(tab.slots[pi].mon, "u") +
                                   " exceeds value at " + to_string(tab.slots[i].mon, "u")};
    for (int i = 0; i < tab.size(); ++i)
        if (tab.slots[i].deg == comp.space.cap && q[i] != 1)
            return {false, "top-degree value at " + to_string(tab.slots[i].mon, "u") + " is not 1"};
    for (int i = 0; i < tab.size(); ++i) {
        const int ell = comp.space.cap - tab.slots[i].deg;
        for (int di : tab.slots[i].divisors)
            if (boundary(q[di], ell + 1) > q[i])
                return {false, "boundary bound fails from " + to_string(tab.slots[di].mon, "u") + " to " +
                                   to_string(tab.slots[i].mon, "u")};
    }
    for (int i = 0; i < tab.size(); ++i) {
        const int ell = comp.space.cap - tab.slots[i].deg;
        if (q[i] < comp.space.h[static_cast<size_t>(ell)])
            return {false, "value at " + to_string(tab.slots[i].mon, "u") + " is below h_" + std::to_string(ell)};
    }
    Int total = 0;
    for (Int v : q) total = checked_add(total, v);
    if (total != r)
        return {false, "values sum to " + std::to_string(total) + ", expected " + std::to_string(r)};
    return {};
}

/// Sum of the values on monomials divisible by the top variable.
inline Int sigma_top(const Composition& comp) {
    Int s = 0;
    for (const auto& [m, v] : comp.q)
        if (m.e[static_cast<size_t>(comp.space.vars) - 1] > 0) s = checked_add(s, v);
    return s;
}

/// Smallest achievable mass: one floor value per monomial.
inline Int min_feasible_mass(const CompositionSpace& sp, ValuePolicy policy = ValuePolicy::admit_zero) {
    require_valid(sp);
    Int total = 0;
    for (int d = 0; d <= sp.cap; ++d) {
        Int per = sp.h[static_cast<size_t>(sp.cap - d)];
        if (policy == ValuePolicy::strict_positive || d == sp.cap) per = std::max<Int>(per, 1);
        total = checked_add(total, checked_mul(binomial(sp.vars + d - 1, d), per));
    }
    return total;
}

/// Greedy construction: walk the monomials in increasing pi order and give
/// each the largest value whose budget check passes; the reservations make
/// every later slot affordable at its forced minimum. Maximizing the
/// u_vars-free prefix (which pi order puts first) minimizes sigma_top.
inline Composition regular_composition(const CompositionSpace& sp, Int r,
                                       ValuePolicy policy = ValuePolicy::admit_zero) {
    require_valid(sp);
    if (r < 0) throw CompositionInfeasible("regular_composition: negative mass");
    const auto tab = detail::make_comp_table(sp.vars, sp.cap);
    detail::Engine eng(sp, policy, r, tab);
    for (int idx = 0; idx < tab.size(); ++idx) {
        const Int lo = eng.lower_bound(idx);
        const int ell = sp.cap - tab.slots[idx].deg;
        Int p;
        if (ell == 0) {
            p = 1;
            if (lo > 1 || eng.step_total(idx, p) > r)
                throw CompositionInfeasible("regular_composition: no room for " +
                                            to_string(tab.slots[idx].mon, "u"));
        } else {
            if (eng.step_total(idx, lo) > r)
                throw CompositionInfeasible("regular_composition: no room for " +
                                            to_string(tab.slots[idx].mon, "u"));
            Int a = lo, b = r - eng.sum;
            while (a < b) {
                const Int mid = a + (b - a + 1) / 2;
                if (eng.step_total(idx, mid) <= r)
                    a = mid;
                else
                    b = mid - 1;
            }
            p = a;
        }
        eng.assign(idx, p);
    }
    Composition out = eng.to_composition();
    auto diag = validate_composition(out, r, policy);
    if (!diag.ok) throw CompositionInfeasible("regular_composition: " + diag.why);
    return out;
}

namespace detail {

// Exhaustive walk over all valid assignments. Every bound used to cut the
// search is a necessary condition, so the enumeration is complete, and all
// axioms are enforced along the way, so every leaf is valid.
template <class Fn>
void walk_compositions(Engine& eng, int idx, Fn&& fn, std::optional<Int>* best_sigma) {
    if (idx == eng.tab.size()) {
        if (eng.sum != eng.r) return;
        if (best_sigma) {
            if (!best_sigma->has_value() || eng.sigma_partial < **best_sigma) *best_sigma = eng.sigma_partial;
        } else {
            fn(eng);
        }
        return;
    }
    Int later_min = 0;
    Int later_sigma_min = 0;
    for (int j = idx + 1; j < eng.tab.size(); ++j) {
        const Int lb = eng.lower_bound(j);
        later_min = checked_add(later_min, lb);
        if (eng.top_divisible(j)) later_sigma_min = checked_add(later_sigma_min, lb);
    }
    const Int lo = eng.lower_bound(idx);
    const Int hi = eng.r - eng.sum - later_min;
    const bool top = eng.sp.cap == eng.tab.slots[idx].deg;
    const bool counts_sigma = eng.top_divisible(idx);
    for (Int p = lo; p <= hi; ++p) {
        if (top && p != 1) {
            if (p > 1) break;
            continue;
        }
        if (eng.step_total(idx, p) > eng.r) break;
        if (best_sigma && best_sigma->has_value()) {
            const Int sigma_floor = eng.sigma_partial + (counts_sigma ? p : 0) + later_sigma_min;
            if (sigma_floor >= **best_sigma) break;
        }
        Engine next = eng;
        next.assign(idx, p);
        walk_compositions(next, idx + 1, fn, best_sigma);
    }
}

}  // namespace detail

/// Visits every valid assignment of mass r; fn receives the Composition.
template <class Fn>
void for_each_composition(const CompositionSpace& sp, Int r, ValuePolicy policy, Fn&& fn) {
    require_valid(sp);
    if (r < 0) return;
    const auto tab = detail::make_comp_table(sp.vars, sp.cap);
    detail::Engine eng(sp, policy, r, tab);
    auto leaf = [&](const detail::Engine& e) { fn(e.to_composition()); };
    detail::walk_compositions(eng, 0, leaf, nullptr);
}

/// Collects the full composition stream in search order; the exhaustive
/// oracle behind rho.
inline std::vector<Composition> enumerate_compositions(const CompositionSpace& sp, Int r,
                                                       ValuePolicy policy = ValuePolicy::admit_zero) {
    std::vector<Composition> out;
    for_each_composition(sp, r, policy, [&](const Composition& c) { out.push_back(c); });
    return out;
}

/// Minimum sigma_top via the greedy construction; nullopt when infeasible.
inline std::optional<Int> rho(const CompositionSpace& sp, Int r, ValuePolicy policy = ValuePolicy::admit_zero) {
    require_valid(sp);
    if (r < 0) return std::nullopt;
    try {
        return sigma_top(regular_composition(sp, r, policy));
    } catch (const CompositionInfeasible&) {
        return std::nullopt;
    }
}

/// Minimum sigma_top by branch-and-bound search; nullopt when infeasible.
inline std::optional<Int> rho_oracle(const CompositionSpace& sp, Int r,
                                     ValuePolicy policy = ValuePolicy::admit_zero) {
    require_valid(sp);
    if (r < 0) return std::nullopt;
    const auto tab = detail::make_comp_table(sp.vars, sp.cap);
    detail::Engine eng(sp, policy, r, tab);
    std::optional<Int> best;
    auto noop = [](const detail::Engine&) {};
    detail::walk_compositions(eng, 0, noop, &best);
    return best;
}

}  // namespace scmh
