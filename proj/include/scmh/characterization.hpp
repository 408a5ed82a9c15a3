#pragma once

// The triangle test for realizability and the shifted witness construction.
// A triangle is accepted when (a) every row is an M-sequence, (b) each entry
// covers the partial sums of the row below, and (c) in every cell the
// minimum top-variable mass of a composition fits the entry to its left.

#include <stdexcept>
#include <string>

#include "composition.hpp"
#include "correspondence.hpp"
#include "triangle.hpp"

namespace scmh {

struct Verdict {
    bool accepted = true;
    char condition = 0;  // 'a', 'b' or 'c' when rejected
    int i = -1, j = -1;  // failing location; j is unused for 'a'

    std::string describe() const {
        if (accepted) return "accepted";
        switch (condition) {
            case 'a':
                return "rejected: row " + std::to_string(i) + " is not an M-sequence";
            case 'b':
                return "rejected: entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") is below the partial sum of row " + std::to_string(i + 1);
            default:
                return "rejected: minimum top-variable mass at (" + std::to_string(i) + "," +
                       std::to_string(j) + ") exceeds entry (" + std::to_string(i) + "," +
                       std::to_string(j - 1) + ")";
        }
    }
};

/// Scans condition (a) by ascending row, then (b) and (c) by ascending
/// (i, j); the verdict reports the first failure.
inline Verdict check_htriangle(const Triangle& t, ValuePolicy policy = ValuePolicy::admit_zero) {
    require_well_shaped(t, "check_htriangle");
    const int d = t.top();
    for (int i = 0; i <= d; ++i)
        if (!is_m_sequence(t.rows[i])) return {false, 'a', i, -1};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j) {
            Int s = 0;
            for (int l = 0; l <= j; ++l) s = checked_add(s, t.at(i + 1, l));
            if (t.at(i, j) < s) return {false, 'b', i, j};
        }
    for (int i = 1; i <= d - 1; ++i)
        for (int j = 1; j <= i; ++j) {
            const CompositionSpace sp{d - i, j, t.rows[d]};
            const auto mass = rho(sp, t.at(i, j), policy);
            if (!mass || *mass > t.at(i, j - 1)) return {false, 'c', i, j};
        }
    return {};
}

/// Partition of the degree-cap members of a level by their exponents on its
/// top space.vars variables; the value at a monomial is its class size.
inline Composition composition_from_level(const Multicomplex& level, const CompositionSpace& space) {
    require_valid(space);
    const int bottom = level.vars - space.vars;
    if (bottom < 0) throw std::invalid_argument("composition_from_level: level has fewer variables than the space");
    Composition out;
    out.space = space;
    for (int deg = 0; deg <= space.cap; ++deg)
        for (const auto& m : monomials_of_degree(space.vars, deg)) out.q[m] = 0;
    for (const auto& w : level.members) {
        if (w.degree() != space.cap) continue;
        Monomial top = Monomial::unit(space.vars);
        for (int u = 0; u < space.vars; ++u) top.e[u] = w.e[bottom + u];
        ++out.q[top];
    }
    return out;
}

/// Builds a shifted complex whose tilde h-triangle is exactly t. The top
/// level takes per-degree compressed prefixes; each lower level i turns the
/// greedy composition of t[i][j] into prefix blocks, one per top-variable
/// pattern, with u_k standing for the ambient variable w_{n-d+k}.
inline SimplicialComplex build_witness(const Triangle& t, ValuePolicy policy = ValuePolicy::admit_zero) {
    const Verdict v = check_htriangle(t, policy);
    if (!v.accepted) throw std::invalid_argument("build_witness: " + v.describe());
    const int d = t.top();
    int n = d;
    for (int i = 1; i <= d; ++i) n = std::max<Int>(n, i + t.at(i, 1));

    Metacomplex mc;
    mc.levels.resize(static_cast<size_t>(d) + 1);
    {
        Multicomplex lvl;
        lvl.vars = n - d;
        for (int j = 0; j <= d; ++j)
            for (auto& m : first_monomials_of_degree(n - d, j, t.at(d, j))) lvl.members.insert(std::move(m));
        mc.levels[d] = std::move(lvl);
    }
    for (int i = 0; i < d; ++i) {
        Multicomplex lvl;
        lvl.vars = n - i;
        lvl.members.insert(Monomial::unit(n - i));
        for (int j = 1; j <= i; ++j) {
            const CompositionSpace sp{d - i, j, t.rows[d]};
            const Composition comp = regular_composition(sp, t.at(i, j), policy);
            for (const auto& [utop, cnt] : comp.q) {
                for (const auto& p : first_monomials_of_degree(n - d, j - utop.degree(), cnt)) {
                    Monomial w = Monomial::unit(n - i);
                    for (int b = 0; b < n - d; ++b) w.e[b] = p.e[b];
                    for (int u = 0; u < d - i; ++u) w.e[n - d + u] = utop.e[u];
                    lvl.members.insert(std::move(w));
                }
            }
        }
        mc.levels[i] = std::move(lvl);
    }

    const auto diag = validate_metacomplex(mc);
    if (!diag.ok) throw std::logic_error("build_witness: " + diag.why);
    if (!is_shifted(mc)) throw std::logic_error("build_witness: metacomplex is not shifted");
    SimplicialComplex out = complex_of_metacomplex(mc);
    if (!is_shifted(out) || htriangle_tilde(out) != t)
        throw std::logic_error("build_witness: output does not reproduce the triangle");
    return out;
}

}  // namespace scmh
