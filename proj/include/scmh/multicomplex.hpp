#pragma once

// Finite multicomplexes: divisibility-closed sets of monomials on variables
// w_1, ..., w_r, plus the cone construction and layered metacomplexes.

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "triangle.hpp"

namespace scmh {

struct Monomial {
    std::vector<int> e;  // exponents of w_1, ..., w_r

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {
        for (int x : e)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }
    static Monomial unit(int vars) { return Monomial(std::vector<int>(vars, 0)); }

    int vars() const { return static_cast<int>(e.size()); }
    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool divides(const Monomial& m) const {
        if (vars() != m.vars()) return false;
        for (int i = 0; i < vars(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    bool is_unit() const { return degree() == 0; }

    auto operator<=>(const Monomial&) const = default;
};

/// "1", "w1*w3^2", ... with a caller-chosen letter.
inline std::string to_string(const Monomial& m, const char* letter = "w") {
    std::string s;
    for (int i = 0; i < m.vars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += letter + std::to_string(i + 1);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

struct Multicomplex {
    int vars = 0;
    std::set<Monomial> members;

    bool empty() const { return members.empty(); }
    bool contains(const Monomial& m) const { return members.count(m) != 0; }
    int max_degree() const {
        int d = 0;
        for (const auto& m : members) d = std::max(d, m.degree());
        return d;
    }

    auto operator<=>(const Multicomplex&) const = default;
};

/// Close a generator list under divisibility.
inline Multicomplex make_multicomplex(int vars, const std::vector<Monomial>& gens) {
    Multicomplex mc;
    mc.vars = vars;
    std::vector<Monomial> stack;
    for (const auto& g : gens) {
        if (g.vars() != vars) throw std::invalid_argument("make_multicomplex: wrong variable count");
        if (mc.members.insert(g).second) stack.push_back(g);
    }
    while (!stack.empty()) {
        Monomial m = stack.back();
        stack.pop_back();
        for (int i = 0; i < vars; ++i) {
            if (m.e[i] == 0) continue;
            Monomial div = m;
            --div.e[i];
            if (mc.members.insert(div).second) stack.push_back(div);
        }
    }
    return mc;
}

inline bool is_divisibility_closed(const Multicomplex& mc) {
    for (const auto& m : mc.members)
        for (int i = 0; i < mc.vars; ++i) {
            if (m.e[i] == 0) continue;
            Monomial div = m;
            --div.e[i];
            if (!mc.contains(div)) return false;
        }
    return true;
}

/// Shifted: swapping one occurrence of w_r for any w_s with s > r stays inside.
inline bool is_shifted(const Multicomplex& mc) {
    for (const auto& m : mc.members)
        for (int r = 0; r < mc.vars; ++r) {
            if (m.e[r] == 0) continue;
            for (int s = r + 1; s < mc.vars; ++s) {
                Monomial x = m;
                --x.e[r];
                ++x.e[s];
                if (!mc.contains(x)) return false;
            }
        }
    return true;
}

/// Monomial counts by degree, (f_0, ..., f_maxdeg); empty input gives ().
inline IntVec f_vector(const Multicomplex& mc) {
    if (mc.empty()) return {};
    IntVec f(mc.max_degree() + 1, 0);
    for (const auto& m : mc.members) ++f[m.degree()];
    return f;
}

/// Cone with a fresh top variable: {w_{r+1}^l * m : m in M, deg m + l < a}.
/// Requires every member degree to be at most a.
inline Multicomplex a_cone(const Multicomplex& mc, int a) {
    if (a < 1) throw std::invalid_argument("a_cone: a must be positive");
    if (!mc.empty() && mc.max_degree() > a) throw std::invalid_argument("a_cone: member degree exceeds a");
    Multicomplex out;
    out.vars = mc.vars + 1;
    for (const auto& m : mc.members) {
        for (int l = 0; m.degree() + l < a; ++l) {
            Monomial x = m;
            x.e.push_back(l);
            out.members.insert(std::move(x));
        }
    }
    return out;
}

/// Levels M[0], ..., M[d]; level i lives on n-i variables with degree <= i
/// and the cone of level i must land inside level i-1.
struct Metacomplex {
    std::vector<Multicomplex> levels;

    int d() const { return static_cast<int>(levels.size()) - 1; }
    int n() const { return levels.at(0).vars; }

    auto operator<=>(const Metacomplex&) const = default;
};

struct MetacomplexDiagnosis {
    bool ok = true;
    std::string why;
};

inline MetacomplexDiagnosis validate_metacomplex(const Metacomplex& mc) {
    if (mc.levels.empty()) return {false, "no levels"};
    const int n = mc.n();
    const int d = mc.d();
    for (int i = 0; i <= d; ++i) {
        const auto& lvl = mc.levels[i];
        if (lvl.vars != n - i)
            return {false, "level " + std::to_string(i) + " has " + std::to_string(lvl.vars) +
                               " variables, expected " + std::to_string(n - i)};
        if (!lvl.empty() && lvl.max_degree() > i)
            return {false, "level " + std::to_string(i) + " has a member of degree above " + std::to_string(i)};
        if (!is_divisibility_closed(lvl))
            return {false, "level " + std::to_string(i) + " is not divisibility-closed"};
    }
    for (int i = 1; i <= d; ++i) {
        const Multicomplex cone = a_cone(mc.levels[i], i);
        for (const auto& m : cone.members)
            if (!mc.levels[i - 1].contains(m))
                return {false, "cone of level " + std::to_string(i) + " is not contained in level " +
                                   std::to_string(i - 1) + " (missing " + to_string(m) + ")"};
    }
    return {};
}

inline bool is_shifted(const Metacomplex& mc) {
    for (const auto& lvl : mc.levels)
        if (!is_shifted(lvl)) return false;
    return true;
}

/// Row i is the f-vector of level i, zero-padded to i+1 entries.
inline Triangle f_triangle(const Metacomplex& mc) {
    auto diag = validate_metacomplex(mc);
    if (!diag.ok) throw std::invalid_argument("f_triangle: " + diag.why);
    Triangle t;
    for (int i = 0; i <= mc.d(); ++i) {
        IntVec row = f_vector(mc.levels[i]);
        row.resize(i + 1, 0);
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace scmh
