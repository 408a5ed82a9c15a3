#pragma once

// Lattice-path dictionary between monomials and vertex sets, lifted to a
// bijection between shifted multicomplexes and pure shifted complexes and,
// level by level, between layered metacomplexes and arbitrary shifted
// complexes.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "complex.hpp"
#include "multicomplex.hpp"

namespace scmh {

// Word over {N, E} read left to right, starting at (0,0); E moves east,
// N moves north, so the endpoint is (#E, #N).
struct LatticePath {
    std::string word;

    int r() const { return static_cast<int>(std::count(word.begin(), word.end(), 'E')); }
    int a() const { return static_cast<int>(std::count(word.begin(), word.end(), 'N')); }

    auto operator<=>(const LatticePath&) const = default;
};

inline LatticePath parse_path(const std::string& s) {
    for (char ch : s)
        if (ch != 'N' && ch != 'E')
            throw std::invalid_argument(std::string("parse_path: invalid step '") + ch + "' (want N or E)");
    return LatticePath{s};
}

inline std::string to_string(const LatticePath& p) { return p.word; }

/// 1-based positions of the north steps.
inline std::vector<int> nu(const LatticePath& p) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(p.word.size()); ++i)
        if (p.word[i] == 'N') out.push_back(i + 1);
    return out;
}

/// Path of length r+a whose north steps sit exactly at the positions in s.
inline LatticePath nu_inverse(const std::vector<int>& s, int r, int a) {
    if (r < 0 || a < 0) throw std::invalid_argument("nu_inverse: negative dimensions");
    if (static_cast<int>(s.size()) != a) throw std::invalid_argument("nu_inverse: set size differs from a");
    std::string word(static_cast<size_t>(r + a), 'E');
    for (int pos : s) {
        if (pos < 1 || pos > r + a) throw std::invalid_argument("nu_inverse: position out of range");
        if (word[pos - 1] == 'N') throw std::invalid_argument("nu_inverse: duplicate position");
        word[pos - 1] = 'N';
    }
    return LatticePath{std::move(word)};
}

/// Exponent of w_i counts the north steps at x = i-1; north steps in the
/// final column x = r carry no variable.
inline Monomial lambda(const LatticePath& p) {
    const int r = p.r();
    Monomial m = Monomial::unit(r);
    int x = 0;
    for (char ch : p.word) {
        if (ch == 'E')
            ++x;
        else if (x < r)
            ++m.e[x];
    }
    return m;
}

/// Inverse of lambda: the a - deg(m) unaccounted north steps go last.
inline LatticePath lambda_inverse(const Monomial& m, int a) {
    if (m.degree() > a) throw std::invalid_argument("lambda_inverse: monomial degree exceeds a");
    std::string word;
    for (int i = 0; i < m.vars(); ++i) {
        word.append(static_cast<size_t>(m.e[i]), 'N');
        word.push_back('E');
    }
    word.append(static_cast<size_t>(a - m.degree()), 'N');
    return LatticePath{std::move(word)};
}

/// True when lhs never goes above rhs: height after each step is <=.
inline bool path_leq(const LatticePath& lhs, const LatticePath& rhs) {
    if (lhs.r() != rhs.r() || lhs.a() != rhs.a())
        throw std::invalid_argument("path_leq: paths have different endpoints");
    int hl = 0, hr = 0;
    for (size_t i = 0; i < lhs.word.size(); ++i) {
        if (lhs.word[i] == 'N') ++hl;
        if (rhs.word[i] == 'N') ++hr;
        if (hl > hr) return false;
    }
    return true;
}

/// Monomial on w_1..w_r of degree <= a  ->  a-subset of [r+a].
inline Face phi(const Monomial& m, int a) {
    return Face{nu(lambda_inverse(m, a))};
}

/// a-subset of [r+a]  ->  monomial on w_1..w_r.
inline Monomial psi(const Face& f, int r, int a) {
    return lambda(nu_inverse(f.v, r, a));
}

/// Facets are the phi-images of the members; pure shifted complex on [r+a].
inline SimplicialComplex complex_of_multicomplex(const Multicomplex& mc, int a) {
    if (a < 0) throw std::invalid_argument("complex_of_multicomplex: negative a");
    if (!mc.empty() && mc.max_degree() > a)
        throw std::invalid_argument("complex_of_multicomplex: member degree exceeds a");
    if (!is_shifted(mc)) throw std::invalid_argument("complex_of_multicomplex: multicomplex is not shifted");
    std::vector<Face> facets;
    facets.reserve(mc.members.size());
    for (const auto& m : mc.members) facets.push_back(phi(m, a));
    return make_complex(mc.vars + a, facets);
}

/// Inverse on pure shifted complexes; the psi-images of the facets form a
/// multicomplex on n - a variables whose f-vector is the h-vector of c.
inline Multicomplex multicomplex_of_complex(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("multicomplex_of_complex: void complex");
    const int a = c.dim() + 1;
    for (const auto& f : c.facets)
        if (f.size() != a) throw std::invalid_argument("multicomplex_of_complex: complex is not pure");
    if (!is_shifted(c)) throw std::invalid_argument("multicomplex_of_complex: complex is not shifted");
    Multicomplex out;
    out.vars = c.n - a;
    for (const auto& f : c.facets) out.members.insert(psi(f, out.vars, a));
    if (!is_divisibility_closed(out))
        throw std::logic_error("multicomplex_of_complex: image is not divisibility-closed");
    return out;
}

/// Level i is the multicomplex of the pure (i-1)-skeleton, i = 0..dim+1.
inline Metacomplex metacomplex_of_complex(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("metacomplex_of_complex: void complex");
    if (!is_shifted(c)) throw std::invalid_argument("metacomplex_of_complex: complex is not shifted");
    const int d = c.dim() + 1;
    Metacomplex out;
    out.levels.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) out.levels.push_back(multicomplex_of_complex(pure_skeleton(c, i - 1)));
    return out;
}

/// Faces are the phi-images of all levels; level i contributes the i-faces.
inline SimplicialComplex complex_of_metacomplex(const Metacomplex& mc) {
    auto diag = validate_metacomplex(mc);
    if (!diag.ok) throw std::invalid_argument("complex_of_metacomplex: " + diag.why);
    if (!is_shifted(mc)) throw std::invalid_argument("complex_of_metacomplex: metacomplex is not shifted");
    std::set<Face> faces;
    for (int i = 0; i <= mc.d(); ++i)
        for (const auto& m : mc.levels[i].members) faces.insert(phi(m, i));
    SimplicialComplex out = make_complex(mc.n(), std::vector<Face>(faces.begin(), faces.end()));
    if (out.face_set() != faces)
        throw std::logic_error("complex_of_metacomplex: face image is not subset-closed");
    return out;
}

}  // namespace scmh
