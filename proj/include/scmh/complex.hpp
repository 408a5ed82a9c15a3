#pragma once

// Simplicial complexes on ground set [n] = {1, ..., n}, stored by their
// facet antichain.  Vertices are 1-based.  The complex {empty set} is the
// empty complex; a complex with no facets at all is the void complex.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "triangle.hpp"

namespace scmh {

struct Face {
    std::vector<int> v;  // strictly increasing vertex list

    Face() = default;
    Face(std::initializer_list<int> xs) : v(xs) { normalize(); }
    explicit Face(std::vector<int> xs) : v(std::move(xs)) { normalize(); }

    void normalize() {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (!v.empty() && v.front() < 1) throw std::invalid_argument("Face: vertices are 1-based");
    }

    int size() const { return static_cast<int>(v.size()); }
    int dim() const { return size() - 1; }
    bool contains(int x) const { return std::binary_search(v.begin(), v.end(), x); }
    bool subset_of(const Face& g) const {
        return std::includes(g.v.begin(), g.v.end(), v.begin(), v.end());
    }

    auto operator<=>(const Face&) const = default;
};

inline std::string to_string(const Face& f) {
    if (f.v.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < f.v.size(); ++i) s += (i ? " " : "") + std::to_string(f.v[i]);
    return s;
}

struct SimplicialComplex {
    int n = 0;
    std::vector<Face> facets;  // inclusion-maximal, sorted, deduplicated

    bool is_void() const { return facets.empty(); }
    bool is_empty_complex() const { return facets.size() == 1 && facets[0].v.empty(); }

    int dim() const {
        if (is_void()) throw std::invalid_argument("dim: void complex");
        int d = -1;
        for (const auto& f : facets) d = std::max(d, f.dim());
        return d;
    }

    bool has_face(const Face& f) const {
        for (const auto& g : facets)
            if (f.subset_of(g)) return true;
        return false;
    }

    /// Every face, the empty face included.
    std::set<Face> face_set() const {
        std::set<Face> out;
        for (const auto& f : facets) {
            const int k = f.size();
            for (unsigned m = 0; m < (1u << k); ++m) {
                std::vector<int> sub;
                for (int b = 0; b < k; ++b)
                    if (m >> b & 1u) sub.push_back(f.v[b]);
                out.insert(Face(std::move(sub)));
            }
        }
        return out;
    }

    auto operator<=>(const SimplicialComplex&) const = default;
};

/// Canonical constructor: checks the vertex range, drops dominated faces and
/// duplicates, sorts.  An empty list yields the void complex.
inline SimplicialComplex make_complex(int n, std::vector<Face> faces) {
    if (n < 0) throw std::invalid_argument("make_complex: n must be non-negative");
    for (const auto& f : faces)
        if (!f.v.empty() && f.v.back() > n) throw std::invalid_argument("make_complex: vertex exceeds n");
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < faces.size() && !dominated; ++j)
            if (i != j && faces[i].subset_of(faces[j]) && !(faces[j].subset_of(faces[i]) && j > i))
                dominated = true;
        if (!dominated) maximal.push_back(faces[i]);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    return SimplicialComplex{n, std::move(maximal)};
}

/// (f_{-1}, f_0, ..., f_{d-1}); f_{-1} = 1 counts the empty face.
inline IntVec f_vector(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("f_vector: void complex");
    const int d = c.dim() + 1;
    IntVec f(d + 1, 0);
    for (const auto& face : c.face_set()) ++f[face.size()];
    return f;
}

/// Coefficients of sum_i f_{i-1} (1-y)^{d-i} y^i, i.e. the h-vector.
inline IntVec h_vector(const SimplicialComplex& c) {
    const IntVec f = f_vector(c);
    const int d = static_cast<int>(f.size()) - 1;
    IntVec h(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        // add f_{i-1} * y^i * (1-y)^{d-i}
        for (int k = 0; k <= d - i; ++k) {
            Int term = checked_mul(f[i], binomial(d - i, k));
            if (k % 2) term = -term;
            h[i + k] = checked_add(h[i + k], term);
        }
    }
    return h;
}

/// Pure skeleton: the closure of the i-dimensional faces.
inline SimplicialComplex pure_skeleton(const SimplicialComplex& c, int i) {
    if (c.is_void()) throw std::invalid_argument("pure_skeleton: void complex");
    if (i < -1 || i > c.dim()) throw std::invalid_argument("pure_skeleton: index out of range");
    std::vector<Face> fs;
    for (const auto& f : c.face_set())
        if (f.dim() == i) fs.push_back(f);
    return make_complex(c.n, std::move(fs));
}

/// All faces of dimension <= i.  For i >= dim this is the complex itself,
/// for i = -1 the empty complex, below that the void complex.
inline SimplicialComplex skeleton(const SimplicialComplex& c, int i) {
    if (c.is_void() || i < -1) return SimplicialComplex{c.n, {}};
    if (i >= c.dim()) return c;
    std::vector<Face> fs;
    for (const auto& f : c.facets)
        if (f.dim() <= i) fs.push_back(f);
    for (const auto& f : c.face_set())
        if (f.dim() == i) fs.push_back(f);
    return make_complex(c.n, std::move(fs));
}

/// Shifted: replacing any vertex of a face by a larger non-member vertex
/// stays inside the complex.
inline bool is_shifted(const SimplicialComplex& c) {
    const auto faces = c.face_set();
    for (const auto& f : faces) {
        for (int r : f.v) {
            for (int s = r + 1; s <= c.n; ++s) {
                if (f.contains(s)) continue;
                Face g = f;
                g.v.erase(std::find(g.v.begin(), g.v.end(), r));
                g.v.push_back(s);
                g.normalize();
                if (!faces.count(g)) return false;
            }
        }
    }
    return true;
}

/// Longest suffix segment {s, ..., n} contained in f; empty when n is absent.
inline Face sigma(const Face& f, int n) {
    Face out;
    if (!f.contains(n)) return out;
    int s = n;
    while (s - 1 >= 1 && f.contains(s - 1)) --s;
    for (int x = s; x <= n; ++x) out.v.push_back(x);
    return out;
}

inline Face restriction(const Face& f, int n) {
    const Face sg = sigma(f, n);
    Face out;
    for (int x : f.v)
        if (!sg.contains(x)) out.v.push_back(x);
    return out;
}

/// Row i is the h-vector of the pure (i-1)-skeleton, for 0 <= i <= dim+1.
inline Triangle htriangle_tilde(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("htriangle_tilde: void complex");
    const int d = c.dim() + 1;
    Triangle t;
    for (int i = 0; i <= d; ++i) t.rows.push_back(h_vector(pure_skeleton(c, i - 1)));
    return t;
}

/// Facet statistics triangle of a shifted complex:
/// entry (i, j) counts facets of size i whose suffix segment has size i-j.
inline Triangle h_triangle_shelling(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("h_triangle_shelling: void complex");
    if (!is_shifted(c)) throw std::invalid_argument("h_triangle_shelling: complex is not shifted");
    const int d = c.dim() + 1;
    Triangle t;
    for (int i = 0; i <= d; ++i) t.rows.emplace_back(i + 1, 0);
    for (const auto& f : c.facets) {
        const int i = f.size();
        const int j = i - sigma(f, c.n).size();
        ++t.rows[i][j];
    }
    return t;
}

/// Inclusion-minimal non-faces.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
    if (c.n > 25) throw std::invalid_argument("minimal_nonfaces: ground set too large");
    std::vector<Face> out;
    for (unsigned m = 0; m < (1u << c.n); ++m) {
        std::vector<int> vs;
        for (int b = 0; b < c.n; ++b)
            if (m >> b & 1u) vs.push_back(b + 1);
        Face f(std::move(vs));
        if (c.has_face(f)) continue;
        bool minimal = true;
        for (int i = 0; i < f.size() && minimal; ++i) {
            Face sub = f;
            sub.v.erase(sub.v.begin() + i);
            if (!c.has_face(sub)) minimal = false;
        }
        if (minimal) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Combinatorial Alexander dual: {F : complement of F is not a face}.
/// The dual of the full simplex is the void complex.
inline SimplicialComplex alexander_dual(const SimplicialComplex& c) {
    std::vector<Face> duals;
    for (const auto& nf : minimal_nonfaces(c)) {
        std::vector<int> comp;
        for (int x = 1; x <= c.n; ++x)
            if (!nf.contains(x)) comp.push_back(x);
        duals.emplace_back(std::move(comp));
    }
    return make_complex(c.n, std::move(duals));
}

}  // namespace scmh
