#pragma once

// Exhaustive small-case enumeration: shifted complexes built level by level,
// arbitrary complexes, shifted multicomplexes, M-sequences, and the per-item
// verification records used by the harness.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "characterization.hpp"
#include "correspondence.hpp"

namespace scmh {

/// Ground-set bound for the census; override with SCMH_MAX_N.
inline int census_max_n() {
    if (const char* s = std::getenv("SCMH_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end == s || *end != '\0' || v < 1 || v > 25)
            throw std::invalid_argument("SCMH_MAX_N must be an integer in [1, 25]");
        return static_cast<int>(v);
    }
    return 7;
}

namespace detail {

inline Face face_of_mask(std::uint32_t mask) {
    Face f;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) f.v.push_back(v + 1);
    return f;
}

inline int mask_vertex_sum(std::uint32_t mask) {
    int s = 0;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) s += v + 1;
    return s;
}

inline void sort_masks_for_levels(std::vector<std::uint32_t>& pool) {
    std::sort(pool.begin(), pool.end(), [](std::uint32_t a, std::uint32_t b) {
        const int sa = mask_vertex_sum(a), sb = mask_vertex_sum(b);
        if (sa != sb) return sa > sb;
        return a > b;
    });
}

// Level-by-level walk over complexes on [n]: level c holds the c-element
// faces, eligible once all their boundary faces sit one level down; with
// shifted_only every level must also be closed under single vertex bumps
// v -> v+1. Choosing the empty level emits the complex assembled so far, so
// {face ∅} comes first and the stream is deterministic.
template <class Emit>
struct FaceLevelWalk {
    int n, dmax;
    bool shifted_only;
    Emit& emit;
    std::vector<std::vector<std::uint32_t>> levels;

    bool chosen_in(const std::vector<std::uint32_t>& xs, std::uint32_t m) const {
        return std::find(xs.begin(), xs.end(), m) != xs.end();
    }

    std::vector<std::uint32_t> make_pool(int c) const {
        std::vector<std::uint32_t> pool;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != c) continue;
            bool ok = true;
            if (c > 1) {
                for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1) {
                    const std::uint32_t sub = mask & ~(rest & (0u - rest));
                    ok = chosen_in(levels[static_cast<size_t>(c) - 2], sub);
                }
            }
            if (ok) pool.push_back(mask);
        }
        sort_masks_for_levels(pool);
        return pool;
    }

    bool bumps_chosen(std::uint32_t mask, const std::vector<std::uint32_t>& chosen) const {
        for (int v = 1; v < n; ++v) {
            const std::uint32_t lo = 1u << (v - 1), hi = 1u << v;
            if ((mask & lo) && !(mask & hi) && !chosen_in(chosen, (mask & ~lo) | hi)) return false;
        }
        return true;
    }

    void emit_levels() {
        std::vector<Face> facets;
        if (levels.empty()) {
            facets.push_back(Face{});
        } else {
            for (size_t c = 0; c < levels.size(); ++c)
                for (std::uint32_t mask : levels[c]) {
                    bool maximal = true;
                    if (c + 1 < levels.size())
                        for (std::uint32_t up : levels[c + 1])
                            if ((up & mask) == mask) {
                                maximal = false;
                                break;
                            }
                    if (maximal) facets.push_back(face_of_mask(mask));
                }
        }
        emit(make_complex(n, facets));
    }

    void choose(int c, const std::vector<std::uint32_t>& pool, size_t idx, std::vector<std::uint32_t>& chosen) {
        if (idx == pool.size()) {
            if (chosen.empty()) {
                emit_levels();
            } else {
                levels.push_back(chosen);
                level(c + 1);
                levels.pop_back();
            }
            return;
        }
        choose(c, pool, idx + 1, chosen);
        if (!shifted_only || bumps_chosen(pool[idx], chosen)) {
            chosen.push_back(pool[idx]);
            choose(c, pool, idx + 1, chosen);
            chosen.pop_back();
        }
    }

    void level(int c) {
        if (c > dmax) {
            emit_levels();
            return;
        }
        const auto pool = make_pool(c);
        std::vector<std::uint32_t> chosen;
        choose(c, pool, 0, chosen);
    }
};

}  // namespace detail

/// Every shifted complex on [n] of dimension at most dmax-1, each exactly
/// once, deterministically; {∅} comes first, the void complex is not
/// produced.
template <class Fn>
void enumerate_shifted(int n, int dmax, Fn&& fn) {
    if (n < 0 || n > census_max_n())
        throw std::invalid_argument("enumerate_shifted: n exceeds the configured bound");
    if (dmax < 0 || dmax > n) throw std::invalid_argument("enumerate_shifted: need 0 <= dmax <= n");
    detail::FaceLevelWalk<Fn> walk{n, dmax, true, fn, {}};
    walk.level(1);
}

/// Every complex on [n] (shifted or not, void excluded), dimension < dmax.
template <class Fn>
void enumerate_complexes(int n, int dmax, Fn&& fn) {
    if (n < 0 || n > 5) throw std::invalid_argument("enumerate_complexes: bound is n <= 5");
    if (dmax < 0 || dmax > n) throw std::invalid_argument("enumerate_complexes: need 0 <= dmax <= n");
    detail::FaceLevelWalk<Fn> walk{n, dmax, false, fn, {}};
    walk.level(1);
}

/// The level-1 choices of the shifted walk are the n+1 vertex suffixes in
/// ascending size; partitioning on them parallelizes the census while the
/// merged stream stays identical to the sequential one.
inline std::vector<SimplicialComplex> enumerate_shifted_parallel(int n, int dmax, int jobs) {
    if (jobs < 1) throw std::invalid_argument("enumerate_shifted_parallel: jobs must be positive");
    if (n < 0 || n > census_max_n())
        throw std::invalid_argument("enumerate_shifted_parallel: n exceeds the configured bound");
    if (dmax < 0 || dmax > n) throw std::invalid_argument("enumerate_shifted_parallel: need 0 <= dmax <= n");
    std::vector<std::vector<SimplicialComplex>> slices(static_cast<size_t>(n) + 1);
    auto run_slice = [&](int k) {
        // suffix {n-k+1..n} as level 1
        auto sink = [&](SimplicialComplex c) { slices[static_cast<size_t>(k)].push_back(std::move(c)); };
        detail::FaceLevelWalk<decltype(sink)> walk{n, dmax, true, sink, {}};
        if (k == 0) {
            walk.emit_levels();
            return;
        }
        if (dmax < 1) return;
        std::vector<std::uint32_t> t1;
        for (int v = n - k + 1; v <= n; ++v) t1.push_back(1u << (v - 1));
        detail::sort_masks_for_levels(t1);
        walk.levels.push_back(std::move(t1));
        walk.level(2);
    };
    if (jobs == 1) {
        for (int k = 0; k <= n; ++k) run_slice(k);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (int k = w; k <= n; k += jobs) run_slice(k);
            });
        for (auto& t : pool) t.join();
    }
    std::vector<SimplicialComplex> out;
    for (auto& s : slices)
        for (auto& c : s) out.push_back(std::move(c));
    return out;
}

namespace detail {

// Same walk shape for multicomplexes: grade c holds the degree-c monomials,
// eligible once all their degree-(c-1) divisors are present, and each grade
// is closed under single exchanges u_i -> u_{i+1}.
template <class Emit>
struct MonomialLevelWalk {
    int vars, cap;
    Emit& emit;
    std::vector<std::vector<Monomial>> levels;

    bool chosen_in(const std::vector<Monomial>& xs, const Monomial& m) const {
        return std::find(xs.begin(), xs.end(), m) != xs.end();
    }

    std::vector<Monomial> make_pool(int c) const {
        std::vector<Monomial> pool;
        for (auto& m : monomials_of_degree(vars, c)) {
            bool ok = true;
            if (c > 1) {
                for (int i = 0; i < vars && ok; ++i) {
                    if (m.e[i] == 0) continue;
                    Monomial div = m;
                    --div.e[i];
                    ok = chosen_in(levels[static_cast<size_t>(c) - 2], div);
                }
            }
            if (ok) pool.push_back(m);
        }
        // monomials_of_degree is largest-first in pi order already
        return pool;
    }

    bool bumps_chosen(const Monomial& m, const std::vector<Monomial>& chosen) const {
        for (int i = 0; i + 1 < vars; ++i) {
            if (m.e[i] == 0) continue;
            Monomial up = m;
            --up.e[i];
            ++up.e[i + 1];
            if (!chosen_in(chosen, up)) return false;
        }
        return true;
    }

    void emit_levels() {
        Multicomplex mc;
        mc.vars = vars;
        mc.members.insert(Monomial::unit(vars));
        for (const auto& lvl : levels) mc.members.insert(lvl.begin(), lvl.end());
        emit(mc);
    }

    void choose(int c, const std::vector<Monomial>& pool, size_t idx, std::vector<Monomial>& chosen) {
        if (idx == pool.size()) {
            if (chosen.empty()) {
                emit_levels();
            } else {
                levels.push_back(chosen);
                level(c + 1);
                levels.pop_back();
            }
            return;
        }
        choose(c, pool, idx + 1, chosen);
        if (bumps_chosen(pool[idx], chosen)) {
            chosen.push_back(pool[idx]);
            choose(c, pool, idx + 1, chosen);
            chosen.pop_back();
        }
    }

    void level(int c) {
        if (c > cap) {
            emit_levels();
            return;
        }
        const auto pool = make_pool(c);
        std::vector<Monomial> chosen;
        choose(c, pool, 0, chosen);
    }
};

}  // namespace detail

/// Every shifted multicomplex on the given variables with member degrees at
/// most cap; all contain the unit monomial.
template <class Fn>
void enumerate_shifted_multicomplexes(int vars, int cap, Fn&& fn) {
    if (vars < 0 || cap < 0) throw std::invalid_argument("enumerate_shifted_multicomplexes: negative argument");
    detail::MonomialLevelWalk<Fn> walk{vars, cap, fn, {}};
    walk.level(1);
}

/// Every M-sequence (f_0, ..., f_k) with k < max_len and f_1 <= first_bound.
template <class Fn>
void enumerate_m_sequences(int max_len, Int first_bound, Fn&& fn) {
    if (max_len < 1) throw std::invalid_argument("enumerate_m_sequences: max_len must be positive");
    IntVec f{1};
    auto rec = [&](auto&& self) -> void {
        fn(f);
        const int l = static_cast<int>(f.size());
        if (l == max_len) return;
        for (Int v = 0;; ++v) {
            if (l == 1 && v > first_bound) break;
            if (l >= 2 && v > 0 && boundary(v, l) > f[static_cast<size_t>(l) - 1]) break;
            f.push_back(v);
            self(self);
            f.pop_back();
        }
    };
    rec(rec);
}

/// Everything the harness reports per census item, reproducible from the
/// complex alone.
struct CensusRecord {
    SimplicialComplex complex;
    Triangle h;       // shelling triangle
    Triangle htilde;  // cumulative transform of h
    std::string metacomplex_fingerprint;
    std::string dual_fingerprint;
};

inline std::string fingerprint(const Metacomplex& mc) {
    std::string s;
    for (const auto& lvl : mc.levels) {
        if (!s.empty()) s += " | ";
        std::string part;
        for (const auto& m : lvl.members) {
            if (!part.empty()) part += ",";
            part += to_string(m);
        }
        s += part.empty() ? "(empty)" : part;
    }
    return s;
}

inline std::string fingerprint(const SimplicialComplex& c) {
    if (c.is_void()) return "(void)";
    std::string s;
    for (const auto& f : c.facets) {
        if (!s.empty()) s += " | ";
        s += to_string(f);
    }
    return s;
}

inline CensusRecord census_record(const SimplicialComplex& c) {
    CensusRecord rec;
    rec.complex = c;
    rec.h = h_triangle_shelling(c);
    rec.htilde = htilde_from_h(rec.h);
    rec.metacomplex_fingerprint = fingerprint(metacomplex_of_complex(c));
    rec.dual_fingerprint = fingerprint(alexander_dual(c));
    return rec;
}

/// One verification sweep: suite name, instance count, convention pins, and
/// any failures with their smallest witnesses.
struct RunReport {
    std::string suite;
    Int instances = 0;
    std::string conventions = "values=admit-zero order=high-index-major";
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

inline std::string to_string(const RunReport& r) {
    std::string s = "suite " + r.suite + ": " + std::to_string(r.instances) + " instances, " +
                    (r.ok() ? "all checks passed" : std::to_string(r.failures.size()) + " failures") +
                    " [" + r.conventions + "]";
    for (const auto& f : r.failures) s += "\n  FAIL " + f;
    return s;
}

/// Cross-checks every census item: shifted, the two h-triangle routes agree,
/// the metacomplex round trip is the identity, the double dual is the
/// identity, and the checker accepts the realized triangle.
inline RunReport verify_census(int n, int dmax, int jobs = 1) {
    RunReport rep;
    rep.suite = "census n=" + std::to_string(n) + " dmax=" + std::to_string(dmax);
    const auto all = enumerate_shifted_parallel(n, dmax, jobs);
    rep.instances = static_cast<Int>(all.size());
    for (const auto& c : all) {
        const std::string who = fingerprint(c);
        if (!is_shifted(c)) {
            rep.failures.push_back(who + ": not shifted");
            continue;
        }
        const Triangle direct = htriangle_tilde(c);
        const CensusRecord rec = census_record(c);
        if (rec.htilde != direct) rep.failures.push_back(who + ": triangle routes disagree");
        if (complex_of_metacomplex(metacomplex_of_complex(c)) != c)
            rep.failures.push_back(who + ": metacomplex round trip changed the complex");
        if (alexander_dual(alexander_dual(c)) != c)
            rep.failures.push_back(who + ": double dual changed the complex");
        const Verdict v = check_htriangle(direct);
        if (!v.accepted) rep.failures.push_back(who + ": realized triangle rejected (" + v.describe() + ")");
    }
    return rep;
}

}  // namespace scmh
