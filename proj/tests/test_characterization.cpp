#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <scmh/census.hpp>
#include <scmh/characterization.hpp>

using namespace scmh;

namespace {

Triangle tri(std::vector<IntVec> rows) { return Triangle{std::move(rows)}; }

const Triangle kCounterexample = tri({{1}, {1, 5}, {1, 4, 7}, {1, 3, 3, 4}, {1, 2, 0, 0, 0}});

Int witness_bound(const Triangle& t) {
    Int n = t.top();
    for (int i = 1; i <= t.top(); ++i) n = std::max<Int>(n, i + t.at(i, 1));
    return n;
}

// All triangles with d+1 rows, leading entry 1 per row, free entries <= emax.
template <typename Fn>
void for_each_candidate(int d, Int emax, Fn&& fn) {
    const int nfree = d * (d + 1) / 2;
    std::vector<Int> v(static_cast<size_t>(nfree), 0);
    while (true) {
        Triangle t;
        int pos = 0;
        for (int i = 0; i <= d; ++i) {
            IntVec row{1};
            for (int j = 1; j <= i; ++j) row.push_back(v[static_cast<size_t>(pos++)]);
            t.rows.push_back(std::move(row));
        }
        fn(t);
        int k = nfree - 1;
        while (k >= 0 && v[static_cast<size_t>(k)] == emax) v[static_cast<size_t>(k--)] = 0;
        if (k < 0) break;
        ++v[static_cast<size_t>(k)];
    }
}

}  // namespace

TEST_CASE("the five-row counterexample is rejected at the inner cell") {
    const auto v = check_htriangle(kCounterexample);
    REQUIRE_FALSE(v.accepted);
    REQUIRE(v.condition == 'c');
    REQUIRE(v.i == 3);
    REQUIRE(v.j == 3);
    REQUIRE(v.describe().find("(3,3)") != std::string::npos);
    REQUIRE(v.describe().find("(3,2)") != std::string::npos);

    // Rows pass the M-sequence check and the cover check on their own; only
    // the mass condition fails, and only in the last inner cell.
    for (const auto& row : kCounterexample.rows) REQUIRE(is_m_sequence(row));
    REQUIRE_THROWS_AS(build_witness(kCounterexample), std::invalid_argument);
}

TEST_CASE("small accepted triangles") {
    for (const auto& t : {tri({{1}}), tri({{1}, {1, 2}, {1, 0, 0}}), tri({{1}, {1, 2}, {1, 1, 0}})}) {
        const auto v = check_htriangle(t);
        CAPTURE(to_string(t), v.describe());
        REQUIRE(v.accepted);
        REQUIRE(v.describe() == "accepted");
        const auto w = build_witness(t);
        REQUIRE(is_shifted(w));
        REQUIRE(htriangle_tilde(w) == t);
    }
}

TEST_CASE("one-row triangle gives the empty complex") {
    const auto w = build_witness(tri({{1}}));
    REQUIRE(w.is_empty_complex());
}

TEST_CASE("rejection conditions fire in order") {
    SECTION("a row that is not an M-sequence") {
        const auto v = check_htriangle(tri({{1}, {1, 0}, {1, 2, 5}}));
        REQUIRE_FALSE(v.accepted);
        REQUIRE(v.condition == 'a');
        REQUIRE(v.i == 2);
        REQUIRE(v.j == -1);
        REQUIRE(v.describe().find("row 2") != std::string::npos);
    }
    SECTION("an entry below the partial sum of the row beneath") {
        const auto v = check_htriangle(tri({{1}, {1, 0}, {1, 1, 0}}));
        REQUIRE_FALSE(v.accepted);
        REQUIRE(v.condition == 'b');
        REQUIRE(v.i == 1);
        REQUIRE(v.j == 1);
    }
    SECTION("malformed triangles are rejected up front") {
        REQUIRE_THROWS_AS(check_htriangle(tri({})), std::invalid_argument);
        REQUIRE_THROWS_AS(check_htriangle(tri({{1}, {1, 1, 1}})), std::invalid_argument);
    }
    SECTION("a row must start at 1") {
        const auto v = check_htriangle(tri({{2}}));
        REQUIRE_FALSE(v.accepted);
        REQUIRE(v.condition == 'a');
        REQUIRE(v.i == 0);
    }
}

TEST_CASE("census triangles are accepted and accepted triangles are census triangles") {
    std::set<std::string> census_set;
    enumerate_shifted(5, 3, [&](const SimplicialComplex& c) {
        if (c.is_void()) return;
        const auto t = htriangle_tilde(c);
        census_set.insert(to_string(t));
        REQUIRE(check_htriangle(t).accepted);
    });
    REQUIRE(census_set.size() == 88);

    long accepted = 0;
    for (int d = 0; d <= 3; ++d) {
        for_each_candidate(d, 2, [&](const Triangle& t) {
            if (!check_htriangle(t).accepted) return;
            ++accepted;
            const auto w = build_witness(t);
            REQUIRE(is_shifted(w));
            REQUIRE(htriangle_tilde(w) == t);
            if (witness_bound(t) <= 5) REQUIRE(census_set.count(to_string(t)) == 1);
        });
    }
    REQUIRE(accepted == 9);
}

TEST_CASE("levels of a shifted complex replay as valid compositions") {
    long cells = 0;
    for (int n = 1; n <= 5; ++n) {
        enumerate_shifted(n, std::min(n, 4), [&](const SimplicialComplex& c) {
            if (c.is_void()) return;
            const auto t = htriangle_tilde(c);
            const int d = t.top();
            if (d < 2) return;
            const auto mc = metacomplex_of_complex(c);
            for (int i = 1; i <= d - 1; ++i)
                for (int j = 1; j <= i; ++j) {
                    ++cells;
                    const CompositionSpace sp{d - i, j, t.rows[d]};
                    const auto comp = composition_from_level(mc.levels[static_cast<size_t>(i)], sp);
                    const auto diag = validate_composition(comp, t.at(i, j));
                    CAPTURE(n, i, j, diag.why);
                    REQUIRE(diag.ok);
                    REQUIRE(sigma_top(comp) <= t.at(i, j - 1));
                }
        });
    }
    REQUIRE(cells == 411);
}

TEST_CASE("composition_from_level argument checks") {
    Multicomplex lvl;
    lvl.vars = 1;
    lvl.members.insert(Monomial::unit(1));
    REQUIRE_THROWS_AS(composition_from_level(lvl, CompositionSpace{2, 1, {1, 0}}), std::invalid_argument);
}
