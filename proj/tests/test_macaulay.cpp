#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "scmh/census.hpp"
#include "scmh/macaulay.hpp"

using namespace scmh;

namespace {

std::size_t shadow_size(const std::vector<Monomial>& fam) {
    std::set<Monomial> sh;
    for (const auto& m : fam)
        for (int i = 0; i < m.vars(); ++i) {
            if (m.e[i] == 0) continue;
            Monomial d = m;
            --d.e[i];
            sh.insert(d);
        }
    return sh.size();
}

}  // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(4, 4) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(binomial(80, 40), std::overflow_error);
}

TEST_CASE("greedy representation examples") {
    const auto r1 = l_representation(10, 2);
    REQUIRE(r1.terms.size() == 1);
    CHECK(r1.terms[0] == std::pair<Int, int>{5, 2});

    const auto r2 = l_representation(9, 2);
    REQUIRE(r2.terms.size() == 2);
    CHECK(r2.terms[0] == std::pair<Int, int>{4, 2});
    CHECK(r2.terms[1] == std::pair<Int, int>{3, 1});

    const auto r3 = l_representation(1, 3);
    REQUIRE(r3.terms.size() == 1);
    CHECK(r3.terms[0] == std::pair<Int, int>{3, 3});

    CHECK_THROWS_AS(l_representation(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(l_representation(5, 0), std::invalid_argument);
}

TEST_CASE("representation is exact, strictly decreasing, and valid") {
    for (int ell = 1; ell <= 6; ++ell)
        for (Int p = 1; p <= 10000; ++p) {
            const auto rep = l_representation(p, ell);
            Int sum = 0;
            Int prev_a = -1;
            int prev_k = ell + 1;
            for (const auto& [a, k] : rep.terms) {
                REQUIRE(k == prev_k - 1);  // consecutive indices ell, ell-1, ...
                REQUIRE(a >= k);
                REQUIRE(k >= 1);
                if (prev_a >= 0) REQUIRE(a < prev_a);
                sum += binomial(a, k);
                prev_a = a;
                prev_k = k;
            }
            REQUIRE(sum == p);
        }
}

TEST_CASE("boundary examples") {
    CHECK(boundary(0, 4) == 0);
    CHECK(boundary(10, 2) == 4);
    CHECK(boundary(9, 2) == 4);
    CHECK_THROWS_AS(boundary(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(boundary(-1, 2), std::invalid_argument);
}

TEST_CASE("generalized boundary examples and guards") {
    CHECK(generalized_boundary(10, 2, 0) == 10);
    CHECK(generalized_boundary(10, 2, 1) == 4);
    CHECK(generalized_boundary(10, 2, 2) == 1);
    CHECK(generalized_boundary(0, 3, 2) == 0);
    CHECK_THROWS_AS(generalized_boundary(10, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(generalized_boundary(10, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(generalized_boundary(-1, 2, 1), std::invalid_argument);
}

TEST_CASE("single-step slice and iterated boundary agree with the j-shift") {
    for (int ell = 1; ell <= 6; ++ell)
        for (Int p = 0; p <= 400; ++p) {
            CHECK(generalized_boundary(p, ell, 0) == p);
            CHECK(generalized_boundary(p, ell, 1) == boundary(p, ell));
            Int it = p;
            for (int j = 1; j <= ell; ++j) {
                it = boundary(it, ell - j + 1);
                REQUIRE(it == generalized_boundary(p, ell, j));
            }
        }
}

TEST_CASE("generalized boundary is monotone in p") {
    for (int ell = 1; ell <= 5; ++ell)
        for (int j = 0; j <= ell; ++j) {
            Int prev = 0;
            for (Int p = 0; p <= 300; ++p) {
                const Int cur = generalized_boundary(p, ell, j);
                REQUIRE(cur >= prev);
                prev = cur;
            }
        }
}

TEST_CASE("compressed families meet the bound with equality") {
    // first p degree-ell monomials using the fewest, lowest-indexed variables
    for (int v = 1; v <= 5; ++v)
        for (int ell = 1; ell <= 5; ++ell) {
            auto all = monomials_of_degree(v, ell);
            std::reverse(all.begin(), all.end());
            const Int cnt = static_cast<Int>(all.size());
            for (Int p = 1; p <= std::min<Int>(cnt, 200); ++p) {
                const std::vector<Monomial> fam(all.begin(), all.begin() + p);
                REQUIRE(static_cast<Int>(shadow_size(fam)) == boundary(p, ell));
            }
        }
}

TEST_CASE("every family obeys the bound; the minimum attains it") {
    // exhaustive over all families of degree-ell monomials on 3 variables
    for (int ell = 2; ell <= 3; ++ell) {
        const auto all = monomials_of_degree(3, ell);
        const int m = static_cast<int>(all.size());
        std::vector<Int> best(static_cast<std::size_t>(m) + 1, -1);
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<Monomial> fam;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) fam.push_back(all[static_cast<std::size_t>(i)]);
            const auto p = static_cast<Int>(fam.size());
            const auto sh = static_cast<Int>(shadow_size(fam));
            REQUIRE(sh >= boundary(p, ell));
            auto& b = best[static_cast<std::size_t>(p)];
            if (b < 0 || sh < b) b = sh;
        }
        for (Int p = 1; p <= m; ++p) REQUIRE(best[static_cast<std::size_t>(p)] == boundary(p, ell));
    }
}

TEST_CASE("shifted multicomplex levels sit on or above the bound") {
    for (int v = 1; v <= 3; ++v)
        enumerate_shifted_multicomplexes(v, 3, [&](const Multicomplex& mc) {
            for (int ell = 1; ell <= mc.max_degree(); ++ell) {
                std::vector<Monomial> lvl;
                for (const auto& m : mc.members)
                    if (m.degree() == ell) lvl.push_back(m);
                REQUIRE(static_cast<Int>(shadow_size(lvl)) >=
                        boundary(static_cast<Int>(lvl.size()), ell));
            }
        });
}

TEST_CASE("M-sequence recognition") {
    CHECK(is_m_sequence({1, 4, 9, 4, 1}));
    CHECK_FALSE(is_m_sequence({2, 1}));
    CHECK_FALSE(is_m_sequence({1, 2, 4}));
    CHECK_FALSE(is_m_sequence({}));
    CHECK(is_m_sequence({1}));
    CHECK(is_m_sequence({1, 0}));
    CHECK(is_m_sequence({1, 2, 0}));
    CHECK_FALSE(is_m_sequence({1, 0, 1}));
    CHECK_FALSE(is_m_sequence({1, -1}));
    CHECK(is_m_sequence({1, 100}));
}
