#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include <scmh/io.hpp>

using namespace scmh;

namespace {

Triangle tri_of(const std::string& text) {
    std::istringstream in(text);
    return read_triangle(in);
}

SimplicialComplex fac_of(const std::string& text) {
    std::istringstream in(text);
    return read_facets(in);
}

MonomialIdeal gens_of(const std::string& text) {
    std::istringstream in(text);
    return read_generators(in);
}

GeneratorArray array_of(const std::string& text) {
    std::istringstream in(text);
    return read_generator_array(in);
}

std::string message_of(const auto& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("triangle parsing") {
    const auto t = tri_of("1\n1 5\n1 4 7\n1 3 3 4\n1 2 0 0 0\n");
    REQUIRE(t.rows.size() == 5);
    REQUIRE(t.at(4, 1) == 2);

    REQUIRE(tri_of("  1  # top row\n\n# comment only\n 1 2 \n").rows ==
            std::vector<IntVec>{{1}, {1, 2}});

    REQUIRE(message_of([] { tri_of("1\n1 2 3\n"); }) == "<input>:2: row 1 must have 2 entries, got 3");
    REQUIRE(message_of([] { tri_of("1\n1 -2\n"); }) == "<input>:2: negative entry");
    REQUIRE(message_of([] { tri_of("1\n1 x\n"); }) == "<input>:2: not an integer: 'x'");
    REQUIRE(message_of([] { tri_of("# nothing\n"); }) == "<input>: unexpected end of file: no triangle rows");
}

TEST_CASE("triangle writing round trips") {
    const Triangle t{{{1}, {1, 5}, {1, 4, 7}}};
    std::ostringstream out;
    write_triangle(out, t);
    REQUIRE(out.str() == "1\n1 5\n1 4 7\n");
    REQUIRE(tri_of(out.str()) == t);
}

TEST_CASE("facet parsing") {
    const auto c = fac_of("n 3\n2 3\n1\n");
    REQUIRE(c.n == 3);
    REQUIRE(c.facets == std::vector<Face>{Face{1}, Face{2, 3}});

    const auto empty = fac_of("n 2  # two vertices\n-\n");
    REQUIRE(empty.is_empty_complex());

    // Dominated faces collapse; order and duplicates don't matter.
    const auto dedup = fac_of("n 3\n3 2\n2\n2 3\n");
    REQUIRE(dedup.facets == std::vector<Face>{Face{2, 3}});

    REQUIRE(message_of([] { fac_of("m 3\n1\n"); }) == "<input>:1: expected header 'n <N>'");
    REQUIRE(message_of([] { fac_of("n 3 9\n1\n"); }) == "<input>:1: trailing text after header");
    REQUIRE(message_of([] { fac_of("n 2\n3\n"); }) == "<input>:2: vertex 3 outside [1, 2]");
    REQUIRE(message_of([] { fac_of("n 2\n0\n"); }) == "<input>:2: vertex 0 outside [1, 2]");
    REQUIRE(message_of([] { fac_of("n 2\n"); }) ==
            "<input>: unexpected end of file: no facets (use '-' for the empty face)");
    REQUIRE_THROWS_AS(fac_of("n -1\n-\n"), ParseError);
    REQUIRE(fac_of("n 2\n1 1\n").facets == std::vector<Face>{Face{1}});
}

TEST_CASE("facet writing round trips") {
    const auto c = make_complex(4, {Face{1, 2}, Face{3}, Face{4}});
    std::ostringstream out;
    write_facets(out, c);
    REQUIRE(out.str() == "n 4\n1 2\n3\n4\n");
    REQUIRE(fac_of(out.str()) == c);

    std::ostringstream empty;
    write_facets(empty, make_complex(2, {Face{}}));
    REQUIRE(empty.str() == "n 2\n-\n");
    REQUIRE(fac_of(empty.str()).is_empty_complex());

    REQUIRE_THROWS_AS(write_facets(empty, SimplicialComplex{2, {}}), std::invalid_argument);
}

TEST_CASE("generator parsing") {
    const auto I = gens_of("vars 3\n1 1 0\n1 0 1\n");
    REQUIRE(I.n == 3);
    REQUIRE(I.gens.size() == 2);

    // Redundant generators are minimized away by divisibility.
    const auto J = gens_of("vars 2\n1 0\n1 1\n");
    REQUIRE(J.gens.size() == 1);

    REQUIRE(message_of([] { gens_of("vars 2\n1 1 1\n"); }) == "<input>:2: expected 2 exponents, got 3");
    REQUIRE(message_of([] { gens_of("vars 2\n-1 0\n"); }) == "<input>:2: exponent out of range");
    REQUIRE_THROWS_AS(gens_of("vars 0\n\n"), ParseError);
    REQUIRE(gens_of("vars 2\n# no rows\n").gens.empty());
}

TEST_CASE("generator array parsing") {
    const auto a = array_of("mindeg 2\n1 1\n-\n0 3\n");
    REQUIRE(a.min_degree == 2);
    REQUIRE(a.max_degree() == 4);
    REQUIRE(a.at(2, 2) == 1);
    REQUIRE(a.at(1, 3) == 0);
    REQUIRE(a.at(2, 4) == 3);

    REQUIRE(message_of([] { array_of("mindeg 2\n1 -1\n"); }) == "<input>:2: negative count");
    REQUIRE(message_of([] { array_of("mindeg 2\n"); }) ==
            "<input>: unexpected end of file: no columns (use '-' for an empty column)");
    REQUIRE_THROWS_AS(array_of("mindeg -3\n1\n"), ParseError);
}

TEST_CASE("file readers report the path") {
    REQUIRE(message_of([] { read_triangle_file("/nonexistent/x.tri"); }) == "/nonexistent/x.tri: cannot open");
    REQUIRE(message_of([] { read_facets_file("/nonexistent/x.fac"); }) == "/nonexistent/x.fac: cannot open");
    REQUIRE(message_of([] { read_generators_file("/nonexistent/x.gens"); }) ==
            "/nonexistent/x.gens: cannot open");
    REQUIRE(message_of([] { read_generator_array_file("/nonexistent/x.cols"); }) ==
            "/nonexistent/x.cols: cannot open");
}

TEST_CASE("betti table formatting") {
    BettiTable t;
    t.b[{0, 2}] = 2;
    t.b[{1, 3}] = 1;
    const auto text = format_betti(t);
    REQUIRE(text.find("s:") != std::string::npos);
    REQUIRE(text.find("2:") != std::string::npos);
    REQUIRE(text.find("2") != std::string::npos);
    // Exactly one strand row (offset 2), no zero-padding rows.
    REQUIRE(text.find("3:") == std::string::npos);

    BettiTable gap;
    gap.b[{0, 1}] = 1;
    gap.b[{0, 3}] = 1;
    const auto gtext = format_betti(gap);
    REQUIRE(gtext.find("1:") != std::string::npos);
    REQUIRE(gtext.find("2:") != std::string::npos);  // padded strand shows dots
    REQUIRE(gtext.find(".") != std::string::npos);

    REQUIRE(format_betti(BettiTable{}) == "(zero ideal: empty table)\n");
}
