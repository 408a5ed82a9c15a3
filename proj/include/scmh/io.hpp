#pragma once

// Line-oriented text formats: triangle rows (.tri), facet lists (.fac),
// generator exponent lists (.gens), and generator-array columns. '#' starts
// a comment, blank lines are skipped, and parse failures carry file:line.

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "betti.hpp"
#include "complex.hpp"
#include "triangle.hpp"

namespace scmh {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct LineReader {
    std::istream& in;
    std::string file;
    int lineno = 0;

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            const auto b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            const auto e = raw.find_last_not_of(" \t\r");
            out = raw.substr(b, e - b + 1);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(file + ":" + std::to_string(lineno) + ": " + msg);
    }

    [[noreturn]] void fail_eof(const std::string& msg) const {
        throw ParseError(file + ": unexpected end of file: " + msg);
    }
};

inline std::vector<Int> parse_ints(const std::string& s, const LineReader& lr) {
    std::istringstream iss(s);
    std::vector<Int> out;
    std::string tok;
    while (iss >> tok) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (...) {
            lr.fail("not an integer: '" + tok + "'");
        }
        if (pos != tok.size()) lr.fail("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

inline long long parse_header(LineReader& lr, const std::string& keyword) {
    std::string line;
    if (!lr.next(line)) lr.fail_eof("expected header '" + keyword + " <N>'");
    std::istringstream iss(line);
    std::string kw;
    long long n = 0;
    if (!(iss >> kw >> n) || kw != keyword) lr.fail("expected header '" + keyword + " <N>'");
    std::string extra;
    if (iss >> extra) lr.fail("trailing text after header");
    return n;
}

}  // namespace detail

/// Triangle rows: line i holds exactly i+1 non-negative integers.
inline Triangle read_triangle(std::istream& in, const std::string& file = "<input>") {
    detail::LineReader lr{in, file};
    Triangle t;
    std::string line;
    while (lr.next(line)) {
        const auto row = detail::parse_ints(line, lr);
        const auto expect = t.rows.size() + 1;
        if (row.size() != expect)
            lr.fail("row " + std::to_string(t.rows.size()) + " must have " + std::to_string(expect) +
                    " entries, got " + std::to_string(row.size()));
        for (Int v : row)
            if (v < 0) lr.fail("negative entry");
        t.rows.push_back(row);
    }
    if (t.rows.empty()) lr.fail_eof("no triangle rows");
    return t;
}

/// Facet list: header "n <N>", then one facet per line; "-" is the empty face.
inline SimplicialComplex read_facets(std::istream& in, const std::string& file = "<input>") {
    detail::LineReader lr{in, file};
    const long long n = detail::parse_header(lr, "n");
    if (n < 0 || n > 10000) lr.fail("ground set size out of range");
    std::vector<Face> facets;
    std::string line;
    while (lr.next(line)) {
        std::vector<int> verts;
        if (line != "-") {
            for (Int v : detail::parse_ints(line, lr)) {
                if (v < 1 || v > n) lr.fail("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
                verts.push_back(static_cast<int>(v));
            }
            if (verts.empty()) lr.fail("empty facet line (use '-' for the empty face)");
        }
        facets.emplace_back(std::move(verts));
    }
    if (facets.empty()) lr.fail_eof("no facets (use '-' for the empty face)");
    try {
        return make_complex(static_cast<int>(n), facets);
    } catch (const std::invalid_argument& e) {
        throw ParseError(file + ": " + e.what());
    }
}

/// Generator list: header "vars <N>", then one exponent vector per line.
inline MonomialIdeal read_generators(std::istream& in, const std::string& file = "<input>") {
    detail::LineReader lr{in, file};
    const long long n = detail::parse_header(lr, "vars");
    if (n < 1 || n > 10000) lr.fail("variable count out of range");
    std::vector<Monomial> gens;
    std::string line;
    while (lr.next(line)) {
        const auto row = detail::parse_ints(line, lr);
        if (row.size() != static_cast<std::size_t>(n))
            lr.fail("expected " + std::to_string(n) + " exponents, got " + std::to_string(row.size()));
        std::vector<int> exps;
        for (Int v : row) {
            if (v < 0 || v > 1000000) lr.fail("exponent out of range");
            exps.push_back(static_cast<int>(v));
        }
        gens.push_back(Monomial{std::move(exps)});
    }
    try {
        return make_ideal(static_cast<int>(n), gens);
    } catch (const std::invalid_argument& e) {
        throw ParseError(file + ": " + e.what());
    }
}

/// Generator-array columns: header "mindeg <D>", then one line per degree
/// D, D+1, ... holding the counts for k = 1, 2, ...; "-" is an empty column.
inline GeneratorArray read_generator_array(std::istream& in, const std::string& file = "<input>") {
    detail::LineReader lr{in, file};
    const long long d = detail::parse_header(lr, "mindeg");
    if (d < 0 || d > 10000) lr.fail("minimum degree out of range");
    GeneratorArray g;
    g.min_degree = static_cast<int>(d);
    std::string line;
    while (lr.next(line)) {
        if (line == "-") {
            g.columns.emplace_back();
            continue;
        }
        auto col = detail::parse_ints(line, lr);
        for (Int v : col)
            if (v < 0) lr.fail("negative count");
        g.columns.push_back(std::move(col));
    }
    if (g.columns.empty()) lr.fail_eof("no columns (use '-' for an empty column)");
    return g;
}

inline Triangle read_triangle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return read_triangle(in, path);
}

inline SimplicialComplex read_facets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return read_facets(in, path);
}

inline MonomialIdeal read_generators_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return read_generators(in, path);
}

inline GeneratorArray read_generator_array_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return read_generator_array(in, path);
}

inline void write_triangle(std::ostream& out, const Triangle& t) {
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << "\n";
    }
}

inline void write_facets(std::ostream& out, const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("write_facets: the void complex has no facet list");
    out << "n " << c.n << "\n";
    for (const auto& f : c.facets) out << to_string(f) << "\n";
}

/// Grid with one column per homological position s and one row per strand
/// offset, matching the usual Betti table layout.
inline std::string format_betti(const BettiTable& tbl) {
    if (tbl.b.empty()) return "(zero ideal: empty table)\n";
    Int smax = 0, lmin = 0, lmax = 0;
    bool first = true;
    for (const auto& [key, val] : tbl.b) {
        (void)val;
        const Int l = key.second - key.first;
        smax = std::max(smax, key.first);
        lmin = first ? l : std::min(lmin, l);
        lmax = first ? l : std::max(lmax, l);
        first = false;
    }
    std::ostringstream out;
    out << std::setw(6) << "s:";
    for (Int s = 0; s <= smax; ++s) out << std::setw(8) << s;
    out << "\n";
    for (Int l = lmin; l <= lmax; ++l) {
        out << std::setw(5) << l << ":";
        for (Int s = 0; s <= smax; ++s) {
            const Int v = tbl.at(s, s + l);
            if (v == 0)
                out << std::setw(8) << ".";
            else
                out << std::setw(8) << v;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace scmh
