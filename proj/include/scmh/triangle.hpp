#pragma once

// Triangular integer arrays (row i has i+1 entries) and the transform pair
// connecting the two natural triangles of a complex: the skeleton h-vectors
// and the facet-counting triangle.

#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>

#include "macaulay.hpp"

namespace scmh {

struct Triangle {
    std::vector<IntVec> rows;

    Triangle() = default;
    explicit Triangle(std::vector<IntVec> r) : rows(std::move(r)) {}

    int top() const { return static_cast<int>(rows.size()) - 1; }
    Int at(int i, int j) const { return rows.at(i).at(j); }
    bool well_shaped() const {
        if (rows.empty()) return false;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].size() != i + 1) return false;
        return true;
    }

    auto operator<=>(const Triangle&) const = default;
};

inline void require_well_shaped(const Triangle& t, const char* who) {
    if (!t.well_shaped()) throw std::invalid_argument(std::string(who) + ": malformed triangle (row i needs i+1 entries)");
}

inline std::string to_string(const Triangle& t) {
    std::ostringstream os;
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

/// Facet triangle from the skeleton triangle: row d is kept, and
/// h_{i,j} = ht_{i,j} - sum_{l<=j} ht_{i+1,l} for i < d.
inline Triangle h_from_htilde(const Triangle& ht) {
    require_well_shaped(ht, "h_from_htilde");
    const int d = ht.top();
    Triangle h = ht;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= i; ++j) {
            Int s = 0;
            for (int l = 0; l <= j; ++l) s = checked_add(s, ht.rows[i + 1][l]);
            h.rows[i][j] = ht.rows[i][j] - s;
        }
    }
    return h;
}

/// Inverse of h_from_htilde, computed from the top row downwards.
inline Triangle htilde_from_h(const Triangle& h) {
    require_well_shaped(h, "htilde_from_h");
    const int d = h.top();
    Triangle ht = h;
    for (int i = d - 1; i >= 0; --i) {
        for (int j = 0; j <= i; ++j) {
            Int s = 0;
            for (int l = 0; l <= j; ++l) s = checked_add(s, ht.rows[i + 1][l]);
            ht.rows[i][j] = checked_add(h.rows[i][j], s);
        }
    }
    return ht;
}

}  // namespace scmh
