#pragma once

#include <string>
#include <vector>

namespace nonassoc {

/// A named operator symbol: base name, index decorations, optional spacetime
/// point, conjugation star, and (for the field-equation pipeline) a sorted
/// multiset of derivative markers d_{mu}. Two generators are equal iff every
/// field matches; derivative markers compare after sorting, so the order they
/// were applied in never matters.
struct Generator {
    std::string symbol;
    std::vector<std::string> upper;
    std::vector<std::string> lower;
    std::string point;      // empty = no point label
    bool conjugated = false;
    std::vector<std::string> derivs; // kept sorted

    Generator() = default;
    explicit Generator(std::string sym) : symbol(std::move(sym)) {}

    Generator starred() const {
        Generator g = *this;
        g.conjugated = !g.conjugated;
        return g;
    }

    Generator with_deriv(const std::string& idx) const;
    Generator without_conj() const {
        Generator g = *this;
        g.conjugated = false;
        return g;
    }

    /// Canonical text form, e.g. "d_{0} phi^{a}_{1,2}(x1)*". Also the sort key.
    std::string str() const;

    friend bool operator==(const Generator& a, const Generator& b);
    friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
    friend bool operator<(const Generator& a, const Generator& b);
};

} // namespace nonassoc
