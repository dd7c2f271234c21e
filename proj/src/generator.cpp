#include "nonassoc/generator.hpp"

#include <algorithm>
#include <tuple>

namespace nonassoc {

Generator Generator::with_deriv(const std::string& idx) const {
    Generator g = *this;
    g.derivs.insert(std::upper_bound(g.derivs.begin(), g.derivs.end(), idx), idx);
    return g;
}

static void append_index_group(std::string& out, char opener, const std::vector<std::string>& idx) {
    if (idx.empty())
        return;
    out += opener;
    out += '{';
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k)
            out += ',';
        out += idx[k];
    }
    out += '}';
}

std::string Generator::str() const {
    std::string out;
    for (const auto& d : derivs) {
        out += "d_{";
        out += d;
        out += "} ";
    }
    out += symbol;
    append_index_group(out, '^', upper);
    append_index_group(out, '_', lower);
    if (!point.empty()) {
        out += '(';
        out += point;
        out += ')';
    }
    if (conjugated)
        out += '*';
    return out;
}

bool operator==(const Generator& a, const Generator& b) {
    return a.symbol == b.symbol && a.upper == b.upper && a.lower == b.lower &&
           a.point == b.point && a.conjugated == b.conjugated && a.derivs == b.derivs;
}

bool operator<(const Generator& a, const Generator& b) {
    return std::tie(a.symbol, a.upper, a.lower, a.point, a.conjugated, a.derivs) <
           std::tie(b.symbol, b.upper, b.lower, b.point, b.conjugated, b.derivs);
}

} // namespace nonassoc
