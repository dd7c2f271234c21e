#include "nonassoc/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonassoc {

Scalar::Scalar(Rational q) {
    add_atom({}, GaussRat{std::move(q), Rational(0)});
}

Scalar::Scalar(GaussRat g) {
    add_atom({}, g);
}

Scalar::Scalar(GaussRat g, Monomial m) {
    std::sort(m.begin(), m.end());
    add_atom(m, g);
}

Scalar Scalar::symbol(const std::string& name) {
    return Scalar(GaussRat{Rational(1), Rational(0)}, Monomial{name});
}

bool Scalar::is_one() const {
    if (atoms_.size() != 1)
        return false;
    const auto& [m, g] = *atoms_.begin();
    return m.empty() && g.re == Rational(1) && g.im.is_zero();
}

bool Scalar::is_rational() const {
    if (atoms_.empty())
        return true;
    if (atoms_.size() != 1)
        return false;
    const auto& [m, g] = *atoms_.begin();
    return m.empty() && g.is_real();
}

Rational Scalar::rational_value() const {
    if (atoms_.empty())
        return Rational(0);
    if (!is_rational())
        throw std::domain_error("Scalar: not a plain rational: " + str());
    return atoms_.begin()->second.re;
}

void Scalar::add_atom(const Monomial& m, const GaussRat& g) {
    if (g.is_zero())
        return;
    auto it = atoms_.find(m);
    if (it == atoms_.end()) {
        atoms_.emplace(m, g);
        return;
    }
    it->second = it->second + g;
    if (it->second.is_zero())
        atoms_.erase(it);
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [m, g] : atoms_)
        r.atoms_.emplace(m, -g);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [m, g] : o.atoms_)
        add_atom(m, g);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [m, g] : o.atoms_)
        add_atom(m, -g);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ma, ga] : a.atoms_) {
        for (const auto& [mb, gb] : b.atoms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add_atom(m, ga * gb);
        }
    }
    return r;
}

Scalar Scalar::conj() const {
    Scalar r;
    for (const auto& [m, g] : atoms_)
        r.atoms_.emplace(m, g.conj());
    return r;
}

Scalar Scalar::substitute(const std::string& name, const Rational& value) const {
    Scalar r;
    for (const auto& [m, g] : atoms_) {
        Monomial rest;
        GaussRat scaled = g;
        for (const auto& sym : m) {
            if (sym == name)
                scaled = scaled * GaussRat{value, Rational(0)};
            else
                rest.push_back(sym);
        }
        r.add_atom(rest, scaled);
    }
    return r;
}

std::vector<ScalarPiece> scalar_pieces(const Scalar& s) {
    std::vector<ScalarPiece> out;
    for (const auto& [m, g] : s.atoms()) {
        if (!g.re.is_zero())
            out.push_back({g.re, false, m});
        if (!g.im.is_zero())
            out.push_back({g.im, true, m});
    }
    return out;
}

std::string piece_magnitude_str(const ScalarPiece& p) {
    std::string out = abs(p.coeff).str();
    if (p.imaginary)
        out += " i";
    for (const auto& sym : p.monomial) {
        out += ' ';
        out += sym;
    }
    return out;
}

std::string Scalar::str() const {
    auto pieces = scalar_pieces(*this);
    if (pieces.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        bool neg = pieces[k].coeff.sign() < 0;
        if (k == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += piece_magnitude_str(pieces[k]);
    }
    return out;
}

} // namespace nonassoc
