#pragma once

#include "nonassoc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace nonassoc {

/// Gaussian rational re + im*i with exact components.
struct GaussRat {
    Rational re;
    Rational im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussRat conj() const { return {re, -im}; }
    GaussRat operator-() const { return {-re, -im}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

/// Multiset of declared symbol names (e.g. the coupling "g"), kept sorted.
using Monomial = std::vector<std::string>;

/// Exact symbolic coefficient: a finite sum of atoms, each atom a Gaussian
/// rational times a monomial in declared symbols. Single-atom values are the
/// common case ("3/2", "1 i", "2 g"); sums only appear when like terms with
/// different monomials are combined. No floating point anywhere.
class Scalar {
public:
    Scalar() = default;
    Scalar(int n) { *this = Scalar(Rational(n)); }
    Scalar(Rational q);
    Scalar(GaussRat g);
    Scalar(GaussRat g, Monomial m);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar i() { return Scalar(GaussRat{Rational(0), Rational(1)}); }
    static Scalar symbol(const std::string& name);

    bool is_zero() const { return atoms_.empty(); }
    bool is_one() const;
    /// True when the value is a plain rational (single empty-monomial real atom or zero).
    bool is_rational() const;
    /// The rational value; throws if not is_rational().
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);

    /// Complex conjugation: i -> -i, symbols and rationals fixed.
    Scalar conj() const;

    /// Replaces a named symbol by an exact rational value in every atom.
    Scalar substitute(const std::string& name, const Rational& value) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.atoms_ == b.atoms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Atoms in canonical (monomial-sorted) order.
    const std::map<Monomial, GaussRat>& atoms() const { return atoms_; }

    /// Canonical text, e.g. "3/2", "-1 i", "2 g + 1 i", "0".
    std::string str() const;

private:
    void add_atom(const Monomial& m, const GaussRat& g);

    std::map<Monomial, GaussRat> atoms_; // no zero values stored
};

/// One printable piece of a Scalar: rational * (i?) * monomial.
/// A Scalar with n atoms yields between n and 2n pieces (mixed Gaussian
/// atoms split into a real and an imaginary piece).
struct ScalarPiece {
    Rational coeff;
    bool imaginary = false;
    Monomial monomial;
};

std::vector<ScalarPiece> scalar_pieces(const Scalar& s);

/// Renders one piece without its sign: "3/2", "1 i", "2 g", "1 i g".
std::string piece_magnitude_str(const ScalarPiece& p);

} // namespace nonassoc
