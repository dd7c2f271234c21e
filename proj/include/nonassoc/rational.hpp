#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace nonassoc {

/// Exact arbitrary-precision rational. Thin value wrapper around
/// boost::multiprecision::cpp_rational so it can serve as an Eigen scalar
/// (the raw boost type has greedy converting constructors that clash with
/// Eigen's expression templates).
class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den);
    explicit Rational(rep v) : v_(std::move(v)) {}

    const rep& value() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const;
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(rep(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(rep(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(rep(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(rep(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(rep(abs(a.v_))); }

    /// "p" or "p/q", lowest terms, q > 0.
    std::string str() const { return v_.str(); }

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
    static Rational from_string(std::string_view s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& a);

private:
    rep v_;
};

using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace nonassoc

namespace Eigen {

template <>
struct NumTraits<nonassoc::Rational> : GenericNumTraits<nonassoc::Rational> {
    using Real = nonassoc::Rational;
    using NonInteger = nonassoc::Rational;
    using Nested = nonassoc::Rational;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 32,
    };
    // Arithmetic is exact; comparisons against these must be exact too.
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
