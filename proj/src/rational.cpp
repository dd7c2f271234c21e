#include "nonassoc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nonassoc {

Rational::Rational(long long num, long long den) {
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v_ = rep(num);
    v_ /= den;
}

bool Rational::is_integer() const {
    return boost::multiprecision::denominator(v_) == 1;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
    Rational r = a;
    r /= b;
    return r;
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("Rational: empty string");
    try {
        return Rational(rep(std::string(s)));
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: malformed '" + std::string(s) + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& a) {
    return os << a.v_;
}

} // namespace nonassoc
