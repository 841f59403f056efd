#include "charnum/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace charnum {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_ == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    // Denominators are positive, so cross products order correctly.
    Integer lhs = num_ * o.den_;
    Integer rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view part) -> Integer {
        if (part.empty()) fail();
        std::size_t i = 0;
        if (part[0] == '+' || part[0] == '-') i = 1;
        if (i == part.size()) fail();
        for (std::size_t j = i; j < part.size(); ++j) {
            if (part[j] < '0' || part[j] > '9') fail();
        }
        return Integer(std::string(part));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace charnum
