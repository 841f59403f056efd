// Exact rational scalar over arbitrary-precision integers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace charnum {

using Integer = boost::multiprecision::cpp_int;

// Always stored in lowest terms with a strictly positive denominator;
// zero is 0/1. All arithmetic is exact. Values are immutable in spirit:
// every operation returns a fresh, normalized value.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(const Integer& n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(Integer num, Integer den);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Canonical form makes fieldwise equality exact equality.
    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    // "p/q" in lowest terms, "p" when q = 1, sign on the numerator.
    std::string str() const;
    // Inverse of str(); also accepts a sign on the denominator.
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    Integer num_;
    Integer den_;

    void normalize();
};

}  // namespace charnum
