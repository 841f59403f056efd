// Dense univariate polynomials over Rational: exact arithmetic, Newton-form
// interpolation, and integer-root location by sweep or divisor enumeration.
#pragma once

#include <utility>
#include <vector>

#include "charnum/rational.hpp"

namespace charnum {

class RationalPolynomial {
public:
    RationalPolynomial() = default;
    // Coefficients in ascending degree; trailing zeros are trimmed.
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    // Unique polynomial of degree < points.size() through the given
    // (x, y) pairs; x values must be pairwise distinct.
    static RationalPolynomial interpolate(
        const std::vector<std::pair<Rational, Rational>>& points);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // 0 beyond the stored degree.
    Rational coefficient(int deg) const;

    Rational operator()(const Rational& x) const;

    RationalPolynomial operator-() const;
    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);

    bool operator==(const RationalPolynomial&) const = default;

private:
    std::vector<Rational> coeffs_;

    void trim();
};

enum class RootScanStrategy {
    Auto,      // sweep small ranges, otherwise divisor candidates
    Sweep,     // evaluate at every integer in [lo, hi]
    Divisors,  // rational-root-theorem candidates only
};

// All integers x in [lo, hi] with p(x) = 0, ascending. The polynomial is
// cleared to primitive integer coefficients first; any power of x is
// factored out, so 0 is reported directly when it lies in range. Throws
// std::domain_error for the zero polynomial (every integer is a root) and
// for Divisors when the constant term is too large to factor by trial
// division.
std::vector<long long> integer_roots_in(const RationalPolynomial& p, long long lo, long long hi,
                                        RootScanStrategy strategy = RootScanStrategy::Auto);

}  // namespace charnum
