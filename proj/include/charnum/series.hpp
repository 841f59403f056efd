// Truncated formal power series over Rational in one variable.
#pragma once

#include "charnum/rational.hpp"

#include <vector>

namespace charnum {

// coefficient(i) is the coefficient of t^i for 0 <= i <= order; terms of
// higher degree are discarded. Arithmetic never reads beyond the order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);  // zero series
    // Degree-indexed coefficients; entries beyond the order are discarded,
    // missing ones are zero.
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& value, int order);
    static TruncatedSeries monomial(const Rational& coeff, int degree, int order);

    int order() const { return order_; }
    const Rational& coefficient(int degree) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    int valuation() const;  // lowest nonzero degree; -1 for the zero series

    TruncatedSeries truncated(int new_order) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    // Quotient q with q * den = num up to the truncation order, after
    // cancelling the common power t^v (v = den's valuation). Requires den
    // not identically zero and num's valuation >= v. Coefficients of the
    // inputs beyond their truncation order are taken as zero, so the top v
    // coefficients of q are exact only when num and den are polynomials
    // that fit inside the truncation.
    friend TruncatedSeries operator/(const TruncatedSeries& num, const TruncatedSeries& den);

    TruncatedSeries pow(unsigned exponent) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    int order_;
    std::vector<Rational> coeffs_;
};

// Branched-cover signature series for ramification degree d >= 1:
//   t * ((1+t)^d + (1-t)^d) / ((1+t)^d - (1-t)^d)
// expanded to the given truncation order. Only even degrees carry nonzero
// coefficients; the constant term is 1/d.
TruncatedSeries sign_series(long long d, int order);

}  // namespace charnum
