// Graded polynomial algebra in abstract Chern generators, Chern numbers of
// CP^n, Pontrjagin classes as Chern polynomials, and evaluation against a
// manifold's Chern-number table.
#pragma once

#include <functional>
#include <map>

#include "charnum/partition.hpp"
#include "charnum/rational.hpp"

namespace charnum {

// Homogeneous polynomial in generators c_1, c_2, ... with rational
// coefficients. A monomial is a Partition: [3,1] stands for c_3*c_1.
// Zero coefficients are never stored; the weight is carried explicitly so
// the zero polynomial stays graded.
class ChernPolynomial {
public:
    using TermMap = std::map<Partition, Rational, std::greater<Partition>>;

    explicit ChernPolynomial(int weight);
    static ChernPolynomial monomial(const Partition& parts, const Rational& coeff = Rational(1));

    int weight() const { return weight_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Coefficient of the given monomial, 0 when absent.
    Rational coefficient(const Partition& monomial) const;

    ChernPolynomial operator-() const;
    ChernPolynomial& operator+=(const ChernPolynomial& other);
    ChernPolynomial& operator-=(const ChernPolynomial& other);

    friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) {
        a += b;
        return a;
    }
    friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) {
        a -= b;
        return a;
    }
    friend ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b);
    friend ChernPolynomial operator*(const Rational& s, const ChernPolynomial& p);

    bool operator==(const ChernPolynomial&) const = default;

private:
    int weight_;
    TermMap terms_;
};

// Complete Chern-number table of a closed complex n-manifold: one Rational
// per partition of n. The [n] entry is the Euler characteristic.
class ChernData {
public:
    using NumberMap = std::map<Partition, Rational, std::greater<Partition>>;

    ChernData(int n, NumberMap numbers);

    int dimension() const { return n_; }
    const NumberMap& numbers() const { return numbers_; }
    const Rational& number(const Partition& I) const;
    const Rational& euler_characteristic() const;

    bool operator==(const ChernData&) const = default;

private:
    int n_;
    NumberMap numbers_;
};

// c_I(CP^n) = prod_j binomial(n+1, i_j); always a positive integer.
Rational chern_number_cpn(int n, const Partition& I);

// Full Chern-number table of CP^n.
ChernData cpn_data(int n);

// c_I(CP^n) / c_J(CP^n).
Rational ratio_cpn(int n, const Partition& I, const Partition& J);

// The k-th Pontrjagin class as a weight-2k Chern polynomial:
// p_k = c_k^2 - 2 c_{k-1} c_{k+1} + 2 c_{k-2} c_{k+2} - ... +- 2 c_{2k},
// with c_0 = 1. Requires 1 <= k and 2k <= n.
ChernPolynomial pontrjagin_class(int k, int n);

// Sum over monomials of coefficient * c_partition(data). Monomials with a
// generator index above data.dimension() contribute 0. The polynomial's
// weight must match data.dimension() unless the polynomial is zero.
Rational evaluate(const ChernPolynomial& poly, const ChernData& data);

// Pontrjagin number p_I(data) for a partition I of n/2 (n even): the
// product of the pontrjagin_class factors evaluated against the table.
Rational pontrjagin_number(const Partition& I, const ChernData& data);

}  // namespace charnum
