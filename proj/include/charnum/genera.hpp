// Multiplicative-sequence machinery for the L-genus: L-polynomials derived
// from the characteristic series x/tanh(x), the signature of a Chern-number
// table, and the universal signature/Euler proportionality constant.
#pragma once

#include <functional>
#include <map>

#include "charnum/chern.hpp"
#include "charnum/series.hpp"

namespace charnum {

// The k-th L-polynomial: a polynomial in abstract Pontrjagin generators
// p_1..p_k, homogeneous of weight k when p_j carries weight j. Monomials are
// partitions of k ([2,1] stands for p_2*p_1). After substituting Chern
// expressions each p_j doubles in grading; the two weights are kept apart by
// type (LPolynomial vs ChernPolynomial).
struct LPolynomial {
    int k = 0;
    std::map<Partition, Rational, std::greater<Partition>> terms;

    bool operator==(const LPolynomial&) const = default;
};

// Even series x/tanh(x) = 1 + x^2/3 - x^4/45 + 2x^6/945 - ..., computed as
// the quotient of the cosh and sinh/x factorial series.
TruncatedSeries tanh_characteristic_series(int order);

// The k-th L-polynomial, k >= 1: expand prod_{i=1..k} Q(b_i) in k formal
// variables truncated at weight k (b_i^2 has weight 1), then rewrite the
// symmetric weight-k part in the elementary symmetric polynomials of the
// b_i^2, identified with p_1..p_k. Memoized; safe for concurrent callers.
const LPolynomial& l_polynomial(int k);

// Hirzebruch signature theorem: L_{n/2} with each monomial p_{i_1}...p_{i_r}
// replaced by the Pontrjagin number p_I(data). Requires even dimension.
Rational signature(const ChernData& data);

// The universal weight-n Chern polynomial whose evaluation on any table
// equals signature(): l_polynomial(n/2) with each p_j replaced by its
// Chern expression. Requires n even.
ChernPolynomial alpha_expansion(int n);

// signature(cpn_data(n)) / (n+1); equals 1/(n+1) for every even n.
Rational proportionality_constant(int n);

}  // namespace charnum
