// Invariants of cyclic branched covers: X is the d-fold cover of M' branched
// over a codimension-2 submanifold N', and (M', N') is a degree-m cover of
// (M, N). Computes the signature and Euler characteristic of X, the n=2
// Chern-number defect, and the obstruction polynomial in d with an
// integer-root certificate.
#pragma once

#include <optional>
#include <vector>

#include "charnum/polynomial.hpp"
#include "charnum/rational.hpp"

namespace charnum {

struct CoverInput {
    int n = 2;        // even complex dimension of M
    long long d = 2;  // ramification degree; d = 1 is the degenerate identity cover
    long long m = 1;  // covering degree of (M', N') -> (M, N)
    Integer chi_M = 0;
    Integer chi_N = 0;
    // Top Chern numbers c_k((N'_k)^perp) of the normal bundles to the
    // self-intersection tower of N', k = 1..n/2; these live on the cover
    // side and are supplied by the user. May be left empty when n = 2, in
    // which case chi_N'/2 is substituted.
    std::vector<Rational> normal_chern;
    // Signature of M'. When absent it defaults to chi_M'/(n+1), the value
    // forced by proportionality for complex hyperbolic M'.
    std::optional<Rational> sigma_M;

    Integer chi_M_prime() const { return Integer(m) * chi_M; }
    Integer chi_N_prime() const { return Integer(m) * chi_N; }
    Rational sigma_M_prime() const;
    std::vector<Rational> filled_normal_chern() const;

    // Throws std::invalid_argument when any field is out of range.
    void validate() const;

    bool operator==(const CoverInput&) const = default;
};

struct ObstructionScan {
    RationalPolynomial polynomial;  // T(d) = d * obstruction_value(d)
    bool identically_zero = false;
    long long scan_bound = 0;
    std::vector<long long> roots;  // integer d in [2, scan_bound] with T(d) = 0

    bool operator==(const ObstructionScan&) const = default;
};

struct CoverReport {
    CoverInput input;
    Rational sigma_X;
    Rational chi_X;
    std::optional<Rational> defect_n2;       // 3*sigma_X - chi_X, n = 2 only
    std::optional<Rational> defect_m_slope;  // per-unit-m defect increment, n = 2 only
    ObstructionScan obstruction;

    bool operator==(const CoverReport&) const = default;
};

// chi(X) = d*chi(M') - (d-1)*chi(N') by inclusion-exclusion. Requires d >= 1.
Rational chi_branched(long long d, const Rational& chi_Mp, const Rational& chi_Np);

// Coefficients a_1..a_{n/2} with Sigma(X) = d*Sigma(M') + sum_k a_k*Sigma(Y_{2k});
// a_k = -d*s_{2k} from sign_series(d, n). Signs alternate starting negative.
std::vector<Rational> sigma_tower_coefficients(long long d, int n);

// Sigma(Y_{2k}) = normal_chern[k-1]/d. Requires 1 <= k <= normal_chern.size().
Rational sigma_Y2k_from_normal_chern(int k, long long d,
                                     const std::vector<Rational>& normal_chern);

// Signature of the branched cover via the tower formula.
Rational sigma_branched(const CoverInput& input);

// The n=2 defect c_1^2(X) - 3c_2(X) = 3*Sigma(X) - chi(X); equals
// m(d-1)^2/(2d) * chi(N) identically. Requires n = 2.
Rational defect_n2(const CoverInput& input);

// Right-hand side of the ratio obstruction at ramification degree at_d:
// (d-1)/(n+1)*chi(N') - sum_k s_{2k}(d)*normal_chern[k-1]. A nonzero value
// certifies that X cannot have all Chern-number ratios equal to CP^n's.
Rational obstruction_value(const CoverInput& input, long long at_d);

// T(d) = d*obstruction_value(d) reconstructed as an exact polynomial by
// interpolation through d = 1..n+3, plus the integer roots in [2, scan_bound].
// An identically zero T is reported via the flag, with no roots listed.
ObstructionScan obstruction_polynomial(const CoverInput& input, long long scan_bound);

// Full report: sigma_X, chi_X, the n=2 defect and its m-slope, and the
// obstruction scan.
CoverReport cover_report(const CoverInput& input, long long scan_bound);

}  // namespace charnum
