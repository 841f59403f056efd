#include "charnum/cover.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "charnum/series.hpp"

namespace charnum {

Rational CoverInput::sigma_M_prime() const {
    if (sigma_M.has_value()) return *sigma_M;
    return Rational(chi_M_prime(), Integer(n + 1));
}

std::vector<Rational> CoverInput::filled_normal_chern() const {
    if (!normal_chern.empty()) return normal_chern;
    if (n == 2) {
        return {Rational(chi_N_prime(), Integer(2))};
    }
    throw std::invalid_argument("CoverInput: normal_chern entries required when n > 2");
}

void CoverInput::validate() const {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("CoverInput: n must be even and at least 2");
    }
    if (d < 1) {
        throw std::invalid_argument("CoverInput: d must be at least 1");
    }
    if (m < 1) {
        throw std::invalid_argument("CoverInput: m must be at least 1");
    }
    if (n == 2 && chi_N.is_zero()) {
        throw std::invalid_argument("CoverInput: chi_N must be nonzero when n = 2");
    }
    if (!normal_chern.empty() &&
        normal_chern.size() != static_cast<std::size_t>(n / 2)) {
        throw std::invalid_argument("CoverInput: normal_chern must have exactly n/2 entries");
    }
    if (normal_chern.empty() && n > 2) {
        throw std::invalid_argument("CoverInput: normal_chern entries required when n > 2");
    }
}

Rational chi_branched(long long d, const Rational& chi_Mp, const Rational& chi_Np) {
    if (d < 1) {
        throw std::domain_error("chi_branched: d must be at least 1");
    }
    return Rational(d) * chi_Mp - Rational(d - 1) * chi_Np;
}

std::vector<Rational> sigma_tower_coefficients(long long d, int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::domain_error("sigma_tower_coefficients: n must be even and at least 2");
    }
    const TruncatedSeries s = sign_series(d, n);
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(n / 2));
    for (int k = 1; k <= n / 2; ++k) {
        a.push_back(Rational(-d) * s.coefficient(2 * k));
    }
    return a;
}

Rational sigma_Y2k_from_normal_chern(int k, long long d,
                                     const std::vector<Rational>& normal_chern) {
    if (k < 1 || static_cast<std::size_t>(k) > normal_chern.size()) {
        throw std::out_of_range("sigma_Y2k_from_normal_chern: index out of range");
    }
    if (d < 1) {
        throw std::domain_error("sigma_Y2k_from_normal_chern: d must be at least 1");
    }
    return normal_chern[static_cast<std::size_t>(k - 1)] / Rational(d);
}

Rational sigma_branched(const CoverInput& input) {
    input.validate();
    const std::vector<Rational> nc = input.filled_normal_chern();
    const std::vector<Rational> a = sigma_tower_coefficients(input.d, input.n);
    Rational sigma = Rational(input.d) * input.sigma_M_prime();
    for (int k = 1; k <= input.n / 2; ++k) {
        sigma += a[static_cast<std::size_t>(k - 1)] *
                 sigma_Y2k_from_normal_chern(k, input.d, nc);
    }
    return sigma;
}

Rational defect_n2(const CoverInput& input) {
    if (input.n != 2) {
        throw std::domain_error("defect_n2: defined only for n = 2");
    }
    input.validate();
    Rational chi_x = chi_branched(input.d, Rational(input.chi_M_prime()),
                                  Rational(input.chi_N_prime()));
    return Rational(3) * sigma_branched(input) - chi_x;
}

Rational obstruction_value(const CoverInput& input, long long at_d) {
    input.validate();
    if (at_d < 1) {
        throw std::domain_error("obstruction_value: d must be at least 1");
    }
    const std::vector<Rational> nc = input.filled_normal_chern();
    const TruncatedSeries s = sign_series(at_d, input.n);
    Rational value = Rational(Integer(at_d - 1) * input.chi_N_prime(), Integer(input.n + 1));
    for (int k = 1; k <= input.n / 2; ++k) {
        value -= s.coefficient(2 * k) * nc[static_cast<std::size_t>(k - 1)];
    }
    return value;
}

ObstructionScan obstruction_polynomial(const CoverInput& input, long long scan_bound) {
    input.validate();
    if (scan_bound < 2) {
        throw std::invalid_argument("obstruction_polynomial: scan bound must be at least 2");
    }
    // T(d) = d * obstruction_value(d) is a polynomial in d of degree at most
    // n+1 (each d*s_{2k} has degree 2k <= n; the chi term has degree 2), so
    // n+3 sample points determine it with room to spare.
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(static_cast<std::size_t>(input.n) + 3);
    for (long long d = 1; d <= input.n + 3; ++d) {
        points.emplace_back(Rational(d), Rational(d) * obstruction_value(input, d));
    }
    ObstructionScan scan;
    scan.polynomial = RationalPolynomial::interpolate(points);
    scan.scan_bound = scan_bound;
    // Fresh-point consistency check outside the interpolation set.
    const long long fresh = input.n + 4;
    if (scan.polynomial(Rational(fresh)) !=
        Rational(fresh) * obstruction_value(input, fresh)) {
        throw std::logic_error("obstruction_polynomial: interpolation failed fresh-point check");
    }
    if (scan.polynomial.is_zero()) {
        scan.identically_zero = true;
        return scan;
    }
    scan.roots = integer_roots_in(scan.polynomial, 2, scan_bound);
    return scan;
}

CoverReport cover_report(const CoverInput& input, long long scan_bound) {
    input.validate();
    CoverReport report;
    report.input = input;
    report.sigma_X = sigma_branched(input);
    report.chi_X = chi_branched(input.d, Rational(input.chi_M_prime()),
                                Rational(input.chi_N_prime()));
    if (input.n == 2) {
        report.defect_n2 = Rational(3) * report.sigma_X - report.chi_X;
        report.defect_m_slope =
            Rational(Integer(input.d - 1) * Integer(input.d - 1) * input.chi_N,
                     Integer(2) * Integer(input.d));
    }
    report.obstruction = obstruction_polynomial(input, scan_bound);
    return report;
}

}  // namespace charnum
