#include "charnum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace charnum {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim();
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational RationalPolynomial::coefficient(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return Rational();
    return coeffs_[static_cast<std::size_t>(deg)];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial p(*this);
    for (Rational& c : p.coeffs_) c = -c;
    return p;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> coeffs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i < a.coeffs_.size()) coeffs[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) coeffs[i] += b.coeffs_[i];
    }
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RationalPolynomial();
    std::vector<Rational> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
    std::vector<Rational> coeffs = p.coeffs_;
    for (Rational& c : coeffs) c *= s;
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) {
        throw std::invalid_argument("interpolate: at least one point required");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("interpolate: duplicate x value " +
                                            points[i].first.str());
            }
        }
    }
    // Newton divided differences, then expansion to the monomial basis.
    std::vector<Rational> dd;
    dd.reserve(points.size());
    for (const auto& point : points) {
        dd.push_back(point.second);
    }
    for (std::size_t level = 1; level < points.size(); ++level) {
        for (std::size_t i = points.size() - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
        }
    }
    RationalPolynomial result(std::vector<Rational>{dd.back()});
    for (std::size_t i = points.size() - 1; i-- > 0;) {
        RationalPolynomial factor(std::vector<Rational>{-points[i].first, Rational(1)});
        result = result * factor + RationalPolynomial(std::vector<Rational>{dd[i]});
    }
    return result;
}

namespace {

Integer evaluate_integer(const std::vector<Integer>& coeffs, const Integer& x) {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

constexpr long long kSweepThreshold = 1LL << 16;
constexpr long long kMaxSweepRange = 100'000'000LL;
constexpr long long kMaxTrialDivisionConstant = 100'000'000'000'000LL;  // 1e14

std::vector<long long> divisor_candidates(const Integer& constant_term) {
    Integer a0 = abs(constant_term);
    if (a0 > kMaxTrialDivisionConstant) {
        throw std::domain_error("integer_roots_in: constant term too large for trial division");
    }
    long long value = a0.convert_to<long long>();
    std::vector<long long> divisors;
    for (long long i = 1; i * i <= value; ++i) {
        if (value % i != 0) continue;
        divisors.push_back(i);
        if (i != value / i) divisors.push_back(value / i);
    }
    return divisors;
}

}  // namespace

std::vector<long long> integer_roots_in(const RationalPolynomial& p, long long lo, long long hi,
                                        RootScanStrategy strategy) {
    if (p.is_zero()) {
        throw std::domain_error("integer_roots_in: zero polynomial");
    }
    if (lo > hi) return {};
    // Clear denominators and content to get primitive integer coefficients
    // with the same roots.
    Integer denominator_lcm = 1;
    for (const Rational& c : p.coefficients()) {
        Integer d = c.denominator();
        denominator_lcm = denominator_lcm / gcd(denominator_lcm, d) * d;
    }
    std::vector<Integer> coeffs;
    coeffs.reserve(p.coefficients().size());
    Integer content = 0;
    for (const Rational& c : p.coefficients()) {
        Integer scaled = c.numerator() * (denominator_lcm / c.denominator());
        content = gcd(content, scaled);
        coeffs.push_back(std::move(scaled));
    }
    if (content > 1) {
        for (Integer& c : coeffs) c /= content;
    }
    std::vector<long long> roots;
    // Factor out x^v so the constant term is nonzero; x = 0 is a root of the
    // original polynomial exactly when v > 0.
    std::size_t valuation = 0;
    while (coeffs[valuation].is_zero()) ++valuation;
    if (valuation > 0 && lo <= 0 && 0 <= hi) {
        roots.push_back(0);
    }
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(valuation));
    if (coeffs.size() == 1) {
        // Nonzero constant: no further roots.
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    auto sweep = [&](long long from, long long to) {
        for (long long x = from; x <= to; ++x) {
            if (x == 0) continue;
            if (evaluate_integer(coeffs, Integer(x)).is_zero()) {
                roots.push_back(x);
            }
        }
    };

    bool use_sweep;
    switch (strategy) {
        case RootScanStrategy::Sweep:
            use_sweep = true;
            break;
        case RootScanStrategy::Divisors:
            use_sweep = false;
            break;
        case RootScanStrategy::Auto:
        default:
            use_sweep = (hi - lo <= kSweepThreshold) ||
                        abs(coeffs.front()) > kMaxTrialDivisionConstant;
            break;
    }
    if (use_sweep) {
        long long from = lo;
        long long to = hi;
        if (hi - lo > kSweepThreshold) {
            // Cap by the Cauchy bound: every root x has |x| <= 1 + max|a_i|/|a_n|.
            Integer lead = abs(coeffs.back());
            Integer max_coeff = 0;
            for (const Integer& c : coeffs) {
                if (abs(c) > max_coeff) max_coeff = abs(c);
            }
            Integer bound = 1 + max_coeff / lead;
            if (bound < hi) to = bound.convert_to<long long>();
            if (-bound > lo) from = (-bound).convert_to<long long>();
        }
        if (to >= from && to - from > kMaxSweepRange) {
            throw std::domain_error("integer_roots_in: sweep range too large");
        }
        sweep(from, to);
    } else {
        for (long long divisor : divisor_candidates(coeffs.front())) {
            for (long long candidate : {divisor, -divisor}) {
                if (candidate < lo || candidate > hi) continue;
                if (evaluate_integer(coeffs, Integer(candidate)).is_zero()) {
                    roots.push_back(candidate);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace charnum
