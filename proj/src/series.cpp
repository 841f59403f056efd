#include "charnum/series.hpp"

#include <stdexcept>
#include <utility>

namespace charnum {

namespace {

void check_order(int order) {
    if (order < 0) {
        throw std::invalid_argument("TruncatedSeries: order must be non-negative");
    }
}

void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("TruncatedSeries: order mismatch");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    check_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational());
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    check_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational());
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& coeff, int degree, int order) {
    check_order(order);
    if (degree < 0) {
        throw std::invalid_argument("TruncatedSeries: negative degree");
    }
    TruncatedSeries s(order);
    if (degree <= order) {
        s.coeffs_[static_cast<std::size_t>(degree)] = coeff;
    }
    return s;
}

const Rational& TruncatedSeries::coefficient(int degree) const {
    if (degree < 0 || degree > order_) {
        throw std::out_of_range("TruncatedSeries: degree outside truncation");
    }
    return coeffs_[static_cast<std::size_t>(degree)];
}

bool TruncatedSeries::is_zero() const {
    for (const Rational& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

int TruncatedSeries::valuation() const {
    for (int i = 0; i <= order_; ++i) {
        if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return i;
    }
    return -1;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    check_order(new_order);
    TruncatedSeries s(new_order);
    for (int i = 0; i <= std::min(new_order, order_); ++i) {
        s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(*this);
    for (Rational& c : s.coeffs_) c = -c;
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b);
    TruncatedSeries s(a);
    for (int i = 0; i <= a.order_; ++i) {
        s.coeffs_[static_cast<std::size_t>(i)] += b.coeffs_[static_cast<std::size_t>(i)];
    }
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b);
    TruncatedSeries s(a);
    for (int i = 0; i <= a.order_; ++i) {
        s.coeffs_[static_cast<std::size_t>(i)] -= b.coeffs_[static_cast<std::size_t>(i)];
    }
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b);
    TruncatedSeries s(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        for (int j = 0; i + j <= a.order_; ++j) {
            const Rational& bj = b.coeffs_[static_cast<std::size_t>(j)];
            if (bj.is_zero()) continue;
            s.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    return s;
}

TruncatedSeries operator/(const TruncatedSeries& num, const TruncatedSeries& den) {
    check_same_order(num, den);
    int v = den.valuation();
    if (v < 0) {
        throw std::domain_error("TruncatedSeries: division by the zero series");
    }
    int nv = num.valuation();
    if (nv >= 0 && nv < v) {
        throw std::domain_error("TruncatedSeries: numerator not divisible by t^" +
                                std::to_string(v));
    }
    const int order = num.order_;
    // Cancel t^v, then solve q * den_shifted = num_shifted coefficient by
    // coefficient. Shifted coefficients past the stored order are zero.
    auto shifted = [v, order](const TruncatedSeries& s, int degree) -> Rational {
        int src = degree + v;
        if (src > order) return Rational();
        return s.coeffs_[static_cast<std::size_t>(src)];
    };
    TruncatedSeries q(order);
    Rational lead = shifted(den, 0);
    for (int j = 0; j <= order; ++j) {
        Rational acc = shifted(num, j);
        for (int i = 0; i < j; ++i) {
            const Rational& qi = q.coeffs_[static_cast<std::size_t>(i)];
            if (qi.is_zero()) continue;
            acc -= qi * shifted(den, j - i);
        }
        q.coeffs_[static_cast<std::size_t>(j)] = acc / lead;
    }
    return q;
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
    TruncatedSeries result = constant(1, order_);
    TruncatedSeries base(*this);
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

TruncatedSeries sign_series(long long d, int order) {
    if (d < 1) {
        throw std::domain_error("sign_series: d must be at least 1");
    }
    check_order(order);
    // Work one degree above the target so the valuation-1 cancellation
    // still delivers exact coefficients up to `order`.
    const int work = order + 1;
    // Coefficients of (1+t)^d and (1-t)^d, built incrementally so that very
    // large d stays exact: C(d, i+1) = C(d, i) * (d - i) / (i + 1).
    std::vector<Rational> plus(static_cast<std::size_t>(work) + 1);
    std::vector<Rational> minus(static_cast<std::size_t>(work) + 1);
    Integer c = 1;
    for (int i = 0; i <= work; ++i) {
        plus[static_cast<std::size_t>(i)] = Rational(c);
        minus[static_cast<std::size_t>(i)] = (i % 2 == 0) ? Rational(c) : Rational(-c);
        if (i < work) {
            if (i >= d) {
                c = 0;
            } else {
                c *= d - i;
                c /= i + 1;
            }
        }
    }
    TruncatedSeries num(work);
    TruncatedSeries den(work);
    std::vector<Rational> num_coeffs(static_cast<std::size_t>(work) + 1);
    std::vector<Rational> den_coeffs(static_cast<std::size_t>(work) + 1);
    for (int i = 0; i <= work; ++i) {
        if (i + 1 <= work) {
            num_coeffs[static_cast<std::size_t>(i + 1)] =
                plus[static_cast<std::size_t>(i)] + minus[static_cast<std::size_t>(i)];
        }
        den_coeffs[static_cast<std::size_t>(i)] =
            plus[static_cast<std::size_t>(i)] - minus[static_cast<std::size_t>(i)];
    }
    num = TruncatedSeries(work, std::move(num_coeffs));
    den = TruncatedSeries(work, std::move(den_coeffs));
    return (num / den).truncated(order);
}

}  // namespace charnum
