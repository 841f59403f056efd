#include "charnum/genera.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace charnum {

namespace {

// Sparse multivariate polynomial over Rational with a fixed variable count,
// ordered graded-lex greatest first so begin() is the leading term.
using Exponents = std::vector<int>;

struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

using MultiPoly = std::map<Exponents, Rational, GradedLexGreater>;

int degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void add_term(MultiPoly& p, const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree) {
    MultiPoly result;
    for (const auto& [ea, ca] : a) {
        int da = degree_of(ea);
        for (const auto& [eb, cb] : b) {
            if (da + degree_of(eb) > max_degree) continue;
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(result, e, ca * cb);
        }
    }
    return result;
}

// Elementary symmetric polynomials e_0..e_k in k variables, by the usual
// one-variable-at-a-time recurrence.
std::vector<MultiPoly> elementary_symmetrics(int k) {
    std::vector<MultiPoly> e(static_cast<std::size_t>(k) + 1);
    e[0].emplace(Exponents(static_cast<std::size_t>(k), 0), Rational(1));
    for (int var = 0; var < k; ++var) {
        for (int j = std::min(var + 1, k); j >= 1; --j) {
            for (const auto& [exp, coeff] : e[static_cast<std::size_t>(j - 1)]) {
                Exponents shifted = exp;
                shifted[static_cast<std::size_t>(var)] += 1;
                add_term(e[static_cast<std::size_t>(j)], shifted, coeff);
            }
        }
    }
    return e;
}

// Rewrite a symmetric homogeneous polynomial of degree k in k variables as a
// polynomial in e_1..e_k by greedy leading-monomial elimination: the leading
// exponents (a_1 >= ... >= a_k) match those of e_1^{a_1-a_2}...e_k^{a_k}.
LPolynomial reduce_to_elementary(MultiPoly s, int k) {
    const auto e = elementary_symmetrics(k);
    LPolynomial result;
    result.k = k;
    while (!s.empty()) {
        const auto [lead, coeff] = *s.begin();
        MultiPoly product;
        product.emplace(Exponents(static_cast<std::size_t>(k), 0), Rational(1));
        std::vector<int> parts;
        for (int j = 1; j <= k; ++j) {
            int next = (j < k) ? lead[static_cast<std::size_t>(j)] : 0;
            int times = lead[static_cast<std::size_t>(j - 1)] - next;
            if (times < 0) {
                throw std::logic_error("reduce_to_elementary: non-symmetric leading term");
            }
            for (int t = 0; t < times; ++t) {
                product = mul_truncated(product, e[static_cast<std::size_t>(j)], k);
                parts.push_back(j);
            }
        }
        result.terms.emplace(Partition(parts), coeff);
        for (const auto& [exp, c] : product) {
            add_term(s, exp, -(coeff * c));
        }
    }
    return result;
}

LPolynomial compute_l_polynomial(int k) {
    // Coefficients q_{2j} of x/tanh(x); variable x_i stands for b_i^2, so
    // Q(b_i) becomes sum_j q_{2j} x_i^j.
    const TruncatedSeries q = tanh_characteristic_series(2 * k);
    MultiPoly product;
    product.emplace(Exponents(static_cast<std::size_t>(k), 0), Rational(1));
    for (int var = 0; var < k; ++var) {
        MultiPoly factor;
        for (int j = 0; j <= k; ++j) {
            Exponents e(static_cast<std::size_t>(k), 0);
            e[static_cast<std::size_t>(var)] = j;
            add_term(factor, e, q.coefficient(2 * j));
        }
        product = mul_truncated(product, factor, k);
    }
    MultiPoly weight_k;
    for (const auto& [exp, coeff] : product) {
        if (degree_of(exp) == k) weight_k.emplace(exp, coeff);
    }
    return reduce_to_elementary(std::move(weight_k), k);
}

}  // namespace

TruncatedSeries tanh_characteristic_series(int order) {
    if (order < 0) {
        throw std::invalid_argument("tanh_characteristic_series: order must be non-negative");
    }
    // x/tanh(x) = cosh(x) / (sinh(x)/x): degree-2j coefficients 1/(2j)! and
    // 1/(2j+1)! respectively.
    std::vector<Rational> num(static_cast<std::size_t>(order) + 1);
    std::vector<Rational> den(static_cast<std::size_t>(order) + 1);
    Integer factorial = 1;
    for (int degree = 0, m = 0; degree <= order; degree += 2) {
        // factorial holds (2j)! on entry with m = 2j.
        num[static_cast<std::size_t>(degree)] = Rational(Integer(1), factorial);
        den[static_cast<std::size_t>(degree)] = Rational(Integer(1), factorial * (m + 1));
        factorial *= (m + 1);
        factorial *= (m + 2);
        m += 2;
    }
    return TruncatedSeries(order, std::move(num)) / TruncatedSeries(order, std::move(den));
}

const LPolynomial& l_polynomial(int k) {
    if (k < 1) {
        throw std::domain_error("l_polynomial: k must be positive");
    }
    static std::mutex mutex;
    static std::map<int, LPolynomial> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) {
        it = cache.emplace(k, compute_l_polynomial(k)).first;
    }
    return it->second;
}

Rational signature(const ChernData& data) {
    const int n = data.dimension();
    if (n % 2 != 0) {
        throw std::domain_error("signature: dimension must be even");
    }
    const LPolynomial& l = l_polynomial(n / 2);
    Rational sum;
    for (const auto& [I, coeff] : l.terms) {
        sum += coeff * pontrjagin_number(I, data);
    }
    return sum;
}

ChernPolynomial alpha_expansion(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::domain_error("alpha_expansion: n must be even and positive");
    }
    const LPolynomial& l = l_polynomial(n / 2);
    ChernPolynomial result(n);
    for (const auto& [I, coeff] : l.terms) {
        ChernPolynomial product = ChernPolynomial::monomial(Partition(std::vector<int>{}));
        for (int part : I.parts()) {
            product = product * pontrjagin_class(part, n);
        }
        result += coeff * product;
    }
    return result;
}

Rational proportionality_constant(int n) {
    return signature(cpn_data(n)) / Rational(n + 1);
}

}  // namespace charnum
