#include "charnum/chern.hpp"

#include <stdexcept>
#include <utility>

namespace charnum {

ChernPolynomial::ChernPolynomial(int weight) : weight_(weight) {
    if (weight < 0) {
        throw std::invalid_argument("ChernPolynomial: negative weight");
    }
}

ChernPolynomial ChernPolynomial::monomial(const Partition& parts, const Rational& coeff) {
    ChernPolynomial p(parts.weight());
    if (!coeff.is_zero()) {
        p.terms_.emplace(parts, coeff);
    }
    return p;
}

Rational ChernPolynomial::coefficient(const Partition& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rational() : it->second;
}

ChernPolynomial ChernPolynomial::operator-() const {
    ChernPolynomial p(weight_);
    for (const auto& [mono, coeff] : terms_) {
        p.terms_.emplace(mono, -coeff);
    }
    return p;
}

ChernPolynomial& ChernPolynomial::operator+=(const ChernPolynomial& other) {
    if (weight_ != other.weight_) {
        throw std::domain_error("ChernPolynomial: cannot add different weights");
    }
    for (const auto& [mono, coeff] : other.terms_) {
        auto [it, inserted] = terms_.emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

ChernPolynomial& ChernPolynomial::operator-=(const ChernPolynomial& other) {
    return *this += -other;
}

ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b) {
    ChernPolynomial p(a.weight_ + b.weight_);
    for (const auto& [am, ac] : a.terms_) {
        for (const auto& [bm, bc] : b.terms_) {
            Partition mono = am.merged(bm);
            Rational coeff = ac * bc;
            auto [it, inserted] = p.terms_.emplace(std::move(mono), coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second.is_zero()) p.terms_.erase(it);
            }
        }
    }
    return p;
}

ChernPolynomial operator*(const Rational& s, const ChernPolynomial& p) {
    ChernPolynomial result(p.weight_);
    if (s.is_zero()) return result;
    for (const auto& [mono, coeff] : p.terms_) {
        result.terms_.emplace(mono, s * coeff);
    }
    return result;
}

ChernData::ChernData(int n, NumberMap numbers) : n_(n), numbers_(std::move(numbers)) {
    if (n < 1) {
        throw std::invalid_argument("ChernData: dimension must be positive");
    }
    const auto expected = partitions_of(n);
    if (numbers_.size() != expected.size()) {
        throw std::invalid_argument("ChernData: table must have one entry per partition of n");
    }
    for (const Partition& I : expected) {
        if (numbers_.find(I) == numbers_.end()) {
            throw std::invalid_argument("ChernData: missing entry for partition " + I.str());
        }
    }
}

const Rational& ChernData::number(const Partition& I) const {
    auto it = numbers_.find(I);
    if (it == numbers_.end()) {
        throw std::domain_error("ChernData: no entry for partition " + I.str());
    }
    return it->second;
}

const Rational& ChernData::euler_characteristic() const {
    return number(Partition({n_}));
}

Rational chern_number_cpn(int n, const Partition& I) {
    if (n < 1) {
        throw std::domain_error("chern_number_cpn: n must be positive");
    }
    if (I.weight() != n) {
        throw std::domain_error("chern_number_cpn: partition must sum to n");
    }
    Integer product = 1;
    for (int part : I.parts()) {
        product *= binomial(n + 1, part);
    }
    return Rational(product);
}

ChernData cpn_data(int n) {
    ChernData::NumberMap numbers;
    for (const Partition& I : partitions_of(n)) {
        numbers.emplace(I, chern_number_cpn(n, I));
    }
    return ChernData(n, std::move(numbers));
}

Rational ratio_cpn(int n, const Partition& I, const Partition& J) {
    return chern_number_cpn(n, I) / chern_number_cpn(n, J);
}

ChernPolynomial pontrjagin_class(int k, int n) {
    if (k < 1) {
        throw std::domain_error("pontrjagin_class: k must be positive");
    }
    if (2 * k > n) {
        throw std::domain_error("pontrjagin_class: 2k exceeds the ambient dimension");
    }
    ChernPolynomial p = ChernPolynomial::monomial(Partition({k, k}));
    for (int r = 1; r <= k; ++r) {
        Rational coeff = (r % 2 == 0) ? Rational(2) : Rational(-2);
        std::vector<int> parts{k + r};
        if (k - r > 0) parts.push_back(k - r);
        p += ChernPolynomial::monomial(Partition(parts), coeff);
    }
    return p;
}

Rational evaluate(const ChernPolynomial& poly, const ChernData& data) {
    if (poly.is_zero()) return Rational();
    if (poly.weight() != data.dimension()) {
        throw std::domain_error("evaluate: polynomial weight does not match the table dimension");
    }
    Rational sum;
    for (const auto& [mono, coeff] : poly.terms()) {
        // Generators above the top degree vanish on an n-manifold.
        if (!mono.empty() && mono.parts().front() > data.dimension()) continue;
        sum += coeff * data.number(mono);
    }
    return sum;
}

Rational pontrjagin_number(const Partition& I, const ChernData& data) {
    const int n = data.dimension();
    if (n % 2 != 0) {
        throw std::domain_error("pontrjagin_number: dimension must be even");
    }
    if (I.weight() != n / 2) {
        throw std::domain_error("pontrjagin_number: partition must sum to n/2");
    }
    ChernPolynomial product(0);
    bool first = true;
    for (int part : I.parts()) {
        ChernPolynomial factor = pontrjagin_class(part, n);
        product = first ? factor : product * factor;
        first = false;
    }
    if (first) {
        // Empty partition: the empty product is 1, integrated over a point.
        throw std::domain_error("pontrjagin_number: empty partition");
    }
    return evaluate(product, data);
}

}  // namespace charnum
