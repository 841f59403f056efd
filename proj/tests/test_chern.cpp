#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "charnum/chern.hpp"

using charnum::ChernData;
using charnum::chern_number_cpn;
using charnum::ChernPolynomial;
using charnum::cpn_data;
using charnum::evaluate;
using charnum::Integer;
using charnum::Partition;
using charnum::partitions_of;
using charnum::pontrjagin_class;
using charnum::pontrjagin_number;
using charnum::ratio_cpn;
using charnum::Rational;

namespace {

ChernPolynomial mono(std::vector<int> parts, const Rational& coeff = Rational(1)) {
    return ChernPolynomial::monomial(Partition(std::move(parts)), coeff);
}

// Deterministic pseudo-random homogeneous polynomial of the given weight.
ChernPolynomial random_poly(int weight, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    ChernPolynomial p(weight);
    for (const Partition& I : partitions_of(weight)) {
        p += ChernPolynomial::monomial(I, Rational(Integer(num(rng)), Integer(den(rng))));
    }
    return p;
}

}  // namespace

TEST_CASE("Chern numbers of CP^n are products of binomials") {
    CHECK(chern_number_cpn(2, Partition({1, 1})) == Rational(9));
    CHECK(chern_number_cpn(2, Partition({2})) == Rational(3));
    CHECK(chern_number_cpn(4, Partition({1, 1, 1, 1})) == Rational(625));
    for (int n = 1; n <= 8; ++n) {
        CHECK(chern_number_cpn(n, Partition({n})) == Rational(n + 1));
    }
    CHECK_THROWS_AS(chern_number_cpn(3, Partition({2})), std::domain_error);
    CHECK_THROWS_AS(chern_number_cpn(0, Partition(std::vector<int>{})), std::domain_error);
}

TEST_CASE("CP^n tables are complete and frozen values match") {
    ChernData cp2 = cpn_data(2);
    CHECK(cp2.number(Partition({2})) == Rational(3));
    CHECK(cp2.number(Partition({1, 1})) == Rational(9));
    CHECK(cp2.euler_characteristic() == Rational(3));

    CHECK(cpn_data(1).number(Partition({1})) == Rational(2));

    ChernData cp4 = cpn_data(4);
    CHECK(cp4.number(Partition({4})) == Rational(5));
    CHECK(cp4.number(Partition({3, 1})) == Rational(50));
    CHECK(cp4.number(Partition({2, 2})) == Rational(100));
    CHECK(cp4.number(Partition({2, 1, 1})) == Rational(250));
    CHECK(cp4.number(Partition({1, 1, 1, 1})) == Rational(625));

    ChernData cp6 = cpn_data(6);
    CHECK(cp6.number(Partition({6})) == Rational(7));
    CHECK(cp6.number(Partition({5, 1})) == Rational(147));
    CHECK(cp6.number(Partition({4, 2})) == Rational(735));
    CHECK(cp6.number(Partition({4, 1, 1})) == Rational(1715));
    CHECK(cp6.number(Partition({3, 3})) == Rational(1225));
    CHECK(cp6.number(Partition({3, 2, 1})) == Rational(5145));
    CHECK(cp6.number(Partition({3, 1, 1, 1})) == Rational(12005));
    CHECK(cp6.number(Partition({2, 2, 2})) == Rational(9261));
    CHECK(cp6.number(Partition({2, 2, 1, 1})) == Rational(21609));
    CHECK(cp6.number(Partition({2, 1, 1, 1, 1})) == Rational(50421));
    CHECK(cp6.number(Partition({1, 1, 1, 1, 1, 1})) == Rational(117649));

    for (int n = 1; n <= 8; ++n) {
        ChernData data = cpn_data(n);
        CHECK(data.numbers().size() == partitions_of(n).size());
        for (const auto& [I, value] : data.numbers()) {
            CHECK(value > Rational(0));
            CHECK(value.is_integer());
        }
    }
}

TEST_CASE("table construction validates its key set") {
    ChernData::NumberMap missing;
    missing.emplace(Partition({2}), Rational(3));
    CHECK_THROWS_AS(ChernData(2, missing), std::invalid_argument);

    ChernData::NumberMap wrong;
    wrong.emplace(Partition({2}), Rational(3));
    wrong.emplace(Partition({1}), Rational(9));
    CHECK_THROWS_AS(ChernData(2, wrong), std::invalid_argument);
}

TEST_CASE("ratios of CP^n Chern numbers") {
    CHECK(ratio_cpn(4, Partition({3, 1}), Partition({4})) == Rational(10));
    for (int n = 2; n <= 8; ++n) {
        CHECK(ratio_cpn(n, Partition({n - 1, 1}), Partition({n})) ==
              Rational(Integer(n) * (n + 1), Integer(2)));
        for (const Partition& I : partitions_of(n)) {
            CHECK(ratio_cpn(n, I, I) == Rational(1));
        }
    }
}

TEST_CASE("one proportionality constant serves every partition pair") {
    // If each Chern number is scaled by a single factor s, the ratio I/J
    // recovers exactly c_I/c_J: ratio * c_J = c_I across all pairs.
    for (int n = 1; n <= 8; ++n) {
        const auto parts = partitions_of(n);
        for (const Partition& I : parts) {
            for (const Partition& J : parts) {
                CHECK(ratio_cpn(n, I, J) * chern_number_cpn(n, J) ==
                      chern_number_cpn(n, I));
            }
        }
    }
}

TEST_CASE("Pontrjagin classes in Chern generators") {
    CHECK(pontrjagin_class(1, 2) == mono({1, 1}) - Rational(2) * mono({2}));
    CHECK(pontrjagin_class(1, 4) == mono({1, 1}) - Rational(2) * mono({2}));
    CHECK(pontrjagin_class(2, 4) ==
          mono({2, 2}) - Rational(2) * mono({3, 1}) + Rational(2) * mono({4}));
    CHECK(pontrjagin_class(1, 2).weight() == 2);
    CHECK(pontrjagin_class(3, 6).weight() == 6);
    CHECK_THROWS_AS(pontrjagin_class(2, 3), std::domain_error);
    CHECK_THROWS_AS(pontrjagin_class(0, 4), std::domain_error);
}

TEST_CASE("conjugate-bundle identity in every even weight up to 10") {
    // The weight-2k graded piece of (sum_i c_i)(sum_j (-1)^j c_j) equals
    // (-1)^k p_k; c_0 = 1 enters as the empty factor.
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            ChernPolynomial piece(2 * k);
            for (int i = 0; i <= 2 * k; ++i) {
                const int j = 2 * k - i;
                std::vector<int> parts;
                if (i > 0) parts.push_back(i);
                if (j > 0) parts.push_back(j);
                piece += ChernPolynomial::monomial(
                    Partition(parts), Rational(j % 2 == 0 ? 1 : -1));
            }
            CHECK(piece == Rational(k % 2 == 0 ? 1 : -1) * pontrjagin_class(k, n));
        }
    }
}

TEST_CASE("polynomial algebra fundamentals") {
    CHECK(mono({1}) * mono({1}) == mono({1, 1}));
    ChernPolynomial p1 = pontrjagin_class(1, 4);
    CHECK(p1 * p1 == mono({1, 1, 1, 1}) - Rational(4) * mono({2, 1, 1}) +
                         Rational(4) * mono({2, 2}));

    ChernPolynomial zero(3);
    CHECK((p1 * zero).is_zero());
    CHECK((p1 * zero).weight() == 5);

    CHECK_THROWS_AS(mono({1}) + mono({2}), std::domain_error);
    CHECK(mono({2}) + (-mono({2})) == ChernPolynomial(2));
    CHECK((Rational(0) * mono({2})).is_zero());
    CHECK(mono({3, 1}).coefficient(Partition({3, 1})) == Rational(1));
    CHECK(mono({3, 1}).coefficient(Partition({2, 2})) == Rational(0));
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 8; ++trial) {
        ChernPolynomial a = random_poly(2, rng);
        ChernPolynomial b = random_poly(3, rng);
        ChernPolynomial c = random_poly(3, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).weight() == 5);
        CHECK(((a * b) * c).weight() == 8);
    }
}

TEST_CASE("evaluation against a table") {
    ChernData cp2 = cpn_data(2);
    CHECK(evaluate(pontrjagin_class(1, 2), cp2) == Rational(3));
    for (int n = 1; n <= 6; ++n) {
        ChernData data = cpn_data(n);
        CHECK(evaluate(ChernPolynomial::monomial(Partition({n})), data) ==
              data.euler_characteristic());
    }
    CHECK(evaluate(ChernPolynomial(2), cp2) == Rational(0));
    CHECK_THROWS_AS(evaluate(mono({1}), cp2), std::domain_error);
}

TEST_CASE("evaluation is linear in the polynomial") {
    std::mt19937 rng(7);
    ChernData cp4 = cpn_data(4);
    for (int trial = 0; trial < 6; ++trial) {
        ChernPolynomial p = random_poly(4, rng);
        ChernPolynomial q = random_poly(4, rng);
        Rational a(Integer(3), Integer(7));
        Rational b(-2);
        CHECK(evaluate(a * p + b * q, cp4) ==
              a * evaluate(p, cp4) + b * evaluate(q, cp4));
    }
}

TEST_CASE("Pontrjagin numbers of projective spaces") {
    CHECK(pontrjagin_number(Partition({1}), cpn_data(2)) == Rational(3));

    ChernData cp4 = cpn_data(4);
    CHECK(pontrjagin_number(Partition({2}), cp4) == Rational(10));
    CHECK(pontrjagin_number(Partition({1, 1}), cp4) == Rational(25));
    // Same numbers through the public polynomial route.
    CHECK(pontrjagin_number(Partition({1, 1}), cp4) ==
          evaluate(pontrjagin_class(1, 4) * pontrjagin_class(1, 4), cp4));
    CHECK(pontrjagin_number(Partition({2}), cp4) ==
          evaluate(pontrjagin_class(2, 4), cp4));

    ChernData cp6 = cpn_data(6);
    CHECK(pontrjagin_number(Partition({3}), cp6) == Rational(35));
    CHECK(pontrjagin_number(Partition({2, 1}), cp6) == Rational(147));
    CHECK(pontrjagin_number(Partition({1, 1, 1}), cp6) == Rational(343));

    ChernData cp8 = cpn_data(8);
    CHECK(pontrjagin_number(Partition({4}), cp8) == Rational(126));
    CHECK(pontrjagin_number(Partition({3, 1}), cp8) == Rational(756));
    CHECK(pontrjagin_number(Partition({2, 2}), cp8) == Rational(1296));
    CHECK(pontrjagin_number(Partition({2, 1, 1}), cp8) == Rational(2916));
    CHECK(pontrjagin_number(Partition({1, 1, 1, 1}), cp8) == Rational(6561));

    CHECK_THROWS_AS(pontrjagin_number(Partition({1}), cpn_data(3)), std::domain_error);
    CHECK_THROWS_AS(pontrjagin_number(Partition({3}), cp4), std::domain_error);
}
