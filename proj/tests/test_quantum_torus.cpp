#include <doctest.h>

#include "latorus/quantum_torus.hpp"

using namespace latorus;

namespace {
const QuantumMatrix kQm1 = QuantumMatrix::rank2(Rational(-1));
const QuantumMatrix kId2 = QuantumMatrix::identity(2);

QTElement x(int i) { return QTElement::generator(2, i); }
QTElement xinv(int i) { return QTElement::monomial(-Degree::unit(2, i), Rational(1)); }
}  // namespace

TEST_CASE("generators multiply by the defining relations") {
    CHECK(qt_mul(kQm1, x(1), xinv(1)) == QTElement::one(2));
    CHECK(qt_mul(kQm1, xinv(1), x(1)) == QTElement::one(2));
    // x1 x2 = q12 x2 x1.
    const QTElement lhs = qt_mul(kQm1, x(1), x(2));
    const QTElement rhs = qt_mul(kQm1, x(2), x(1)).scaled(kQm1.at(0, 1));
    CHECK(lhs == rhs);
}

TEST_CASE("one-variable products are plain polynomial products") {
    const QTElement one_plus_x1 = QTElement::one(2) + x(1);
    QTElement expected(2);
    expected.add_term(Degree::zero(2), Rational(1));
    expected.add_term(Degree::unit(2, 1), Rational(2));
    expected.add_term(Degree{2, 0}, Rational(1));
    CHECK(qt_mul(kQm1, one_plus_x1, one_plus_x1) == expected);
}

TEST_CASE("element storage drops zero coefficients") {
    QTElement a(2);
    a.add_term(Degree{1, 0}, Rational(2));
    a.add_term(Degree{1, 0}, Rational(-2));
    CHECK(a.is_zero());
    CHECK((x(1) - x(1)).is_zero());
    CHECK_THROWS_AS(a.add_term(Degree{1, 0, 0}, Rational(1)), RankMismatch);
}

TEST_CASE("monomial inversion") {
    CHECK(qt_invert_monomial(kQm1, Degree::unit(2, 1)) == xinv(1));
    CHECK(qt_invert_monomial(kQm1, Degree::zero(2)) == QTElement::one(2));

    const Degree lam{1, 1};
    const QTElement inv = qt_invert_monomial(kQm1, lam);
    CHECK(qt_mul(kQm1, QTElement::monomial(lam, Rational(1)), inv) == QTElement::one(2));
    CHECK(qt_mul(kQm1, inv, QTElement::monomial(lam, Rational(1))) == QTElement::one(2));

    // Scaled monomial and multi-term error path.
    const QTElement scaled = QTElement::monomial(lam, Rational(3, 2));
    CHECK(qt_mul(kQm1, scaled, qt_invert_monomial(kQm1, scaled)) == QTElement::one(2));
    CHECK_THROWS_AS(qt_invert_monomial(kQm1, x(1) + x(2)), NotMonomial);
    CHECK_THROWS_AS(qt_invert_monomial(kQm1, QTElement::zero(2)), NotMonomial);
}

TEST_CASE("all window monomials are two-sided invertible") {
    for (const QuantumMatrix& q : {kQm1, kId2, QuantumMatrix::rank2(Rational(2))}) {
        for (const Degree& lam : degree_window(2, 2)) {
            const QTElement m = QTElement::monomial(lam, Rational(1));
            const QTElement inv = qt_invert_monomial(q, lam);
            CHECK(qt_mul(q, m, inv) == QTElement::one(2));
            CHECK(qt_mul(q, inv, m) == QTElement::one(2));
        }
    }
}

TEST_CASE("associativity on monomial triples") {
    const QuantumMatrix q = QuantumMatrix::rank2(Rational(2, 3));
    const auto window = degree_window(2, 2);
    for (const Degree& a : window)
        for (const Degree& b : window)
            for (const Degree& c : window) {
                const QTElement xa = QTElement::monomial(a, Rational(1));
                const QTElement xb = QTElement::monomial(b, Rational(1));
                const QTElement xc = QTElement::monomial(c, Rational(1));
                REQUIRE(qt_mul(q, qt_mul(q, xa, xb), xc) == qt_mul(q, xa, qt_mul(q, xb, xc)));
            }
}

TEST_CASE("commutator component witnesses") {
    // Anticommuting case: [x1, x2] = 2 x1 x2 != 0.
    CHECK(qt_commutator_component_full(kQm1, Degree{1, 1}, 1));
    const QTElement comm = qt_commutator(kQm1, x(1), x(2));
    CHECK(comm == QTElement::monomial(Degree{1, 1}, Rational(2)));

    // Commutative case: never witnessed.
    for (const Degree& lam : degree_window(2, 2)) CHECK_FALSE(qt_commutator_component_full(kId2, lam, 3));

    // Degree 2e1 is never a commutator degree even in the anticommuting case.
    CHECK_FALSE(qt_commutator_component_full(kQm1, Degree{2, 0}, 1));
    CHECK_FALSE(qt_commutator_component_full(kQm1, Degree{2, 0}, 4));
    CHECK_THROWS_AS(qt_commutator_component_full(kQm1, Degree{1, 1}, 0), AlgebraError);
}

TEST_CASE("opposite quantum matrix") {
    CHECK(qt_opposite(kQm1) == kQm1);  // symmetric entries
    const QuantumMatrix q2 = QuantumMatrix::rank2(Rational(2));
    CHECK(qt_opposite(q2).at(0, 1) == Rational(1, 2));
    const QuantumMatrix qop = qt_opposite(q2);

    // The transpose matrix presents the opposite algebra: sending x^lam to
    // the reversed generator word x_n^(lam_n)...x_1^(lam_1) = c(lam) x^lam
    // is a graded isomorphism onto the opposite multiplication, i.e. the
    // two cocycles differ by the coboundary of c.
    auto reversal = [&](const Degree& lam) {
        Rational c(1);
        Degree acc = Degree::zero(2);
        for (int i = 2; i >= 1; --i) {
            std::vector<std::int64_t> coords(2, 0);
            coords[i - 1] = lam[i - 1];
            const Degree step(coords);
            c *= twist(q2, acc, step);
            acc = acc + step;
        }
        return c;
    };
    for (const Degree& lam : degree_window(2, 2))
        for (const Degree& mu : degree_window(2, 2))
            CHECK(twist(qop, lam, mu) * reversal(lam + mu) ==
                  reversal(lam) * reversal(mu) * twist(q2, mu, lam));

    // In particular x2 x1 taken in the opposite algebra lands on x1 x2.
    const Degree e1 = Degree::unit(2, 1), e2 = Degree::unit(2, 2);
    CHECK(twist(qop, e2, e1) * reversal(e1 + e2) == twist(q2, e1, e2));
}
