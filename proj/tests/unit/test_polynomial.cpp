#include <doctest.h>

#include "autjet/corpus.hpp"
#include "autjet/polynomial.hpp"
#include "helpers.hpp"

using namespace autjet;
using namespace autjet::testing;

TEST_CASE("canonical form drops cancelled terms") {
    const auto z1 = ComplexPolynomial::variable(2, 0);
    const auto z2 = ComplexPolynomial::variable(2, 1);
    const auto p = z1 * z2 + z2 - z2;
    CHECK(p.terms().size() == 1);
    CHECK_FALSE((z1 - z1).terms().size());
    CHECK((z1 - z1).is_zero());
    CHECK((z1 * Complex(0.0)).is_zero());
}

TEST_CASE("terms iterate in graded-lex order, highest degree first") {
    const auto z1 = ComplexPolynomial::variable(3, 0);
    const auto z2 = ComplexPolynomial::variable(3, 1);
    const auto z3 = ComplexPolynomial::variable(3, 2);
    const auto p = ComplexPolynomial::constant(3, 7.0) + z3 + z1 + z2 * z2 + z1 * z3 + z1.pow(3);
    std::vector<Exponent> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    const std::vector<Exponent> expected{{3, 0, 0}, {1, 0, 1}, {0, 2, 0}, {1, 0, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(order == expected);
    CHECK(p.degree() == 3);
}

TEST_CASE("pow matches repeated multiplication") {
    const auto z1 = ComplexPolynomial::variable(2, 0);
    const auto z2 = ComplexPolynomial::variable(2, 1);
    const auto base = z1 + Complex(0, 2) * z2 + ComplexPolynomial::constant(2, 1.0);
    auto product = ComplexPolynomial::constant(2, 1.0);
    for (int i = 0; i < 5; ++i) product = product * base;
    CHECK(base.pow(5) == product);
    CHECK(base.pow(0) == ComplexPolynomial::constant(2, 1.0));
}

TEST_CASE("evaluation matches direct substitution") {
    const auto z1 = ComplexPolynomial::variable(2, 0);
    const auto z2 = ComplexPolynomial::variable(2, 1);
    const auto p = Complex(2, -1) * z1.pow(3) * z2 + z2 * z2 - ComplexPolynomial::constant(2, 4.0);
    const Complex a(0.3, -1.2), b(-0.7, 0.4);
    const Complex expected = Complex(2, -1) * a * a * a * b + b * b - 4.0;
    CHECK(std::abs(p.evaluate(vec({a, b})) - expected) < 1e-14);
}

TEST_CASE("gradient agrees with finite differences") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexPolynomial p(3);
        for (int t = 0; t < 4; ++t) {
            Exponent e{static_cast<unsigned>(rng.index(0, 3)), static_cast<unsigned>(rng.index(0, 3)),
                       static_cast<unsigned>(rng.index(0, 3))};
            p += ComplexPolynomial::monomial(3, e, rng.in_disk());
        }
        const CVector z = random_point(3, rng);
        const CMatrix fd = fd_jacobian([&](const CVector& x) { return vec({p.evaluate(x)}); }, z);
        const CVector grad = p.gradient(z);
        CHECK(max_abs(fd.row(0).transpose() - grad) < 1e-6 * (1.0 + grad.norm()));
    }
}

TEST_CASE("depends_on reports variable occurrence") {
    const auto p = ComplexPolynomial::variable(3, 0) * ComplexPolynomial::variable(3, 2);
    CHECK(p.depends_on(0));
    CHECK_FALSE(p.depends_on(1));
    CHECK(p.depends_on(2));
}

TEST_CASE("dimension errors") {
    CHECK_THROWS_AS(ComplexPolynomial(0), DimensionError);
    CHECK_THROWS_AS(ComplexPolynomial::variable(2, 2), DimensionError);
    CHECK_THROWS_AS(ComplexPolynomial::variable(2, 0) + ComplexPolynomial::variable(3, 0), DimensionError);
    CHECK_THROWS_AS(ComplexPolynomial::variable(2, 0).evaluate(vec({1.0})), DimensionError);
}
