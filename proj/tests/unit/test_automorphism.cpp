#include <doctest.h>

#include "autjet/automorphism.hpp"
#include "autjet/corpus.hpp"
#include "helpers.hpp"

using namespace autjet;
using namespace autjet::testing;

namespace {

// z2 <- z2 + z1^2
Generator square_shear() { return monomial_shear(2, 1, 0, 2); }

// z -> diag(2, 1) z + (1, 0)
Generator scale_affine() { return Generator::affine(mat({{2, 0}, {0, 1}}), vec({1, 0})); }

double rel(const CVector& a, const CVector& b) { return (a - b).norm() / (1.0 + b.norm()); }

}  // namespace

TEST_CASE("evaluate: identity word") {
    const AutomorphismWord id(2);
    const CVector z = vec({Complex(3, 1), 2});
    CHECK(evaluate(id, z) == z);
}

TEST_CASE("evaluate: single shear") {
    const AutomorphismWord w(2, {square_shear()});
    CHECK(max_abs(evaluate(w, vec({1, 0})) - vec({1, 1})) == 0.0);
}

TEST_CASE("evaluate: shear then affine against direct substitution") {
    const AutomorphismWord w(2, {square_shear(), scale_affine()});
    auto direct = [](const CVector& z) { return vec({2.0 * z[0] + 1.0, z[1] + z[0] * z[0]}); };
    CHECK(max_abs(evaluate(w, vec({1, 0})) - vec({3, 1})) == 0.0);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const CVector z = random_point(2, rng, 2.0);
        CHECK(rel(evaluate(w, z), direct(z)) < 1e-15);
    }
}

TEST_CASE("evaluate: dimension mismatch") {
    const AutomorphismWord w(2, {square_shear()});
    CHECK_THROWS_AS(evaluate(w, vec({1, 2, 3})), DimensionError);
    CHECK_THROWS_AS(jacobian(w, vec({1})), DimensionError);
    CHECK_THROWS_AS(compose(w, AutomorphismWord(3)), DimensionError);
    AutomorphismWord v(3);
    CHECK_THROWS_AS(v.then(square_shear()), DimensionError);
}

TEST_CASE("jacobian: examples") {
    CHECK(jacobian(AutomorphismWord(2), vec({0.3, Complex(0, 1)})) == CMatrix::Identity(2, 2));
    CHECK(max_abs(jacobian(AutomorphismWord(2, {square_shear()}), vec({1, 0})) - mat({{1, 0}, {2, 1}})) == 0.0);

    const AutomorphismWord w(2, {square_shear(), scale_affine()});
    const CVector z = vec({1, 0});
    const CMatrix fd = fd_jacobian([&](const CVector& x) { return evaluate(w, x); }, z);
    const CMatrix exact = jacobian(w, z);
    CHECK(max_abs(exact - mat({{2, 0}, {2, 1}})) == 0.0);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) CHECK(std::abs(exact(i, j) - fd(i, j)) <= 1e-6 * std::max(1.0, std::abs(exact(i, j))));
}

TEST_CASE("jacobian: random words against finite differences") {
    Rng rng(17);
    for (std::size_t n : {2u, 3u}) {
        for (int i = 0; i < 20; ++i) {
            const AutomorphismWord w = random_word(n, rng);
            const CVector z = random_point(n, rng);
            const CMatrix exact = jacobian(w, z);
            const CMatrix fd = fd_jacobian([&](const CVector& x) { return evaluate(w, x); }, z);
            CHECK(max_abs(exact - fd) <= 1e-6 * std::max(1.0, max_abs(exact)));
        }
    }
}

TEST_CASE("invert: examples") {
    CHECK(invert(AutomorphismWord(2)).empty());
    const AutomorphismWord inv = invert(AutomorphismWord(2, {square_shear()}));
    REQUIRE(inv.size() == 1);
    const auto* s = inv.generators()[0].as_shear();
    REQUIRE(s != nullptr);
    CHECK(s->coordinate == 1);
    CHECK(s->polynomial == -square_shear().as_shear()->polynomial);
}

TEST_CASE("invert: random round trips") {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        CorpusOptions opts;
        opts.max_length = 5;
        const AutomorphismWord w = random_word(2 + i % 2, rng, opts);
        const AutomorphismWord inv = invert(w);
        double worst = 0.0;
        for (int p = 0; p < 100; ++p) {
            const CVector z = random_point(w.dimension(), rng);
            worst = std::max(worst, (evaluate(inv, evaluate(w, z)) - z).norm() / (1.0 + z.norm()));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("compose: identity, inverse and associativity") {
    Rng rng(8);
    const AutomorphismWord a = random_word(2, rng), b = random_word(2, rng), c = random_word(2, rng);
    const AutomorphismWord id(2);
    const AutomorphismWord ab_c = compose(compose(a, b), c);
    const AutomorphismWord a_bc = compose(a, compose(b, c));
    const AutomorphismWord a_inv = compose(a, invert(a));
    for (int p = 0; p < 100; ++p) {
        const CVector z = random_point(2, rng);
        CHECK(rel(evaluate(compose(a, id), z), evaluate(a, z)) < 1e-15);
        CHECK(rel(evaluate(compose(id, a), z), evaluate(a, z)) < 1e-15);
        CHECK(rel(evaluate(a_inv, z), z) < 1e-9);
        const CVector direct = evaluate(a, evaluate(b, evaluate(c, z)));
        CHECK(rel(evaluate(ab_c, z), direct) < 1e-9);
        CHECK(rel(evaluate(a_bc, z), direct) < 1e-9);
    }
}

TEST_CASE("jet1: examples") {
    const Jet1 id = jet1(AutomorphismWord(2));
    CHECK(id.value_at_zero == CVector::Zero(2));
    CHECK(id.derivative_at_zero == CMatrix::Identity(2, 2));

    const CMatrix a = mat({{1, Complex(0, 2)}, {3, -1}});
    const CVector b = vec({Complex(0.5, 0.5), -2});
    const Jet1 aff = jet1(AutomorphismWord(2, {Generator::affine(a, b)}));
    CHECK(aff.value_at_zero == b);
    CHECK(aff.derivative_at_zero == a);

    const Jet1 sh = jet1(AutomorphismWord(2, {square_shear()}));
    CHECK(sh.value_at_zero == CVector::Zero(2));
    CHECK(sh.derivative_at_zero == CMatrix::Identity(2, 2));
}

TEST_CASE("jet1: chain rule at the origin") {
    Rng rng(21);
    const CVector zero = CVector::Zero(3);
    for (int i = 0; i < 20; ++i) {
        const AutomorphismWord f = random_word(3, rng), g = random_word(3, rng);
        const CMatrix expected = jacobian(f, evaluate(g, zero)) * jacobian(g, zero);
        CHECK(max_abs(jet1(compose(f, g)).derivative_at_zero - expected) < 1e-9 * (1.0 + max_abs(expected)));
    }
}

TEST_CASE("theta_normalize: affine maps collapse to the identity") {
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
        const AutomorphismWord w = random_affine_word(2, rng);
        const AutomorphismWord t = theta_normalize(w);
        for (int p = 0; p < 20; ++p) {
            const CVector z = random_point(2, rng);
            CHECK(rel(evaluate(t, z), z) < 1e-12);
        }
    }
}

TEST_CASE("theta_normalize: already normalized words are unchanged") {
    const AutomorphismWord w(2, {square_shear(), monomial_shear(2, 0, 1, 3, Complex(0, 1))});
    const AutomorphismWord t = theta_normalize(w);
    Rng rng(4);
    for (int p = 0; p < 50; ++p) {
        const CVector z = random_point(2, rng);
        CHECK(rel(evaluate(t, z), evaluate(w, z)) < 1e-15);
    }
}

TEST_CASE("theta_normalize: direct formula") {
    // F(z) = (2 z1 + 1, z2 + z1^2) has jet ((1, 0), diag(2, 1)).
    const AutomorphismWord w(2, {square_shear(), scale_affine()});
    const Jet1 jet = jet1(w);
    CHECK(max_abs(jet.value_at_zero - vec({1, 0})) == 0.0);
    CHECK(max_abs(jet.derivative_at_zero - mat({{2, 0}, {0, 1}})) == 0.0);

    const AutomorphismWord t = theta_normalize(w);
    const CMatrix inv = jet.derivative_at_zero.inverse();
    Rng rng(6);
    for (int p = 0; p < 50; ++p) {
        const CVector z = random_point(2, rng, 2.0);
        const CVector formula = inv * (evaluate(w, z) - jet.value_at_zero);
        CHECK(rel(evaluate(t, z), formula) < 1e-14);
        CHECK(rel(evaluate(t, z), vec({z[0], z[1] + z[0] * z[0]})) < 1e-14);
    }
}

TEST_CASE("theta_normalize: retraction and coset properties") {
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
        const AutomorphismWord w = random_word(n, rng);
        const AutomorphismWord h = random_affine_word(n, rng);
        const AutomorphismWord once = theta_normalize(w);
        const AutomorphismWord twice = theta_normalize(once);
        const AutomorphismWord shifted = theta_normalize(compose(h, w));

        const Jet1 jet = jet1(once);
        CHECK(jet.value_at_zero.norm() <= 1e-12);
        CHECK(max_abs(jet.derivative_at_zero - CMatrix::Identity(n, n)) <= 1e-12);
        for (int p = 0; p < 20; ++p) {
            const CVector z = random_point(n, rng);
            CHECK(rel(evaluate(twice, z), evaluate(once, z)) < 1e-9);
            CHECK(rel(evaluate(shifted, z), evaluate(once, z)) < 1e-9);
        }
    }
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(Generator::affine(mat({{1, 2}, {2, 4}}), vec({0, 0})), InvalidGenerator);
    CHECK_THROWS_AS(Generator::affine(mat({{1, 0}, {0, 0}}), vec({0, 0})), InvalidGenerator);
    CHECK_THROWS_AS(Generator::affine(mat({{1, 0}, {0, 1}}), vec({0})), DimensionError);
    try {
        monomial_shear(2, 1, 1, 2);
        FAIL("self-referential shear accepted");
    } catch (const InvalidGenerator& e) {
        CHECK(e.reason() == InvalidGenerator::Reason::self_referential_shear);
    }
    CHECK_THROWS_AS(Generator::shear(2, ComplexPolynomial::variable(2, 0)), InvalidGenerator);
    CHECK(invertibility_ratio(CMatrix::Identity(3, 3)) == doctest::Approx(1.0));
}

TEST_CASE("is_purely_affine") {
    CHECK(is_purely_affine(AutomorphismWord(2)));
    CHECK(is_purely_affine(AutomorphismWord(2, {scale_affine(), monomial_shear(2, 1, 0, 1, 3.0)})));
    CHECK_FALSE(is_purely_affine(AutomorphismWord(2, {scale_affine(), square_shear()})));
}
