#include "autjet/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace autjet {

Complex Rng::in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

Complex Rng::annulus(double lo, double hi) { return std::polar(uniform(lo, hi), 2.0 * std::numbers::pi * uniform()); }

Generator random_affine(std::size_t n, Rng& rng, const CorpusOptions& opts) {
    const auto k = static_cast<Eigen::Index>(n);
    CMatrix a(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            a(i, j) = (i == j) ? rng.annulus(0.6, 1.6) : rng.in_disk(0.3 / static_cast<double>(n));
    CVector b(k);
    for (Eigen::Index i = 0; i < k; ++i) b[i] = rng.in_disk(opts.translation_radius);
    return Generator::affine(std::move(a), std::move(b));
}

Generator random_shear(std::size_t n, unsigned degree, Rng& rng, const CorpusOptions& opts) {
    if (n == 1) return Generator::shear(0, ComplexPolynomial::constant(1, rng.in_disk(opts.translation_radius)));
    if (degree < 2) throw std::invalid_argument("random_shear: degree must be at least 2");

    const std::size_t coordinate = rng.index(0, n - 1);
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
        if (i != coordinate) others.push_back(i);

    ComplexPolynomial p(n);
    const std::size_t terms = rng.index(1, 3);
    for (std::size_t t = 0; t < terms; ++t) {
        const unsigned d = t == 0 ? degree : static_cast<unsigned>(rng.index(2, degree));
        Exponent e(n, 0);
        for (unsigned u = 0; u < d; ++u) ++e[others[rng.index(0, others.size() - 1)]];
        p += ComplexPolynomial::monomial(n, std::move(e), rng.annulus(opts.coefficient_min, opts.coefficient_max));
    }
    // Coinciding monomials could in principle cancel; keep the top-degree term.
    if (p.degree() < degree) {
        Exponent e(n, 0);
        e[others.front()] = degree;
        p += ComplexPolynomial::monomial(n, std::move(e), 0.5);
    }
    return Generator::shear(coordinate, std::move(p));
}

AutomorphismWord random_word(std::size_t n, Rng& rng, const CorpusOptions& opts) {
    AutomorphismWord w(n);
    const std::size_t length = rng.index(1, std::max<std::size_t>(opts.max_length, 1));
    unsigned budget = opts.degree_budget;
    for (std::size_t g = 0; g < length; ++g) {
        const bool affine = rng.uniform() < 0.4 || budget < 2 || opts.max_degree < 2 || n == 1;
        if (affine) {
            w.then(random_affine(n, rng, opts));
            continue;
        }
        const unsigned top = std::min(opts.max_degree, budget);
        const auto d = static_cast<unsigned>(rng.index(2, top));
        w.then(random_shear(n, d, rng, opts));
        budget /= d;
    }
    return w;
}

AutomorphismWord random_nonaffine_word(std::size_t n, Rng& rng, const CorpusOptions& opts) {
    if (n < 2) throw std::invalid_argument("random_nonaffine_word: C^1 has no non-affine automorphisms");
    if (opts.max_degree < 2 || opts.degree_budget < 2)
        throw std::invalid_argument("random_nonaffine_word: degree bounds exclude nonlinear shears");
    while (true) {
        AutomorphismWord w = random_word(n, rng, opts);
        if (!is_purely_affine(w)) return w;
    }
}

AutomorphismWord random_affine_word(std::size_t n, Rng& rng, const CorpusOptions& opts) {
    AutomorphismWord w(n);
    const std::size_t length = rng.index(1, 3);
    for (std::size_t g = 0; g < length; ++g) w.then(random_affine(n, rng, opts));
    return w;
}

CVector random_point(std::size_t n, Rng& rng, double radius) {
    CVector z(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.in_disk(radius);
    return z;
}

CVector random_point_in_shell(std::size_t n, Rng& rng, double r_lo, double r_hi) {
    CVector z(static_cast<Eigen::Index>(n));
    do {
        for (Eigen::Index i = 0; i < z.size(); ++i) {
            const double u1 = std::max(rng.uniform(), 0x1.0p-53);
            z[i] = std::polar(std::sqrt(-2.0 * std::log(u1)), 2.0 * std::numbers::pi * rng.uniform());
        }
    } while (z.norm() == 0.0);
    return z * (rng.uniform(r_lo, r_hi) / z.norm());
}

}  // namespace autjet
