#pragma once

// Seeded generators of random tame automorphisms and sample points, used by
// the verification suites and the tests. All draws go through Rng, whose
// conversions from raw 64-bit output are fixed here so corpora are identical
// across standard library implementations.

#include <cstdint>
#include <random>

#include "autjet/automorphism.hpp"

namespace autjet {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    std::size_t index(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(uniform() * static_cast<double>(hi - lo + 1));
    }
    /// Uniform in the closed disk |c| <= radius.
    Complex in_disk(double radius = 1.0);
    /// Modulus uniform in [lo, hi], uniform phase.
    Complex annulus(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

struct CorpusOptions {
    std::size_t max_length = 6;
    unsigned max_degree = 4;
    /// Upper bound on the product of shear degrees along a word, which bounds
    /// the degree of the expanded map.
    unsigned degree_budget = 8;
    /// Translations are drawn from the polydisk of this radius.
    double translation_radius = 0.5;
    /// Shear coefficient moduli are uniform in [coefficient_min, coefficient_max].
    double coefficient_min = 0.2;
    double coefficient_max = 0.5;
};

/// Diagonally dominant linear part with diagonal moduli in [0.6, 1.6], plus a
/// translation in the polydisk of radius opts.translation_radius.
Generator random_affine(std::size_t n, Rng& rng, const CorpusOptions& opts = {});

/// Shear of a random coordinate by 1-3 monomials of total degree 2..degree in
/// the other coordinates, one of them of degree exactly `degree`. For n = 1 the
/// only admissible shear is a translation, which is returned instead.
Generator random_shear(std::size_t n, unsigned degree, Rng& rng, const CorpusOptions& opts = {});

/// Word of 1..max_length generators, roughly 40% affine.
AutomorphismWord random_word(std::size_t n, Rng& rng, const CorpusOptions& opts = {});

/// Like random_word but with at least one shear of degree >= 2 (n >= 2).
AutomorphismWord random_nonaffine_word(std::size_t n, Rng& rng, const CorpusOptions& opts = {});

/// Word of 1..3 affine generators.
AutomorphismWord random_affine_word(std::size_t n, Rng& rng, const CorpusOptions& opts = {});

/// Point with coordinates uniform in the disk of the given radius.
CVector random_point(std::size_t n, Rng& rng, double radius = 1.0);

/// Point uniform in direction with norm uniform in [r_lo, r_hi].
CVector random_point_in_shell(std::size_t n, Rng& rng, double r_lo, double r_hi);

}  // namespace autjet
