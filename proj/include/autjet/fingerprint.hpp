#pragma once

// Sampled fingerprints of automorphisms: the 1-jet at the origin together with
// the Levi matrix field of log ||theta(F)|| on a deterministic set of nonzero
// points. Two automorphisms are equal iff both components agree everywhere, so
// comparing fingerprints can refute equality and, within the sampled set,
// support it.

#include <cstdint>
#include <optional>
#include <vector>

#include "autjet/automorphism.hpp"
#include "autjet/levi.hpp"

namespace autjet {

struct SamplingConfig {
    std::uint64_t seed = 0;
    std::vector<double> radii{0.5, 1.0, 2.0};
    std::size_t count_per_radius = 16;
    /// Additional explicit sample points, appended after the sphere points.
    std::vector<CVector> extra_points;

    friend bool operator==(const SamplingConfig& a, const SamplingConfig& b);
};

struct Thresholds {
    double eps_eq = 1e-8;
    double eps_distinct = 1e-4;
};

/// count_per_radius points on each sphere ||z|| = r in C^n, seed-reproducible.
/// Directions come from a randomly shifted Kronecker sequence in [0,1)^{2n}
/// pushed through Box-Muller and normalized. Throws std::invalid_argument for
/// non-positive radii or a zero count.
std::vector<CVector> sample_points(std::size_t n, std::uint64_t seed, const std::vector<double>& radii,
                                   std::size_t count_per_radius);

/// Sphere points followed by config.extra_points.
std::vector<CVector> sample_points(std::size_t n, const SamplingConfig& config);

struct Fingerprint {
    std::size_t dimension = 0;
    Jet1 jet;
    std::vector<LeviSample> samples;
    SamplingConfig sampling;
};

/// jet1(w) plus levi_log_norm(theta_normalize(w), z) over the sample points.
Fingerprint fingerprint(const AutomorphismWord& w, const SamplingConfig& config);

enum class Outcome { equal, distinct, inconclusive };

const char* to_string(Outcome o);

struct Witness {
    enum class Kind { jet, levi };
    Kind kind;
    /// Sample point for Kind::levi.
    std::optional<CVector> point;
    double distance;
};

struct ComparisonVerdict {
    Outcome outcome;
    bool jet_equal;
    double jet_distance;
    /// Largest Frobenius distance between corresponding Levi samples.
    double max_levi_distance;
    std::optional<Witness> witness;
};

/// Full comparison: 1-jets and Levi samples. Throws ConfigError unless both
/// fingerprints share dimension and sampling configuration.
///
/// distinct     : jet distance or some sample distance exceeds eps_distinct
/// equal        : jets and every sample within eps_eq
/// inconclusive : otherwise
ComparisonVerdict compare(const Fingerprint& a, const Fingerprint& b, const Thresholds& t = {});

/// Compares only the Levi components, i.e. the fingerprints of theta(F) and
/// theta(G). jet_equal is still reported.
ComparisonVerdict compare_normalized(const Fingerprint& a, const Fingerprint& b, const Thresholds& t = {});

struct AffineVerdict {
    bool affine;
    double max_distance;
    /// First sample where the Levi matrix departs from that of log ||z||.
    std::optional<LeviSample> witness;
};

/// Sampled affineness test: log(||theta(F)(z)|| / ||z||) is pluriharmonic iff
/// the Levi matrix of log ||theta(F)|| matches that of log ||z|| at every sample.
AffineVerdict affine_test(const AutomorphismWord& w, const SamplingConfig& config, double tol);

inline bool is_affine(const AutomorphismWord& w, const SamplingConfig& config, double tol) {
    return affine_test(w, config, tol).affine;
}

}  // namespace autjet
