#include "autjet/fingerprint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace autjet {

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Generalized golden ratio: positive root of x^(d+1) = x + 1.
std::vector<double> kronecker_steps(std::size_t d) {
    double phi = 2.0;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / static_cast<double>(d + 1));
    std::vector<double> alpha(d);
    double p = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
        p /= phi;
        alpha[k] = p - std::floor(p);
    }
    return alpha;
}

bool same_points(const std::vector<CVector>& a, const std::vector<CVector>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].size() != b[i].size() || a[i] != b[i]) return false;
    return true;
}

void require_comparable(const Fingerprint& a, const Fingerprint& b) {
    if (a.dimension != b.dimension) throw ConfigError("fingerprints have different dimensions");
    if (!(a.sampling == b.sampling) || a.samples.size() != b.samples.size())
        throw ConfigError("fingerprints were sampled with different configurations");
}

struct LeviComparison {
    double max_distance = 0.0;
    std::size_t argmax = 0;
};

LeviComparison compare_samples(const Fingerprint& a, const Fingerprint& b) {
    LeviComparison out;
    for (std::size_t s = 0; s < a.samples.size(); ++s) {
        const double d = frobenius_distance(a.samples[s].levi, b.samples[s].levi);
        if (d > out.max_distance) {
            out.max_distance = d;
            out.argmax = s;
        }
    }
    return out;
}

ComparisonVerdict decide(const Fingerprint& a, const Fingerprint& b, const Thresholds& t, bool use_jets) {
    require_comparable(a, b);
    const double value_gap = (a.jet.value_at_zero - b.jet.value_at_zero).norm();
    const double derivative_gap = (a.jet.derivative_at_zero - b.jet.derivative_at_zero).norm();
    const LeviComparison levi = compare_samples(a, b);

    ComparisonVerdict v{};
    v.jet_equal = value_gap < t.eps_eq && derivative_gap < t.eps_eq;
    v.jet_distance = std::max(value_gap, derivative_gap);
    v.max_levi_distance = levi.max_distance;

    if (levi.max_distance > t.eps_distinct) {
        v.outcome = Outcome::distinct;
        v.witness = Witness{Witness::Kind::levi, a.samples[levi.argmax].point, levi.max_distance};
    } else if (use_jets && v.jet_distance > t.eps_distinct) {
        v.outcome = Outcome::distinct;
        v.witness = Witness{Witness::Kind::jet, std::nullopt, v.jet_distance};
    } else if ((!use_jets || v.jet_equal) && levi.max_distance < t.eps_eq) {
        v.outcome = Outcome::equal;
    } else {
        v.outcome = Outcome::inconclusive;
    }
    return v;
}

}  // namespace

bool operator==(const SamplingConfig& a, const SamplingConfig& b) {
    return a.seed == b.seed && a.radii == b.radii && a.count_per_radius == b.count_per_radius &&
           same_points(a.extra_points, b.extra_points);
}

std::vector<CVector> sample_points(std::size_t n, std::uint64_t seed, const std::vector<double>& radii,
                                   std::size_t count_per_radius) {
    if (n == 0) throw std::invalid_argument("sample_points: dimension must be positive");
    if (count_per_radius == 0) throw std::invalid_argument("sample_points: count must be at least 1");
    for (double r : radii)
        if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("sample_points: radii must be positive");

    const std::size_t d = 2 * n;
    const std::vector<double> alpha = kronecker_steps(d);
    std::mt19937_64 rng(seed);

    std::vector<CVector> points;
    points.reserve(radii.size() * count_per_radius);
    std::vector<double> u(d);
    for (double r : radii) {
        std::vector<double> shift(d);
        for (auto& s : shift) s = unit_uniform(rng);
        for (std::size_t j = 0; j < count_per_radius; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                const double x = shift[k] + static_cast<double>(j + 1) * alpha[k];
                u[k] = x - std::floor(x);
            }
            CVector p(static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < n; ++i) {
                const double u1 = std::max(u[2 * i], 0x1.0p-53);
                const double rho = std::sqrt(-2.0 * std::log(u1));
                const double angle = 2.0 * std::numbers::pi * u[2 * i + 1];
                p[static_cast<Eigen::Index>(i)] = std::polar(rho, angle);
            }
            points.push_back(p * (r / p.norm()));
        }
    }
    return points;
}

std::vector<CVector> sample_points(std::size_t n, const SamplingConfig& config) {
    auto points = sample_points(n, config.seed, config.radii, config.count_per_radius);
    for (const auto& p : config.extra_points) {
        require_dimension(n, static_cast<std::size_t>(p.size()), "extra sample point");
        if (p.norm() == 0.0) throw std::invalid_argument("sample points must be nonzero");
        points.push_back(p);
    }
    return points;
}

Fingerprint fingerprint(const AutomorphismWord& w, const SamplingConfig& config) {
    Fingerprint fp;
    fp.dimension = w.dimension();
    fp.jet = jet1(w);
    fp.sampling = config;
    const AutomorphismWord normalized = theta_normalize(w);
    for (auto& z : sample_points(w.dimension(), config)) {
        HermitianMatrix levi = levi_log_norm(normalized, z);
        fp.samples.push_back(LeviSample{std::move(z), std::move(levi)});
    }
    return fp;
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::equal: return "equal";
        case Outcome::distinct: return "distinct";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

ComparisonVerdict compare(const Fingerprint& a, const Fingerprint& b, const Thresholds& t) {
    return decide(a, b, t, true);
}

ComparisonVerdict compare_normalized(const Fingerprint& a, const Fingerprint& b, const Thresholds& t) {
    return decide(a, b, t, false);
}

AffineVerdict affine_test(const AutomorphismWord& w, const SamplingConfig& config, double tol) {
    const AutomorphismWord normalized = theta_normalize(w);
    AffineVerdict verdict{true, 0.0, std::nullopt};
    for (auto& z : sample_points(w.dimension(), config)) {
        HermitianMatrix levi = levi_log_norm(normalized, z);
        const double d = frobenius_distance(levi, levi_log_norm_identity(z));
        verdict.max_distance = std::max(verdict.max_distance, d);
        if (d >= tol && !verdict.witness) {
            verdict.affine = false;
            verdict.witness = LeviSample{std::move(z), std::move(levi)};
        }
    }
    return verdict;
}

}  // namespace autjet
