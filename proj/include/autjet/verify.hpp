#pragma once

// Built-in invariant suites over seeded random corpora. Each suite checks one
// structural property of the library (group laws, the normalization
// retraction, positivity and rank of log-norm Levi matrices, agreement with
// the finite-difference oracle, fingerprint separation) and reports the worst
// observed error ratio together with a counterexample on failure.

#include <optional>
#include <string>
#include <vector>

#include "autjet/fingerprint.hpp"

namespace autjet {

struct VerifyConfig {
    std::size_t n = 2;
    std::uint64_t seed = 0;
    SamplingConfig sampling;
    Thresholds thresholds;
    double psd_tol = kDefaultPsdTolerance;
    std::size_t word_count = 20;
    std::size_t points_per_word = 100;
    std::size_t injectivity_corpus = 50;
};

struct Counterexample {
    std::string word;
    std::optional<std::string> other_word;
    std::optional<CVector> point;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    /// Largest observed error / allowed-error ratio; <= 1 on success.
    double worst_ratio = 0.0;
    std::optional<Counterexample> counterexample;
};

std::vector<SuiteResult> run_verification(const VerifyConfig& config);

}  // namespace autjet
