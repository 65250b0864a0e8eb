#pragma once

// JSON reports emitted by the command-line tool. The schema is documented in
// docs/report-schema.md. Complex numbers are [re, im] pairs; vectors are
// arrays of pairs; matrices are arrays of rows.

#include <string>
#include <vector>

#include <json.hpp>

#include "autjet/fingerprint.hpp"
#include "autjet/verify.hpp"

namespace autjet {

inline constexpr const char* kToolName = "autjet";
inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { json, text };

struct RunConfig {
    std::size_t n = 2;
    std::uint64_t seed = 0;
    std::vector<double> radii{0.5, 1.0, 2.0};
    std::size_t count_per_radius = 16;
    std::vector<CVector> extra_points;
    double eps_eq = 1e-8;
    double eps_distinct = 1e-4;
    double psd_tol = kDefaultPsdTolerance;
    OutputFormat output = OutputFormat::json;

    /// Throws ConfigError when n < 1, a threshold is not positive, a radius is
    /// not positive, the count is zero, or eps_eq >= eps_distinct.
    void validate() const;

    SamplingConfig sampling() const;
    Thresholds thresholds() const;
};

nlohmann::json to_json(Complex c);
nlohmann::json to_json(const CVector& v);
nlohmann::json to_json(const CMatrix& m);
nlohmann::json to_json(const RunConfig& c);
nlohmann::json to_json(const Jet1& jet);
nlohmann::json to_json(const Fingerprint& fp);
nlohmann::json to_json(const ComparisonVerdict& v);
nlohmann::json to_json(const AffineVerdict& v);
nlohmann::json to_json(const SuiteResult& r);

/// Envelope shared by every command.
nlohmann::json make_report(const std::string& command, const RunConfig& config, const std::vector<std::string>& inputs,
                           nlohmann::json result);

}  // namespace autjet
