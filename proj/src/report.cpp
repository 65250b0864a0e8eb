#include "autjet/report.hpp"

#include "autjet/lang.hpp"

namespace autjet {

using nlohmann::json;

void RunConfig::validate() const {
    if (n < 1) throw ConfigError("--n must be at least 1");
    if (!(eps_eq > 0.0) || !(eps_distinct > 0.0) || !(psd_tol > 0.0))
        throw ConfigError("thresholds must be positive");
    if (!(eps_eq < eps_distinct)) throw ConfigError("--eps-eq must be smaller than --eps-distinct");
    if (count_per_radius < 1) throw ConfigError("--count must be at least 1");
    for (double r : radii)
        if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("radii must be positive");
    for (const auto& p : extra_points) {
        if (static_cast<std::size_t>(p.size()) != n) throw ConfigError("extra sample point has wrong dimension");
        if (p.norm() == 0.0) throw ConfigError("extra sample points must be nonzero");
    }
}

SamplingConfig RunConfig::sampling() const { return SamplingConfig{seed, radii, count_per_radius, extra_points}; }

Thresholds RunConfig::thresholds() const { return Thresholds{eps_eq, eps_distinct}; }

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const CVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
    return out;
}

json to_json(const CMatrix& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const RunConfig& c) {
    json extra = json::array();
    for (const auto& p : c.extra_points) extra.push_back(to_json(p));
    return json{{"n", c.n},
                {"seed", c.seed},
                {"radii", c.radii},
                {"count_per_radius", c.count_per_radius},
                {"extra_points", extra},
                {"eps_eq", c.eps_eq},
                {"eps_distinct", c.eps_distinct},
                {"psd_tol", c.psd_tol}};
}

json to_json(const Jet1& jet) {
    return json{{"value_at_zero", to_json(jet.value_at_zero)}, {"derivative_at_zero", to_json(jet.derivative_at_zero)}};
}

json to_json(const Fingerprint& fp) {
    json samples = json::array();
    for (const auto& s : fp.samples) {
        samples.push_back(json{{"point", to_json(s.point)},
                               {"levi", to_json(s.levi.matrix())},
                               {"min_eigenvalue", s.levi.min_eigenvalue()}});
    }
    json extra = json::array();
    for (const auto& p : fp.sampling.extra_points) extra.push_back(to_json(p));
    return json{{"dimension", fp.dimension},
                {"jet", to_json(fp.jet)},
                {"sampling",
                 {{"seed", fp.sampling.seed},
                  {"radii", fp.sampling.radii},
                  {"count_per_radius", fp.sampling.count_per_radius},
                  {"extra_points", extra}}},
                {"samples", samples}};
}

json to_json(const ComparisonVerdict& v) {
    json out{{"outcome", to_string(v.outcome)},
             {"jet_equal", v.jet_equal},
             {"jet_distance", v.jet_distance},
             {"max_levi_distance", v.max_levi_distance},
             {"witness", nullptr}};
    if (v.witness) {
        json w{{"kind", v.witness->kind == Witness::Kind::jet ? "jet" : "levi"}, {"distance", v.witness->distance}};
        w["point"] = v.witness->point ? to_json(*v.witness->point) : json(nullptr);
        out["witness"] = std::move(w);
    }
    return out;
}

json to_json(const AffineVerdict& v) {
    json out{{"affine", v.affine}, {"max_distance", v.max_distance}, {"witness", nullptr}};
    if (v.witness) {
        out["witness"] = json{{"point", to_json(v.witness->point)},
                              {"levi", to_json(v.witness->levi.matrix())},
                              {"identity_levi", to_json(levi_log_norm_identity(v.witness->point).matrix())}};
    }
    return out;
}

json to_json(const SuiteResult& r) {
    json out{{"name", r.name},
             {"passed", r.passed},
             {"checks", r.checks},
             {"worst_ratio", std::isfinite(r.worst_ratio) ? json(r.worst_ratio) : json("inf")},
             {"counterexample", nullptr}};
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        out["counterexample"] = json{{"word", c.word},
                                     {"other_word", c.other_word ? json(*c.other_word) : json(nullptr)},
                                     {"point", c.point ? to_json(*c.point) : json(nullptr)},
                                     {"detail", c.detail}};
    }
    return out;
}

json make_report(const std::string& command, const RunConfig& config, const std::vector<std::string>& inputs,
                 json result) {
    return json{{"tool", kToolName},
                {"version", kToolVersion},
                {"command", command},
                {"config", to_json(config)},
                {"inputs", inputs},
                {"result", std::move(result)}};
}

}  // namespace autjet
