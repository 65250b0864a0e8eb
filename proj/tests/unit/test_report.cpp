#include <doctest.h>

#include "autjet/lang.hpp"
#include "autjet/report.hpp"
#include "helpers.hpp"

using namespace autjet;
using namespace autjet::testing;

TEST_CASE("RunConfig validation") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    c.n = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.eps_eq = 1e-3;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.psd_tol = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.radii = {1.0, 0.0};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.extra_points = {vec({1, 0, 0})};
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("fingerprint JSON layout") {
    RunConfig cfg;
    cfg.count_per_radius = 2;
    cfg.extra_points = {vec({1, 0})};
    const Fingerprint fp = fingerprint(parse_automorphism("shear(2, z1^2)", 2), cfg.sampling());
    const nlohmann::json j = make_report("fingerprint", cfg, {"shear(2, z1^2)"}, to_json(fp));

    CHECK(j["tool"] == "autjet");
    CHECK(j["command"] == "fingerprint");
    CHECK(j["config"]["n"] == 2);
    CHECK(j["inputs"][0] == "shear(2, z1^2)");
    const auto& result = j["result"];
    CHECK(result["dimension"] == 2);
    CHECK(result["jet"]["derivative_at_zero"][1][1][0] == 1.0);
    CHECK(result["samples"].size() == 7);
    const auto& last = result["samples"][6];
    CHECK(last["point"][0][0] == 1.0);
    CHECK(last["levi"][0][1][0] == 0.125);
    CHECK(last["levi"][0][1][1] == 0.0);
}

TEST_CASE("doubles survive a JSON round trip exactly") {
    const Complex c(0.1, -1.0 / 3.0);
    const nlohmann::json j = nlohmann::json::parse(to_json(c).dump());
    CHECK(j[0].get<double>() == c.real());
    CHECK(j[1].get<double>() == c.imag());
}

TEST_CASE("verdict JSON carries the witness") {
    ComparisonVerdict v{Outcome::distinct, true, 0.0, 0.3, Witness{Witness::Kind::levi, vec({1, 0}), 0.3}};
    const nlohmann::json j = to_json(v);
    CHECK(j["outcome"] == "distinct");
    CHECK(j["witness"]["kind"] == "levi");
    CHECK(j["witness"]["point"][0][0] == 1.0);

    ComparisonVerdict eq{Outcome::equal, true, 0.0, 0.0, std::nullopt};
    CHECK(to_json(eq)["witness"].is_null());
}

TEST_CASE("verification suites pass and are reproducible") {
    VerifyConfig cfg;
    cfg.word_count = 6;
    cfg.points_per_word = 10;
    cfg.injectivity_corpus = 12;
    for (std::size_t n : {1u, 2u, 3u}) {
        cfg.n = n;
        const auto a = run_verification(cfg);
        const auto b = run_verification(cfg);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CAPTURE(n);
            CAPTURE(a[i].name);
            CHECK(a[i].passed);
            CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
        }
    }
}
