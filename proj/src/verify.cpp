#include "autjet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "autjet/corpus.hpp"
#include "autjet/lang.hpp"

namespace autjet {

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    /// Records one check with error `err` against allowance `allowed`.
    void measure(double err, double allowed, const std::function<Counterexample()>& why) {
        const double ratio = std::isfinite(err) ? err / allowed : INFINITY;
        ++result_.checks;
        result_.worst_ratio = std::max(result_.worst_ratio, ratio);
        if (!(ratio <= 1.0)) fail(why);
    }

    void expect(bool ok, const std::function<Counterexample()>& why) {
        ++result_.checks;
        if (!ok) {
            result_.worst_ratio = INFINITY;
            fail(why);
        }
    }

    SuiteResult finish() { return std::move(result_); }

private:
    void fail(const std::function<Counterexample()>& why) {
        if (result_.passed) result_.counterexample = why();
        result_.passed = false;
    }

    SuiteResult result_;
};

double rel_err(const CVector& a, const CVector& b) { return (a - b).norm() / (1.0 + b.norm()); }

double max_abs_entry(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

Counterexample at(const AutomorphismWord& w, const CVector& z, std::string detail) {
    return Counterexample{serialize(w), std::nullopt, z, std::move(detail)};
}

Counterexample of(const AutomorphismWord& w, std::string detail) {
    return Counterexample{serialize(w), std::nullopt, std::nullopt, std::move(detail)};
}

struct Context {
    const VerifyConfig& cfg;
    std::vector<AutomorphismWord> words;
    std::vector<CVector> samples;
};

SuiteResult group_axioms(const Context& ctx, Rng& rng) {
    Suite suite("group-axioms");
    const std::size_t n = ctx.cfg.n;
    const AutomorphismWord identity(n);
    for (std::size_t i = 0; i < ctx.words.size(); ++i) {
        const auto& w = ctx.words[i];
        const auto& u = ctx.words[(i + 1) % ctx.words.size()];
        const auto& v = ctx.words[(i + 2) % ctx.words.size()];
        const AutomorphismWord inv = invert(w);
        const AutomorphismWord left = compose(compose(w, u), v);
        const AutomorphismWord right = compose(w, compose(u, v));
        for (std::size_t p = 0; p < ctx.cfg.points_per_word; ++p) {
            const CVector z = random_point(n, rng);
            suite.measure(rel_err(evaluate(inv, evaluate(w, z)), z), 1e-9, [&] { return at(w, z, "inverse round trip"); });
            suite.measure(rel_err(evaluate(compose(w, inv), z), z), 1e-9, [&] { return at(w, z, "W o W^-1 != id"); });
            suite.measure(rel_err(evaluate(compose(w, identity), z), evaluate(w, z)), 1e-9,
                          [&] { return at(w, z, "right identity"); });
            suite.measure(rel_err(evaluate(compose(identity, w), z), evaluate(w, z)), 1e-9,
                          [&] { return at(w, z, "left identity"); });
            const CVector direct = evaluate(w, evaluate(u, evaluate(v, z)));
            suite.measure(std::max(rel_err(evaluate(left, z), direct), rel_err(evaluate(right, z), direct)), 1e-9,
                          [&] { return at(w, z, "associativity with the next two corpus words"); });
        }
    }
    return suite.finish();
}

SuiteResult chain_rule(const Context& ctx) {
    Suite suite("jet-chain-rule");
    const CVector zero = CVector::Zero(static_cast<Eigen::Index>(ctx.cfg.n));
    for (std::size_t i = 0; i < ctx.words.size(); ++i) {
        const auto& outer = ctx.words[i];
        const auto& inner = ctx.words[(i + 1) % ctx.words.size()];
        const CMatrix expected = jacobian(outer, evaluate(inner, zero)) * jacobian(inner, zero);
        const CMatrix got = jet1(compose(outer, inner)).derivative_at_zero;
        suite.measure((got - expected).norm() / (1.0 + expected.norm()), 1e-9,
                      [&] { return Counterexample{serialize(outer), serialize(inner), std::nullopt, "D(F o G)(0)"}; });
    }
    return suite.finish();
}

SuiteResult retraction(const Context& ctx, Rng& rng) {
    Suite suite("retraction");
    const std::size_t n = ctx.cfg.n;
    const auto k = static_cast<Eigen::Index>(n);
    for (const auto& w : ctx.words) {
        const AutomorphismWord once = theta_normalize(w);
        const AutomorphismWord twice = theta_normalize(once);
        const Jet1 jet = jet1(once);
        suite.measure(std::max(jet.value_at_zero.norm(), (jet.derivative_at_zero - CMatrix::Identity(k, k)).norm()),
                      1e-12, [&] { return of(w, "normalized jet differs from (0, I)"); });
        for (std::size_t p = 0; p < ctx.cfg.points_per_word; ++p) {
            const CVector z = random_point(n, rng);
            suite.measure(rel_err(evaluate(twice, z), evaluate(once, z)), 1e-9,
                          [&] { return at(w, z, "theta(theta(W)) != theta(W)"); });
        }
    }
    return suite.finish();
}

SuiteResult coset(const Context& ctx, Rng& rng) {
    Suite suite("coset-invariance");
    const std::size_t n = ctx.cfg.n;
    for (const auto& w : ctx.words) {
        const AutomorphismWord h = random_affine_word(n, rng);
        const AutomorphismWord a = theta_normalize(compose(h, w));
        const AutomorphismWord b = theta_normalize(w);
        for (std::size_t p = 0; p < ctx.cfg.points_per_word; ++p) {
            const CVector z = random_point(n, rng);
            suite.measure(rel_err(evaluate(a, z), evaluate(b, z)), 1e-9,
                          [&] { return Counterexample{serialize(w), serialize(h), z, "theta(H o W) != theta(W)"}; });
        }
        for (const auto& z : ctx.samples) {
            suite.measure(frobenius_distance(levi_log_norm(a, z), levi_log_norm(b, z)), 1e-8,
                          [&] { return Counterexample{serialize(w), serialize(h), z, "Levi of theta(H o W)"}; });
        }
    }
    return suite.finish();
}

SuiteResult positivity(const Context& ctx) {
    Suite suite("levi-hermitian-psd");
    for (const auto& w : ctx.words) {
        const AutomorphismWord normalized = theta_normalize(w);
        for (const auto& z : ctx.samples) {
            const HermitianMatrix levi = levi_log_norm(normalized, z);
            suite.measure(max_abs_entry(levi.matrix() - levi.matrix().adjoint()), 1e-12,
                          [&] { return at(w, z, "Levi matrix not Hermitian"); });
            suite.measure(std::max(0.0, -levi.min_eigenvalue()), ctx.cfg.psd_tol,
                          [&] { return at(w, z, "negative Levi eigenvalue"); });
        }
    }
    return suite.finish();
}

SuiteResult kernel(const Context& ctx) {
    Suite suite("kernel-rank");
    for (const auto& w : ctx.words) {
        const AutomorphismWord normalized = theta_normalize(w);
        for (const auto& z : ctx.samples) {
            suite.measure(kernel_residual(normalized, z), 1e-8, [&] { return at(w, z, "kernel residual"); });
            suite.expect(numerical_rank(levi_log_norm(normalized, z)) + 1 <= ctx.cfg.n,
                         [&] { return at(w, z, "Levi matrix has full rank"); });
        }
    }
    return suite.finish();
}

SuiteResult oracle(const Context& ctx) {
    Suite suite("oracle-agreement");
    for (const auto& w : ctx.words) {
        const AutomorphismWord normalized = theta_normalize(w);
        const RealSampler g = log_norm_sampler(normalized);
        for (const auto& z : ctx.samples) {
            const HermitianMatrix closed = levi_log_norm(normalized, z);
            const HermitianMatrix fd = wirtinger_levi_fd(g, z);
            const double allowed = std::max(1e-5, 1e-4 * closed.frobenius_norm());
            suite.measure(max_abs_entry(closed.matrix() - fd.matrix()), allowed,
                          [&] { return at(w, z, "closed form vs finite differences"); });
        }
    }
    return suite.finish();
}

SuiteResult affine_criterion(const Context& ctx, Rng& rng) {
    Suite suite("affine-criterion");
    const std::size_t n = ctx.cfg.n;
    const double tol = ctx.cfg.thresholds.eps_eq;
    for (std::size_t i = 0; i < ctx.cfg.word_count; ++i) {
        const AutomorphismWord w = random_affine_word(n, rng);
        const AffineVerdict v = affine_test(w, ctx.cfg.sampling, tol);
        suite.expect(v.affine, [&] { return of(w, "affine word rejected"); });
    }
    if (n >= 2) {
        for (const auto& w : ctx.words) {
            if (is_purely_affine(w)) continue;
            const AffineVerdict v = affine_test(w, ctx.cfg.sampling, tol);
            suite.expect(!v.affine && v.witness.has_value(), [&] { return of(w, "non-affine word accepted"); });
        }
    }
    return suite.finish();
}

SuiteResult round_trip(const Context& ctx, Rng& rng) {
    Suite suite("parse-serialize-round-trip");
    const std::size_t n = ctx.cfg.n;
    for (const auto& w : ctx.words) {
        const std::string text = serialize(w);
        const AutomorphismWord back = parse_automorphism(text, n);
        suite.expect(serialize(back) == text, [&] { return of(w, "serialization is not a fixed point"); });
        for (std::size_t p = 0; p < ctx.cfg.points_per_word; ++p) {
            const CVector z = random_point(n, rng);
            suite.measure(rel_err(evaluate(back, z), evaluate(w, z)), 1e-12,
                          [&] { return at(w, z, "parsed word evaluates differently"); });
        }
    }
    return suite.finish();
}

SuiteResult injectivity(const Context& ctx, Rng& rng) {
    Suite suite("injectivity");
    const std::size_t n = ctx.cfg.n;
    std::vector<AutomorphismWord> corpus;
    std::vector<CVector> probes;
    for (int p = 0; p < 4; ++p) probes.push_back(random_point(n, rng));

    // Normalized words, pairwise distinct at some probe point.
    std::size_t attempts = 0;
    while (corpus.size() < ctx.cfg.injectivity_corpus && attempts++ < 20 * ctx.cfg.injectivity_corpus) {
        AutomorphismWord w = theta_normalize(random_nonaffine_word(n, rng));
        const bool fresh = std::none_of(corpus.begin(), corpus.end(), [&](const AutomorphismWord& other) {
            return std::all_of(probes.begin(), probes.end(),
                               [&](const CVector& z) { return rel_err(evaluate(w, z), evaluate(other, z)) < 1e-6; });
        });
        if (fresh) corpus.push_back(std::move(w));
    }
    suite.expect(corpus.size() == ctx.cfg.injectivity_corpus,
                 [&] { return Counterexample{"", std::nullopt, std::nullopt, "could not build a distinct corpus"}; });

    std::vector<Fingerprint> prints;
    for (const auto& w : corpus) prints.push_back(fingerprint(w, ctx.cfg.sampling));
    for (std::size_t i = 0; i < prints.size(); ++i) {
        for (std::size_t j = i + 1; j < prints.size(); ++j) {
            const ComparisonVerdict v = compare(prints[i], prints[j], ctx.cfg.thresholds);
            suite.expect(v.outcome == Outcome::distinct && v.witness.has_value(), [&] {
                return Counterexample{serialize(corpus[i]), serialize(corpus[j]), std::nullopt,
                                      std::string("distinct maps compared ") + to_string(v.outcome)};
            });
        }
    }
    return suite.finish();
}

SuiteResult dimension_one(const Context& ctx, Rng& rng) {
    Suite suite("n1-collapse");
    std::vector<AutomorphismWord> maps;
    for (std::size_t i = 0; i < ctx.cfg.word_count; ++i) maps.push_back(random_affine_word(1, rng));
    // Shears of C^1 are translations; include them too.
    for (const auto& w : ctx.words) maps.push_back(w);

    std::vector<Fingerprint> prints;
    for (const auto& w : maps) {
        Fingerprint fp = fingerprint(w, ctx.cfg.sampling);
        for (const auto& s : fp.samples) {
            suite.measure(std::abs(s.levi(0, 0)), 1e-9, [&] { return at(w, s.point, "nonzero Levi value in C^1"); });
        }
        prints.push_back(std::move(fp));
    }
    for (std::size_t i = 0; i < prints.size(); ++i) {
        suite.expect(compare(prints[i], prints[i], ctx.cfg.thresholds).outcome == Outcome::equal,
                     [&] { return of(maps[i], "fingerprint not equal to itself"); });
        for (std::size_t j = i + 1; j < prints.size(); ++j) {
            const ComparisonVerdict v = compare(prints[i], prints[j], ctx.cfg.thresholds);
            // Levi data carry nothing in C^1: the jets must decide alone.
            suite.expect(v.max_levi_distance < ctx.cfg.thresholds.eps_eq,
                         [&] { return Counterexample{serialize(maps[i]), serialize(maps[j]), std::nullopt,
                                                     "Levi components differ in C^1"}; });
            const bool jets_differ = v.jet_distance > ctx.cfg.thresholds.eps_distinct;
            const Outcome expected = jets_differ ? Outcome::distinct : Outcome::equal;
            if (jets_differ || v.jet_distance < ctx.cfg.thresholds.eps_eq) {
                suite.expect(v.outcome == expected, [&] {
                    return Counterexample{serialize(maps[i]), serialize(maps[j]), std::nullopt,
                                          std::string("jets decide, got ") + to_string(v.outcome)};
                });
            }
        }
    }
    return suite.finish();
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyConfig& config) {
    Rng rng(config.seed);
    Context ctx{config, {}, sample_points(config.n, config.sampling)};
    for (std::size_t i = 0; i < std::max<std::size_t>(config.word_count, 1); ++i)
        ctx.words.push_back(random_word(config.n, rng));

    std::vector<SuiteResult> results;
    results.push_back(group_axioms(ctx, rng));
    results.push_back(chain_rule(ctx));
    results.push_back(retraction(ctx, rng));
    results.push_back(coset(ctx, rng));
    results.push_back(positivity(ctx));
    if (config.n >= 2) results.push_back(kernel(ctx));
    results.push_back(oracle(ctx));
    results.push_back(affine_criterion(ctx, rng));
    results.push_back(round_trip(ctx, rng));
    if (config.n >= 2) results.push_back(injectivity(ctx, rng));
    if (config.n == 1) results.push_back(dimension_one(ctx, rng));
    return results;
}

}  // namespace autjet
