// autjet: fingerprints of tame polynomial automorphisms of C^n.
//
// Exit codes: 0 ok / equal / affine, 1 distinct / not affine / suite failure,
// 2 parse or usage error, 3 numeric singularity, 4 inconclusive comparison.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autjet/fingerprint.hpp"
#include "autjet/lang.hpp"
#include "autjet/report.hpp"
#include "autjet/verify.hpp"

namespace {

using namespace autjet;
using nlohmann::json;

enum Exit : int { kOk = 0, kNegative = 1, kParse = 2, kNumeric = 3, kInconclusive = 4 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string label;
    std::string text;
};

Source read_input(const std::string& arg) {
    if (arg.rfind("expr:", 0) == 0) return {arg, arg.substr(5)};
    std::ostringstream buf;
    if (arg == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(arg, std::ios::binary);
        if (!in) throw InputError("cannot read '" + arg + "'");
        buf << in.rdbuf();
    }
    return {arg, buf.str()};
}

void print_parse_error(const Source& src, const ParseError& e) {
    std::cerr << "error: " << src.label << ": " << to_string(e.kind()) << ": " << e.message() << "\n";
    // Single-line inputs get a caret marker under the offending span.
    if (src.text.find('\n') == std::string::npos || src.text.find('\n') == src.text.size() - 1) {
        std::string line = src.text.substr(0, src.text.find('\n'));
        const auto span = e.span();
        std::cerr << "  " << line << "\n  " << std::string(span.start, ' ')
                  << std::string(std::max<std::size_t>(span.end - span.start, 1), '^') << "\n";
    }
}

void emit(const json& report, OutputFormat format, const std::string& text) {
    if (format == OutputFormat::json) std::cout << report.dump(2) << "\n";
    else std::cout << text;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string fmt(const CVector& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_complex(v[i]);
    return out + ")";
}

std::string fmt(const CMatrix& m) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out += i ? "; " : "";
        for (Eigen::Index j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + format_complex(m(i, j));
    }
    return out + "]";
}

std::string describe(const Fingerprint& fp) {
    std::string out = "F(0)  = " + fmt(fp.jet.value_at_zero) + "\nDF(0) = " + fmt(fp.jet.derivative_at_zero) + "\n";
    for (const auto& s : fp.samples) out += "z = " + fmt(s.point) + "  L = " + fmt(s.levi.matrix()) + "\n";
    return out;
}

class App {
public:
    int run(int argc, char** argv) {
        CLI::App app{"Canonical fingerprints of tame polynomial automorphisms of C^n"};
        app.set_version_flag("--version", std::string(kToolVersion));
        app.require_subcommand(1);

        std::string output = "json";
        std::vector<std::string> extra;
        app.add_option("--n", cfg_.n, "Dimension of C^n")->capture_default_str();
        app.add_option("--seed", cfg_.seed, "Sampling and corpus seed")->capture_default_str();
        app.add_option("--radii", cfg_.radii, "Sphere radii of the sample set")->delimiter(',')->capture_default_str();
        app.add_option("--count", cfg_.count_per_radius, "Sample points per radius")->capture_default_str();
        app.add_option("--at", extra, "Extra sample point, e.g. \"1,0\" (repeatable)");
        app.add_option("--eps-eq", cfg_.eps_eq, "Equality threshold")->capture_default_str();
        app.add_option("--eps-distinct", cfg_.eps_distinct, "Distinctness threshold")->capture_default_str();
        app.add_option("--psd-tol", cfg_.psd_tol, "Eigenvalue tolerance for positivity")->capture_default_str();
        app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

        std::vector<std::string> inputs;
        std::string point;
        bool normalized = false;

        auto* parse = app.add_subcommand("parse", "Parse a word and print its canonical form");
        parse->add_option("input", inputs, "File, '-' for stdin, or expr:TEXT")->required()->expected(1);
        auto* eval = app.add_subcommand("evaluate", "Evaluate F and DF at a point");
        eval->add_option("input", inputs, "File, '-' for stdin, or expr:TEXT")->required()->expected(1);
        eval->add_option("--point", point, "Point, e.g. \"1, (2-i)\"")->required();
        auto* fp = app.add_subcommand("fingerprint", "Jet at 0 and sampled Levi matrices of the normalized map");
        fp->add_option("input", inputs, "File, '-' for stdin, or expr:TEXT")->required()->expected(1);
        auto* cmp = app.add_subcommand("compare", "Compare the fingerprints of two words");
        cmp->add_option("inputs", inputs, "Two inputs")->required()->expected(2);
        cmp->add_flag("--normalized", normalized, "Ignore the jets and compare normalized maps only");
        auto* aff = app.add_subcommand("is-affine", "Sampled affineness test");
        aff->add_option("input", inputs, "File, '-' for stdin, or expr:TEXT")->required()->expected(1);
        auto* inv = app.add_subcommand("invert", "Print the inverse word");
        inv->add_option("input", inputs, "File, '-' for stdin, or expr:TEXT")->required()->expected(1);
        auto* ver = app.add_subcommand("verify", "Run the built-in invariant suites");
        for (auto* sub : {parse, eval, fp, cmp, aff, inv, ver}) sub->fallthrough();

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? kOk : kParse;
        }

        try {
            cfg_.output = output == "text" ? OutputFormat::text : OutputFormat::json;
            for (const auto& p : extra) cfg_.extra_points.push_back(parse_point(p, cfg_.n));
            cfg_.validate();
        } catch (const ParseError& e) {
            print_parse_error({"--at", extra.empty() ? "" : extra.back()}, e);
            return kParse;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kParse;
        }

        Source current;
        try {
            std::vector<Source> sources;
            for (const auto& in : inputs) sources.push_back(read_input(in));
            std::vector<AutomorphismWord> words;
            for (const auto& s : sources) {
                current = s;
                words.push_back(parse_automorphism(s.text, cfg_.n));
            }
            for (const auto& s : sources) labels_.push_back(s.text);

            if (parse->parsed()) return cmd_parse(words[0]);
            if (eval->parsed()) {
                current = {"--point", point};
                return cmd_evaluate(words[0], parse_point(point, cfg_.n));
            }
            if (fp->parsed()) return cmd_fingerprint(words[0]);
            if (cmp->parsed()) return cmd_compare(words[0], words[1], normalized);
            if (aff->parsed()) return cmd_is_affine(words[0]);
            if (inv->parsed()) return cmd_invert(words[0]);
            return cmd_verify();
        } catch (const ParseError& e) {
            print_parse_error(current, e);
            return kParse;
        } catch (const InputError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kParse;
        } catch (const NumericError& e) {
            std::cerr << "numeric error: " << e.what() << "\n";
            return kNumeric;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kParse;
        }
    }

private:
    json report(const std::string& command, json result) const {
        return make_report(command, cfg_, labels_, std::move(result));
    }

    int cmd_parse(const AutomorphismWord& w) {
        json gens = json::array();
        for (const auto& g : w.generators()) gens.push_back(serialize(g));
        const std::string text = serialize(w);
        emit(report("parse", {{"canonical", text}, {"generators_in_application_order", gens}}), cfg_.output,
             text + "\n");
        return kOk;
    }

    int cmd_evaluate(const AutomorphismWord& w, const CVector& z) {
        const auto [value, jac] = evaluate_with_jacobian(w, z);
        emit(report("evaluate", {{"point", to_json(z)}, {"value", to_json(value)}, {"jacobian", to_json(jac)}}),
             cfg_.output, "F(z)  = " + fmt(value) + "\nDF(z) = " + fmt(jac) + "\n");
        return kOk;
    }

    int cmd_fingerprint(const AutomorphismWord& w) {
        const Fingerprint f = fingerprint(w, cfg_.sampling());
        emit(report("fingerprint", to_json(f)), cfg_.output, describe(f));
        return kOk;
    }

    int cmd_compare(const AutomorphismWord& a, const AutomorphismWord& b, bool normalized) {
        const Fingerprint fa = fingerprint(a, cfg_.sampling());
        const Fingerprint fb = fingerprint(b, cfg_.sampling());
        const ComparisonVerdict v =
            normalized ? compare_normalized(fa, fb, cfg_.thresholds()) : compare(fa, fb, cfg_.thresholds());
        json result = to_json(v);
        result["normalized"] = normalized;
        std::string text = std::string(to_string(v.outcome)) + "\njet distance " + fmt(v.jet_distance) +
                           ", max Levi distance " + fmt(v.max_levi_distance) + "\n";
        if (v.witness && v.witness->point) text += "witness z = " + fmt(*v.witness->point) + "\n";
        emit(report("compare", std::move(result)), cfg_.output, text);
        switch (v.outcome) {
            case Outcome::equal: return kOk;
            case Outcome::distinct: return kNegative;
            case Outcome::inconclusive: return kInconclusive;
        }
        return kInconclusive;
    }

    int cmd_is_affine(const AutomorphismWord& w) {
        const AffineVerdict v = affine_test(w, cfg_.sampling(), cfg_.eps_eq);
        std::string text = v.affine ? "affine\n" : "not affine\n";
        if (v.witness) text += "witness z = " + fmt(v.witness->point) + "  L = " + fmt(v.witness->levi.matrix()) + "\n";
        emit(report("is-affine", to_json(v)), cfg_.output, text);
        return v.affine ? kOk : kNegative;
    }

    int cmd_invert(const AutomorphismWord& w) {
        const std::string text = serialize(invert(w));
        emit(report("invert", {{"inverse", text}}), cfg_.output, text + "\n");
        return kOk;
    }

    int cmd_verify() {
        VerifyConfig vc;
        vc.n = cfg_.n;
        vc.seed = cfg_.seed;
        vc.sampling = cfg_.sampling();
        vc.thresholds = cfg_.thresholds();
        vc.psd_tol = cfg_.psd_tol;
        const auto results = run_verification(vc);

        bool all = true;
        json suites = json::array();
        std::string text;
        for (const auto& r : results) {
            all = all && r.passed;
            suites.push_back(to_json(r));
            text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checks) +
                    " checks, worst ratio " + fmt(r.worst_ratio) + ")\n";
            if (r.counterexample) text += "  counterexample: " + r.counterexample->word + " -- " + r.counterexample->detail + "\n";
        }
        emit(report("verify", {{"passed", all}, {"suites", suites}}), cfg_.output, text);
        return all ? kOk : kNegative;
    }

    RunConfig cfg_;
    std::vector<std::string> labels_;
};

}  // namespace

int main(int argc, char** argv) { return App{}.run(argc, argv); }
