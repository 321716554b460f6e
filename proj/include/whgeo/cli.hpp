// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "whgeo/arc.hpp"
#include "whgeo/errors.hpp"
#include "whgeo/holder_complex.hpp"
#include "whgeo/numeric.hpp"
#include "whgeo/parse.hpp"
#include "whgeo/suites.hpp"
#include "whgeo/surface.hpp"

namespace whgeo {
namespace cli {

using json = nlohmann::ordered_json;

struct RunReport {
    int exit_code = 0;
    std::string json_output;   // machine-readable, stdout
    std::string summary;       // human-readable, stderr
};

namespace detail {

inline json rational_json(const Rational& r) { return r.fraction_string(); }

inline json point_json(const Point& p) {
    json j = json::array();
    for (const auto& c : p) j.push_back(c.to_string());
    return j;
}

struct SurfaceInput {
    SurfaceGerm germ;
    std::vector<size_t> permutation;  // new position i holds original axis permutation[i]
};

// Weights follow the nonincreasing convention a1 >= a2 >= a3; unsorted input
// are permuted (stably) and the same permutation renames the polynomial's
// variables. The report echoes it.
inline SurfaceInput prepare_surface_input(const std::string& poly_text,
                                          const std::string& weights_text) {
    std::vector<long long> raw = parse_integer_list(weights_text);
    if (raw.size() != 3) raise(ErrorKind::Usage, "surface commands need exactly 3 weights");
    std::vector<size_t> perm = {0, 1, 2};
    std::stable_sort(perm.begin(), perm.end(),
                     [&](size_t a, size_t b) { return raw[a] > raw[b]; });
    std::vector<long long> sorted = {raw[perm[0]], raw[perm[1]], raw[perm[2]]};
    WeightVector w = validate_weights(sorted);
    WeightedPolynomial f = parse_polynomial(poly_text).permuted(perm);
    return SurfaceInput{SurfaceGerm::create(std::move(f), std::move(w)), perm};
}

inline json permutation_json(const std::vector<size_t>& perm) {
    json j = json::array();
    for (size_t p : perm) j.push_back(p + 1);
    return j;
}

inline json weights_json(const WeightVector& w) {
    json j = json::array();
    for (long long v : w.values()) j.push_back(v);
    return j;
}

inline json horn_json(const HornReport& r, const SurfaceInput& in) {
    json j;
    j["weights"] = weights_json(in.germ.w);
    j["permutation"] = permutation_json(in.permutation);
    j["weighted_degree"] = in.germ.degree;
    j["origin_slice_trivial"] = r.origin_slice_trivial;
    j["applicable"] = r.applicable;
    j["beta"] = r.beta ? json(r.beta->fraction_string()) : json(nullptr);
    if (r.origin_slice_trivial) {
        j["link_component_count"] = r.link_component_count;
        json comps = json::array();
        for (const auto& c : r.components) {
            json cj;
            cj["slice"] = c.slice_sign;
            cj["closed"] = c.closed;
            cj["points"] = c.point_count;
            cj["beta"] = c.beta ? json(c.beta->fraction_string()) : json(nullptr);
            cj["degenerate"] = c.degenerate;
            if (!c.note.empty()) cj["note"] = c.note;
            comps.push_back(std::move(cj));
        }
        j["components"] = std::move(comps);
        j["isolated_singularity_evidence"] = {
            {"min_gradient_norm", r.min_gradient_norm},
            {"threshold", 1e-6},
            {"passed", r.gradient_evidence},
            {"note", "numeric spot check on sampled link points; not a certification"}};
        j["max_residual"] = r.max_residual;
        j["box_used"] = r.box_used;
    } else {
        j["link_component_count"] = nullptr;
    }
    j["reasons"] = r.reasons;
    return j;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorKind::Usage, "cannot open output file " + path);
    out << content;
}

}  // namespace detail

// Front end used by both the binary and the tests. JSON goes to stdout (the
// returned json_output), a short human summary to stderr. Exit code 0 on
// success, 1 on domain errors or failing verification, 2 on usage errors.
inline RunReport run(std::vector<std::string> args) {
    CLI::App app{"bi-Lipschitz invariants of weighted homogeneous surface germs"};
    app.require_subcommand(1);

    std::string weights_text, x_text, y_text;
    std::string arc1_text, arc2_text, norm_text = "euclidean", csv_path;
    bool numeric = false;
    double t0 = 1e-2, ratio = 0.5;
    int count = 12;
    std::string poly_text, out_format = "json", output_path;
    int grid = 256;
    double box = 2.0;
    std::string suite_name;
    int trials = 0;
    uint64_t seed = 1;

    CLI::App* directions = app.add_subcommand("directions", "Newton simplex direction set");
    directions->add_option("--weights", weights_text, "comma separated weights")->required();

    CLI::App* contact_leaves =
        app.add_subcommand("contact-leaves", "exact contact order of two foliation leaves");
    contact_leaves->add_option("--weights", weights_text)->required();
    contact_leaves->add_option("--x", x_text, "seed of the first leaf")->required();
    contact_leaves->add_option("--y", y_text, "seed of the second leaf")->required();

    CLI::App* contact_arcs =
        app.add_subcommand("contact-arcs", "exact contact order of two Puiseux arcs");
    contact_arcs->add_option("--arc1", arc1_text)->required();
    contact_arcs->add_option("--arc2", arc2_text)->required();
    contact_arcs->add_flag("--numeric", numeric, "run the numerical estimator as well");
    contact_arcs->add_option("--norm", norm_text, "euclidean|max|l1");
    contact_arcs->add_option("--t0", t0);
    contact_arcs->add_option("--ratio", ratio);
    contact_arcs->add_option("--count", count);
    contact_arcs->add_option("--csv", csv_path, "write t,d samples to this file");

    CLI::App* check =
        app.add_subcommand("check-homogeneous", "verify weighted homogeneity, report the degree");
    check->add_option("--poly", poly_text)->required();
    check->add_option("--weights", weights_text)->required();

    CLI::App* horn = app.add_subcommand("horn", "horn exponent report of a surface germ");
    horn->add_option("--poly", poly_text)->required();
    horn->add_option("--weights", weights_text)->required();
    horn->add_option("--grid", grid, "marching squares resolution");
    horn->add_option("--box", box, "initial slice box half-width");

    CLI::App* complex_cmd =
        app.add_subcommand("complex", "canonical Hoelder complex of a surface germ");
    complex_cmd->add_option("--poly", poly_text)->required();
    complex_cmd->add_option("--weights", weights_text)->required();
    complex_cmd->add_option("--out", out_format, "dot|json");
    complex_cmd->add_option("--output", output_path, "write to file instead of stdout");
    complex_cmd->add_option("--grid", grid);
    complex_cmd->add_option("--box", box);

    CLI::App* verify = app.add_subcommand("verify", "randomized property suites");
    verify->add_option("--suite", suite_name, "simplex|ultrametric|norms|canonical")->required();
    verify->add_option("--trials", trials, "0 = suite default");
    verify->add_option("--seed", seed);

    RunReport report;
    json out;
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (*directions) {
            WeightVector w = validate_weights(parse_integer_list(weights_text));
            out["directions"] = json::array();
            for (const auto& d : simplex_directions(w))
                out["directions"].push_back(d.fraction_string());
            report.summary = std::to_string(out["directions"].size()) + " direction(s)";
        } else if (*contact_leaves) {
            WeightVector w = validate_weights(parse_integer_list(weights_text));
            Point x = parse_point(x_text), y = parse_point(y_text);
            if (x.size() != w.size() || y.size() != w.size())
                raise(ErrorKind::Usage, "points must match the weight count");
            Rational lam = leaf_contact_order(w, x, y).value;
            out["weights"] = detail::weights_json(w);
            out["x"] = detail::point_json(x);
            out["y"] = detail::point_json(y);
            out["order"] = lam.fraction_string();
            report.summary = "contact order " + lam.to_string();
        } else if (*contact_arcs) {
            PuiseuxArc a = parse_arc(arc1_text);
            PuiseuxArc b = parse_arc(arc2_text);
            Rational lam = symbolic_contact_order(a, b);
            out["arc1"] = arc1_text;
            out["arc2"] = arc2_text;
            out["symbolic"] = lam.fraction_string();
            report.summary = "contact order " + lam.to_string();
            if (numeric) {
                NormKind norm = norm_from_string(norm_text);
                SampleGrid g{t0, ratio, count};
                DistanceProfile prof =
                    numerical_contact_order(sampler_from_arc(a), sampler_from_arc(b), norm, g);
                out["numeric"] = {{"norm", norm_name(norm)},
                                  {"t0", g.t0},
                                  {"ratio", g.ratio},
                                  {"count", g.count},
                                  {"exponent", prof.exponent},
                                  {"r_squared", prof.r_squared},
                                  {"ok", prof.ok}};
                report.summary += ", numeric " + std::to_string(prof.exponent);
                if (!csv_path.empty()) {
                    std::string csv = "t,d\n";
                    for (const auto& [tk, dk] : prof.samples) {
                        char line[64];
                        std::snprintf(line, sizeof line, "%.17g,%.17g\n", tk, dk);
                        csv += line;
                    }
                    detail::write_file(csv_path, csv);
                    out["csv"] = csv_path;
                }
            }
        } else if (*check) {
            auto in = detail::prepare_surface_input(poly_text, weights_text);
            out["polynomial"] = in.germ.f.to_string();  // canonical form, re-parseable
            out["weighted_degree"] = in.germ.degree;
            out["weights"] = detail::weights_json(in.germ.w);
            out["permutation"] = detail::permutation_json(in.permutation);
            out["flow_invariance"] = flow_invariance_identity(in.germ);
            report.summary = "weighted homogeneous of degree " + std::to_string(in.germ.degree);
        } else if (*horn) {
            auto in = detail::prepare_surface_input(poly_text, weights_text);
            HornOptions opt;
            opt.grid = grid;
            opt.box = box;
            HornReport hr = horn_exponent(in.germ, opt);
            out = detail::horn_json(hr, in);
            report.summary =
                hr.beta ? "horn exponent " + hr.beta->to_string()
                        : "no uniform horn exponent (see components)";
        } else if (*complex_cmd) {
            if (out_format != "dot" && out_format != "json")
                raise(ErrorKind::Usage, "--out must be dot or json");
            auto in = detail::prepare_surface_input(poly_text, weights_text);
            HornOptions opt;
            opt.grid = grid;
            opt.box = box;
            HolderComplex c = complex_of_surface(in.germ, opt);
            std::string text = export_complex(c, out_format);
            report.summary = std::to_string(c.vertices().size()) + " vertices, " +
                             std::to_string(c.edges().size()) + " edges";
            if (!output_path.empty()) {
                detail::write_file(output_path, text);
                out["written"] = output_path;
                out["format"] = out_format;
                out["vertices"] = c.vertices().size();
                out["edges"] = c.edges().size();
            } else {
                report.json_output = text;  // the export itself is the payload
                report.exit_code = 0;
                return report;
            }
        } else if (*verify) {
            SuiteResult res = run_suite(suite_name, trials, seed);
            out["suite"] = res.suite;
            out["seed"] = res.seed;
            out["trials"] = res.trials;
            out["failures"] = res.failures;
            if (res.failures > 0) {
                out["first_counterexample"] = res.first_counterexample;
                report.exit_code = 1;
            }
            report.summary = res.suite + ": " + std::to_string(res.failures) + " failure(s) in " +
                             std::to_string(res.trials) + " trials";
        }
    } catch (const CLI::CallForHelp&) {
        out = {{"help", true}};
        report.summary = app.help();
        report.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        out = {{"error", {{"kind", "Usage"}, {"message", e.what()}}}};
        report.summary = std::string("usage error: ") + e.what();
        report.exit_code = 2;
    } catch (const Error& e) {
        bool usage = e.kind() == ErrorKind::Usage;
        out = {{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
        report.summary = e.what();
        report.exit_code = usage ? 2 : 1;
    }
    report.json_output = out.dump();
    return report;
}

}  // namespace cli
}  // namespace whgeo
