/*
   Copyright 2026 The kraw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// kraw: reproduce the worked examples and run the verification sweeps.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kraw/experiments.hpp"
#include "kraw/kernels.hpp"
#include "kraw/krawtchouk.hpp"
#include "kraw/newton_polygon.hpp"
#include "kraw/sweep.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalFlags {
    bool json = false;
    bool csv = false;
    bool quiet = false;
};

fs::path output_dir() {
    const char* env = std::getenv("KRAW_OUTPUT_DIR");
    return env && *env ? fs::path(env) : fs::path("kraw-out");
}

fs::path resolve(const std::string& name) {
    const fs::path p(name);
    return p.is_absolute() || p.has_parent_path() ? p : output_dir() / p;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

int emit(const kraw::Report& report, const GlobalFlags& flags) {
    if (flags.json) {
        std::cout << report.to_json().dump(2) << '\n';
    } else if (flags.csv) {
        std::cout << "check,passed,detail\n";
        for (const auto& c : report.checks) std::cout << csv_escape(c.name) << ',' << (c.passed ? "true" : "false") << ',' << csv_escape(c.detail) << '\n';
    } else if (!flags.quiet) {
        std::cout << report.text();
    }
    return report.ok() ? 0 : 1;
}

unsigned parse_delta_mask(const std::string& s) {
    if (s == "0") return 1;
    if (s == "1") return 2;
    if (s == "both") return 3;
    throw CLI::ValidationError("--delta", "expected 0, 1 or both");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact experiments on binary Krawtchouk polynomials"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_flag("--json", flags.json, "Print the full report as JSON");
    app.add_flag("--csv", flags.csv, "Print checks (or sweep rows) as CSV");
    app.add_flag("--quiet", flags.quiet, "Only set the exit code");
    app.add_flag_callback("--scalar", [] { kraw::kernels::set_active_isa(kraw::kernels::Isa::Scalar); }, "Disable SIMD kernels");

    int exit_code = 0;

    // repro
    auto* repro = app.add_subcommand("repro", "Reproduce a worked example")->require_subcommand(1);
    auto* np_cmd = repro->add_subcommand("np-example", "2-adic valuation table and polygon of K_n^(n)");
    unsigned np_degree = 19;
    std::string svg_path;
    np_cmd->add_option("--degree", np_degree, "Degree n (default 19)")->check(CLI::Range(1U, 400U));
    np_cmd->add_option("--svg", svg_path, "Write the polygon figure to this SVG file");
    np_cmd->callback([&] {
        const kraw::Report report = kraw::repro_example_np(np_degree);
        if (!svg_path.empty()) {
            const kraw::RatPoly k = kraw::krawtchouk_poly({np_degree, kraw::Rational(static_cast<long>(np_degree))});
            const fs::path path = resolve(svg_path);
            kraw::write_file_atomically(path, kraw::polygon_svg(kraw::newton_polygon(k, 2), kraw::coefficient_valuations(k, 2)));
            if (!flags.quiet && !flags.json) std::cerr << "wrote " << path.string() << '\n';
        }
        exit_code = emit(report, flags);
    });
    repro->add_subcommand("k20", "Discriminant and Frobenius statistics of the degree-10 example")->callback([&] {
        exit_code = emit(kraw::repro_k20(), flags);
    });
    auto* cubics = repro->add_subcommand("cubics", "Depressed underlying cubics against their printed coefficients");
    unsigned cubic_samples = 10;
    std::uint64_t cubic_seed = 1;
    cubics->add_option("--samples", cubic_samples, "Random values of t (in addition to t = 0, 1)");
    cubics->add_option("--seed", cubic_seed);
    cubics->callback([&] { exit_code = emit(kraw::repro_depressed_cubics(cubic_samples, cubic_seed), flags); });

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification sweep")->require_subcommand(1);
    auto* theorem = verify->add_subcommand("theorem", "Degree-based polygons on the integer windows");
    unsigned n_max = 64;
    theorem->add_option("--n-max", n_max)->check(CLI::Range(1U, 512U));
    theorem->callback([&] { exit_code = emit(kraw::verify_theorem(n_max), flags); });
    auto* corollary = verify->add_subcommand("corollary", "Eisenstein at 2 for K_{2^k}^(t)");
    unsigned cor_k = 6;
    corollary->add_option("--k-max", cor_k)->check(CLI::Range(0U, 10U));
    corollary->callback([&] { exit_code = emit(kraw::verify_corollary(cor_k), flags); });
    auto* prop = verify->add_subcommand("prop-minus1", "Irreducibility of K_{2^k}^(-1)");
    unsigned prop_k = 6;
    prop->add_option("--k-max", prop_k)->check(CLI::Range(2U, 10U));
    prop->callback([&] { exit_code = emit(kraw::verify_prop_minus1(prop_k), flags); });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Galois evidence over a grid of rational specializations");
    kraw::SweepConfig config;
    std::string out_name = "sweep.csv";
    bool resume = false;
    sweep->add_option("--n-min", config.n_min, "Smallest underlying degree");
    sweep->add_option("--n-max", config.n_max, "Largest underlying degree");
    sweep->add_option("--num-bound", config.num_bound, "|a| <= bound");
    sweep->add_option("--den-bound", config.den_bound, "1 <= b <= bound");
    sweep->add_option("--delta", config.deltas, "Parity classes to include")->delimiter(',');
    sweep->add_option("--prime-bound", config.prime_bound, "Largest prime sampled");
    sweep->add_option("--sample-primes", config.sample_primes, "Random subset size per point (0 = all primes)");
    sweep->add_option("--seed", config.seed, "Seed for --sample-primes");
    sweep->add_option("--workers", config.workers, "Worker threads");
    sweep->add_option("--out", out_name, "CSV path (relative names go under $KRAW_OUTPUT_DIR)");
    sweep->add_flag("--resume", resume, "Keep rows already in --out");
    sweep->add_flag("--record-runtime", config.record_runtime, "Fill runtime_ms (makes output run-dependent)");
    sweep->callback([&] {
        const fs::path out = resolve(out_name);
        const kraw::SweepResult result = kraw::conjecture_sweep(config, out, resume);
        const nlohmann::json summary = result.summary(config);
        fs::path summary_path = out;
        summary_path.replace_extension(".summary.json");
        kraw::write_file_atomically(summary_path, summary.dump(2) + "\n");

        kraw::Report report("sweep");
        const std::size_t expected = kraw::sweep_grid(config).points.size();
        report.add("one row per grid point", result.records.size() == expected,
                   std::to_string(result.records.size()) + " rows, " + std::to_string(result.raw_count) + " raw grid points");
        const auto contradictions = result.contradictions();
        std::string first;
        if (!contradictions.empty()) {
            const auto* c = contradictions.front();
            first = "first: n=" + std::to_string(c->n) + " delta=" + std::to_string(c->delta) + " t=" + c->t.str();
        }
        report.add("no certified-irreducible specialization with square discriminant", contradictions.empty(),
                   std::to_string(contradictions.size()) + " witnesses" + (first.empty() ? "" : ", " + first));
        report.data = summary;
        report.data["csv"] = out.string();
        if (flags.csv) {
            std::cout << kraw::sweep_csv(result.records);
            exit_code = report.ok() ? 0 : 1;
        } else {
            exit_code = emit(report, flags);
        }
    });

    // hyper
    auto* hyper = app.add_subcommand("hyper", "Rational points of bounded height on the genus-2 curves");
    std::string delta_arg = "both";
    long height = 20;
    hyper->add_option("--delta", delta_arg, "0, 1 or both");
    hyper->add_option("--height", height, "max(|a|, b) bound")->check(CLI::Range(1L, 100000L));
    hyper->callback([&] { exit_code = emit(kraw::hyper_report(parse_delta_mask(delta_arg), height), flags); });

    // crosscheck
    auto* crosscheck = app.add_subcommand("crosscheck", "Consistency checks between printed formulas")->require_subcommand(1);
    auto* sextic = crosscheck->add_subcommand("sextic", "Sextic against the discriminant of the depressed cubic");
    std::string cross_delta = "both";
    unsigned cross_samples = 20;
    std::uint64_t cross_seed = 1;
    sextic->add_option("--delta", cross_delta, "0, 1 or both");
    sextic->add_option("--samples", cross_samples)->check(CLI::Range(1U, 100000U));
    sextic->add_option("--seed", cross_seed);
    sextic->callback([&] {
        const unsigned mask = parse_delta_mask(cross_delta);
        kraw::Report combined("crosscheck sextic");
        nlohmann::json parts = nlohmann::json::array();
        for (unsigned delta = 0; delta < 2; ++delta) {
            if (((mask >> delta) & 1U) == 0) continue;
            const kraw::Report r = kraw::crosscheck_sextic_vs_disc(delta, cross_samples, cross_seed);
            for (const auto& c : r.checks) combined.add("delta=" + std::to_string(delta) + " " + c.name, c.passed, c.detail);
            parts.push_back(r.data);
        }
        combined.data["runs"] = std::move(parts);
        exit_code = emit(combined, flags);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
