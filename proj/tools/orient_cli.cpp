// Replay harness: drives one engine over an update stream, answers queries,
// and emits per-update metrics (CSV) plus a run summary (JSON).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "orient/error.hpp"
#include "orient/harness.hpp"

using namespace orient;

int main(int argc, char** argv) {
    CLI::App app{"bounded out-degree orientation replay harness"};
    app.require_subcommand(1);

    // run: replay a stream file (or stdin with "-").
    std::string stream_path = "-";
    std::string engine_name = "basic", mode_name = "approx_Oalpha", audit_name = "off";
    double epsilon = 0.5;
    RunConfig cfg;
    auto* run = app.add_subcommand("run", "replay an update stream");
    run->add_option("stream", stream_path, "stream file, - for stdin");
    run->add_option("--engine", engine_name, "basic | worstcase | amortized");
    run->add_option("--mode", mode_name, "approx_Oalpha | additive_log | eps_density");
    run->add_option("--epsilon", epsilon, "accuracy for eps_density")->check(CLI::Range(1e-6, 1.0));
    run->add_option("--capacity", cfg.capacity, "vertex universe size")->check(CLI::PositiveNumber);
    run->add_option("--audit", audit_name, "off | invariants | full");
    run->add_option("--metrics", cfg.metrics_path, "per-update CSV output path");
    run->add_option("--summary", cfg.summary_path, "JSON summary output path");

    // gen: emit a deterministic workload stream.
    std::string kind_name = "random_gnm", out_path = "-";
    std::uint64_t seed = 1;
    int size = 100, gen_capacity = 16;
    auto* gen = app.add_subcommand("gen", "generate a workload stream");
    gen->add_option("--kind", kind_name,
                    "random_gnm | clique_flood | density_ramp | adversarial_hub");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--size", size, "number of edge operations")->check(CLI::NonNegativeNumber);
    gen->add_option("--capacity", gen_capacity, "vertex universe size")
        ->check(CLI::PositiveNumber);
    gen->add_option("--out", out_path, "output path, - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const std::string text =
                generate_workload(parse_workload_kind(kind_name), seed, size, gen_capacity);
            if (out_path == "-") {
                std::cout << text;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                f << text;
            }
            return 0;
        }

        cfg.engine = parse_engine_kind(engine_name);
        cfg.mode = parse_mode(mode_name);
        cfg.audit = parse_audit_level(audit_name);
        // Exact rational epsilon from the decimal flag (6 digits suffice).
        cfg.epsilon = Rational(static_cast<long long>(epsilon * 1000000 + 0.5), 1000000);

        std::ifstream file;
        std::istream* in = &std::cin;
        if (stream_path != "-") {
            file.open(stream_path);
            if (!file) {
                std::cerr << "cannot open stream file: " << stream_path << '\n';
                return 1;
            }
            in = &file;
        }
        const RunResult res = run_stream(*in, std::cout, cfg);
        if (res.exit_code != 0) {
            std::cerr << res.error << '\n';
            return res.exit_code;
        }
        std::cout << "summary updates=" << res.updates << " queries=" << res.queries << '\n';
        return 0;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
