#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "orient/error.hpp"
#include "orient/harness.hpp"

using namespace orient;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

RunResult run_text(const std::string& text, const RunConfig& cfg, std::string* answers = nullptr) {
    std::istringstream in(text);
    std::ostringstream out;
    const RunResult res = run_stream(in, out, cfg);
    if (answers) *answers = out.str();
    return res;
}

}  // namespace

TEST_CASE("insert then delete leaves an empty graph") {
    RunConfig cfg;
    cfg.audit = AuditLevel::full;
    const RunResult res = run_text("+ 0 1\n- 0 1\n", cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.updates == 2);
    CHECK(res.queries == 0);
}

TEST_CASE("parse errors name the line") {
    RunConfig cfg;
    SUBCASE("bad op") {
        const RunResult res = run_text("% 0 1\n", cfg);
        CHECK(res.exit_code == 1);
        CHECK(res.error.find("line 1") != std::string::npos);
    }
    SUBCASE("bad query verb on a later line") {
        const RunResult res = run_text("+ 0 1\n? nonsense\n", cfg);
        CHECK(res.exit_code == 1);
        CHECK(res.error.find("line 2") != std::string::npos);
    }
    SUBCASE("duplicate edge carries line context") {
        const RunResult res = run_text("+ 0 1\n+ 1 0\n", cfg);
        CHECK(res.exit_code == 1);
        CHECK(res.error.find("line 2") != std::string::npos);
    }
    SUBCASE("missing edge") {
        const RunResult res = run_text("- 3 4\n", cfg);
        CHECK(res.exit_code == 1);
    }
    SUBCASE("capacity violation") {
        const RunResult res = run_text("+ 0 99\n", cfg);
        CHECK(res.exit_code == 1);
        CHECK(res.error.find("line 1") != std::string::npos);
    }
    SUBCASE("application query outside b=1 mode") {
        cfg.mode = Mode::approx_Oalpha;
        const RunResult res = run_text("+ 0 1\n? match\n", cfg);
        CHECK(res.exit_code == 1);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    RunConfig cfg;
    const RunResult res = run_text("# header\n\n+ 0 1\n# trailing\n", cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.updates == 1);
}

TEST_CASE("density query on a K4 stream") {
    RunConfig cfg;
    cfg.mode = Mode::eps_density;
    cfg.epsilon = Rational(1, 2);
    cfg.capacity = 16;
    cfg.audit = AuditLevel::full;
    std::string answers;
    const RunResult res = run_text(
        "+ 0 1\n+ 0 2\n+ 0 3\n+ 1 2\n+ 1 3\n+ 2 3\n? density\n? subgraph\n", cfg, &answers);
    CHECK(res.exit_code == 0);
    CHECK(res.queries == 2);
    CHECK(answers.find("density ") == 0);
    CHECK(answers.find("subgraph k=") != std::string::npos);
}

TEST_CASE("application queries in additive_log mode") {
    RunConfig cfg;
    cfg.mode = Mode::additive_log;
    cfg.capacity = 8;
    cfg.audit = AuditLevel::full;
    std::string answers;
    const RunResult res =
        run_text("+ 0 1\n+ 1 2\n? match\n? color 1\n? matvec 1\n", cfg, &answers);
    CHECK(res.exit_code == 0);
    CHECK(answers.find("match size=1") != std::string::npos);
    CHECK(answers.find("color 1 = ") != std::string::npos);
    // Weight-1 matrix, x = 1: (Ax)_1 = degree(1) = 2.
    CHECK(answers.find("matvec 1 = 2/1") != std::string::npos);
}

TEST_CASE("metrics CSV and JSON summary are deterministic") {
    RunConfig cfg;
    cfg.mode = Mode::eps_density;
    cfg.capacity = 12;
    cfg.audit = AuditLevel::invariants;
    const std::string stream = generate_workload(WorkloadKind::random_gnm, 42, 60, 12);

    std::string csv[2], json[2];
    for (int i = 0; i < 2; ++i) {
        cfg.metrics_path = "harness_metrics_" + std::to_string(i) + ".csv";
        cfg.summary_path = "harness_summary_" + std::to_string(i) + ".json";
        std::string answers;
        const RunResult res = run_text(stream, cfg, &answers);
        CHECK(res.exit_code == 0);
        csv[i] = slurp(cfg.metrics_path);
        json[i] = slurp(cfg.summary_path);
    }
    CHECK(csv[0] == csv[1]);
    CHECK(json[0] == json[1]);
    CHECK(csv[0].find("update,op,chain_length,arcs_touched,bucket_moves,delta,density,recourse") ==
          0);
    CHECK(json[0].find("\"schema\": 1") != std::string::npos);
    // 8 columns in every row.
    std::istringstream rows(csv[0]);
    std::string row;
    while (std::getline(rows, row))
        CHECK(std::count(row.begin(), row.end(), ',') == 7);
}

TEST_CASE("empty run produces a header-only CSV") {
    RunConfig cfg;
    cfg.metrics_path = "harness_empty.csv";
    const RunResult res = run_text("", cfg);
    CHECK(res.exit_code == 0);
    CHECK(slurp(cfg.metrics_path) ==
          "update,op,chain_length,arcs_touched,bucket_moves,delta,density,recourse\n");
}

TEST_CASE("workload generator") {
    CHECK(generate_workload(WorkloadKind::random_gnm, 7, 0, 8).empty());
    CHECK(generate_workload(WorkloadKind::clique_flood, 7, 0, 8).empty());
    CHECK(generate_workload(WorkloadKind::random_gnm, 7, 50, 8) ==
          generate_workload(WorkloadKind::random_gnm, 7, 50, 8));
    CHECK(generate_workload(WorkloadKind::random_gnm, 7, 50, 8) !=
          generate_workload(WorkloadKind::random_gnm, 8, 50, 8));

    // Every generated kind passes a full-audit run on every engine.
    for (WorkloadKind kind : {WorkloadKind::random_gnm, WorkloadKind::clique_flood,
                              WorkloadKind::density_ramp, WorkloadKind::adversarial_hub}) {
        const std::string stream = generate_workload(kind, 11, 40, 10);
        for (EngineKind e : {EngineKind::basic, EngineKind::worstcase, EngineKind::amortized}) {
            RunConfig cfg;
            cfg.engine = e;
            cfg.mode = Mode::eps_density;
            cfg.capacity = 10;
            cfg.audit = AuditLevel::full;
            const RunResult res = run_text(stream, cfg);
            INFO("kind ", static_cast<int>(kind), " engine ", to_string(e));
            CHECK(res.exit_code == 0);
        }
    }
}

TEST_CASE("unknown names are rejected by the flag parsers") {
    CHECK_THROWS_AS(parse_audit_level("loud"), Error);
    CHECK_THROWS_AS(parse_workload_kind("chaos"), Error);
    CHECK_THROWS_AS(parse_engine_kind("quantum"), Error);
    CHECK_THROWS_AS(parse_mode("banana"), Error);
    CHECK(parse_audit_level("full") == AuditLevel::full);
    CHECK(parse_engine_kind("amortized") == EngineKind::amortized);
}
