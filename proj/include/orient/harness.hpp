#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "orient/engine.hpp"

namespace orient {

enum class AuditLevel { off, invariants, full };
enum class WorkloadKind { random_gnm, clique_flood, density_ramp, adversarial_hub };

// All parse_* helpers throw Error(parse) on unknown names.
AuditLevel parse_audit_level(const std::string& s);
WorkloadKind parse_workload_kind(const std::string& s);
EngineKind parse_engine_kind(const std::string& s);
Mode parse_mode(const std::string& s);

struct RunConfig {
    EngineKind engine = EngineKind::basic;
    Mode mode = Mode::approx_Oalpha;
    Rational epsilon{1, 2};
    int capacity = 16;
    AuditLevel audit = AuditLevel::off;
    std::string metrics_path;  // per-update CSV, empty = skip
    std::string summary_path;  // JSON summary, empty = skip
};

struct RunResult {
    int exit_code = 0;     // 0 ok, 1 usage/parse, 2 audit violation
    std::string error;     // human-readable failure, empty on success
    long long updates = 0;
    long long queries = 0;
};

// Replays a stream against a freshly built engine. Stream grammar, one op per
// line: "+ u v", "- u v", "? density", "? subgraph", "? match", "? color v",
// "? matvec i", "# comment", blank lines ignored. Query answers go to `out`.
// The application queries (match/color/matvec) need a b = 1 parameterisation
// (mode additive_log); the matvec view uses weight-1 entries and x = 1.
RunResult run_stream(std::istream& in, std::ostream& out, const RunConfig& cfg);

// Deterministic workload text for the grammar above. size counts edge ops.
std::string generate_workload(WorkloadKind kind, std::uint64_t seed, int size, int capacity);

}  // namespace orient
