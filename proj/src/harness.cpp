#include "orient/harness.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "orient/applications.hpp"
#include "orient/density.hpp"
#include "orient/engine_amortized.hpp"
#include "orient/engine_worstcase.hpp"
#include "orient/error.hpp"
#include "orient/oracles.hpp"

namespace orient {

AuditLevel parse_audit_level(const std::string& s) {
    if (s == "off") return AuditLevel::off;
    if (s == "invariants") return AuditLevel::invariants;
    if (s == "full") return AuditLevel::full;
    throw Error(Errc::parse, "unknown audit level: " + s);
}

WorkloadKind parse_workload_kind(const std::string& s) {
    if (s == "random_gnm") return WorkloadKind::random_gnm;
    if (s == "clique_flood") return WorkloadKind::clique_flood;
    if (s == "density_ramp") return WorkloadKind::density_ramp;
    if (s == "adversarial_hub") return WorkloadKind::adversarial_hub;
    throw Error(Errc::parse, "unknown workload kind: " + s);
}

EngineKind parse_engine_kind(const std::string& s) {
    if (s == "basic") return EngineKind::basic;
    if (s == "worstcase") return EngineKind::worstcase;
    if (s == "amortized") return EngineKind::amortized;
    throw Error(Errc::parse, "unknown engine: " + s);
}

Mode parse_mode(const std::string& s) {
    if (s == "approx_Oalpha") return Mode::approx_Oalpha;
    if (s == "additive_log") return Mode::additive_log;
    if (s == "eps_density") return Mode::eps_density;
    throw Error(Errc::parse, "unknown mode: " + s);
}

namespace {

struct Auditor {
    const RunConfig& cfg;
    const Parameters& p;

    // Returns an empty string when everything holds.
    std::string check(const Engine& engine, const DensityMonitor& monitor) const {
        if (cfg.audit == AuditLevel::off) return {};
        if (!check_invariant_theta_prime(engine.graph(), p).ok) return "invariant theta' violated";
        if (!check_invariant_theta(engine.graph(), p).ok) return "invariant theta violated";
        if (cfg.audit != AuditLevel::full) return {};

        if (!monitor.consistent()) return "density monitor out of sync";
        if (const auto* wc = dynamic_cast<const WorstCaseEngine*>(&engine))
            if (!wc->audit_perceived_ranks()) return "perceived-rank drift exceeds 1";
        if (const auto* am = dynamic_cast<const AmortizedEngine*>(&engine)) {
            if (!am->audit_tail_thresholds()) return "tail threshold inequality violated";
            if (!am->audit_head_thresholds()) return "head threshold inequality violated";
        }
        // Exact-density cross-checks only at oracle scale.
        std::set<Vertex> active;
        for (const auto& [u, v] : engine.edges()) {
            active.insert(u);
            active.insert(v);
        }
        if (active.size() <= 16) {
            const Rational rho = exact_density(engine.edges());
            if (rho > monitor.density_estimate()) return "density estimate below exact density";
            if (!verify_structural_bound(engine.graph(), p, 2 * p.theta).ok)
                return "structural density bound violated";
        }
        return {};
    }
};

std::string csv_header() {
    return "update,op,chain_length,arcs_touched,bucket_moves,delta,density,recourse\n";
}

void csv_row(std::ostream& os, long long update, char op, const UpdateMetrics& m,
             const DensityMonitor& monitor) {
    os << update << ',' << op << ',' << m.chain_length << ',' << m.arcs_touched << ','
       << m.bucket_moves << ',' << monitor.max_out_degree() << ','
       << to_string(monitor.density_estimate()) << ',' << m.recourse << '\n';
}

}  // namespace

RunResult run_stream(std::istream& in, std::ostream& out, const RunConfig& cfg) {
    RunResult res;
    Parameters p;
    try {
        p = derive_parameters(cfg.mode, cfg.capacity, cfg.epsilon);
    } catch (const Error& e) {
        res.exit_code = 1;
        res.error = e.what();
        return res;
    }
    auto engine = make_engine(cfg.engine, p);
    DensityMonitor monitor(*engine);
    const bool apps = p.b == 1;
    MatchingOverlay matching(cfg.capacity);
    ColoringOverlay coloring(cfg.capacity);
    ForestOverlay forest(cfg.capacity);
    // Weight-1 matrix over the same stream; x fixed to all ones.
    auto mv_engine = apps ? make_engine(cfg.engine, p) : nullptr;
    std::unique_ptr<MatVecOverlay> matvec;
    if (apps) {
        matvec = std::make_unique<MatVecOverlay>(*mv_engine);
        for (Vertex v = 0; v < cfg.capacity; ++v) matvec->set_x(v, Rational(1));
    }
    const Auditor auditor{cfg, p};

    std::ostringstream csv;
    csv << csv_header();
    long long max_chain = 0, max_recourse = 0, total_recourse = 0, max_delta = 0;
    long long total_chain = 0;

    std::string line;
    long long lineno = 0;
    auto fail = [&](int code, const std::string& msg) {
        res.exit_code = code;
        res.error = "line " + std::to_string(lineno) + ": " + msg;
        return res;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "#") continue;
        try {
            if (tok == "+" || tok == "-") {
                Vertex u, v;
                if (!(ls >> u >> v)) return fail(1, "expected two vertex ids");
                const FlipTrace tr =
                    tok == "+" ? engine->insert_edge(u, v) : engine->delete_edge(u, v);
                monitor.apply(tr);
                if (apps) {
                    matching.apply(tr);
                    coloring.apply(tr);
                    forest.apply(tr);
                    matvec->set_entry(u, v, tok == "+" ? Rational(1) : Rational(0));
                }
                ++res.updates;
                const UpdateMetrics& m = engine->last_metrics();
                csv_row(csv, res.updates, tok[0], m, monitor);
                max_chain = std::max(max_chain, m.chain_length);
                total_chain += m.chain_length;
                max_recourse = std::max(max_recourse, m.recourse);
                total_recourse += m.recourse;
                max_delta = std::max(max_delta, monitor.max_out_degree());
                const std::string verdict = auditor.check(*engine, monitor);
                if (!verdict.empty()) return fail(2, verdict);
            } else if (tok == "?") {
                std::string what;
                if (!(ls >> what)) return fail(1, "expected a query verb");
                ++res.queries;
                if (what == "density") {
                    out << "density " << to_string(monitor.density_estimate()) << '\n';
                } else if (what == "subgraph") {
                    const LevelSetReport rep = monitor.extract_dense_subgraph();
                    out << "subgraph k=" << rep.k << " size=" << rep.vertices.size()
                        << " estimate=" << to_string(rep.estimate) << " vertices=";
                    for (size_t i = 0; i < rep.vertices.size(); ++i)
                        out << (i ? "," : "") << rep.vertices[i];
                    out << '\n';
                } else if (what == "match") {
                    if (!apps) return fail(1, "match query needs a b=1 mode (additive_log)");
                    out << "match size=" << matching.size() << '\n';
                } else if (what == "color") {
                    Vertex v;
                    if (!(ls >> v)) return fail(1, "expected a vertex id");
                    if (!apps) return fail(1, "color query needs a b=1 mode (additive_log)");
                    if (v < 0 || v >= cfg.capacity) return fail(1, "vertex out of range");
                    out << "color " << v << " = " << coloring.color(v) << '\n';
                } else if (what == "matvec") {
                    Vertex i;
                    if (!(ls >> i)) return fail(1, "expected a row index");
                    if (!apps) return fail(1, "matvec query needs a b=1 mode (additive_log)");
                    if (i < 0 || i >= cfg.capacity) return fail(1, "row out of range");
                    out << "matvec " << i << " = " << to_string(matvec->query(i)) << '\n';
                } else {
                    return fail(1, "unknown query verb: " + what);
                }
            } else {
                return fail(1, "unknown op: " + tok);
            }
        } catch (const Error& e) {
            return fail(1, e.what());
        }
    }

    if (!cfg.metrics_path.empty()) {
        std::ofstream f(cfg.metrics_path, std::ios::binary);
        f << csv.str();
    }
    if (!cfg.summary_path.empty()) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["engine"] = to_string(cfg.engine);
        j["mode"] = to_string(cfg.mode);
        j["updates"] = res.updates;
        j["queries"] = res.queries;
        j["max_chain_length"] = max_chain;
        j["mean_chain_length"] =
            res.updates ? to_string(Rational(total_chain, res.updates)) : "0/1";
        j["max_recourse"] = max_recourse;
        j["total_recourse"] = total_recourse;
        j["max_delta"] = max_delta;
        j["final_density"] = to_string(monitor.density_estimate());
        j["audit"] = cfg.audit == AuditLevel::off        ? "off"
                     : cfg.audit == AuditLevel::invariants ? "invariants"
                                                           : "full";
        j["audit_ok"] = true;
        std::ofstream f(cfg.summary_path, std::ios::binary);
        f << j.dump(2) << '\n';
    }
    return res;
}

std::string generate_workload(WorkloadKind kind, std::uint64_t seed, int size, int capacity) {
    std::ostringstream os;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, capacity - 1);
    std::set<std::pair<Vertex, Vertex>> present;
    auto toggle = [&](Vertex u, Vertex v) {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        const bool have = present.count({u, v}) != 0;
        os << (have ? "- " : "+ ") << u << ' ' << v << '\n';
        if (have)
            present.erase({u, v});
        else
            present.insert({u, v});
        return true;
    };
    int emitted = 0;
    switch (kind) {
        case WorkloadKind::random_gnm:
            while (emitted < size)
                if (toggle(pick(rng), pick(rng))) {
                    ++emitted;
                    if (emitted % 16 == 0) os << "? density\n";
                }
            break;
        case WorkloadKind::clique_flood: {
            // Insert clique edges until budget is half spent, then tear down.
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (Vertex u = 0; u < capacity && emitted < (size + 1) / 2; ++u)
                for (Vertex v = u + 1; v < capacity && emitted < (size + 1) / 2; ++v) {
                    toggle(u, v);
                    edges.emplace_back(u, v);
                    ++emitted;
                }
            if (size > 0) os << "? subgraph\n";
            for (auto it = edges.rbegin(); it != edges.rend() && emitted < size; ++it, ++emitted)
                toggle(it->first, it->second);
            break;
        }
        case WorkloadKind::density_ramp: {
            // Grow a dense core vertex by vertex, then decay it, so the
            // density rises and falls within one stream.
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (Vertex v = 1; v < capacity && emitted < (size + 1) / 2; ++v)
                for (Vertex u = 0; u < v && emitted < (size + 1) / 2; ++u) {
                    toggle(u, v);
                    edges.emplace_back(u, v);
                    ++emitted;
                    if (emitted % 8 == 0) os << "? density\n";
                }
            for (auto it = edges.begin(); it != edges.end() && emitted < size; ++it, ++emitted) {
                toggle(it->first, it->second);
                if (emitted % 8 == 0) os << "? density\n";
            }
            break;
        }
        case WorkloadKind::adversarial_hub: {
            // Churn around one hub so its degree is repeatedly rebuilt.
            const Vertex hub = 0;
            while (emitted < size) {
                Vertex v = pick(rng);
                if (v == hub) continue;
                toggle(hub, v);
                ++emitted;
                if (emitted % 8 == 0 && toggle(pick(rng), pick(rng))) ++emitted;
            }
            break;
        }
    }
    return os.str();
}

}  // namespace orient
