#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "orient/engine.hpp"
#include "orient/engine_amortized.hpp"
#include "orient/engine_worstcase.hpp"
#include "orient/error.hpp"

using namespace orient;

namespace {

Parameters make_params(int theta, long long eta, long long b, int n) {
    Parameters p;
    p.theta = theta;
    p.eta = Rational(eta);
    p.b = b;
    p.n_capacity = n;
    p.lambda = p.eta / Rational(64 * b);
    p.floor_b2 = b / 2;
    p.floor_b4 = b / 4;
    p.scan_budget = to_long(ceil_rational(Rational(2) / p.lambda));
    p.validate();
    return p;
}

const EngineKind kKinds[] = {EngineKind::basic, EngineKind::worstcase, EngineKind::amortized};

void check_quiescent(const Engine& e) {
    INFO("engine ", to_string(e.kind()));
    CHECK(check_invariant_theta_prime(e.graph(), e.params()).ok);
    CHECK(e.graph().total_out_degree() == e.params().b * e.num_edges());
}

// Arc-count shadow that replays FlipTrace events.
struct Shadow {
    std::map<std::pair<Vertex, Vertex>, long long> count;

    void apply(const FlipTrace& tr) {
        for (const ArcEvent& ev : tr.events) {
            switch (ev.kind) {
                case ArcEvent::Kind::add: bump(ev.u, ev.v, 1); break;
                case ArcEvent::Kind::remove: bump(ev.u, ev.v, -1); break;
                case ArcEvent::Kind::flip:
                    bump(ev.u, ev.v, -1);
                    bump(ev.v, ev.u, 1);
                    break;
            }
        }
    }
    void bump(Vertex u, Vertex v, long long d) {
        auto it = count.try_emplace({u, v}, 0).first;
        it->second += d;
        REQUIRE(it->second >= 0);
        if (it->second == 0) count.erase(it);
    }
    void match(const OrientedMultigraph& g) const {
        long long seen = 0;
        for (const auto& [uv, c] : count) {
            const auto* arc = g.find_arc(uv.first, uv.second);
            REQUIRE(arc != nullptr);
            CHECK(arc->count == c);
            ++seen;
        }
        long long actual = 0;
        for (Vertex u = 0; u < g.n(); ++u) actual += static_cast<long long>(g.out(u).size());
        CHECK(actual == seen);
    }
};

}  // namespace

TEST_CASE("single edge lifecycle, b=4") {
    const Parameters p = derive_parameters(Mode::approx_Oalpha, 2);
    REQUIRE(p.b == 4);
    for (EngineKind kind : kKinds) {
        auto e = make_engine(kind, p);
        INFO("engine ", to_string(kind));
        const FlipTrace tr = e->insert_edge(0, 1);
        CHECK(tr.events.front().kind == ArcEvent::Kind::add);
        CHECK(e->graph().out_degree(0) == 2);
        CHECK(e->graph().out_degree(1) == 2);
        CHECK(e->graph().find_arc(0, 1)->count == 2);
        CHECK(e->graph().find_arc(1, 0)->count == 2);
        check_quiescent(*e);
        CHECK_THROWS_AS(e->insert_edge(0, 1), Error);
        CHECK_THROWS_AS(e->insert_edge(1, 0), Error);

        e->delete_edge(0, 1);
        CHECK(e->graph().out_degree(0) == 0);
        CHECK(e->graph().out_degree(1) == 0);
        CHECK(e->num_edges() == 0);
        check_quiescent(*e);
        CHECK_THROWS_AS(e->delete_edge(0, 1), Error);
    }
}

TEST_CASE("fresh pair with b=1, theta=1 never recurses") {
    const Parameters p = derive_parameters(Mode::additive_log, 4);
    REQUIRE(p.b == 1);
    for (EngineKind kind : kKinds) {
        auto e = make_engine(kind, p);
        const FlipTrace tr = e->insert_edge(2, 3);
        CHECK(tr.events.size() == 1);
        CHECK(tr.chain_length == 0);
        CHECK(e->graph().out_degree(2) == 1);
        CHECK(e->graph().out_degree(3) == 0);
    }
}

TEST_CASE("star center stays legal") {
    const Parameters p = derive_parameters(Mode::additive_log, 16);
    for (EngineKind kind : kKinds) {
        auto e = make_engine(kind, p);
        for (Vertex i = 1; i <= 5; ++i) {
            e->insert_edge(0, i);
            check_quiescent(*e);
        }
        CHECK(check_invariant_theta(e->graph(), p).ok);
        CHECK(e->graph().total_out_degree() == 5);
    }
}

TEST_CASE("K4 build up and tear down, b=2") {
    const Parameters p = make_params(0, 2, 2, 4);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) edges.emplace_back(u, v);

    for (EngineKind kind : kKinds) {
        auto e = make_engine(kind, p);
        Shadow shadow;
        for (auto [u, v] : edges) {
            shadow.apply(e->insert_edge(u, v));
            check_quiescent(*e);
            shadow.match(e->graph());
        }
        CHECK(check_invariant_theta(e->graph(), p).ok);
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
            shadow.apply(e->delete_edge(it->first, it->second));
            check_quiescent(*e);
            shadow.match(e->graph());
        }
        CHECK(e->graph().total_out_degree() == 0);
    }
}

TEST_CASE("rejects self loops and out-of-range ids") {
    const Parameters p = derive_parameters(Mode::approx_Oalpha, 4);
    auto e = make_engine(EngineKind::basic, p);
    CHECK_THROWS_AS(e->insert_edge(1, 1), Error);
    CHECK_THROWS_AS(e->insert_edge(0, 4), Error);
    CHECK_THROWS_AS(e->insert_edge(-1, 2), Error);
}

TEST_CASE("randomized churn keeps all engines consistent") {
    for (const Parameters& p :
         {derive_parameters(Mode::approx_Oalpha, 10), derive_parameters(Mode::additive_log, 10)}) {
        std::vector<std::unique_ptr<Engine>> engines;
        for (EngineKind kind : kKinds) engines.push_back(make_engine(kind, p));
        std::vector<Shadow> shadows(engines.size());

        std::mt19937_64 rng(20240817);
        std::uniform_int_distribution<int> pick(0, 9);
        std::set<std::pair<Vertex, Vertex>> present;
        for (int step = 0; step < 300; ++step) {
            Vertex u = pick(rng), v = pick(rng);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            const bool have = present.count({u, v}) != 0;
            for (size_t i = 0; i < engines.size(); ++i) {
                Engine& e = *engines[i];
                const FlipTrace tr = have ? e.delete_edge(u, v) : e.insert_edge(u, v);
                CHECK(tr.chain_length <= p.b * 100);
                CHECK(e.last_metrics().recourse == tr.recourse());
                shadows[i].apply(tr);
                check_quiescent(e);
                shadows[i].match(e.graph());
            }
            auto* wc = dynamic_cast<WorstCaseEngine*>(engines[1].get());
            CHECK(wc->audit_perceived_ranks());
            CHECK(wc->audit_refresh_drift());
            auto* am = dynamic_cast<AmortizedEngine*>(engines[2].get());
            CHECK(am->audit_tail_thresholds());
            CHECK(am->audit_head_thresholds());
            if (have)
                present.erase({u, v});
            else
                present.insert({u, v});
        }
        // All engines ended on the same edge set.
        for (const auto& e : engines) CHECK(e->num_edges() == static_cast<long long>(present.size()));
    }
}
