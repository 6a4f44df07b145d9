#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "orient/density.hpp"
#include "orient/oracles.hpp"

using namespace orient;

namespace {

// Engine plus attached monitor, with edge-level helpers.
struct Rig {
    Parameters p;
    std::unique_ptr<Engine> engine;
    DensityMonitor monitor;

    Rig(Mode mode, int n, EngineKind kind = EngineKind::basic,
        const Rational& eps = Rational(1, 2))
        : p(derive_parameters(mode, n, eps)),
          engine(make_engine(kind, p)),
          monitor(*engine) {}

    void insert(Vertex u, Vertex v) { monitor.apply(engine->insert_edge(u, v)); }
    void erase(Vertex u, Vertex v) { monitor.apply(engine->delete_edge(u, v)); }
};

}  // namespace

TEST_CASE("empty graph: estimate zero, empty report") {
    Rig r(Mode::eps_density, 16);
    CHECK(r.monitor.density_estimate() == Rational(0));
    const LevelSetReport rep = r.monitor.extract_dense_subgraph();
    CHECK(rep.vertices.empty());
    CHECK(rep.sizes.empty());
    CHECK(r.monitor.consistent());
}

TEST_CASE("single edge: estimate brackets 1/2") {
    Rig r(Mode::eps_density, 16);
    r.insert(0, 1);
    const Rational est = r.monitor.density_estimate();
    CHECK(est >= Rational(1, 2));
    CHECK(est <= Rational(1, 2) + Rational(1, 2 * r.p.b));
    const LevelSetReport rep = r.monitor.extract_dense_subgraph();
    CHECK(rep.vertices.size() == 2);  // both endpoints
    CHECK(r.monitor.consistent());
}

TEST_CASE("K4: estimate within the structural bracket of 3/2") {
    Rig r(Mode::eps_density, 16);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) r.insert(u, v);
    const Rational est = r.monitor.density_estimate();
    CHECK(est >= Rational(3, 2));  // Delta/b always dominates rho
    const long long kmax = to_long(
        ceil_rational(Rational(4)));  // log_{1.25} 16 = 12.42..., use report instead
    (void)kmax;
    const StructuralReport srep = verify_structural_bound(r.engine->graph(), r.p, 0);
    CHECK(srep.ok);
    // (1+epsilon) accuracy target of the derived parameters.
    CHECK(est <= (Rational(1) + r.p.epsilon) * Rational(3, 2));
}

TEST_CASE("extraction inequality and exact walk size") {
    Rig r(Mode::eps_density, 16);
    // K8 core plus pendant edges hanging off it.
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = u + 1; v < 8; ++v) r.insert(u, v);
    for (Vertex i = 8; i < 16; ++i) r.insert(static_cast<Vertex>(i - 8), i);

    const LevelSetReport rep = r.monitor.extract_dense_subgraph();
    REQUIRE(!rep.sizes.empty());
    CHECK(rep.vertices.size() == static_cast<size_t>(rep.sizes[rep.k + 1]));
    CHECK(std::is_sorted(rep.sizes.begin(), rep.sizes.end()));  // T_i nested

    // Induced density of the returned set meets the certified fraction.
    EdgeSet induced;
    const std::set<Vertex> member(rep.vertices.begin(), rep.vertices.end());
    for (const auto& [u, v] : r.engine->edges())
        if (member.count(u) && member.count(v)) induced.insert({u, v});
    const Rational got = Rational(static_cast<long long>(induced.size()),
                                  static_cast<long long>(member.size()));
    const Rational rho = exact_density(r.engine->edges());
    const Rational denom = (Rational(1) + r.p.gamma) *
                           rational_pow(r.p.one_plus_eta_over_b(), rep.k + 1);
    CHECK(got >= rho / denom);
    // The dense core survives extraction at this epsilon.
    for (Vertex v = 0; v < 8; ++v) CHECK(member.count(v));
}

TEST_CASE("rounded orientation rules") {
    Rig r(Mode::approx_Oalpha, 4);  // b = 4
    r.insert(0, 1);                 // balanced 2/2 split: tie -> from smaller id
    CHECK(r.monitor.rounded_direction(0, 1));
    CHECK_FALSE(r.monitor.rounded_direction(1, 0));
    CHECK(r.monitor.rounded_out_degree(0) == 1);
    CHECK(r.monitor.rounded_out_degree(1) == 0);
    // Rounded degree bound: max <= Delta(G^b) / ceil(b/2).
    const Rational cap = Rational(r.monitor.max_out_degree(), (r.p.b + 1) / 2);
    CHECK(Rational(r.monitor.rounded_max_out_degree()) <= cap);
    CHECK(r.monitor.consistent());
}

TEST_CASE("randomized churn: monitor stays consistent and bracketed") {
    for (EngineKind kind : {EngineKind::basic, EngineKind::worstcase, EngineKind::amortized}) {
        Rig r(Mode::eps_density, 12, kind, Rational(1, 2));
        std::mt19937_64 rng(20240819);
        std::uniform_int_distribution<int> pick(0, 11);
        std::set<Edge> present;
        for (int step = 0; step < 150; ++step) {
            Vertex u = pick(rng), v = pick(rng);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (present.count({u, v})) {
                r.erase(u, v);
                present.erase({u, v});
            } else {
                r.insert(u, v);
                present.insert({u, v});
            }
            CHECK(r.monitor.consistent());
            const Rational rho = exact_density(r.engine->edges());
            CHECK(rho <= r.monitor.density_estimate());
            CHECK(verify_structural_bound(r.engine->graph(), r.p, 0).ok);
            const long long half_up = (r.p.b + 1) / 2;
            CHECK(Rational(r.monitor.rounded_max_out_degree()) <=
                  Rational(r.monitor.max_out_degree(), half_up));
            if (!present.empty()) {
                const LevelSetReport rep = r.monitor.extract_dense_subgraph();
                CHECK(rep.vertices.size() == static_cast<size_t>(rep.sizes[rep.k + 1]));
                CHECK(std::is_sorted(rep.sizes.begin(), rep.sizes.end()));
            }
        }
    }
}
