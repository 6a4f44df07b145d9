#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orient/applications.hpp"
#include "orient/oracles.hpp"

using namespace orient;

namespace {

// theta=1, b=1 engine plus all trace-driven overlays.
struct Rig {
    Parameters p;
    std::unique_ptr<Engine> engine;
    MatchingOverlay matching;
    ColoringOverlay coloring;
    ForestOverlay forest;

    Rig(int n, EngineKind kind = EngineKind::worstcase)
        : p(derive_parameters(Mode::additive_log, n)),
          engine(make_engine(kind, p)),
          matching(n),
          coloring(n),
          forest(n) {}

    void feed(const FlipTrace& tr) {
        matching.apply(tr);
        coloring.apply(tr);
        forest.apply(tr);
    }
    void insert(Vertex u, Vertex v) { feed(engine->insert_edge(u, v)); }
    void erase(Vertex u, Vertex v) { feed(engine->delete_edge(u, v)); }

    void check_all() const {
        const EdgeSet& edges = engine->edges();
        CHECK(check_maximal_matching(edges, matching.partners()));
        CHECK(check_proper_coloring(edges, coloring.colors()));
        CHECK(check_forest_partition(edges, forest.snapshot(), 2 * forest.max_out_degree()));
        // Matched vertices form a vertex cover.
        for (const auto& [u, v] : edges)
            CHECK((matching.partner(u) >= 0 || matching.partner(v) >= 0));
    }
};

}  // namespace

TEST_CASE("matching: scripted path scenario") {
    Rig r(8);
    r.insert(0, 1);
    CHECK(r.matching.partner(0) == 1);  // single edge becomes matched
    r.insert(1, 2);
    CHECK(r.matching.partner(2) == -1);  // 1 is taken
    CHECK(r.matching.size() == 1);
    r.erase(0, 1);
    CHECK(r.matching.partner(1) == 2);  // freed endpoint rematches
    r.check_all();
}

TEST_CASE("matching: triangle has exactly one matched edge") {
    Rig r(8);
    r.insert(0, 1);
    r.insert(1, 2);
    r.insert(0, 2);
    CHECK(r.matching.size() == 1);
    r.check_all();
}

TEST_CASE("coloring: small shapes") {
    Rig r(8);
    CHECK(r.coloring.color(5) == 0);  // isolated vertices sit at colour 0
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) r.insert(u, v);
    std::set<long long> used;
    for (Vertex v = 0; v < 4; ++v) {
        CHECK(r.coloring.color(v) <= 3);
        used.insert(r.coloring.color(v));
    }
    CHECK(used.size() == 4);  // K4 needs 4 distinct colours
    r.check_all();
}

TEST_CASE("forest overlay: slots and split rule") {
    Rig r(8);
    // A directed 3-cycle cannot land entirely in one forest.
    r.insert(0, 1);
    r.insert(1, 2);
    r.insert(2, 0);
    r.check_all();
    const auto snap = r.forest.snapshot();
    CHECK(snap.size() == 3);
    r.erase(1, 2);
    r.check_all();
}

TEST_CASE("matvec: fixed scenarios") {
    Parameters p = derive_parameters(Mode::additive_log, 8);
    auto engine = make_engine(EngineKind::worstcase, p);
    MatVecOverlay mv(*engine);
    mv.set_x(0, Rational(2));
    mv.set_x(1, Rational(3));
    mv.set_entry(0, 1, Rational(5));
    CHECK(mv.query(0) == Rational(15));
    CHECK(mv.query(1) == Rational(10));
    mv.set_diag(0, Rational(7));
    CHECK(mv.query(0) == Rational(29));
    mv.set_entry(0, 1, Rational(2));  // reweight in place
    CHECK(mv.query(1) == Rational(4));
    mv.set_x(1, Rational(-1));
    CHECK(mv.query(0) == Rational(12));
    mv.set_entry(0, 1, Rational(0));  // support removal
    CHECK(mv.query(0) == Rational(14));
    CHECK(mv.query(1) == Rational(0));
    CHECK(engine->num_edges() == 0);
}

TEST_CASE("matvec: randomized against dense recomputation") {
    const int n = 12;
    Parameters p = derive_parameters(Mode::additive_log, n);
    auto engine = make_engine(EngineKind::amortized, p);
    MatVecOverlay mv(*engine);
    std::mt19937_64 rng(20240820);
    std::uniform_int_distribution<int> pick(0, n - 1), val(-4, 4), kind(0, 3);
    for (int step = 0; step < 400; ++step) {
        switch (kind(rng)) {
            case 0: {
                Vertex i = pick(rng), j = pick(rng);
                if (i == j) break;
                mv.set_entry(i, j, Rational(val(rng)));
                break;
            }
            case 1: mv.set_x(pick(rng), Rational(val(rng))); break;
            case 2: mv.set_diag(pick(rng), Rational(val(rng))); break;
            default: break;
        }
        const Vertex q = pick(rng);
        CHECK(mv.query(q) == dense_matvec_entry(n, mv.offdiag(), mv.diag(), mv.x(), q));
    }
}

TEST_CASE("randomized churn: all overlays stay valid on every engine") {
    for (EngineKind k : {EngineKind::basic, EngineKind::worstcase, EngineKind::amortized}) {
        Rig r(16, k);
        std::mt19937_64 rng(20240821);
        std::uniform_int_distribution<int> pick(0, 15);
        std::set<Edge> present;
        for (int step = 0; step < 400; ++step) {
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
            r.check_all();
        }
    }
}
