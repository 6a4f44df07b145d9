#include "orient/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "orient/error.hpp"

namespace orient {

namespace {

// Compresses the active vertices to [0, a) and returns the edges as bit pairs.
struct Compressed {
    int a = 0;
    std::vector<std::pair<int, int>> edges;
};

Compressed compress(const EdgeSet& edges, int limit) {
    std::map<Vertex, int> id;
    Compressed c;
    for (const auto& [u, v] : edges) {
        if (!id.count(u)) id[u] = c.a++;
        if (!id.count(v)) id[v] = c.a++;
    }
    if (c.a > limit)
        throw Error(Errc::size_limit, "exhaustive oracle limited to " + std::to_string(limit) +
                                          " active vertices, got " + std::to_string(c.a));
    for (const auto& [u, v] : edges) c.edges.emplace_back(id[u], id[v]);
    return c;
}

}  // namespace

Rational exact_density(const EdgeSet& edges) {
    const Compressed c = compress(edges, 24);
    if (c.a == 0) return Rational(0);
    Rational best(0);
    for (unsigned long long s = 1; s < (1ull << c.a); ++s) {
        long long inside = 0;
        for (const auto& [u, v] : c.edges)
            if ((s >> u & 1) && (s >> v & 1)) ++inside;
        if (inside == 0) continue;
        const Rational d(inside, static_cast<long long>(std::popcount(s)));
        if (d > best) best = d;
    }
    return best;
}

long long exact_arboricity(const EdgeSet& edges) {
    const Compressed c = compress(edges, 24);
    long long best = 0;
    for (unsigned long long s = 1; s < (1ull << c.a); ++s) {
        const int k = std::popcount(s);
        if (k < 2) continue;
        long long inside = 0;
        for (const auto& [u, v] : c.edges)
            if ((s >> u & 1) && (s >> v & 1)) ++inside;
        best = std::max(best, (inside + k - 2) / (k - 1));  // ceil(inside / (k-1))
    }
    return best;
}

Rational peel_density_approx(const EdgeSet& edges) {
    std::map<Vertex, std::set<Vertex>> adj;
    for (const auto& [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    long long m = static_cast<long long>(edges.size());
    long long n = static_cast<long long>(adj.size());
    Rational best(0);
    // (degree, vertex) heap as an ordered set; degrees change by one per erase.
    std::set<std::pair<long long, Vertex>> heap;
    for (const auto& [v, nb] : adj) heap.insert({static_cast<long long>(nb.size()), v});
    while (n > 0) {
        const Rational d(m, n);
        if (d > best) best = d;
        const auto [deg, v] = *heap.begin();
        heap.erase(heap.begin());
        for (Vertex w : adj[v]) {
            auto& nb = adj[w];
            heap.erase({static_cast<long long>(nb.size()), w});
            nb.erase(v);
            heap.insert({static_cast<long long>(nb.size()), w});
        }
        m -= deg;
        --n;
        adj.erase(v);
    }
    return best;
}

StructuralReport verify_structural_bound(const OrientedMultigraph& g, const Parameters& p,
                                         int c) {
    StructuralReport rep;
    const long long delta = g.max_out_degree();
    if (delta == 0) return rep;  // empty orientation: nothing to certify

    // Undirected edge set recovered from the arcs (each pair appears once).
    EdgeSet edges;
    for (Vertex u = 0; u < g.n(); ++u)
        for (const auto& [v, arc] : g.out(u)) {
            (void)arc;
            edges.insert({std::min(u, v), std::max(u, v)});
        }

    // |T_i| = #{v : d+(v) * (1+eta/b)^i >= Delta}, nondecreasing in i.
    const Rational base = p.one_plus_eta_over_b();
    auto level_size = [&](long long i) {
        const Rational f = rational_pow(base, i);
        long long cnt = 0;
        for (Vertex v = 0; v < g.n(); ++v)
            if (Rational(g.out_degree(v)) * f >= Rational(delta)) ++cnt;
        return cnt;
    };
    long long k = 0;
    while (Rational(level_size(k + 1)) >= (Rational(1) + p.gamma) * Rational(level_size(k))) ++k;
    rep.k = k;
    if (rational_pow(Rational(1) + p.gamma, k) > Rational(p.n_capacity)) rep.ok = false;

    rep.lhs = Rational(delta) / rational_pow(base, k);
    rep.rhs = (Rational(1) + p.gamma) * Rational(p.b) * exact_density(edges) +
              Rational(c) * (Rational(p.b) / p.eta + Rational(1));
    if (rep.lhs > rep.rhs) rep.ok = false;
    return rep;
}

bool check_maximal_matching(const EdgeSet& edges, const std::vector<Vertex>& partner) {
    for (Vertex v = 0; v < static_cast<Vertex>(partner.size()); ++v) {
        const Vertex w = partner[v];
        if (w < 0) continue;
        if (w >= static_cast<Vertex>(partner.size()) || partner[w] != v || w == v) return false;
        if (v < w && !edges.count({v, w})) return false;
    }
    for (const auto& [u, v] : edges)
        if (partner[u] < 0 && partner[v] < 0) return false;
    return true;
}

bool check_proper_coloring(const EdgeSet& edges, const std::vector<long long>& color) {
    std::map<Vertex, long long> degree;
    for (const auto& [u, v] : edges) {
        if (color[u] == color[v]) return false;
        ++degree[u];
        ++degree[v];
    }
    for (const auto& [v, d] : degree)
        if (color[v] < 0 || color[v] > d) return false;
    return true;
}

bool check_forest_partition(const EdgeSet& edges, const std::map<Edge, int>& forest_of,
                            long long max_forests) {
    if (forest_of.size() != edges.size()) return false;
    std::set<int> ids;
    std::map<int, std::map<Vertex, Vertex>> roots;  // union-find per forest
    for (const auto& [e, f] : forest_of) {
        if (!edges.count(e)) return false;
        ids.insert(f);
        auto& parent = roots[f];
        auto find = [&](Vertex x) {
            parent.try_emplace(x, x);
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        const Vertex ru = find(e.first), rv = find(e.second);
        if (ru == rv) return false;  // cycle inside one forest
        parent[ru] = rv;
    }
    return static_cast<long long>(ids.size()) <= max_forests;
}

Rational dense_matvec_entry(int n, const std::map<Edge, Rational>& offdiag,
                            const std::vector<Rational>& diag, const std::vector<Rational>& x,
                            Vertex i) {
    (void)n;
    Rational s = diag[i] * x[i];
    for (const auto& [e, a] : offdiag) {
        if (e.first == i) s += a * x[e.second];
        if (e.second == i) s += a * x[e.first];
    }
    return s;
}

}  // namespace orient
