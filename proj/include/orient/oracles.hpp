#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

using Edge = std::pair<Vertex, Vertex>;      // normalized (min, max)
using EdgeSet = std::set<Edge>;

// Exact maximum subgraph density max over nonempty S of |E[S]| / |S|, by
// subset enumeration over the active vertices (endpoints of edges).
// Throws Error(size_limit) beyond 24 active vertices.
Rational exact_density(const EdgeSet& edges);

// Exact arboricity max over subsets S with |S| >= 2 of ceil(|E[S]| / (|S|-1)).
// Same size limit. Returns 0 for an edgeless graph.
long long exact_arboricity(const EdgeSet& edges);

// Peeling (repeatedly remove a minimum-degree vertex) 2-approximation of the
// maximum subgraph density; no size limit. Plausibility monitor only.
Rational peel_density_approx(const EdgeSet& edges);

// Level-set certificate for the density bracket. For thresholds
// V_i = Delta * (1+eta/b)^{-i} and T_i = {v : d+(v) >= V_i}, k is the
// smallest index with |T_{k+1}| < (1+gamma) |T_k|.
struct StructuralReport {
    bool ok = true;
    long long k = 0;
    Rational lhs{0};   // (1+eta/b)^{-k} * Delta(G^b)
    Rational rhs{0};   // (1+gamma) * b * rho_exact + c (b/eta + 1)
};

// Verifies, with exact rationals, that
//   (1+eta/b)^{-k} * Delta(G^b) <= (1+gamma) * b * rho_exact + c (b/eta + 1)
// and that (1+gamma)^k <= n. c is the additive slack of the maintained
// invariant (0 for theta = 0, 2 for theta = 1). Uses exact_density on the
// undirected edge set recovered from the arcs, so the same size limit applies.
StructuralReport verify_structural_bound(const OrientedMultigraph& g, const Parameters& p,
                                         int c);

// partner[v] is v's matched partner or -1. Checks the relation is symmetric,
// every matched pair is an edge, and no edge has both endpoints unmatched.
bool check_maximal_matching(const EdgeSet& edges, const std::vector<Vertex>& partner);

// color[v] >= 0 for every vertex incident to an edge. Checks propriety and
// color[v] <= degree(v).
bool check_proper_coloring(const EdgeSet& edges, const std::vector<long long>& color);

// forest_of maps every edge to a forest id. Checks full coverage, per-forest
// acyclicity (union-find), and that the number of distinct forests is at most
// max_forests.
bool check_forest_partition(const EdgeSet& edges, const std::map<Edge, int>& forest_of,
                            long long max_forests);

// Dense recomputation of (A x)_i for a symmetric sparse matrix given by
// off-diagonal entries (normalized pair -> value) and a diagonal vector.
Rational dense_matvec_entry(int n, const std::map<Edge, Rational>& offdiag,
                            const std::vector<Rational>& diag, const std::vector<Rational>& x,
                            Vertex i);

}  // namespace orient
