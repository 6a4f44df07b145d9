#pragma once

#include <map>
#include <set>
#include <vector>

#include "orient/engine.hpp"
#include "orient/oracles.hpp"

namespace orient {

// Level-set extraction result. sizes holds |T_0| .. |T_{k+1}| where
// T_i = {v : d+(v) >= Delta (1+eta/b)^{-i}} and k is the smallest index with
// |T_{k+1}| < (1+gamma) |T_k|. vertices are the members of T_{k+1} (the set
// carrying the density guarantee) in descending degree order.
struct LevelSetReport {
    long long k = 0;
    std::vector<long long> sizes;
    std::vector<Vertex> vertices;
    Rational estimate{0};  // Delta(G^b) / b
};

// Read-side monitor over one engine's orientation: keeps the multiset of
// out-degrees in a Fenwick count index (count-above in O(log(nb))), the
// members of each degree value for level-set walks, a Delta cache, and the
// rounded simple orientation (direction of each edge by majority arc count,
// ties from the smaller id).
//
// Feed every FlipTrace of the engine to apply(); only net per-vertex degree
// changes are processed (intra-chain flips cancel).
class DensityMonitor {
public:
    explicit DensityMonitor(const Engine& engine);

    void apply(const FlipTrace& tr);

    long long max_out_degree() const;  // Delta(G^b), 0 when empty
    Rational density_estimate() const { return Rational(max_out_degree(), params_->b); }

    // Number of vertices with d+ >= d (d >= 1).
    long long count_at_least(long long d) const;

    LevelSetReport extract_dense_subgraph() const;

    // Rounded orientation: true iff the edge {u,v} is directed u->v.
    bool rounded_direction(Vertex u, Vertex v) const;
    long long rounded_out_degree(Vertex v) const { return rounded_out_[v]; }
    long long rounded_max_out_degree() const;

    // Full-rebuild cross-check of every incremental structure.
    bool consistent() const;

private:
    void rekey(Vertex v, long long from, long long to);
    void refresh_edge(Vertex a, Vertex b);

    const Engine* engine_;
    const Parameters* params_;
    std::vector<long long> deg_;               // monitor's copy of d+
    std::vector<long long> fenwick_;           // counts over degree values
    std::map<long long, std::set<Vertex>> members_;  // degree -> vertices (degree >= 1)
    std::map<Edge, bool> dir_;                 // true: first->second
    std::vector<long long> rounded_out_;
};

}  // namespace orient
