#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orient/bucket_list.hpp"
#include "orient/params.hpp"
#include "orient/rank_table.hpp"

namespace orient {

// Oriented multigraph over a fixed vertex universe [0, n). Arc multiplicities
// are stored as counts; one Arc record exists per ordered pair with at least
// one copy. Every vertex keeps its in-neighbours in a BucketList whose keys
// are chosen by the engine that drives the graph (true rank, perceived rank,
// or threshold rank).
class OrientedMultigraph {
public:
    struct Arc {
        Vertex from;
        Vertex to;
        long long count = 0;
        BucketList::Node* in_node = nullptr;  // `from` inside in_buckets(to)

        // Engine-owned fields; unused by engines that don't need them.
        long long perceived_rank = 0;   // r_to(from), worst-case engine
        long long deg_at_refresh = 0;   // d+(from) when perceived_rank was set
        long long phi = 0;              // threshold value, amortized engine
        void* out_hook = nullptr;       // ring node of `to` in from's out ring
        BucketList::Node* out_node = nullptr;  // `to` in from's threshold list
    };

    OrientedMultigraph(int n, const Parameters& params);
    ~OrientedMultigraph();
    OrientedMultigraph(const OrientedMultigraph&) = delete;
    OrientedMultigraph& operator=(const OrientedMultigraph&) = delete;
    OrientedMultigraph(OrientedMultigraph&&) = default;
    OrientedMultigraph& operator=(OrientedMultigraph&&) = default;

    int n() const { return static_cast<int>(dplus_.size()); }
    long long out_degree(Vertex u) const { return dplus_[u]; }
    long long max_out_degree() const;  // linear scan; monitors keep their own cache
    long long total_out_degree() const { return total_arcs_; }

    Arc* find_arc(Vertex u, Vertex v);
    const Arc* find_arc(Vertex u, Vertex v) const;

    // Adds one copy of u->v. When this creates the adjacency, `from` is
    // inserted into in_buckets(to) under in_key. Returns the arc and whether
    // the adjacency is new.
    std::pair<Arc*, bool> add_arc(Vertex u, Vertex v, long long in_key);

    // Removes one copy of u->v; throws Error(missing_arc) if absent.
    // Returns true when the adjacency disappeared (in-bucket node removed).
    bool remove_arc(Vertex u, Vertex v);

    BucketList& in_buckets(Vertex u) { return in_[u]; }
    const BucketList& in_buckets(Vertex u) const { return in_[u]; }

    // Distinct out-neighbours of u with their arc records, id-ascending.
    const std::map<Vertex, Arc*>& out(Vertex u) const { return out_[u]; }

    // Head of the highest bucket of N^-(u), or nullopt when N^-(u) is empty.
    std::optional<Vertex> first_max_in_neighbor(Vertex u) const;

    const Parameters& params() const { return *params_; }
    const RankTable& ranks() const { return ranks_; }
    long long rank(long long d) const { return ranks_.rank(d); }

    // Bucket index floor(log_{1+lambda} max{(1+lambda) d+(u), floor(b/4)}),
    // i.e. the natural home level of u's current degree.
    long long home_bucket_key(Vertex u) const;

private:
    const Parameters* params_;
    RankTable ranks_;
    std::vector<long long> dplus_;
    std::vector<std::map<Vertex, Arc*>> out_;
    std::vector<BucketList> in_;
    long long total_arcs_ = 0;
};

// Invariant checker result; ok iff no oriented pair violates the inequality.
struct InvariantReport {
    bool ok = true;
    Vertex worst_u = -1;
    Vertex worst_v = -1;
    // Largest d+(u) / bound ratio seen (1 means tight, > 1 violated).
    Rational worst_ratio{0};
};

// d+(u) <= (1+eta/b) d+(v) + 2*theta over every arc u->v.
InvariantReport check_invariant_theta(const OrientedMultigraph& g, const Parameters& p);

// Same with the max{..., floor(b/2)} escape clause.
InvariantReport check_invariant_theta_prime(const OrientedMultigraph& g, const Parameters& p);

}  // namespace orient
