#pragma once

#include <vector>

#include "orient/engine.hpp"

namespace orient {

// Amortized engine: every adjacency u->v carries a threshold phi(u,v), set to
// d+(u) whenever it is (re)assigned. Each vertex keeps N+(u) in a phi-keyed
// bucket list (minimum first) and N-(u) keyed by the rank of phi at its last
// refresh. Inserts repair against the minimum-phi out-neighbour; deletes scan
// the in-buckets from the top, flipping true violators and lazily lowering
// stale thresholds.
class AmortizedEngine : public Engine {
public:
    explicit AmortizedEngine(const Parameters& params);
    EngineKind kind() const override { return EngineKind::amortized; }

    // d+(u) <= max{(1+lambda) phi(u,x), floor(b/4)} for every adjacency.
    bool audit_tail_thresholds() const;
    // phi(u,z) <= max{(1+lambda)^3 (d+(z)+theta+1), floor(b/4)} for every adjacency.
    bool audit_head_thresholds() const;

protected:
    void arc_insert(Vertex u, Vertex v, FlipTrace& tr) override;
    void arc_delete(Vertex u, Vertex v, FlipTrace& tr) override;

private:
    using Arc = OrientedMultigraph::Arc;

    Arc* add_copy(Vertex a, Vertex b);
    void remove_copy(Vertex a, Vertex b);
    void set_phi(Arc* a, long long value);

    std::vector<BucketList> out_thresholds_;  // L(u): N+(u) keyed by phi(u,.)
};

}  // namespace orient
