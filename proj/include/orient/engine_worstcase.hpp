#pragma once

#include <vector>

#include "orient/engine.hpp"

namespace orient {

// Worst-case engine: in-bucket keys are perceived ranks r_v(u), refreshed
// lazily by a per-vertex round-robin cursor that visits up to ceil(2/lambda)
// out-neighbours per arc operation. Flip tests always read true out-degrees;
// only bucket placement is approximate.
class WorstCaseEngine : public Engine {
public:
    explicit WorstCaseEngine(const Parameters& params);
    ~WorstCaseEngine() override;
    EngineKind kind() const override { return EngineKind::worstcase; }

    const UpdateMetrics& step_budget_report() const { return last_metrics(); }

    // |r_v(u) - r(u)| <= 1 for every adjacency; exhaustive walk.
    bool audit_perceived_ranks() const;
    // d+(from) stays within a factor [1 - lambda/2, 1 + lambda/2] of the
    // degree recorded at the last refresh of each adjacency.
    bool audit_refresh_drift() const;

protected:
    void arc_insert(Vertex u, Vertex v, FlipTrace& tr) override;
    void arc_delete(Vertex u, Vertex v, FlipTrace& tr) override;

private:
    using Arc = OrientedMultigraph::Arc;
    struct RingNode {
        Vertex v;
        RingNode* prev;
        RingNode* next;
    };

    Arc* add_copy(Vertex a, Vertex b);
    void remove_copy(Vertex a, Vertex b);
    void ring_insert(Vertex u, Arc* arc);
    void ring_erase(Vertex u, RingNode* node);
    // Advances u's cursor one step and returns the visited out-neighbour.
    Vertex ring_step(Vertex u);
    void refresh_perceived(Vertex u, Vertex w);

    std::vector<RingNode*> cursor_;  // null iff N+(u) is empty
};

}  // namespace orient
