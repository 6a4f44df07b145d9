#pragma once

#include "orient/engine.hpp"

namespace orient {

// Reference engine: after every arc operation it rescans N+ for the minimum
// out-degree neighbour (inserts) or asks the in-bucket structure for the
// top-ranked in-neighbour (deletes), flipping along a chain until the local
// inequality holds again. In-bucket keys are ranks of true out-degrees.
class BasicEngine : public Engine {
public:
    explicit BasicEngine(const Parameters& params) : Engine(params) {}
    EngineKind kind() const override { return EngineKind::basic; }

protected:
    void arc_insert(Vertex u, Vertex v, FlipTrace& tr) override;
    void arc_delete(Vertex u, Vertex v, FlipTrace& tr) override;

private:
    using Arc = OrientedMultigraph::Arc;

    Arc* add_copy(Vertex a, Vertex b);
    void remove_copy(Vertex a, Vertex b);
    // Re-keys `u` inside every in-bucket structure it appears in.
    void refresh_out_keys(Vertex u);
    Vertex argmin_out(Vertex u) const;
};

}  // namespace orient
