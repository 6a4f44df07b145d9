#pragma once

#include <vector>

#include "orient/bucket_list.hpp"

namespace orient {

// One arc-level event produced by an engine update.
//   add:    one copy of u->v added
//   remove: one copy of u->v removed
//   flip:   one copy of u->v reversed to v->u
struct ArcEvent {
    enum class Kind { add, remove, flip };
    Kind kind;
    Vertex u;
    Vertex v;
};

// Everything a single public update did to the orientation, in order.
// Replaying the events against the pre-update multigraph reproduces the
// post-update multigraph. chain_length is the longest flip chain triggered
// by any single arc of the update.
struct FlipTrace {
    std::vector<ArcEvent> events;
    long long chain_length = 0;

    long long recourse() const { return static_cast<long long>(events.size()); }
};

// Per-update work counters, exposed by every engine.
struct UpdateMetrics {
    long long chain_length = 0;
    long long arcs_touched = 0;      // arc copies added or removed (flips count both)
    long long bucket_moves = 0;      // bucket relocation cost units
    long long cursor_advances = 0;   // round-robin steps (worst-case engine)
    long long while_iterations = 0;  // threshold-loop iterations (amortized engine)
    long long recourse = 0;

    void reset() { *this = UpdateMetrics{}; }
};

}  // namespace orient
