#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>

#include "orient/flip_trace.hpp"
#include "orient/graph.hpp"
#include "orient/params.hpp"

namespace orient {

enum class EngineKind { basic, worstcase, amortized };

std::string to_string(EngineKind k);

// Common driver for all three engines: the public interface is edge-level
// (every edge of G is materialised as b arc copies); subclasses implement the
// per-arc insert/delete logic.
class Engine {
public:
    explicit Engine(const Parameters& params);
    virtual ~Engine() = default;

    virtual EngineKind kind() const = 0;

    const Parameters& params() const { return params_; }
    const OrientedMultigraph& graph() const { return g_; }

    bool has_edge(Vertex u, Vertex v) const;
    long long num_edges() const { return static_cast<long long>(edges_.size()); }
    const std::set<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    // Inserts/deletes the undirected edge {u,v}; b arc copies are placed one
    // at a time, each oriented toward the endpoint of currently larger
    // out-degree (ties away from the first argument).
    FlipTrace insert_edge(Vertex u, Vertex v);
    FlipTrace delete_edge(Vertex u, Vertex v);

    // Counters of the last insert_edge/delete_edge call.
    const UpdateMetrics& last_metrics() const { return metrics_; }

protected:
    // One arc copy, oriented u->v on entry (tail chosen by the caller).
    virtual void arc_insert(Vertex u, Vertex v, FlipTrace& tr) = 0;
    // One copy of the undirected edge {u,v}; direction chosen inside
    // (whichever direction currently has copies, preferring u->v).
    virtual void arc_delete(Vertex u, Vertex v, FlipTrace& tr) = 0;

    void note_chain(FlipTrace& tr, long long chain);

    Parameters params_;
    OrientedMultigraph g_;
    UpdateMetrics metrics_;

private:
    void check_ids(Vertex u, Vertex v) const;
    std::set<std::pair<Vertex, Vertex>> edges_;  // normalized (min,max)
};

std::unique_ptr<Engine> make_engine(EngineKind kind, const Parameters& params);

}  // namespace orient
