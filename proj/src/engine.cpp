#include "orient/engine.hpp"

#include <algorithm>

#include "orient/error.hpp"

namespace orient {

std::string to_string(EngineKind k) {
    switch (k) {
        case EngineKind::basic: return "basic";
        case EngineKind::worstcase: return "worstcase";
        case EngineKind::amortized: return "amortized";
    }
    return "?";
}

Engine::Engine(const Parameters& params) : params_(params), g_(params.n_capacity, params_) {}

void Engine::check_ids(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= g_.n() || v >= g_.n())
        throw Error(Errc::capacity, "vertex id out of range");
    if (u == v) throw Error(Errc::bad_parameters, "self-loops are not supported");
}

bool Engine::has_edge(Vertex u, Vertex v) const {
    return edges_.count({std::min(u, v), std::max(u, v)}) != 0;
}

void Engine::note_chain(FlipTrace& tr, long long chain) {
    tr.chain_length = std::max(tr.chain_length, chain);
}

FlipTrace Engine::insert_edge(Vertex u, Vertex v) {
    check_ids(u, v);
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    if (edges_.count(key)) throw Error(Errc::duplicate_edge, "edge already present");
    metrics_.reset();
    FlipTrace tr;
    for (long long i = 0; i < params_.b; ++i) {
        // Each copy leaves the endpoint whose out-degree is currently
        // smaller; ties leave the first argument.
        if (g_.out_degree(u) <= g_.out_degree(v))
            arc_insert(u, v, tr);
        else
            arc_insert(v, u, tr);
    }
    edges_.insert(key);
    metrics_.chain_length = tr.chain_length;
    metrics_.recourse = tr.recourse();
    return tr;
}

FlipTrace Engine::delete_edge(Vertex u, Vertex v) {
    check_ids(u, v);
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    if (!edges_.count(key)) throw Error(Errc::missing_edge, "edge not present");
    metrics_.reset();
    FlipTrace tr;
    for (long long i = 0; i < params_.b; ++i) {
        // Remove copies of the surviving direction, u->v copies first.
        const auto* a = g_.find_arc(u, v);
        if (a && a->count >= 1)
            arc_delete(u, v, tr);
        else
            arc_delete(v, u, tr);
    }
    edges_.erase(key);
    metrics_.chain_length = tr.chain_length;
    metrics_.recourse = tr.recourse();
    return tr;
}

}  // namespace orient
