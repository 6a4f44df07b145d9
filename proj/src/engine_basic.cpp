#include "orient/engine_basic.hpp"

#include <cassert>

namespace orient {

BasicEngine::Arc* BasicEngine::add_copy(Vertex a, Vertex b) {
    const long long key = g_.rank(g_.out_degree(a) + 1);
    auto [arc, fresh] = g_.add_arc(a, b, key);
    ++metrics_.arcs_touched;
    if (fresh) ++metrics_.bucket_moves;
    return arc;
}

void BasicEngine::remove_copy(Vertex a, Vertex b) {
    ++metrics_.arcs_touched;
    if (g_.remove_arc(a, b)) ++metrics_.bucket_moves;
}

void BasicEngine::refresh_out_keys(Vertex u) {
    const long long key = g_.rank(g_.out_degree(u));
    for (const auto& [w, arc] : g_.out(u))
        metrics_.bucket_moves += g_.in_buckets(w).move(arc->in_node, key);
}

Vertex BasicEngine::argmin_out(Vertex u) const {
    Vertex best = -1;
    long long bd = 0;
    for (const auto& [w, arc] : g_.out(u)) {
        (void)arc;
        if (best < 0 || g_.out_degree(w) < bd) {
            best = w;
            bd = g_.out_degree(w);
        }
    }
    return best;
}

void BasicEngine::arc_insert(Vertex u, Vertex v, FlipTrace& tr) {
    long long chain = 0;
    Vertex cur = u, tgt = v;
    tr.events.push_back({ArcEvent::Kind::add, u, v});
    for (;;) {
        add_copy(cur, tgt);
        const Vertex x = argmin_out(cur);
        if (x < 0 || !params_.exceeds_flip_threshold(g_.out_degree(cur), g_.out_degree(x))) {
            refresh_out_keys(cur);
            break;
        }
        remove_copy(cur, x);  // restores d+(cur)
        tr.events.push_back({ArcEvent::Kind::flip, cur, x});
        ++chain;
        // The copy added above keyed cur at its transient degree; now that the
        // flip restored it, put that single membership back where it belongs.
        if (Arc* a = g_.find_arc(cur, tgt))
            metrics_.bucket_moves += g_.in_buckets(tgt).move(a->in_node, g_.rank(g_.out_degree(cur)));
        tgt = cur;
        cur = x;
    }
    note_chain(tr, chain);
}

void BasicEngine::arc_delete(Vertex u, Vertex v, FlipTrace& tr) {
    long long chain = 0;
    Vertex cur = u;
    remove_copy(cur, v);
    tr.events.push_back({ArcEvent::Kind::remove, u, v});
    for (;;) {
        const auto x = g_.first_max_in_neighbor(cur);
        if (!x || !params_.exceeds_flip_threshold(g_.out_degree(*x), g_.out_degree(cur))) {
            refresh_out_keys(cur);
            break;
        }
        add_copy(cur, *x);  // restores d+(cur)
        remove_copy(*x, cur);
        tr.events.push_back({ArcEvent::Kind::flip, *x, cur});
        ++chain;
        cur = *x;
    }
    note_chain(tr, chain);
}

}  // namespace orient
