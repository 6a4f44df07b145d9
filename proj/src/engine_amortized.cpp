#include "orient/engine_amortized.hpp"

#include <algorithm>

namespace orient {

AmortizedEngine::AmortizedEngine(const Parameters& params)
    : Engine(params), out_thresholds_(params.n_capacity) {}

AmortizedEngine::Arc* AmortizedEngine::add_copy(Vertex a, Vertex b) {
    const long long d = g_.out_degree(a) + 1;
    auto [arc, fresh] = g_.add_arc(a, b, g_.rank(d));
    ++metrics_.arcs_touched;
    if (fresh) {
        arc->phi = d;  // thresholds are born equal to the tail's out-degree
        arc->out_node = out_thresholds_[a].insert(b, d);
        ++metrics_.bucket_moves;
    }
    return arc;
}

void AmortizedEngine::remove_copy(Vertex a, Vertex b) {
    Arc* arc = g_.find_arc(a, b);
    BucketList::Node* out_node = arc ? arc->out_node : nullptr;
    ++metrics_.arcs_touched;
    if (g_.remove_arc(a, b)) {
        out_thresholds_[a].erase(out_node);
        ++metrics_.bucket_moves;
    }
}

void AmortizedEngine::set_phi(Arc* a, long long value) {
    a->phi = value;
    metrics_.bucket_moves += out_thresholds_[a->from].move(a->out_node, value);
    metrics_.bucket_moves += g_.in_buckets(a->to).move(a->in_node, g_.rank(value));
}

void AmortizedEngine::arc_insert(Vertex u, Vertex v, FlipTrace& tr) {
    long long chain = 0;
    Vertex cur = u, tgt = v;
    tr.events.push_back({ArcEvent::Kind::add, u, v});
    for (;;) {
        add_copy(cur, tgt);
        Vertex flipped = -1;
        BucketList& L = out_thresholds_[cur];
        while (!L.empty()) {
            const long long d = g_.out_degree(cur);
            if (d < params_.floor_b4 || !params_.at_least_lambda_factor(d, L.min_key())) break;
            ++metrics_.while_iterations;
            const Vertex x = L.first_min()->v;
            if (g_.out_degree(x) + 1 < d) {
                remove_copy(cur, x);  // restores d+(cur)
                tr.events.push_back({ArcEvent::Kind::flip, cur, x});
                ++chain;
                flipped = x;
                break;
            }
            // Flipping would not help; raise the threshold to the current
            // degree instead, which disqualifies x from this while-loop.
            set_phi(g_.find_arc(cur, x), d);
        }
        if (flipped < 0) break;
        tgt = cur;
        cur = flipped;
    }
    note_chain(tr, chain);
}

void AmortizedEngine::arc_delete(Vertex u, Vertex v, FlipTrace& tr) {
    long long chain = 0;
    Vertex cur = u;
    remove_copy(cur, v);
    tr.events.push_back({ArcEvent::Kind::remove, u, v});
    bool done = false;
    while (!done) {
        BucketList& in = g_.in_buckets(cur);
        bool recursed = false;
        BucketList::Bucket* bkt = in.top_bucket();
        while (bkt) {
            const long long key = bkt->key;
            const Vertex x = bkt->head->v;
            Arc* a = g_.find_arc(x, cur);
            ++metrics_.while_iterations;
            if (params_.exceeds_flip_threshold(g_.out_degree(x), g_.out_degree(cur))) {
                add_copy(cur, x);  // restores d+(cur)
                remove_copy(x, cur);
                tr.events.push_back({ArcEvent::Kind::flip, x, cur});
                ++chain;
                cur = x;
                recursed = true;
                break;
            }
            if (params_.stale_threshold(a->phi, g_.out_degree(x))) {
                // Lazy repair: the stored threshold ran ahead of the true
                // degree; lower it and keep scanning. The node lands in a
                // strictly lower bucket, so resume at this key or below.
                set_phi(a, g_.out_degree(x));
                bkt = in.top_bucket();
                while (bkt && bkt->key > key) bkt = bkt->lower;
                continue;
            }
            done = true;  // fresh non-violator: everyone below is fine too
            break;
        }
        if (!recursed) done = true;
    }
    note_chain(tr, chain);
}

bool AmortizedEngine::audit_tail_thresholds() const {
    for (Vertex u = 0; u < g_.n(); ++u)
        for (const auto& [x, arc] : g_.out(u)) {
            (void)x;
            const long long d = g_.out_degree(u);
            if (d > params_.floor_b4 && params_.stale_threshold(d, arc->phi)) return false;
        }
    return true;
}

bool AmortizedEngine::audit_head_thresholds() const {
    const Rational cube = rational_pow(params_.one_plus_lambda(), 3);
    for (Vertex u = 0; u < g_.n(); ++u)
        for (const auto& [z, arc] : g_.out(u)) {
            // The +1 covers the set sites that only guarantee phi <= d+(z)+1
            // (arc creation after dispatch, and the raise when a flip would
            // not make strict progress); for theta = 0 and d+(z) < 1/lambda
            // that slack is not absorbed by the multiplicative factor.
            const Rational bound =
                std::max(cube * Rational(g_.out_degree(z) + params_.theta + 1),
                         Rational(params_.floor_b4));
            if (Rational(arc->phi) > bound) return false;
        }
    return true;
}

}  // namespace orient
