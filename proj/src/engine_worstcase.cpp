#include "orient/engine_worstcase.hpp"

#include <algorithm>
#include <cstdlib>

namespace orient {

WorstCaseEngine::WorstCaseEngine(const Parameters& params)
    : Engine(params), cursor_(params.n_capacity, nullptr) {}

WorstCaseEngine::~WorstCaseEngine() {
    for (Vertex u = 0; u < g_.n(); ++u) {
        RingNode* c = cursor_[u];
        if (!c) continue;
        c->prev->next = nullptr;  // cut the ring open
        while (c) {
            RingNode* nx = c->next;
            delete c;
            c = nx;
        }
    }
}

void WorstCaseEngine::ring_insert(Vertex u, Arc* arc) {
    RingNode* n = new RingNode{arc->to, nullptr, nullptr};
    arc->out_hook = n;
    RingNode*& cur = cursor_[u];
    if (!cur) {
        n->prev = n->next = n;
        cur = n;
        return;
    }
    // Immediately before the cursor: it becomes the last one visited.
    n->prev = cur->prev;
    n->next = cur;
    cur->prev->next = n;
    cur->prev = n;
}

void WorstCaseEngine::ring_erase(Vertex u, RingNode* node) {
    RingNode*& cur = cursor_[u];
    if (node->next == node) {
        cur = nullptr;
    } else {
        if (cur == node) cur = node->next;
        node->prev->next = node->next;
        node->next->prev = node->prev;
    }
    delete node;
}

Vertex WorstCaseEngine::ring_step(Vertex u) {
    RingNode* c = cursor_[u];
    cursor_[u] = c->next;
    ++metrics_.cursor_advances;
    return c->v;
}

WorstCaseEngine::Arc* WorstCaseEngine::add_copy(Vertex a, Vertex b) {
    const long long d = g_.out_degree(a) + 1;
    const long long key = g_.rank(d);
    auto [arc, fresh] = g_.add_arc(a, b, key);
    ++metrics_.arcs_touched;
    if (fresh) {
        arc->perceived_rank = key;
        arc->deg_at_refresh = d;
        ring_insert(a, arc);
        ++metrics_.bucket_moves;
    }
    return arc;
}

void WorstCaseEngine::remove_copy(Vertex a, Vertex b) {
    Arc* arc = g_.find_arc(a, b);
    RingNode* hook = arc ? static_cast<RingNode*>(arc->out_hook) : nullptr;
    ++metrics_.arcs_touched;
    if (g_.remove_arc(a, b)) {
        ring_erase(a, hook);
        ++metrics_.bucket_moves;
    }
}

void WorstCaseEngine::refresh_perceived(Vertex u, Vertex w) {
    Arc* a = g_.find_arc(u, w);
    if (!a) return;  // the adjacency died during the recursion
    const long long r = g_.rank(g_.out_degree(u));
    a->perceived_rank = r;
    a->deg_at_refresh = g_.out_degree(u);
    metrics_.bucket_moves += g_.in_buckets(w).move(a->in_node, r);
}

void WorstCaseEngine::arc_insert(Vertex u, Vertex v, FlipTrace& tr) {
    struct Frame {
        Vertex who;
        std::vector<Vertex> visited;
    };
    std::vector<Frame> frames;
    long long chain = 0;
    Vertex cur = u, tgt = v;
    tr.events.push_back({ArcEvent::Kind::add, u, v});
    for (;;) {
        add_copy(cur, tgt);
        // The arc to tgt was just keyed at the transient degree; treat it as
        // visited so the unwind below re-keys it at the settled degree.
        Frame fr{cur, {tgt}};
        Vertex flipped = -1;
        const long long limit =
            std::min<long long>(params_.scan_budget, static_cast<long long>(g_.out(cur).size()));
        for (long long i = 0; i < limit; ++i) {
            const Vertex x = ring_step(cur);
            fr.visited.push_back(x);
            if (params_.exceeds_flip_threshold(g_.out_degree(cur), g_.out_degree(x))) {
                remove_copy(cur, x);  // restores d+(cur)
                tr.events.push_back({ArcEvent::Kind::flip, cur, x});
                ++chain;
                flipped = x;
                break;
            }
        }
        frames.push_back(std::move(fr));
        if (flipped < 0) break;
        tgt = cur;
        cur = flipped;
    }
    // Perceived-rank refresh of each level's visited list runs after its
    // recursive call returns, i.e. deepest level first.
    for (auto it = frames.rbegin(); it != frames.rend(); ++it)
        for (const Vertex x : it->visited) refresh_perceived(it->who, x);
    note_chain(tr, chain);
}

void WorstCaseEngine::arc_delete(Vertex u, Vertex v, FlipTrace& tr) {
    long long chain = 0;
    Vertex cur = u;
    remove_copy(cur, v);
    tr.events.push_back({ArcEvent::Kind::remove, u, v});
    for (;;) {
        const auto x = g_.first_max_in_neighbor(cur);
        if (x && params_.exceeds_flip_threshold(g_.out_degree(*x), g_.out_degree(cur))) {
            add_copy(cur, *x);  // restores d+(cur)
            remove_copy(*x, cur);
            tr.events.push_back({ArcEvent::Kind::flip, *x, cur});
            ++chain;
            cur = *x;
            continue;
        }
        // Terminal vertex: its degree changed for good, so walk the next
        // budgeted stretch of N+(cur) refreshing its perceived rank there.
        const long long limit =
            std::min<long long>(params_.scan_budget, static_cast<long long>(g_.out(cur).size()));
        for (long long i = 0; i < limit; ++i) refresh_perceived(cur, ring_step(cur));
        break;
    }
    note_chain(tr, chain);
}

bool WorstCaseEngine::audit_perceived_ranks() const {
    for (Vertex u = 0; u < g_.n(); ++u)
        for (const auto& [w, arc] : g_.out(u)) {
            (void)w;
            if (std::llabs(arc->perceived_rank - g_.rank(g_.out_degree(u))) > 1) return false;
        }
    return true;
}

bool WorstCaseEngine::audit_refresh_drift() const {
    const BigInt p = params_.lambda.numerator(), q = params_.lambda.denominator();
    for (Vertex u = 0; u < g_.n(); ++u)
        for (const auto& [w, arc] : g_.out(u)) {
            (void)w;
            const BigInt d2q = BigInt(g_.out_degree(u)) * 2 * q;
            const BigInt dar = BigInt(arc->deg_at_refresh);
            if (d2q < dar * (2 * q - p) || d2q > dar * (2 * q + p)) return false;
        }
    return true;
}

}  // namespace orient
