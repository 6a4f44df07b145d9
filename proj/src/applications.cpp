#include "orient/applications.hpp"

#include <algorithm>

namespace orient {

namespace {

// Applies one arc event to an in/out adjacency view (b = 1: at most one arc
// per ordered pair).
void track(std::vector<std::set<Vertex>>& in, std::vector<std::set<Vertex>>& out,
           const ArcEvent& ev) {
    switch (ev.kind) {
        case ArcEvent::Kind::add:
            out[ev.u].insert(ev.v);
            in[ev.v].insert(ev.u);
            break;
        case ArcEvent::Kind::remove:
            out[ev.u].erase(ev.v);
            in[ev.v].erase(ev.u);
            break;
        case ArcEvent::Kind::flip:
            out[ev.u].erase(ev.v);
            in[ev.v].erase(ev.u);
            out[ev.v].insert(ev.u);
            in[ev.u].insert(ev.v);
            break;
    }
}

}  // namespace

void MatchingOverlay::apply(const FlipTrace& tr) {
    if (tr.events.empty()) return;
    for (const ArcEvent& ev : tr.events) track(in_, out_, ev);
    const ArcEvent& top = tr.events.front();  // the edge-level add/remove
    if (top.kind == ArcEvent::Kind::add) {
        if (partner_[top.u] < 0 && partner_[top.v] < 0) {
            partner_[top.u] = top.v;
            partner_[top.v] = top.u;
        }
        return;
    }
    if (partner_[top.u] == top.v) {
        partner_[top.u] = partner_[top.v] = -1;
        try_match(top.u);
        try_match(top.v);
    }
}

void MatchingOverlay::try_match(Vertex v) {
    if (partner_[v] >= 0) return;
    for (const auto* side : {&in_[v], &out_[v]})
        for (Vertex w : *side)
            if (partner_[w] < 0) {
                partner_[v] = w;
                partner_[w] = v;
                return;
            }
}

long long MatchingOverlay::size() const {
    long long matched = 0;
    for (Vertex w : partner_)
        if (w >= 0) ++matched;
    return matched / 2;
}

void ColoringOverlay::apply(const FlipTrace& tr) {
    if (tr.events.empty()) return;
    for (const ArcEvent& ev : tr.events) track(in_, out_, ev);
    const ArcEvent& top = tr.events.front();
    if (top.kind == ArcEvent::Kind::add) {
        if (color_[top.u] == color_[top.v]) recolor(top.u);
    } else {
        if (color_[top.u] > degree(top.u)) recolor(top.u);
        if (color_[top.v] > degree(top.v)) recolor(top.v);
    }
}

void ColoringOverlay::recolor(Vertex v) {
    std::set<long long> taken;
    for (const auto* side : {&in_[v], &out_[v]})
        for (Vertex w : *side) taken.insert(color_[w]);
    long long c = 0;
    while (taken.count(c)) ++c;  // <= degree(v) neighbours, so c <= degree(v)
    color_[v] = c;
}

void ForestOverlay::apply(const FlipTrace& tr) {
    for (const ArcEvent& ev : tr.events) {
        switch (ev.kind) {
            case ArcEvent::Kind::add: add(ev.u, ev.v); break;
            case ArcEvent::Kind::remove: remove(ev.u, ev.v); break;
            case ArcEvent::Kind::flip:
                remove(ev.u, ev.v);
                add(ev.v, ev.u);
                break;
        }
    }
}

int ForestOverlay::pick_half(Vertex head, int slot) const {
    // The head's own out-edge in pseudoforest S_slot, if any, blocks one half.
    if (slot < static_cast<int>(slots_[head].size())) {
        const auto it = half_.find({head, slots_[head][slot]});
        if (it != half_.end()) return 1 - it->second;
    }
    return 0;
}

void ForestOverlay::add(Vertex u, Vertex v) {
    const int slot = static_cast<int>(slots_[u].size());
    slots_[u].push_back(v);
    half_[{u, v}] = pick_half(v, slot);
}

void ForestOverlay::remove(Vertex u, Vertex v) {
    auto& s = slots_[u];
    const auto pos = std::find(s.begin(), s.end(), v);
    const int slot = static_cast<int>(pos - s.begin());
    half_.erase({u, v});
    const Vertex last = s.back();
    s.pop_back();
    if (last != v) {
        // Backfill: the last out-edge moves from S_{old} into S_slot, which
        // re-runs the half rule at its new pseudoforest.
        s[slot] = last;
        half_[{u, last}] = pick_half(last, slot);
    }
}

int ForestOverlay::forest_of(Vertex u, Vertex v) const {
    const auto pos = std::find(slots_[u].begin(), slots_[u].end(), v);
    const int slot = static_cast<int>(pos - slots_[u].begin());
    return 2 * slot + half_.at({u, v});
}

std::map<Edge, int> ForestOverlay::snapshot() const {
    std::map<Edge, int> out;
    for (Vertex u = 0; u < static_cast<Vertex>(slots_.size()); ++u)
        for (Vertex v : slots_[u])
            out[{std::min(u, v), std::max(u, v)}] = forest_of(u, v);
    return out;
}

long long ForestOverlay::max_out_degree() const {
    size_t best = 0;
    for (const auto& s : slots_) best = std::max(best, s.size());
    return static_cast<long long>(best);
}

void MatVecOverlay::replay(const FlipTrace& tr, const Rational& w) {
    for (const ArcEvent& ev : tr.events) {
        // Only this edge's events carry weight w; flips of other edges use
        // their own stored weight.
        const Edge e{std::min(ev.u, ev.v), std::max(ev.u, ev.v)};
        const auto it = weight_.find(e);
        const Rational a = it != weight_.end() ? it->second : w;
        switch (ev.kind) {
            case ArcEvent::Kind::add: s_[ev.v] += a * x_[ev.u]; break;
            case ArcEvent::Kind::remove: s_[ev.v] -= a * x_[ev.u]; break;
            case ArcEvent::Kind::flip:
                s_[ev.v] -= a * x_[ev.u];
                s_[ev.u] += a * x_[ev.v];
                break;
        }
    }
}

void MatVecOverlay::set_entry(Vertex i, Vertex j, const Rational& value) {
    const Edge e{std::min(i, j), std::max(i, j)};
    const auto it = weight_.find(e);
    if (it == weight_.end()) {
        if (value == Rational(0)) return;
        weight_[e] = value;
        replay(engine_->insert_edge(e.first, e.second), value);
        return;
    }
    if (value == Rational(0)) {
        replay(engine_->delete_edge(e.first, e.second), it->second);
        weight_.erase(it);
        return;
    }
    // Reweight in place: adjust the head's sum by the delta.
    const Rational delta = value - it->second;
    const auto* fwd = engine_->graph().find_arc(e.first, e.second);
    const Vertex tail = fwd ? e.first : e.second;
    const Vertex head = fwd ? e.second : e.first;
    s_[head] += delta * x_[tail];
    it->second = value;
}

void MatVecOverlay::set_x(Vertex j, const Rational& value) {
    const Rational delta = value - x_[j];
    for (const auto& [i, arc] : engine_->graph().out(j)) {
        (void)arc;
        const Edge e{std::min(i, j), std::max(i, j)};
        s_[i] += weight_.at(e) * delta;
    }
    x_[j] = value;
}

Rational MatVecOverlay::query(Vertex i) const {
    Rational r = diag_[i] * x_[i] + s_[i];
    for (const auto& [j, arc] : engine_->graph().out(i)) {
        (void)arc;
        const Edge e{std::min(i, j), std::max(i, j)};
        r += weight_.at(e) * x_[j];
    }
    return r;
}

}  // namespace orient
