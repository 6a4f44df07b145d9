#include "orient/density.hpp"

#include <algorithm>

namespace orient {

DensityMonitor::DensityMonitor(const Engine& engine)
    : engine_(&engine),
      params_(&engine.params()),
      deg_(params_->n_capacity, 0),
      fenwick_(static_cast<size_t>(params_->n_capacity) * params_->b + 2, 0),
      rounded_out_(params_->n_capacity, 0) {
    // Every vertex starts at degree 0 (Fenwick index 1).
    for (size_t i = 1; i < fenwick_.size(); i += i & (~i + 1))
        fenwick_[i] += params_->n_capacity;
    for (Vertex v = 0; v < engine.graph().n(); ++v)
        if (engine.graph().out_degree(v) > 0) rekey(v, 0, engine.graph().out_degree(v));
    for (const auto& [u, v] : engine.edges()) refresh_edge(u, v);
}

void DensityMonitor::rekey(Vertex v, long long from, long long to) {
    // Fenwick over degree values, 1-based on degree+1; prefix(d) = #{deg <= d}.
    auto bump = [&](long long d, long long delta) {
        for (size_t i = static_cast<size_t>(d) + 1; i < fenwick_.size(); i += i & (~i + 1))
            fenwick_[i] += delta;
    };
    bump(from, -1);
    bump(to, 1);
    if (from >= 1) {
        auto it = members_.find(from);
        it->second.erase(v);
        if (it->second.empty()) members_.erase(it);
    }
    if (to >= 1) members_[to].insert(v);
    deg_[v] = to;
}

void DensityMonitor::refresh_edge(Vertex a, Vertex b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    const auto old = dir_.find(e);
    const OrientedMultigraph& g = engine_->graph();
    const auto* fwd = g.find_arc(e.first, e.second);
    const auto* rev = g.find_arc(e.second, e.first);
    const long long cf = fwd ? fwd->count : 0;
    const long long cr = rev ? rev->count : 0;
    if (old != dir_.end()) {
        --rounded_out_[old->second ? e.first : e.second];
        dir_.erase(old);
    }
    if (cf == 0 && cr == 0) return;  // edge gone
    const bool forward = cf >= cr;   // tie: direct from the smaller id
    dir_[e] = forward;
    ++rounded_out_[forward ? e.first : e.second];
}

void DensityMonitor::apply(const FlipTrace& tr) {
    std::map<Vertex, long long> delta;
    std::set<Edge> touched;
    for (const ArcEvent& ev : tr.events) {
        switch (ev.kind) {
            case ArcEvent::Kind::add: ++delta[ev.u]; break;
            case ArcEvent::Kind::remove: --delta[ev.u]; break;
            case ArcEvent::Kind::flip:
                --delta[ev.u];
                ++delta[ev.v];
                break;
        }
        touched.insert({std::min(ev.u, ev.v), std::max(ev.u, ev.v)});
    }
    for (const auto& [v, d] : delta)
        if (d != 0) rekey(v, deg_[v], deg_[v] + d);
    for (const auto& [u, v] : touched) refresh_edge(u, v);
}

long long DensityMonitor::max_out_degree() const {
    return members_.empty() ? 0 : members_.rbegin()->first;
}

long long DensityMonitor::count_at_least(long long d) const {
    // total minus prefix(d-1).
    long long below = 0;
    for (size_t i = static_cast<size_t>(d); i > 0; i -= i & (~i + 1)) below += fenwick_[i];
    return static_cast<long long>(deg_.size()) - below;
}

LevelSetReport DensityMonitor::extract_dense_subgraph() const {
    LevelSetReport rep;
    const long long delta = max_out_degree();
    rep.estimate = density_estimate();
    if (delta == 0) return rep;

    const Rational base = params_->one_plus_eta_over_b();
    // d+(v) >= Delta / base^i  <=>  d+(v) >= ceil(Delta / base^i).
    auto threshold = [&](long long i) {
        return to_long(ceil_rational(Rational(delta) / rational_pow(base, i)));
    };
    auto size_of = [&](long long i) { return count_at_least(std::max<long long>(threshold(i), 1)); };

    long long k = 0;
    long long cur = size_of(0), next = size_of(1);
    while (Rational(next) >= (Rational(1) + params_->gamma) * Rational(cur)) {
        ++k;
        cur = next;
        next = size_of(k + 1);
    }
    rep.k = k;
    for (long long i = 0; i <= k + 1; ++i) rep.sizes.push_back(size_of(i));

    // Walk the degree lists top-down; exactly |T_{k+1}| vertices are emitted.
    // The density guarantee attaches to T_{k+1}: every arc leaving a T_k
    // vertex lands in T_{k+1}, so E[T_{k+1}] >= |T_k| * V_k, while T_k itself
    // can miss those edges entirely.
    const long long vk = std::max<long long>(threshold(k + 1), 1);
    for (auto it = members_.rbegin(); it != members_.rend() && it->first >= vk; ++it)
        for (Vertex v : it->second) rep.vertices.push_back(v);
    return rep;
}

bool DensityMonitor::rounded_direction(Vertex u, Vertex v) const {
    const Edge e{std::min(u, v), std::max(u, v)};
    const auto it = dir_.find(e);
    if (it == dir_.end()) return false;
    return it->second == (u == e.first);
}

long long DensityMonitor::rounded_max_out_degree() const {
    return *std::max_element(rounded_out_.begin(), rounded_out_.end());
}

bool DensityMonitor::consistent() const {
    const OrientedMultigraph& g = engine_->graph();
    if (max_out_degree() != g.max_out_degree()) return false;
    std::vector<long long> rounded(deg_.size(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (deg_[v] != g.out_degree(v)) return false;
        if (g.out_degree(v) >= 1 && count_at_least(g.out_degree(v)) < 1) return false;
    }
    for (const auto& [u, v] : engine_->edges()) {
        const auto* fwd = g.find_arc(u, v);
        const auto* rev = g.find_arc(v, u);
        const long long cf = fwd ? fwd->count : 0;
        const long long cr = rev ? rev->count : 0;
        const bool forward = cf >= cr;
        if (rounded_direction(u, v) != forward) return false;
        ++rounded[forward ? u : v];
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (rounded[v] != rounded_out_[v]) return false;
    // Spot-check the Fenwick against the degree array.
    for (long long d : {1LL, 2LL, 3LL, 5LL, 8LL, g.max_out_degree() + 1}) {
        if (d < 1) continue;
        long long brute = 0;
        for (long long x : deg_)
            if (x >= d) ++brute;
        if (count_at_least(d) != brute) return false;
    }
    return true;
}

}  // namespace orient
