#include "orient/graph.hpp"

#include <algorithm>
#include <limits>

#include "orient/error.hpp"

namespace orient {

OrientedMultigraph::OrientedMultigraph(int n, const Parameters& params)
    : params_(&params),
      ranks_(params.one_plus_lambda()),
      dplus_(n, 0),
      out_(n),
      in_(n) {}

OrientedMultigraph::~OrientedMultigraph() {
    for (auto& m : out_)
        for (auto& [v, arc] : m) {
            (void)v;
            delete arc;
        }
}

long long OrientedMultigraph::max_out_degree() const {
    long long m = 0;
    for (long long d : dplus_) m = std::max(m, d);
    return m;
}

OrientedMultigraph::Arc* OrientedMultigraph::find_arc(Vertex u, Vertex v) {
    auto it = out_[u].find(v);
    return it == out_[u].end() ? nullptr : it->second;
}

const OrientedMultigraph::Arc* OrientedMultigraph::find_arc(Vertex u, Vertex v) const {
    auto it = out_[u].find(v);
    return it == out_[u].end() ? nullptr : it->second;
}

std::pair<OrientedMultigraph::Arc*, bool> OrientedMultigraph::add_arc(Vertex u, Vertex v,
                                                                      long long in_key) {
    ++dplus_[u];
    ++total_arcs_;
    if (Arc* a = find_arc(u, v)) {
        ++a->count;
        return {a, false};
    }
    Arc* a = new Arc{u, v};
    a->count = 1;
    a->in_node = in_[v].insert(u, in_key);
    out_[u].emplace(v, a);
    return {a, true};
}

bool OrientedMultigraph::remove_arc(Vertex u, Vertex v) {
    Arc* a = find_arc(u, v);
    if (!a) throw Error(Errc::missing_arc, "arc not present");
    --dplus_[u];
    --total_arcs_;
    if (--a->count > 0) return false;
    in_[v].erase(a->in_node);
    out_[u].erase(v);
    delete a;
    return true;
}

std::optional<Vertex> OrientedMultigraph::first_max_in_neighbor(Vertex u) const {
    const BucketList::Node* n = in_[u].first_max();
    if (!n) return std::nullopt;
    return n->v;
}

long long OrientedMultigraph::home_bucket_key(Vertex u) const {
    const long long d = dplus_[u];
    const long long b4 = params_->floor_b4;
    // floor-log of a max is the max of floor-logs, and multiplying by
    // (1+lambda) shifts the rank by exactly one breakpoint level.
    long long key = kNegInfKey;
    if (d >= 1) key = ranks_.rank(d) + 1;
    if (b4 >= 1) key = std::max(key, ranks_.rank(b4));
    return key;
}

namespace {

InvariantReport walk_arcs(const OrientedMultigraph& g, const Parameters& p, bool with_escape) {
    InvariantReport rep;
    const Rational slack = p.one_plus_eta_over_b();
    for (Vertex u = 0; u < g.n(); ++u) {
        for (const auto& [v, arc] : g.out(u)) {
            (void)arc;
            Rational bound = slack * Rational(g.out_degree(v)) + Rational(2 * p.theta);
            if (with_escape) bound = std::max(bound, Rational(p.floor_b2));
            const Rational du(g.out_degree(u));
            if (bound == Rational(0)) {
                if (du > Rational(0)) {
                    rep.ok = false;
                    rep.worst_u = u;
                    rep.worst_v = v;
                    rep.worst_ratio = Rational(std::numeric_limits<int>::max());
                }
                continue;
            }
            const Rational ratio = du / bound;
            if (ratio > rep.worst_ratio) {
                rep.worst_ratio = ratio;
                rep.worst_u = u;
                rep.worst_v = v;
            }
            if (du > bound) rep.ok = false;
        }
    }
    return rep;
}

}  // namespace

InvariantReport check_invariant_theta(const OrientedMultigraph& g, const Parameters& p) {
    return walk_arcs(g, p, /*with_escape=*/false);
}

InvariantReport check_invariant_theta_prime(const OrientedMultigraph& g, const Parameters& p) {
    return walk_arcs(g, p, /*with_escape=*/true);
}

}  // namespace orient
