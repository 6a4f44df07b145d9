#pragma once

#include <map>
#include <set>
#include <vector>

#include "orient/engine.hpp"
#include "orient/oracles.hpp"

namespace orient {

// The overlays below consume FlipTraces of a theta=1, b=1 engine (one arc per
// edge) and maintain their own oriented adjacency views. All tie-breaks are by
// ascending vertex id so runs are reproducible.

// Maximal matching. A free vertex first tries its in-neighbours, then
// proposes to its out-neighbours; an edge update can only free or bind its
// two endpoints, so re-resolving those two restores maximality.
class MatchingOverlay {
public:
    explicit MatchingOverlay(int n) : partner_(n, -1), in_(n), out_(n) {}

    void apply(const FlipTrace& tr);

    Vertex partner(Vertex v) const { return partner_[v]; }
    const std::vector<Vertex>& partners() const { return partner_; }
    long long size() const;

private:
    void try_match(Vertex v);

    std::vector<Vertex> partner_;
    std::vector<std::set<Vertex>> in_, out_;
};

// Delta+1 colouring: every vertex keeps a colour in [0, degree(v)]. At most
// one vertex is recoloured per edge update; recolouring picks the smallest
// colour unused by any neighbour (in- or out-).
class ColoringOverlay {
public:
    explicit ColoringOverlay(int n) : color_(n, 0), in_(n), out_(n) {}

    void apply(const FlipTrace& tr);

    long long color(Vertex v) const { return color_[v]; }
    const std::vector<long long>& colors() const { return color_; }

private:
    long long degree(Vertex v) const {
        return static_cast<long long>(in_[v].size() + out_[v].size());
    }
    void recolor(Vertex v);

    std::vector<long long> color_;
    std::vector<std::set<Vertex>> in_, out_;
};

// Arboricity decomposition: the i'th out-edge slot of each vertex defines
// pseudoforest S_i; each S_i is split into two forests by giving every edge
// the half opposite to the one held by its head's out-edge in S_i. Forest id
// of an edge in slot i, half h is 2i + h.
class ForestOverlay {
public:
    explicit ForestOverlay(int n) : slots_(n) {}

    void apply(const FlipTrace& tr);

    // Forest id of the edge currently oriented u->v.
    int forest_of(Vertex u, Vertex v) const;
    // Normalized-edge snapshot for the acyclicity checker.
    std::map<Edge, int> snapshot() const;
    long long max_out_degree() const;

private:
    void add(Vertex u, Vertex v);
    void remove(Vertex u, Vertex v);
    int pick_half(Vertex head, int slot) const;

    std::vector<std::vector<Vertex>> slots_;         // slots_[u][i] = head of u's i'th out-edge
    std::map<std::pair<Vertex, Vertex>, int> half_;  // oriented edge -> 0/1
};

// Dynamic (A x)_i for a symmetric sparse matrix. Off-diagonal support changes
// drive the attached engine (zero -> nonzero inserts the edge, nonzero ->
// zero deletes it); each vertex stores s_i, the part of (Ax)_i contributed by
// in-neighbours, so queries only walk out-neighbours.
class MatVecOverlay {
public:
    explicit MatVecOverlay(Engine& engine)
        : engine_(&engine),
          diag_(engine.params().n_capacity, Rational(0)),
          x_(engine.params().n_capacity, Rational(0)),
          s_(engine.params().n_capacity, Rational(0)) {}

    void set_entry(Vertex i, Vertex j, const Rational& value);  // i != j
    void set_diag(Vertex i, const Rational& value) { diag_[i] = value; }
    void set_x(Vertex j, const Rational& value);
    Rational query(Vertex i) const;

    const std::map<Edge, Rational>& offdiag() const { return weight_; }
    const std::vector<Rational>& diag() const { return diag_; }
    const std::vector<Rational>& x() const { return x_; }

private:
    void replay(const FlipTrace& tr, const Rational& w);

    Engine* engine_;
    std::map<Edge, Rational> weight_;
    std::vector<Rational> diag_, x_, s_;
};

}  // namespace orient
