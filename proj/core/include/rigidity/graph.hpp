#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace rigidity {

struct Edge {
    int u = 0, v = 0;  // u < v after Graph normalization
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple graph on vertices 0..n-1. The edge list is kept sorted
// lexicographically; this order defines matrix column order everywhere.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;  // ascending
    std::uint64_t hash() const;               // FNV-1a over n and the edge list

private:
    int n_;
    std::vector<Edge> edges_;
};

Graph complete_graph(int n);
Graph complete_bipartite(int n, int m);

// Hub vertices 0..d-1 joined to everything; |E| = d*n - d(d+1)/2.
Graph generalized_star(int n, int d);

// Positive per-vertex weight function.
class WeightFn {
public:
    explicit WeightFn(std::vector<double> values);
    static WeightFn ones(int n);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    double operator()(int v) const;
    const std::vector<double>& values() const noexcept { return values_; }
    bool integer_valued() const;

private:
    std::vector<double> values_;
};

// Correspondence between blow-up vertex ids and (original vertex, copy)
// pairs. Copies are contiguous, grouped by original vertex in ascending
// order; copy numbers are 1-based.
class BlowupIndex {
public:
    explicit BlowupIndex(std::vector<int> copies);

    int id(int v, int copy) const;                // copy in 1..copies(v)
    std::pair<int, int> original(int id) const;   // (v, copy)
    int copies(int v) const;
    int original_count() const { return static_cast<int>(counts_.size()); }
    int total() const { return offsets_.back(); }

private:
    std::vector<int> counts_;
    std::vector<int> offsets_;  // prefix sums, size counts_+1
};

struct BlowupResult {
    Graph graph;
    BlowupIndex index;
};

// Replace each vertex v by an independent set of a(v) copies; copies of
// adjacent vertices become completely joined. a must be integer-valued.
BlowupResult blow_up(const Graph& g, const WeightFn& a);

}  // namespace rigidity
