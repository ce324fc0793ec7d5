#include "rigidity/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rigidity {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("graph: duplicate edge");
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("degree: vertex out of range");
    int d = 0;
    for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("neighbors: vertex out of range");
    std::vector<int> nb;
    for (const Edge& e : edges_) {
        if (e.u == v) nb.push_back(e.v);
        else if (e.v == v) nb.push_back(e.u);
    }
    std::sort(nb.begin(), nb.end());
    return nb;
}

std::uint64_t Graph::hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (const Edge& e : edges_) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
    }
    return h;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("complete_bipartite: need n, m >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * m);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v) edges.push_back({u, n + v});
    return Graph(n + m, std::move(edges));
}

Graph generalized_star(int n, int d) {
    if (d < 1) throw std::invalid_argument("generalized_star: need d >= 1");
    if (n <= d) throw std::invalid_argument("generalized_star: need n >= d + 1");
    std::vector<Edge> edges;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

WeightFn::WeightFn(std::vector<double> values) : values_(std::move(values)) {
    for (double x : values_)
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::invalid_argument("weights: values must be positive and finite");
}

WeightFn WeightFn::ones(int n) {
    if (n < 0) throw std::invalid_argument("weights: negative size");
    return WeightFn(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

double WeightFn::operator()(int v) const {
    if (v < 0 || v >= size()) throw std::invalid_argument("weights: vertex out of range");
    return values_[static_cast<std::size_t>(v)];
}

bool WeightFn::integer_valued() const {
    for (double x : values_)
        if (x != std::floor(x)) return false;
    return true;
}

BlowupIndex::BlowupIndex(std::vector<int> copies) : counts_(std::move(copies)) {
    offsets_.resize(counts_.size() + 1, 0);
    for (std::size_t v = 0; v < counts_.size(); ++v) {
        if (counts_[v] < 1) throw std::invalid_argument("blow-up index: copy counts must be >= 1");
        offsets_[v + 1] = offsets_[v] + counts_[v];
    }
}

int BlowupIndex::id(int v, int copy) const {
    if (v < 0 || v >= original_count()) throw std::invalid_argument("blow-up index: vertex out of range");
    if (copy < 1 || copy > counts_[static_cast<std::size_t>(v)])
        throw std::invalid_argument("blow-up index: copy number out of range");
    return offsets_[static_cast<std::size_t>(v)] + copy - 1;
}

std::pair<int, int> BlowupIndex::original(int id) const {
    if (id < 0 || id >= total()) throw std::invalid_argument("blow-up index: id out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
    int v = static_cast<int>(it - offsets_.begin()) - 1;
    return {v, id - offsets_[static_cast<std::size_t>(v)] + 1};
}

int BlowupIndex::copies(int v) const {
    if (v < 0 || v >= original_count()) throw std::invalid_argument("blow-up index: vertex out of range");
    return counts_[static_cast<std::size_t>(v)];
}

BlowupResult blow_up(const Graph& g, const WeightFn& a) {
    if (a.size() != g.vertex_count())
        throw std::invalid_argument("blow_up: weight count differs from vertex count");
    if (!a.integer_valued()) throw std::invalid_argument("blow_up: copy counts must be integers");

    std::vector<int> counts(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) counts[static_cast<std::size_t>(v)] = static_cast<int>(a(v));
    BlowupIndex idx(std::move(counts));

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        for (int i = 1; i <= idx.copies(e.u); ++i)
            for (int j = 1; j <= idx.copies(e.v); ++j) edges.push_back({idx.id(e.u, i), idx.id(e.v, j)});

    return BlowupResult{Graph(idx.total(), std::move(edges)), std::move(idx)};
}

}  // namespace rigidity
