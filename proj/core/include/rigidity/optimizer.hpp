#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/embedding.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

struct OptimizerConfig {
    int restarts = 16;
    int max_iters = 2000;    // per restart
    double tol = 1e-7;       // simplex function-value spread at convergence
    double half_width = 1.0; // initial coordinate box half-width
    std::uint64_t seed = 1;
    double coord_cap = 1e8;  // iterate coordinates are clamped to [-cap, cap]
};

// Coordinates i.i.d. uniform on [0, 1); identical output for identical
// (graph size, d, seed) regardless of platform.
Embedding random_generic_embedding(const Graph& g, int d, std::uint64_t seed);

struct GapCertificate {
    Embedding embedding;
    double gap = 0.0;            // spectral gap recomputed at the embedding
    std::uint64_t graph_hash = 0;
    int dimension = 0;
};

// Derivative-free maximization of the spectral gap over embeddings via
// Nelder-Mead with independent random restarts. The first min(n, d+1)
// vertices have their upper-triangle coordinates pinned to zero, which
// quotients out the trivial motions without shrinking the set of reachable
// congruence classes. Deterministic for a fixed config; ties across
// restarts resolve to the earliest restart.
GapCertificate maximize_spectral_gap(const Graph& g, int d, const OptimizerConfig& cfg = {});

namespace detail {

// Single Nelder-Mead run exposed for the monotonicity invariant tests:
// best_history[i] is the best objective value seen up to iteration i.
struct NelderMeadTrace {
    std::vector<double> best_x;
    double best_f = 0.0;
    std::vector<double> best_history;
};

NelderMeadTrace nelder_mead_maximize(const std::vector<double>& x0, double step,
                                     double (*objective)(const std::vector<double>&, const void*),
                                     const void* ctx, int max_iters, double tol, double coord_cap);

}  // namespace detail

}  // namespace rigidity
