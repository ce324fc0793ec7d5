#pragma once

#include <stdexcept>

#include "rigidity/embedding.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/matrix.hpp"

namespace rigidity {

// Raised when a bound is requested outside the hypotheses of the statement
// backing it (distinct from plain bad arguments).
struct OutOfHypothesisError : std::domain_error {
    using std::domain_error::domain_error;
};

// Eigenvalue sandwich for congruence by a nonsingular S, checked literally:
//   lambda_1(S S^T) lambda_i(H) <= lambda_i(S H S^T) <= lambda_n(S S^T) lambda_i(H).
// The product form holds as written only for lambda_i(H) >= 0 (it flips on
// negative eigenvalues), so H should be positive semidefinite.
// Returns true when every index satisfies both inequalities with slack
// >= -tol. S must be square and nonsingular (smallest singular value > tol).
bool ostrowski_check(const Matrix& h, const Matrix& s, double tol);

struct ScalingConstants {
    double lower = 1.0;  // c
    double upper = 1.0;  // C
};

// Global factors comparing weighted and unweighted stiffness spectra:
//   upper = max_{uv in E} f(u)f(v) / min_V f,  lower = min_{uv in E} f(u)f(v) / max_V f.
ScalingConstants scaling_constants(const Graph& g, const WeightFn& f);

// Local variant at v: min / max of f over the neighbors of v.
ScalingConstants local_scaling_constants(const Graph& g, const WeightFn& f, int v);

struct GapBoundReport {
    double h = 0.0;          // min_{uv in E} a(u)a(v) / max_V a
    double g = 0.0;          // min_V a
    double base_gap = 0.0;   // lambda_{T+1}(L(G,p))
    double min_local = 0.0;  // min_v lambda_1(L^v(G,p))
    double bound = 0.0;      // min(h * base_gap, g * min_local)
};

// Derivative-free lower bound on the spectral gap of any blow-up G^(a) of
// the base framework; needs only base spectra and the copy counts.
GapBoundReport blowup_gap_lower_bound(const Graph& g, const Embedding& p, const WeightFn& a);

// Near-balanced copy counts splitting K_{n,m} into a blow-up of K_{n0,m0}:
// side sizes get floor(n/n0) or floor(n/n0)+1 copies (larger counts first).
WeightFn bipartite_partition_weights(int n, int m, int n0, int m0);

struct KnmBoundReport {
    int n = 0, m = 0, d = 0;
    int q1 = 0, q2 = 0;          // floor(n/5), floor(m/5)
    double base_value = 0.0;     // recomputed min(base gap, min local) of the shipped K_{5,5} embedding
    double base_required = 0.0;  // certified constant the base must reach (1.39 / 0.309)
    double blowup_bound = 0.0;   // exact bound for the K5,5 partition blow-up
    double bound = 0.0;          // base_required * (min(q1, q2) - 1)
};

// Lower bound on the d-dimensional algebraic connectivity of K_{n,m}
// (n, m > 10, d in {2, 3}) via blow-ups of an optimized K_{5,5} base
// embedding. The shipped base certificate is re-verified on every call.
KnmBoundReport knm_lower_bound(int n, int m, int d);

// The optimized K_{5,5} embeddings backing knm_lower_bound (d = 2 or 3).
Embedding knm_base_embedding(int d);

}  // namespace rigidity
