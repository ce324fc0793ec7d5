#pragma once

#include <utility>
#include <vector>

#include "rigidity/embedding.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/spectra.hpp"

namespace rigidity {

// Predicted stiffness spectrum of the blow-up G^(a) with the copied
// embedding, assembled purely from base-graph data:
//   union over v of Spec(L^v_a) with multiplicity a(v) - 1, then Spec(L_a).
// Never builds the blown-up graph or matrix.
Spectrum blowup_spectrum_rhs(const Graph& g, const Embedding& p, const WeightFn& a);

struct BlowupCheck {
    Spectrum lhs;             // direct spectrum of the materialized blow-up
    Spectrum rhs;             // predicted spectrum
    bool equal = false;
    double max_pairwise_gap = 0.0;
};

// Materializes the blow-up, computes its stiffness spectrum directly and
// compares with blowup_spectrum_rhs entry by entry.
BlowupCheck verify_blowup_theorem(const Graph& g, const Embedding& p, const WeightFn& a,
                                  double tol = kSpectrumTol);

// Spectral gaps of the constant blow-ups G^(k) for k = 2..k_max, computed
// directly. The gaps satisfy gap_k = (k/2) gap_2.
std::vector<std::pair<int, double>> uniform_blowup_gap_scaling(const Graph& g, const Embedding& p,
                                                               int k_max);

// Same as blowup_spectrum_rhs but for the edge-indexed matrix R^T R: local
// lower stiffness spectra with multiplicity a(v) - 1, the base lower
// stiffness spectrum, and sum over edges of (a(u)-1)(a(v)-1) extra zeros.
Spectrum lower_blowup_spectrum_rhs(const Graph& g, const Embedding& p, const WeightFn& a);

}  // namespace rigidity
