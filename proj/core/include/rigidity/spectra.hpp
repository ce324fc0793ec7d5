#pragma once

#include <vector>

#include "rigidity/framework.hpp"
#include "rigidity/matrix.hpp"

namespace rigidity {

inline constexpr double kSpectrumTol = 1e-8;   // default multiset comparison tolerance
inline constexpr double kZeroRankTol = 1e-10;  // default zero / rank classification tolerance

// Finite multiset of reals, kept sorted ascending. tol is the default
// tolerance used when the spectrum is compared or serialized.
struct Spectrum {
    std::vector<double> values;
    double tol = kSpectrumTol;
};

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column i pairs with values[i]
};

// Cyclic Jacobi on the symmetrized input; fully deterministic sweep order.
// Exists for the invariant tests; everything else should go through
// eigenvalues_sym.
EigenSystem eigen_sym(const Matrix& m);

// Eigenvalues of a symmetric matrix, ascending. Rejects input whose
// asymmetry exceeds 1e-12 relative to max(1, max|entry|). The rotation
// sweeps run until the off-diagonal mass is below roughly machine epsilon
// times the Frobenius norm, so the residual M Q - Q diag is well under
// tol * |M| for any tol >= 1e-13.
Spectrum eigenvalues_sym(const Matrix& m, double tol = kSpectrumTol);

Spectrum multiset_union(const Spectrum& a, const Spectrum& b);
Spectrum multiset_repeat(const Spectrum& s, int k);  // k >= 0; k = 0 gives the empty spectrum
Spectrum multiset_scale(const Spectrum& s, double c);

// Equal sizes and |a_i - b_i| <= tol for the sorted sequences.
bool multiset_equal(const Spectrum& a, const Spectrum& b, double tol);

double kth_smallest(const Spectrum& s, int k);  // 1-based

// lambda_{T+1}(L(G,p)) with T = d(d+1)/2, the count of trivial motions.
double spectral_gap(const Framework& fw);

// Number of eigenvalues exceeding tol * max(1, |M|_2).
int rank_tol(const Matrix& m, double tol = kZeroRankTol);

}  // namespace rigidity
