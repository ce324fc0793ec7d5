#pragma once

#include <array>
#include <vector>

#include "rigidity/framework.hpp"
#include "rigidity/spectra.hpp"

namespace rigidity {

// K_{3,3} with sides {0,2,4} and {1,3,5}; the labeling every closed-form
// result in this module is written against.
Graph k33_interleaved();

// Row/column order used when displaying the 9x9 edge matrices below, given
// as positions into the lexicographic edge list of k33_interleaved():
// edges {0,1},{2,3},{4,5},{2,5},{3,4},{0,3},{0,5},{1,2},{1,4}.
const std::array<std::size_t, 9>& k33_display_edge_order();

// Parameters of the long-edge limit of the K_{3,3} family: a = sin(alpha),
// b = sin(beta), f = sqrt((1-a^2)(1-b^2)) - a b.
struct K33LimitParams {
    double a = 0.0, b = 0.0, f = 0.0;
};
K33LimitParams k33_limit_params(double a, double b);  // requires 0 < a, b < 1

// Two triangles of side-1 edges hung off a cross of length-c spokes; the
// spectral gap of the family approaches its supremum as c grows.
Framework k33_embedding(double alpha, double beta, double c);

// Entrywise limit of the lower stiffness matrix as c -> infinity, in
// display edge order.
Matrix k33_limit_lower_stiffness(const K33LimitParams& q);

// Closed-form spectrum of that limit matrix: {2(1-a^2), 1+2a^2, 2, 3}
// together with the roots of one quadratic and one cubic factor of the
// characteristic polynomial.
Spectrum k33_limit_spectrum(const K33LimitParams& q);

struct OptimalK33Constants {
    double lambda = 0.0;  // root of 176 x^4 - 200 x^3 + 47 x^2 + 18 x - 9 in (0, 1)
    double a0 = 0.0;      // sqrt(lambda)
    double b0 = 0.0;      // argmax partner of a0
    double gap = 0.0;     // 2 (1 - lambda), the optimal limit gap
};
OptimalK33Constants k33_optimal_constants();

// All real roots of sum_i coeffs[i] x^i inside [lo, hi], ascending.
// Sign-change bisection on a fine grid with Newton polishing; intended for
// low-degree polynomials (degree <= 4) with simple roots.
std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi);

// K_{3,3} drawn on a triangle with side 2 and its edge midpoints: side
// {0,2,4} at the corners (0,sqrt(3)), (-1,0), (1,0), side {1,3,5} at the
// midpoints. Six edges have unit length; the three medians {0,3}, {1,4},
// {2,5} have length sqrt(3).
Framework midpoint_embedding();

// Generalized star S_{n,d} at its extremal points: hub vertex i at e_i,
// every other vertex at the origin.
Framework star_embedding(int n, int d);

// Stiffness spectrum of star_embedding in closed form:
// {0^T, 1^(|E|-d), (n - d/2)^(d-1), n} with T = d(d+1)/2.
Spectrum star_spectrum_formula(int n, int d);

}  // namespace rigidity
