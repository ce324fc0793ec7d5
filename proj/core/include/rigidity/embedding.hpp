#pragma once

#include <span>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/matrix.hpp"

namespace rigidity {

// Points p(0), ..., p(n-1) in R^d, stored flat row-major.
class Embedding {
public:
    Embedding() : Embedding(1, 0) {}
    Embedding(int d, int n);  // all points at the origin
    Embedding(int d, std::vector<std::vector<double>> points);

    int dimension() const noexcept { return d_; }
    int point_count() const noexcept { return n_; }

    std::span<const double> point(int v) const;
    double coord(int v, int i) const;
    double& coord(int v, int i);

    const std::vector<double>& flat() const noexcept { return coords_; }
    std::vector<double>& flat() noexcept { return coords_; }

private:
    int d_, n_;
    std::vector<double> coords_;
};

// p^(a)(id) = p(original vertex of id). a must match the index copy counts.
Embedding blow_up_embedding(const Embedding& p, const WeightFn& a, const BlowupIndex& idx);

// q(v) = rot * p(v) + shift; rot must be d x d.
Embedding transformed(const Embedding& p, const Matrix& rot, const std::vector<double>& shift);

// Deterministic rotation assembled from Givens rotations with the given
// angles (one per coordinate pair, lexicographic order).
Matrix rotation_from_angles(int d, const std::vector<double>& angles);

}  // namespace rigidity
