#include "rigidity/embedding.hpp"

#include <cmath>
#include <stdexcept>

namespace rigidity {

Embedding::Embedding(int d, int n) : d_(d), n_(n) {
    if (d_ < 1) throw std::invalid_argument("embedding: dimension must be >= 1");
    if (n_ < 0) throw std::invalid_argument("embedding: negative point count");
    coords_.assign(static_cast<std::size_t>(d_) * n_, 0.0);
}

Embedding::Embedding(int d, std::vector<std::vector<double>> points)
    : Embedding(d, static_cast<int>(points.size())) {
    for (int v = 0; v < n_; ++v) {
        const auto& pt = points[static_cast<std::size_t>(v)];
        if (static_cast<int>(pt.size()) != d_)
            throw std::invalid_argument("embedding: point dimension mismatch");
        for (int i = 0; i < d_; ++i) coord(v, i) = pt[static_cast<std::size_t>(i)];
    }
}

std::span<const double> Embedding::point(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("embedding: vertex out of range");
    return {coords_.data() + static_cast<std::size_t>(v) * d_, static_cast<std::size_t>(d_)};
}

double Embedding::coord(int v, int i) const {
    if (v < 0 || v >= n_ || i < 0 || i >= d_) throw std::invalid_argument("embedding: index out of range");
    return coords_[static_cast<std::size_t>(v) * d_ + i];
}

double& Embedding::coord(int v, int i) {
    if (v < 0 || v >= n_ || i < 0 || i >= d_) throw std::invalid_argument("embedding: index out of range");
    return coords_[static_cast<std::size_t>(v) * d_ + i];
}

Embedding blow_up_embedding(const Embedding& p, const WeightFn& a, const BlowupIndex& idx) {
    if (a.size() != p.point_count() || idx.original_count() != p.point_count())
        throw std::invalid_argument("blow_up_embedding: size mismatch");
    for (int v = 0; v < a.size(); ++v)
        if (static_cast<double>(idx.copies(v)) != a(v))
            throw std::invalid_argument("blow_up_embedding: weights disagree with index");

    Embedding out(p.dimension(), idx.total());
    for (int id = 0; id < idx.total(); ++id) {
        const int v = idx.original(id).first;
        for (int i = 0; i < p.dimension(); ++i) out.coord(id, i) = p.coord(v, i);
    }
    return out;
}

Embedding transformed(const Embedding& p, const Matrix& rot, const std::vector<double>& shift) {
    const int d = p.dimension();
    if (rot.rows() != static_cast<std::size_t>(d) || rot.cols() != static_cast<std::size_t>(d) ||
        shift.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("transformed: dimension mismatch");
    Embedding out(d, p.point_count());
    for (int v = 0; v < p.point_count(); ++v)
        for (int i = 0; i < d; ++i) {
            double s = shift[static_cast<std::size_t>(i)];
            for (int j = 0; j < d; ++j) s += rot(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * p.coord(v, j);
            out.coord(v, i) = s;
        }
    return out;
}

Matrix rotation_from_angles(int d, const std::vector<double>& angles) {
    if (d < 1) throw std::invalid_argument("rotation_from_angles: dimension must be >= 1");
    const std::size_t pairs = static_cast<std::size_t>(d) * (d - 1) / 2;
    if (angles.size() != pairs) throw std::invalid_argument("rotation_from_angles: need one angle per axis pair");

    Matrix rot = Matrix::identity(static_cast<std::size_t>(d));
    std::size_t k = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j, ++k) {
            const double c = std::cos(angles[k]), s = std::sin(angles[k]);
            for (int col = 0; col < d; ++col) {
                const double ri = rot(static_cast<std::size_t>(i), static_cast<std::size_t>(col));
                const double rj = rot(static_cast<std::size_t>(j), static_cast<std::size_t>(col));
                rot(static_cast<std::size_t>(i), static_cast<std::size_t>(col)) = c * ri - s * rj;
                rot(static_cast<std::size_t>(j), static_cast<std::size_t>(col)) = s * ri + c * rj;
            }
        }
    return rot;
}

}  // namespace rigidity
