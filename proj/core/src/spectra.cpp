#include "rigidity/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rigidity {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += a(r, c) * a(r, c);
    return std::sqrt(s);
}

// One full cyclic sweep of Jacobi rotations over the upper triangle.
void jacobi_sweep(Matrix& a, Matrix* q) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t r = p + 1; r < n; ++r) {
            const double apr = a(p, r);
            if (apr == 0.0) continue;
            // Skip rotations that cannot change anything at double precision.
            if (std::abs(apr) <= 1e-300) { a(p, r) = a(r, p) = 0.0; continue; }

            const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            const double tau = s / (1.0 + c);

            const double app = a(p, p), arr = a(r, r);
            a(p, p) = app - t * apr;
            a(r, r) = arr + t * apr;
            a(p, r) = a(r, p) = 0.0;

            for (std::size_t k = 0; k < n; ++k) {
                if (k == p || k == r) continue;
                const double akp = a(k, p), akr = a(k, r);
                a(k, p) = a(p, k) = akp - s * (akr + tau * akp);
                a(k, r) = a(r, k) = akr + s * (akp - tau * akr);
            }
            if (q) {
                for (std::size_t k = 0; k < n; ++k) {
                    const double qkp = (*q)(k, p), qkr = (*q)(k, r);
                    (*q)(k, p) = qkp - s * (qkr + tau * qkp);
                    (*q)(k, r) = qkr + s * (qkp - tau * qkr);
                }
            }
        }
    }
}

void jacobi(Matrix& a, Matrix* q) {
    const double target = 1e-15 * std::max(a.frobenius_norm(), 1e-300);
    for (int sweep = 0; sweep < 64; ++sweep) {
        if (off_diagonal_norm(a) <= target) return;
        jacobi_sweep(a, q);
    }
    if (off_diagonal_norm(a) > 1e-10 * std::max(a.frobenius_norm(), 1.0))
        throw std::runtime_error("eigen_sym: Jacobi sweeps failed to converge");
}

void check_symmetric_input(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues: matrix not square");
    if (!m.symmetric(1e-12)) throw std::invalid_argument("eigenvalues: matrix not symmetric");
}

}  // namespace

EigenSystem eigen_sym(const Matrix& m) {
    check_symmetric_input(m);
    Matrix a = symmetrized(m);
    Matrix q = Matrix::identity(a.rows());
    jacobi(a, &q);

    std::vector<std::size_t> order(a.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenSystem out;
    out.values.resize(a.rows());
    out.vectors = Matrix(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out.values[i] = a(order[i], order[i]);
        for (std::size_t k = 0; k < a.rows(); ++k) out.vectors(k, i) = q(k, order[i]);
    }
    return out;
}

Spectrum eigenvalues_sym(const Matrix& m, double tol) {
    check_symmetric_input(m);
    Matrix a = symmetrized(m);
    jacobi(a, nullptr);
    Spectrum s;
    s.tol = tol;
    s.values.resize(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) s.values[i] = a(i, i);
    std::sort(s.values.begin(), s.values.end());
    return s;
}

Spectrum multiset_union(const Spectrum& a, const Spectrum& b) {
    Spectrum out;
    out.tol = std::max(a.tol, b.tol);
    out.values.resize(a.values.size() + b.values.size());
    std::merge(a.values.begin(), a.values.end(), b.values.begin(), b.values.end(), out.values.begin());
    return out;
}

Spectrum multiset_repeat(const Spectrum& s, int k) {
    if (k < 0) throw std::invalid_argument("multiset_repeat: negative multiplicity");
    Spectrum out;
    out.tol = s.tol;
    out.values.reserve(s.values.size() * static_cast<std::size_t>(k));
    for (double v : s.values)
        for (int i = 0; i < k; ++i) out.values.push_back(v);
    return out;
}

Spectrum multiset_scale(const Spectrum& s, double c) {
    Spectrum out;
    out.tol = s.tol * std::max(1.0, std::abs(c));
    out.values.reserve(s.values.size());
    for (double v : s.values) out.values.push_back(c * v);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

bool multiset_equal(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tol) return false;
    return true;
}

double kth_smallest(const Spectrum& s, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > s.values.size())
        throw std::invalid_argument("kth_smallest: index out of range");
    return s.values[static_cast<std::size_t>(k) - 1];
}

double spectral_gap(const Framework& fw) {
    const int d = fw.dimension();
    const int trivial = d * (d + 1) / 2;
    return kth_smallest(eigenvalues_sym(stiffness(fw)), trivial + 1);
}

int rank_tol(const Matrix& m, double tol) {
    const Spectrum s = eigenvalues_sym(m);
    double norm2 = 0.0;
    for (double v : s.values) norm2 = std::max(norm2, std::abs(v));
    const double thresh = tol * std::max(1.0, norm2);
    int rank = 0;
    for (double v : s.values) rank += (v > thresh);
    return rank;
}

}  // namespace rigidity
