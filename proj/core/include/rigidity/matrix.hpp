#pragma once

#include <cstddef>
#include <vector>

namespace rigidity {

// Dense row-major matrix of doubles, zero-filled at construction.
// Sizes here stay small (a few hundred rows), so no blocking or views.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<double>& data() const noexcept { return data_; }
    std::vector<double>& data() noexcept { return data_; }

    Matrix transposed() const;
    double frobenius_norm() const;
    double max_abs() const;

    // max |A(i,j) - A(j,i)| <= rel_tol * max(1, max_abs())
    bool symmetric(double rel_tol = 1e-12) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);

Matrix gram(const Matrix& a);    // A A^T
Matrix gram_t(const Matrix& a);  // A^T A

Matrix symmetrized(const Matrix& a);  // (A + A^T)/2

// B(i,j) = A(perm[i], perm[j]); perm must be a permutation of 0..n-1.
Matrix permuted_symmetric(const Matrix& a, const std::vector<std::size_t>& perm);

}  // namespace rigidity
