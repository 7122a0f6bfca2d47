#ifndef MMINEIG_MATRIX_HPP
#define MMINEIG_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "mmineig/errors.hpp"

namespace mmineig {

/// Dense square real matrix, row-major storage, value semantics.
class DenseMatrix {
public:
    DenseMatrix() = default;

    explicit DenseMatrix(int n);

    /// Takes ownership of n*n row-major entries. All entries must be finite.
    DenseMatrix(int n, std::vector<double> entries);

    static DenseMatrix identity(int n);
    static DenseMatrix zero(int n) { return DenseMatrix(n); }

    int order() const { return n_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    double max_abs() const;

    bool operator==(const DenseMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<double> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Entrywise product; orders must match.
DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b);

/// max_ij |(a*b)_ij - I_ij|
double identity_residual(const DenseMatrix& a, const DenseMatrix& b);

} // namespace mmineig

#endif
