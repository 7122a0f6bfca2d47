#include "mmineig/matrix.hpp"

#include <cmath>
#include <string>

namespace mmineig {

DenseMatrix::DenseMatrix(int n) : n_(n) {
    if (n < 1)
        throw InputError("matrix order must be >= 1, got " + std::to_string(n));
    data_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

DenseMatrix::DenseMatrix(int n, std::vector<double> entries) : n_(n), data_(std::move(entries)) {
    if (n < 1)
        throw InputError("matrix order must be >= 1, got " + std::to_string(n));
    if (data_.size() != static_cast<std::size_t>(n) * n)
        throw InputError("expected " + std::to_string(static_cast<std::size_t>(n) * n) +
                         " entries for order " + std::to_string(n) + ", got " +
                         std::to_string(data_.size()));
    for (double v : data_)
        if (!std::isfinite(v))
            throw InputError("matrix entries must be finite");
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double DenseMatrix::max_abs() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::abs(v));
    return best;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.order() != b.order())
        throw InputError("order mismatch in multiply");
    const int n = a.order();
    DenseMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.order() != b.order())
        throw InputError("order mismatch in hadamard product");
    DenseMatrix c(a.order());
    for (std::size_t k = 0; k < c.data().size(); ++k)
        c.data()[k] = a.data()[k] * b.data()[k];
    return c;
}

double identity_residual(const DenseMatrix& a, const DenseMatrix& b) {
    const DenseMatrix prod = multiply(a, b);
    const int n = a.order();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            worst = std::max(worst, std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

} // namespace mmineig
