#ifndef MMINEIG_MATCORE_HPP
#define MMINEIG_MATCORE_HPP

#include <vector>

#include "mmineig/matrix.hpp"

namespace mmineig {

/// Classification flags gating bound applicability.
struct MatrixClass {
    bool is_z_matrix = false;
    bool positive_diagonal = false;
    bool is_sdd = false;
    bool is_wcdd = false;
    bool is_m_matrix = false;
    std::vector<double> dominance_ratios; // d_i
    double zero_tolerance = 0.0;
};

/// Classify A. eps < 0 selects the default tolerance 1e-12 * max|a_ij|.
MatrixClass classify(const DenseMatrix& a, double eps = -1.0);

struct InverseResult {
    DenseMatrix inverse;
    double residual = 0.0; // max-norm of A*inv(A) - I
};

/// Gaussian elimination with partial pivoting plus one iterative-refinement
/// pass. Throws SingularError when a pivot drops below 1e-13 * max|a_ij|.
InverseResult invert(const DenseMatrix& a);

/// J_A = G^{-1}(G - A) where G is the diagonal part of A.
DenseMatrix jacobi_matrix(const DenseMatrix& a);

struct SpectralResult {
    double value = 0.0;
    double residual = 0.0; // inf-norm eigenpair residual, scaled by ||v||_inf
    long iterations = 0;
};

/// Perron root of a nonnegative matrix via power iteration on M + I with the
/// all-ones start vector. The shift makes irreducible matrices primitive.
SpectralResult spectral_radius_nonneg(const DenseMatrix& m, double tol = 1e-12,
                                      long max_iter = 1000000);

/// Ground truth: tau(A) = 1 / rho(inv(A)) for a nonsingular M-matrix.
double tau_oracle(const DenseMatrix& a, double tol = 1e-12);

bool is_doubly_stochastic(const DenseMatrix& m, double eps);

} // namespace mmineig

#endif
