#ifndef MMINEIG_BOUNDS_HPP
#define MMINEIG_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mmineig/matcore.hpp"
#include "mmineig/matrix.hpp"
#include "mmineig/sequences.hpp"

namespace mmineig {

enum class BoundKind { lower, upper };

/// One named bound value with applicability status.
struct BoundResult {
    std::string method;
    BoundKind kind = BoundKind::lower;
    std::optional<int> t;
    std::optional<double> value;
    bool applicable = false;
    std::string reason; // set when inapplicable

    static BoundResult ok(std::string method, BoundKind kind, std::optional<int> t,
                          double value);
    static BoundResult na(std::string method, BoundKind kind, std::optional<int> t,
                          std::string reason);
};

/// The full table of bounds for one matrix.
struct BoundReport {
    std::string matrix_id;
    std::optional<double> tau;
    std::vector<BoundResult> rows;
    int t_max = 0;
};

/// Prior bounds: the weakly-chained two-sided family, the Jacobi-radius
/// bound, the entries-only variants, and the iterated pair bounds
/// upsilon_t / upsilon_tilde_t. Inapplicable combinations come back flagged,
/// never thrown.
std::vector<BoundResult> legacy_bounds(const DenseMatrix& a, const DenseMatrix& a_inv,
                                       const AuxLadder& ladder, const BaseQuantities& base,
                                       const MatrixClass& cls, double rho_ja, int t);

/// Gamma_t: pair bound from the inverse diagonal and the ladder column sums.
BoundResult gamma(const DenseMatrix& a_inv, const AuxLadder& ladder, int t);

/// Omega_t: single-index form of gamma.
BoundResult omega(const DenseMatrix& a_inv, const AuxLadder& ladder, int t);

/// Gamma~_t: entries-only pair bound; requires strict diagonal dominance.
BoundResult gamma_tilde(const DenseMatrix& a, const MatrixClass& cls,
                        const AuxLadder& ladder, int t);

/// Omega~_t: entries-only single-index bound; requires strict diagonal dominance.
BoundResult omega_tilde(const DenseMatrix& a, const MatrixClass& cls,
                        const AuxLadder& ladder, int t);

struct HadamardBound {
    std::optional<double> tight;
    std::optional<double> loose;
    bool applicable = false;
    std::string reason;
};

/// Upper bounds on rho(B o inv(A)) for nonnegative B; tight <= loose.
HadamardBound hadamard_upper(const DenseMatrix& a, const DenseMatrix& a_inv,
                             const DenseMatrix& b, const AuxLadder& ladder, int t);

/// Runs classification, inversion, ladder, oracle and every bound for
/// t = 1..t_max, assembled in fixed table order.
BoundReport full_report(const DenseMatrix& a, int t_max, double tol = 1e-12,
                        const std::string& matrix_id = "");

} // namespace mmineig

#endif
