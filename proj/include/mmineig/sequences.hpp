#ifndef MMINEIG_SEQUENCES_HPP
#define MMINEIG_SEQUENCES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mmineig/matrix.hpp"

namespace mmineig {

/// Row dominance ratios d_i, their maximum, and the phi_i reciprocals.
/// phi_i is absent when its denominator a_ii - sum_{k!=i}|a_ik| d_k <= 0.
struct BaseQuantities {
    std::vector<double> d;
    double d_max = 0.0;
    std::vector<std::optional<double>> phi;
};

BaseQuantities base_quantities(const DenseMatrix& a);

/// Full iteration ladder r -> m -> h -> u^(0) -> p^(1) -> h^(1) -> u^(1) -> ...
///
/// Index convention: for the n-by-n grids m, u[t], p[t], the FIRST index is
/// the row j of the defining formula and the SECOND is the reference index i
/// (the excluded column); diagonals are unused and stay 0. The aggregates
/// u_max[i] and p_max[t][i] maximize over the second index with the first
/// fixed at i; p_colsum[t][i] sums the first index with the second fixed at i.
struct AuxLadder {
    int n = 0;
    int t_max = 0;

    std::vector<double> r;
    DenseMatrix m;
    std::vector<double> h0;
    std::vector<DenseMatrix> u;      // u[t], t = 0..t_max
    std::vector<DenseMatrix> p;      // p[t-1] holds p^(t), t = 1..t_max
    std::vector<std::vector<double>> ht;    // ht[t-1] holds h^(t)
    std::vector<std::vector<double>> phi_t; // phi_t[t-1][i]; NaN when absent

    std::vector<double> u_max;              // u_i
    std::vector<std::vector<double>> p_max; // p_max[t-1][i] = p_i^(t)
    std::vector<std::vector<double>> p_colsum; // p_colsum[t-1][i]

    /// Per reference index: -1 when every stage is applicable, otherwise the
    /// first stage with a positive-numerator / nonpositive-denominator term
    /// (0 = the base r/h stage, t >= 1 = iteration t). Dependent quantities
    /// from that stage on are NaN.
    std::vector<int> first_bad_stage;
    std::vector<std::string> status; // human-readable reason, empty when ok

    /// True when every reference index is applicable through iteration t.
    bool applicable_at(int t) const;
};

AuxLadder build_ladder(const DenseMatrix& a, int t_max);

} // namespace mmineig

#endif
