#include "mmineig/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mmineig {

namespace {

bool has_nan(const std::vector<double>& v) {
    for (double x : v)
        if (std::isnan(x)) return true;
    return false;
}

double clamped_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

// max over ordered pairs i != j of the bracket; the bracket is symmetric so
// this equals the unordered max.
template <typename Bracket>
double pair_max(int n, Bracket bracket) {
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) best = std::max(best, bracket(i, j));
    return best;
}

const std::string kNotApplicableLadder = "iteration ladder not applicable at this t";
const std::string kNotSdd = "matrix not strictly diagonally dominant";

void check_depth(const AuxLadder& ladder, int t) {
    if (t < 1) throw InputError("t must be >= 1");
    if (t > ladder.t_max)
        throw InputError("t = " + std::to_string(t) + " exceeds ladder depth " +
                         std::to_string(ladder.t_max));
}

std::vector<double> entry_bracket_lower(const DenseMatrix& a) {
    const int n = a.order();
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        double den = a(i, i);
        for (int k = 0; k < n; ++k)
            if (k != i) den -= a(i, k) * a(k, i) / a(k, k);
        out[i] = 1.0 / den;
    }
    return out;
}

} // namespace

BoundResult BoundResult::ok(std::string method, BoundKind kind, std::optional<int> t,
                            double value) {
    return BoundResult{std::move(method), kind, t, value, true, ""};
}

BoundResult BoundResult::na(std::string method, BoundKind kind, std::optional<int> t,
                            std::string reason) {
    return BoundResult{std::move(method), kind, t, std::nullopt, false, std::move(reason)};
}

std::vector<BoundResult> legacy_bounds(const DenseMatrix& a, const DenseMatrix& a_inv,
                                       const AuxLadder& ladder, const BaseQuantities& base,
                                       const MatrixClass& cls, double rho_ja, int t) {
    check_depth(ladder, t);
    const int n = a.order();
    std::vector<BoundResult> out;

    // Two-sided row-sum family, valid for weakly chained diagonally dominant
    // M-matrices only.
    if (cls.is_wcdd && cls.is_m_matrix) {
        double min_row = std::numeric_limits<double>::infinity();
        double max_row = -std::numeric_limits<double>::infinity();
        double min_diag = std::numeric_limits<double>::infinity();
        double min_inv_row = std::numeric_limits<double>::infinity();
        double max_inv_row = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            double row = 0.0, inv_row = 0.0;
            for (int j = 0; j < n; ++j) {
                row += a(i, j);
                inv_row += a_inv(i, j);
            }
            min_row = std::min(min_row, row);
            max_row = std::max(max_row, row);
            min_diag = std::min(min_diag, a(i, i));
            min_inv_row = std::min(min_inv_row, inv_row);
            max_inv_row = std::max(max_inv_row, inv_row);
        }
        out.push_back(BoundResult::ok("shivakumar_lower", BoundKind::lower, {}, min_row));
        out.push_back(BoundResult::ok("shivakumar_upper_rowsum", BoundKind::upper, {}, max_row));
        out.push_back(BoundResult::ok("shivakumar_upper_diag", BoundKind::upper, {}, min_diag));
        out.push_back(
            BoundResult::ok("shivakumar_inv_lower", BoundKind::lower, {}, 1.0 / max_inv_row));
        out.push_back(
            BoundResult::ok("shivakumar_inv_upper", BoundKind::upper, {}, 1.0 / min_inv_row));
    } else {
        const std::string why = cls.is_m_matrix ? "matrix not weakly chained diagonally dominant"
                                                : "matrix not a nonsingular M-matrix";
        for (const char* name : {"shivakumar_lower", "shivakumar_upper_rowsum",
                                 "shivakumar_upper_diag", "shivakumar_inv_lower",
                                 "shivakumar_inv_upper"}) {
            const bool lower = std::string(name).find("lower") != std::string::npos;
            out.push_back(
                BoundResult::na(name, lower ? BoundKind::lower : BoundKind::upper, {}, why));
        }
    }

    const std::string not_m = "matrix not a nonsingular M-matrix";

    double max_aii = 0.0;
    for (int i = 0; i < n; ++i) max_aii = std::max(max_aii, a_inv(i, i));

    // Jacobi-radius bound.
    if (cls.is_m_matrix) {
        out.push_back(BoundResult::ok("th31_tianhuang", BoundKind::lower, {},
                                      1.0 / ((1.0 + (n - 1) * rho_ja) * max_aii)));
    } else {
        out.push_back(BoundResult::na("th31_tianhuang", BoundKind::lower, {}, not_m));
    }

    auto inv_pair_bound = [&](const std::vector<double>& wi, const std::vector<double>& wj) {
        return 2.0 / pair_max(n, [&](int i, int j) {
                   const double aii = a_inv(i, i), ajj = a_inv(j, j);
                   return aii + ajj +
                          clamped_sqrt((aii - ajj) * (aii - ajj) +
                                       4.0 * (n - 1.0) * (n - 1.0) * aii * ajj * wi[i] * wj[j]);
               });
    };

    if (cls.is_m_matrix && n >= 2) {
        std::vector<double> rho_vec(n, rho_ja);
        out.push_back(
            BoundResult::ok("li_inverse", BoundKind::lower, {}, inv_pair_bound(rho_vec, rho_vec)));
    } else {
        out.push_back(BoundResult::na("li_inverse", BoundKind::lower, {},
                                      cls.is_m_matrix ? "needs order >= 2" : not_m));
    }

    if (cls.is_m_matrix && n >= 2 && !has_nan(ladder.u_max)) {
        out.push_back(BoundResult::ok("wang_sun", BoundKind::lower, {},
                                      inv_pair_bound(ladder.u_max, ladder.u_max)));
    } else {
        out.push_back(BoundResult::na("wang_sun", BoundKind::lower, {},
                                      cls.is_m_matrix ? kNotApplicableLadder : not_m));
    }

    const std::vector<double>& pmax = ladder.p_max[t - 1];
    if (cls.is_m_matrix && n >= 2 && !has_nan(pmax)) {
        out.push_back(
            BoundResult::ok("upsilon_t", BoundKind::lower, t, inv_pair_bound(pmax, pmax)));
    } else {
        out.push_back(BoundResult::na("upsilon_t", BoundKind::lower, t,
                                      cls.is_m_matrix ? kNotApplicableLadder : not_m));
    }

    // Entries-only variants need strict diagonal dominance.
    const std::string not_sdd = "matrix not strictly diagonally dominant";
    const bool sdd = cls.is_sdd && cls.is_m_matrix;
    if (sdd) {
        std::vector<double> phi(n);
        for (int i = 0; i < n; ++i) phi[i] = *base.phi[i];
        double max_phi = 0.0;
        for (double p : phi) max_phi = std::max(max_phi, p);
        out.push_back(BoundResult::ok("cor34_tianhuang", BoundKind::lower, {},
                                      1.0 / ((1.0 + (n - 1) * base.d_max) * max_phi)));
        if (n >= 2) {
            const double v = 2.0 / pair_max(n, [&](int i, int j) {
                                 const double pij = std::max(phi[i], phi[j]) -
                                                    std::min(1.0 / a(i, i), 1.0 / a(j, j));
                                 return phi[i] + phi[j] +
                                        clamped_sqrt(pij * pij + 4.0 * (n - 1.0) * (n - 1.0) *
                                                                    phi[i] * phi[j] * base.d_max *
                                                                    base.d_max);
                             });
            out.push_back(BoundResult::ok("li_entries", BoundKind::lower, {}, v));
        } else {
            out.push_back(
                BoundResult::na("li_entries", BoundKind::lower, {}, "needs order >= 2"));
        }
        const std::vector<double>& phit = ladder.phi_t[t - 1];
        if (n >= 2 && !has_nan(pmax) && !has_nan(phit)) {
            const double v = 2.0 / pair_max(n, [&](int i, int j) {
                                 const double psij = std::max(phit[i], phit[j]) -
                                                     std::min(1.0 / a(i, i), 1.0 / a(j, j));
                                 return phit[i] + phit[j] +
                                        clamped_sqrt(psij * psij + 4.0 * (n - 1.0) * (n - 1.0) *
                                                                       pmax[i] * pmax[j] *
                                                                       phit[i] * phit[j]);
                             });
            out.push_back(BoundResult::ok("upsilon_tilde_t", BoundKind::lower, t, v));
        } else {
            out.push_back(
                BoundResult::na("upsilon_tilde_t", BoundKind::lower, t, kNotApplicableLadder));
        }
    } else {
        const std::string why = cls.is_m_matrix ? not_sdd : not_m;
        out.push_back(BoundResult::na("cor34_tianhuang", BoundKind::lower, {}, why));
        out.push_back(BoundResult::na("li_entries", BoundKind::lower, {}, why));
        out.push_back(BoundResult::na("upsilon_tilde_t", BoundKind::lower, t, why));
    }
    return out;
}

BoundResult gamma(const DenseMatrix& a_inv, const AuxLadder& ladder, int t) {
    check_depth(ladder, t);
    const int n = a_inv.order();
    if (n < 2) return BoundResult::na("gamma_t", BoundKind::lower, t, "needs order >= 2");
    if (!ladder.applicable_at(t))
        return BoundResult::na("gamma_t", BoundKind::lower, t, kNotApplicableLadder);
    const std::vector<double>& colsum = ladder.p_colsum[t - 1];
    const double v = 2.0 / pair_max(n, [&](int i, int j) {
                         const double aii = a_inv(i, i), ajj = a_inv(j, j);
                         return aii + ajj +
                                clamped_sqrt((aii - ajj) * (aii - ajj) +
                                             4.0 * aii * ajj * colsum[i] * colsum[j]);
                     });
    return BoundResult::ok("gamma_t", BoundKind::lower, t, v);
}

BoundResult omega(const DenseMatrix& a_inv, const AuxLadder& ladder, int t) {
    check_depth(ladder, t);
    const int n = a_inv.order();
    if (!ladder.applicable_at(t))
        return BoundResult::na("omega_t", BoundKind::lower, t, kNotApplicableLadder);
    const std::vector<double>& colsum = ladder.p_colsum[t - 1];
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        worst = std::max(worst, (1.0 + colsum[i]) * a_inv(i, i));
    return BoundResult::ok("omega_t", BoundKind::lower, t, 1.0 / worst);
}

BoundResult gamma_tilde(const DenseMatrix& a, const MatrixClass& cls, const AuxLadder& ladder,
                        int t) {
    check_depth(ladder, t);
    const int n = a.order();
    if (!cls.is_sdd) return BoundResult::na("gamma_tilde_t", BoundKind::lower, t, kNotSdd);
    if (n < 2) return BoundResult::na("gamma_tilde_t", BoundKind::lower, t, "needs order >= 2");
    if (!ladder.applicable_at(t) || has_nan(ladder.phi_t[t - 1]))
        return BoundResult::na("gamma_tilde_t", BoundKind::lower, t, kNotApplicableLadder);
    const std::vector<double>& phit = ladder.phi_t[t - 1];
    const std::vector<double>& colsum = ladder.p_colsum[t - 1];
    const std::vector<double> lower = entry_bracket_lower(a);
    const double v = 2.0 / pair_max(n, [&](int i, int j) {
                         const double pij =
                             std::max(phit[i], phit[j]) - std::min(lower[i], lower[j]);
                         return phit[i] + phit[j] +
                                clamped_sqrt(pij * pij +
                                             4.0 * phit[i] * phit[j] * colsum[i] * colsum[j]);
                     });
    return BoundResult::ok("gamma_tilde_t", BoundKind::lower, t, v);
}

BoundResult omega_tilde(const DenseMatrix& a, const MatrixClass& cls, const AuxLadder& ladder,
                        int t) {
    check_depth(ladder, t);
    const int n = a.order();
    if (!cls.is_sdd) return BoundResult::na("omega_tilde_t", BoundKind::lower, t, kNotSdd);
    if (!ladder.applicable_at(t) || has_nan(ladder.phi_t[t - 1]))
        return BoundResult::na("omega_tilde_t", BoundKind::lower, t, kNotApplicableLadder);
    const std::vector<double>& phit = ladder.phi_t[t - 1];
    const std::vector<double>& colsum = ladder.p_colsum[t - 1];
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        worst = std::max(worst, (1.0 + colsum[i]) * phit[i]);
    return BoundResult::ok("omega_tilde_t", BoundKind::lower, t, 1.0 / worst);
}

HadamardBound hadamard_upper(const DenseMatrix& a, const DenseMatrix& a_inv,
                             const DenseMatrix& b, const AuxLadder& ladder, int t) {
    check_depth(ladder, t);
    const int n = a.order();
    if (b.order() != n) throw InputError("order mismatch between A and B");
    for (double v : b.data())
        if (v < 0.0) throw InputError("B must be entrywise nonnegative");
    if (!ladder.applicable_at(t))
        return HadamardBound{{}, {}, false, kNotApplicableLadder};
    const DenseMatrix& p = ladder.p[t - 1];

    std::vector<double> wsum(n, 0.0); // sum_{k != i} b_ki p_ki^(t)
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (k != i) wsum[i] += b(k, i) * p(k, i);

    double loose = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        loose = std::max(loose, (b(i, i) + wsum[i]) * a_inv(i, i));

    double tight;
    if (n >= 2) {
        tight = pair_max(n, [&](int i, int j) {
            const double bi = b(i, i) * a_inv(i, i), bj = b(j, j) * a_inv(j, j);
            return 0.5 * (bi + bj +
                          clamped_sqrt((bi - bj) * (bi - bj) +
                                       4.0 * a_inv(i, i) * a_inv(j, j) * wsum[i] * wsum[j]));
        });
    } else {
        tight = loose;
    }
    return HadamardBound{tight, loose, true, ""};
}

BoundReport full_report(const DenseMatrix& a, int t_max, double tol,
                        const std::string& matrix_id) {
    if (t_max < 1) throw InputError("t_max must be >= 1");
    const MatrixClass cls = classify(a);
    const InverseResult inv = invert(a);
    const BaseQuantities base = base_quantities(a);
    const AuxLadder ladder = build_ladder(a, t_max);

    double rho_ja = 0.0;
    if (cls.is_z_matrix && cls.positive_diagonal)
        rho_ja = spectral_radius_nonneg(jacobi_matrix(a), tol).value;

    BoundReport report;
    report.matrix_id = matrix_id;
    report.t_max = t_max;
    if (cls.is_m_matrix)
        report.tau = 1.0 / spectral_radius_nonneg(inv.inverse, tol).value;

    // Single-value legacy rows come from the t = 1 evaluation.
    const std::vector<BoundResult> first = legacy_bounds(a, inv.inverse, ladder, base, cls,
                                                         rho_ja, 1);
    auto find = [&](const std::vector<BoundResult>& rows, const std::string& name) {
        for (const BoundResult& r : rows)
            if (r.method == name) return r;
        throw Error("missing bound row " + name);
    };
    for (const char* name : {"shivakumar_lower", "shivakumar_upper_rowsum",
                             "shivakumar_upper_diag", "shivakumar_inv_lower",
                             "shivakumar_inv_upper", "th31_tianhuang", "wang_sun", "li_inverse"})
        report.rows.push_back(find(first, name));

    std::vector<std::vector<BoundResult>> per_t;
    per_t.push_back(first);
    for (int t = 2; t <= t_max; ++t)
        per_t.push_back(legacy_bounds(a, inv.inverse, ladder, base, cls, rho_ja, t));

    for (int t = 1; t <= t_max; ++t) report.rows.push_back(find(per_t[t - 1], "upsilon_t"));
    for (int t = 1; t <= t_max; ++t) report.rows.push_back(gamma(inv.inverse, ladder, t));
    for (int t = 1; t <= t_max; ++t) report.rows.push_back(omega(inv.inverse, ladder, t));

    report.rows.push_back(find(first, "cor34_tianhuang"));
    report.rows.push_back(find(first, "li_entries"));
    for (int t = 1; t <= t_max; ++t)
        report.rows.push_back(find(per_t[t - 1], "upsilon_tilde_t"));
    for (int t = 1; t <= t_max; ++t) report.rows.push_back(gamma_tilde(a, cls, ladder, t));
    for (int t = 1; t <= t_max; ++t) report.rows.push_back(omega_tilde(a, cls, ladder, t));
    return report;
}

} // namespace mmineig
