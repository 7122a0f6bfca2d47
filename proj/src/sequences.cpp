#include "mmineig/sequences.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mmineig {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require_nonzero_diagonal(const DenseMatrix& a) {
    for (int i = 0; i < a.order(); ++i)
        if (a(i, i) == 0.0)
            throw InputError("zero diagonal entry at index " + std::to_string(i));
}

} // namespace

BaseQuantities base_quantities(const DenseMatrix& a) {
    require_nonzero_diagonal(a);
    const int n = a.order();
    BaseQuantities out;
    out.d.resize(n);
    out.phi.resize(n);
    for (int i = 0; i < n; ++i) {
        double offsum = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) offsum += std::abs(a(i, j));
        out.d[i] = offsum / std::abs(a(i, i));
    }
    out.d_max = 0.0;
    for (double di : out.d) out.d_max = std::max(out.d_max, di);
    for (int i = 0; i < n; ++i) {
        double den = a(i, i);
        for (int k = 0; k < n; ++k)
            if (k != i) den -= std::abs(a(i, k)) * out.d[k];
        if (den > 0.0) out.phi[i] = 1.0 / den;
    }
    return out;
}

bool AuxLadder::applicable_at(int t) const {
    for (int bad : first_bad_stage)
        if (bad >= 0 && bad <= t) return false;
    return true;
}

AuxLadder build_ladder(const DenseMatrix& a, int t_max) {
    require_nonzero_diagonal(a);
    if (t_max < 1) throw InputError("t_max must be >= 1");
    const int n = a.order();

    DenseMatrix ab(n);
    std::vector<double> rowoff(n, 0.0); // sum_{k != j} |a_jk|
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ab(i, j) = std::abs(a(i, j));
            if (j != i) rowoff[i] += ab(i, j);
        }

    AuxLadder L;
    L.n = n;
    L.t_max = t_max;
    L.r.assign(n, 0.0);
    L.m = DenseMatrix(n);
    L.h0.assign(n, 0.0);
    L.first_bad_stage.assign(n, -1);
    L.status.assign(n, "");

    auto mark_bad = [&](int i, int stage, const std::string& where) {
        if (L.first_bad_stage[i] < 0) {
            L.first_bad_stage[i] = stage;
            L.status[i] = "nonpositive denominator in " + where;
        }
    };
    // max over j != i of num/den terms; zero numerators contribute 0 even
    // against a bad denominator, a positive numerator over den <= 0 is fatal.
    auto ratio_max = [&](int i, auto num_fn, auto den_fn, int stage,
                         const std::string& where) -> double {
        double best = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double num = num_fn(j);
            if (num == 0.0) continue;
            const double den = den_fn(j);
            if (std::isnan(den)) return kNan;
            if (den <= 0.0) {
                mark_bad(i, stage, where);
                return kNan;
            }
            best = std::max(best, num / den);
        }
        return best;
    };

    // r_i and m_ji
    for (int i = 0; i < n; ++i) {
        L.r[i] = ratio_max(
            i, [&](int j) { return ab(j, i); },
            [&](int j) { return ab(j, j) - (rowoff[j] - ab(j, i)); }, 0, "r");
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            L.m(j, i) = (ab(j, i) + (rowoff[j] - ab(j, i)) * L.r[i]) / ab(j, j);
        }
    }

    // h_i and u_ji^(0)
    DenseMatrix u0(n);
    for (int i = 0; i < n; ++i) {
        if (L.first_bad_stage[i] == 0) {
            L.h0[i] = kNan;
            for (int j = 0; j < n; ++j)
                if (j != i) u0(j, i) = kNan;
            continue;
        }
        L.h0[i] = ratio_max(
            i, [&](int j) { return ab(j, i); },
            [&](int j) {
                double den = ab(j, j) * L.m(j, i);
                for (int k = 0; k < n; ++k)
                    if (k != j && k != i) den -= ab(j, k) * L.m(k, i);
                return den;
            },
            0, "h");
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                if (k != j && k != i) s += ab(j, k) * L.m(k, i);
            u0(j, i) = (ab(j, i) + s * L.h0[i]) / ab(j, j);
        }
    }
    L.u.push_back(std::move(u0));

    for (int t = 1; t <= t_max; ++t) {
        const DenseMatrix& uprev = L.u.back();
        DenseMatrix p(n), ut(n);
        std::vector<double> ht(n, 0.0), phit(n, kNan);
        for (int i = 0; i < n; ++i) {
            if (L.first_bad_stage[i] >= 0) {
                ht[i] = kNan;
                for (int j = 0; j < n; ++j)
                    if (j != i) p(j, i) = ut(j, i) = kNan;
                continue;
            }
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                double s = 0.0;
                for (int k = 0; k < n; ++k)
                    if (k != j && k != i) s += ab(j, k) * uprev(k, i);
                p(j, i) = (ab(j, i) + s) / ab(j, j);
            }
            ht[i] = ratio_max(
                i, [&](int j) { return ab(j, i); },
                [&](int j) {
                    double den = ab(j, j) * p(j, i);
                    for (int k = 0; k < n; ++k)
                        if (k != j && k != i) den -= ab(j, k) * p(k, i);
                    return den;
                },
                t, "h(t=" + std::to_string(t) + ")");
            if (L.first_bad_stage[i] == t) {
                for (int j = 0; j < n; ++j)
                    if (j != i) ut(j, i) = kNan;
                continue;
            }
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                double s = 0.0;
                for (int k = 0; k < n; ++k)
                    if (k != j && k != i) s += ab(j, k) * p(k, i);
                ut(j, i) = (ab(j, i) + s * ht[i]) / ab(j, j);
            }
            double den = a(i, i);
            for (int j = 0; j < n; ++j)
                if (j != i) den -= ab(i, j) * p(j, i);
            if (den > 0.0) phit[i] = 1.0 / den;
        }
        L.p.push_back(std::move(p));
        L.u.push_back(std::move(ut));
        L.ht.push_back(std::move(ht));
        L.phi_t.push_back(std::move(phit));
    }

    // Aggregates. A NaN anywhere in a row propagates so dependent bounds can
    // detect inapplicability.
    auto row_max = [&](const DenseMatrix& g, int i) {
        double best = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (std::isnan(g(i, j))) return kNan;
            best = std::max(best, g(i, j));
        }
        return best;
    };
    auto col_sum = [&](const DenseMatrix& g, int i) {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
            if (k != i) s += g(k, i);
        return s;
    };
    L.u_max.resize(n);
    for (int i = 0; i < n; ++i) L.u_max[i] = row_max(L.u[0], i);
    L.p_max.resize(t_max);
    L.p_colsum.resize(t_max);
    for (int t = 1; t <= t_max; ++t) {
        L.p_max[t - 1].resize(n);
        L.p_colsum[t - 1].resize(n);
        for (int i = 0; i < n; ++i) {
            L.p_max[t - 1][i] = row_max(L.p[t - 1], i);
            L.p_colsum[t - 1][i] = col_sum(L.p[t - 1], i);
        }
    }
    return L;
}

} // namespace mmineig
