#include "mmineig/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace mmineig {

namespace {

double default_eps(const DenseMatrix& a) { return 1e-12 * a.max_abs(); }

// Nodes from which some index in `targets` is reachable along directed edges
// i -> j with |a_ij| > eps, i != j.
std::vector<bool> reaches(const DenseMatrix& a, const std::vector<bool>& targets, double eps) {
    const int n = a.order();
    std::vector<bool> seen(targets);
    std::deque<int> queue;
    for (int i = 0; i < n; ++i)
        if (seen[i]) queue.push_back(i);
    // reverse BFS: predecessor i of j is reachable-from when a_ij != 0
    while (!queue.empty()) {
        const int j = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            if (i == j || seen[i]) continue;
            if (std::abs(a(i, j)) > eps) {
                seen[i] = true;
                queue.push_back(i);
            }
        }
    }
    return seen;
}

// rho(M) = lim ||M^(2^k)||^(1/2^k), evaluated by repeated squaring with
// per-step normalization. Slow path for matrices whose dominant eigenvalue
// is defective (e.g. triangular), where the power-iteration estimate only
// approaches rho like 1/iteration and no fixed tolerance can be met.
double radius_by_squaring(const DenseMatrix& m) {
    const int n = m.order();
    auto inf_norm = [n](const DenseMatrix& b) {
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += std::abs(b(i, j));
            norm = std::max(norm, row);
        }
        return norm;
    };
    double scale = inf_norm(m);
    if (scale == 0.0) return 0.0;
    DenseMatrix b = m;
    for (double& v : b.data()) v /= scale;
    double log_rho = std::log(scale);
    double weight = 0.5;
    for (int k = 0; k < 64; ++k) {
        b = multiply(b, b);
        const double s = inf_norm(b);
        if (s == 0.0) return 0.0; // nilpotent
        log_rho += weight * std::log(s);
        weight *= 0.5;
        for (double& v : b.data()) v /= s;
    }
    return std::exp(log_rho);
}

} // namespace

MatrixClass classify(const DenseMatrix& a, double eps) {
    if (eps < 0.0) eps = default_eps(a);
    const int n = a.order();

    MatrixClass cls;
    cls.zero_tolerance = eps;
    cls.is_z_matrix = true;
    cls.positive_diagonal = true;
    cls.dominance_ratios.resize(n, 0.0);

    for (int i = 0; i < n; ++i) {
        if (!(a(i, i) > eps)) cls.positive_diagonal = false;
        double offsum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (a(i, j) > eps) cls.is_z_matrix = false;
            offsum += std::abs(a(i, j));
        }
        const double aii = std::abs(a(i, i));
        cls.dominance_ratios[i] = aii > 0.0 ? offsum / aii
                                            : std::numeric_limits<double>::infinity();
    }

    cls.is_sdd = true;
    bool weakly = true;
    std::vector<bool> strict_rows(n, false);
    for (int i = 0; i < n; ++i) {
        const double di = cls.dominance_ratios[i];
        if (di < 1.0)
            strict_rows[i] = true;
        else
            cls.is_sdd = false;
        if (!(di <= 1.0)) weakly = false;
    }
    cls.is_wcdd = false;
    if (weakly && std::find(strict_rows.begin(), strict_rows.end(), true) != strict_rows.end()) {
        const std::vector<bool> ok = reaches(a, strict_rows, eps);
        cls.is_wcdd = std::find(ok.begin(), ok.end(), false) == ok.end();
    }

    cls.is_m_matrix = false;
    if (cls.is_z_matrix && cls.positive_diagonal) {
        try {
            const InverseResult inv = invert(a);
            const double scale = inv.inverse.max_abs();
            bool nonneg = true;
            for (double v : inv.inverse.data())
                if (v < -eps * scale) { nonneg = false; break; }
            cls.is_m_matrix = nonneg;
        } catch (const SingularError&) {
            // singular matrices are simply not M-matrices
        }
    }
    return cls;
}

InverseResult invert(const DenseMatrix& a) {
    const int n = a.order();
    const double pivot_floor = 1e-13 * a.max_abs();

    // LU factorization with partial pivoting, in place.
    DenseMatrix lu = a;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < n; ++k) {
        int best = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(best, k))) best = i;
        if (std::abs(lu(best, k)) <= pivot_floor)
            throw SingularError("pivot " + std::to_string(std::abs(lu(best, k))) +
                                " below singularity threshold at column " + std::to_string(k));
        if (best != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(best, j));
            std::swap(perm[k], perm[best]);
        }
        for (int i = k + 1; i < n; ++i) {
            lu(i, k) /= lu(k, k);
            const double lik = lu(i, k);
            if (lik == 0.0) continue;
            for (int j = k + 1; j < n; ++j) lu(i, j) -= lik * lu(k, j);
        }
    }

    auto solve = [&](const std::vector<double>& rhs, std::vector<double>& x) {
        for (int i = 0; i < n; ++i) {
            double s = rhs[perm[i]];
            for (int j = 0; j < i; ++j) s -= lu(i, j) * x[j];
            x[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = x[i];
            for (int j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
            x[i] = s / lu(i, i);
        }
    };

    DenseMatrix inv(n);
    std::vector<double> rhs(n), col(n);
    for (int j = 0; j < n; ++j) {
        std::fill(rhs.begin(), rhs.end(), 0.0);
        rhs[j] = 1.0;
        solve(rhs, col);
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
    }

    // One refinement pass per column: x += solve(e_j - A x).
    std::vector<double> resid(n), corr(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double s = (i == j) ? 1.0 : 0.0;
            for (int k = 0; k < n; ++k) s -= a(i, k) * inv(k, j);
            resid[i] = s;
        }
        solve(resid, corr);
        for (int i = 0; i < n; ++i) inv(i, j) += corr[i];
    }

    InverseResult out{std::move(inv), 0.0};
    out.residual = identity_residual(a, out.inverse);
    return out;
}

DenseMatrix jacobi_matrix(const DenseMatrix& a) {
    const int n = a.order();
    DenseMatrix j(n);
    for (int i = 0; i < n; ++i) {
        if (a(i, i) == 0.0)
            throw InputError("zero diagonal entry at index " + std::to_string(i));
        for (int k = 0; k < n; ++k)
            if (k != i) j(i, k) = -a(i, k) / a(i, i);
    }
    return j;
}

SpectralResult spectral_radius_nonneg(const DenseMatrix& m, double tol, long max_iter) {
    if (tol <= 0.0) throw InputError("tolerance must be positive");
    if (max_iter < 1) throw InputError("max_iter must be positive");
    const int n = m.order();
    const double eps = default_eps(m);
    for (double v : m.data())
        if (v < -eps) throw InputError("spectral_radius_nonneg needs a nonnegative matrix");

    std::vector<double> v(n, 1.0), w(n);
    auto apply_shifted = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (int i = 0; i < n; ++i) {
            double s = x[i]; // the +I shift
            for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
            y[i] = s;
        }
    };
    auto residual_of = [&](double lambda) {
        apply_shifted(v, w);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            num = std::max(num, std::abs(w[i] - lambda * v[i]));
            den = std::max(den, std::abs(v[i]));
        }
        return den > 0.0 ? num / den : num;
    };

    double prev = std::numeric_limits<double>::infinity();
    for (long it = 1; it <= max_iter; ++it) {
        apply_shifted(v, w);
        double vw = 0.0, vv = 0.0, norm = 0.0;
        for (int i = 0; i < n; ++i) {
            vw += v[i] * w[i];
            vv += v[i] * v[i];
            norm = std::max(norm, std::abs(w[i]));
        }
        const double lambda = vw / vv; // Rayleigh estimate of rho(M+I)
        if (norm == 0.0)
            throw ConvergenceError("power iteration collapsed to zero", lambda - 1.0, 0.0);
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (std::abs(lambda - prev) < tol)
            return SpectralResult{lambda - 1.0, residual_of(lambda), it};
        prev = lambda;
    }
    // A stalled estimate means the dominant eigenvalue is (nearly) defective;
    // finish with the norm-squaring limit, which does not need an eigenvector.
    const double rho = radius_by_squaring(m);
    if (!std::isfinite(rho))
        throw ConvergenceError("power iteration did not converge in " +
                                   std::to_string(max_iter) + " iterations",
                               prev - 1.0, residual_of(prev));
    return SpectralResult{rho, residual_of(rho + 1.0), max_iter};
}

double tau_oracle(const DenseMatrix& a, double tol) {
    const InverseResult inv = invert(a);
    return 1.0 / spectral_radius_nonneg(inv.inverse, tol).value;
}

bool is_doubly_stochastic(const DenseMatrix& m, double eps) {
    const int n = m.order();
    for (double v : m.data())
        if (v < -eps) return false;
    for (int i = 0; i < n; ++i) {
        double row = 0.0, col = 0.0;
        for (int j = 0; j < n; ++j) {
            row += m(i, j);
            col += m(j, i);
        }
        if (std::abs(row - 1.0) > eps || std::abs(col - 1.0) > eps) return false;
    }
    return true;
}

} // namespace mmineig
