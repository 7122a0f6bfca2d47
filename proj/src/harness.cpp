#include "mmineig/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mmineig/bounds.hpp"
#include "mmineig/matcore.hpp"
#include "mmineig/sequences.hpp"

namespace mmineig {

namespace {

// 53-bit uniform in [0, 1). Drawn straight from the mt19937_64 word stream so
// the result is bit-identical across platforms; std::uniform_real_distribution
// gives no such guarantee.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

// Random cyclic permutation (Sattolo): always a derangement.
std::vector<int> cyclic_derangement(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i >= 1; --i)
        std::swap(perm[i], perm[static_cast<int>(below(rng, static_cast<std::uint64_t>(i)))]);
    return perm;
}

} // namespace

DenseMatrix gen_sdd_m(const GenSpec& spec) {
    if (spec.n < 2) throw InputError("gen_sdd_m needs order >= 2");
    std::mt19937_64 rng(spec.seed);
    DenseMatrix a(spec.n);
    for (int i = 0; i < spec.n; ++i) {
        double offsum = 0.0;
        for (int j = 0; j < spec.n; ++j) {
            if (j == i) continue;
            if (uniform01(rng) < spec.density) {
                const double x = spec.magnitude * (1.0 - uniform01(rng)); // in (0, magnitude]
                a(i, j) = -x;
                offsum += x;
            }
        }
        const double margin = spec.dominance_margin * (1.0 + uniform01(rng));
        a(i, i) = offsum + margin;
    }
    return a;
}

DenseMatrix gen_ds_inverse(int n, std::uint64_t seed, double strength) {
    if (n < 3) throw InputError("gen_ds_inverse needs order >= 3");
    if (strength <= 0.0) throw InputError("strength must be positive");
    std::mt19937_64 rng(seed);

    constexpr int kMixCount = 3;
    double weights[kMixCount];
    double total = 0.0;
    for (double& w : weights) {
        w = 1.0 - uniform01(rng); // strictly positive
        total += w;
    }

    DenseMatrix a(n);
    for (int i = 0; i < n; ++i) a(i, i) = strength + 1.0;
    for (int l = 0; l < kMixCount; ++l) {
        const std::vector<int> perm = cyclic_derangement(n, rng);
        const double w = strength * weights[l] / total;
        for (int i = 0; i < n; ++i) a(i, perm[i]) -= w;
    }
    return a;
}

DenseMatrix ds_complete(int n, double strength) {
    if (n < 2) throw InputError("ds_complete needs order >= 2");
    DenseMatrix a(n);
    const double off = strength / (n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = (i == j) ? strength + 1.0 : -off;
    return a;
}

PropertyReport check_properties(const std::vector<GenSpec>& specs, int t_max) {
    if (specs.empty()) throw InputError("check_properties needs at least one spec");
    if (t_max < 1) throw InputError("t_max must be >= 1");

    PropertyReport report;
    report.trials = static_cast<int>(specs.size());

    for (const GenSpec& spec : specs) {
        auto fail = [&](const std::string& property, const std::string& detail) {
            report.failures.push_back(PropertyFailure{property, spec, detail});
        };
        try {
            const DenseMatrix a =
                spec.family == GenFamily::sdd
                    ? gen_sdd_m(spec)
                    : (spec.family == GenFamily::ds_inverse
                           ? gen_ds_inverse(spec.n, spec.seed, spec.strength)
                           : ds_complete(spec.n, spec.strength));
            const int n = a.order();
            const MatrixClass cls = classify(a);
            if (spec.family == GenFamily::sdd && (!cls.is_sdd || !cls.is_m_matrix))
                fail("generator_class", "gen_sdd_m output not an SDD M-matrix");

            const InverseResult inv = invert(a);
            if (inv.residual > 1e-10)
                fail("inverse_residual", "||A inv(A) - I|| = " + std::to_string(inv.residual));
            const double inv_scale = inv.inverse.max_abs();
            for (double v : inv.inverse.data())
                if (v < -1e-10 * std::max(1.0, inv_scale)) {
                    fail("inverse_nonneg", "negative inverse entry " + std::to_string(v));
                    break;
                }

            const AuxLadder ladder = build_ladder(a, t_max);

            if (cls.is_sdd) {
                // Ladder ordering chain, entrywise.
                const double tol = 1e-12;
                for (int i = 0; i < n; ++i) {
                    if (!(ladder.r[i] < 1.0)) fail("ladder_chain", "r >= 1");
                    for (int j = 0; j < n; ++j) {
                        if (j == i) continue;
                        double prev = ladder.r[i];
                        auto step = [&](double next, const char* what) {
                            if (next > prev + tol) fail("ladder_chain", what);
                            prev = next;
                        };
                        step(ladder.m(j, i), "m > r");
                        step(ladder.u[0](j, i), "u0 > m");
                        for (int t = 1; t <= t_max; ++t) {
                            step(ladder.p[t - 1](j, i), "p(t) increased");
                            step(ladder.u[t](j, i), "u(t) > p(t)");
                        }
                        if (prev < -tol) fail("ladder_chain", "negative ladder entry");
                    }
                }
                // Inverse-entry inequalities.
                for (int t = 1; t <= t_max; ++t) {
                    for (int i = 0; i < n; ++i) {
                        const double aii = inv.inverse(i, i);
                        if (aii < 1.0 / a(i, i) - 1e-12 ||
                            aii > ladder.phi_t[t - 1][i] + 1e-9)
                            fail("inverse_diag_bracket", "alpha_ii outside [1/a_ii, phi_i(t)]");
                        for (int j = 0; j < n; ++j) {
                            if (j == i) continue;
                            if (inv.inverse(j, i) > ladder.p[t - 1](j, i) * aii + 1e-9)
                                fail("inverse_offdiag_bound", "alpha_ji > p_ji(t) alpha_ii");
                        }
                    }
                    if (t >= 2)
                        for (int i = 0; i < n; ++i)
                            if (ladder.phi_t[t - 1][i] > ladder.phi_t[t - 2][i] + 1e-12)
                                fail("phi_monotone", "phi_i(t) increased");
                }
            }

            double tau = 0.0;
            bool have_tau = false;
            try {
                tau = 1.0 / spectral_radius_nonneg(inv.inverse).value;
                have_tau = true;
            } catch (const Error& e) {
                fail("oracle", e.what());
            }

            const BoundReport bounds = full_report(a, t_max);
            double best_lower = -std::numeric_limits<double>::infinity();
            if (have_tau) {
                for (const BoundResult& row : bounds.rows) {
                    if (!row.applicable) continue;
                    if (row.kind == BoundKind::lower) {
                        best_lower = std::max(best_lower, *row.value);
                        if (*row.value > tau + 1e-8)
                            fail("soundness", row.method + " = " + std::to_string(*row.value) +
                                                  " exceeds tau = " + std::to_string(tau));
                    } else if (*row.value < tau - 1e-8) {
                        fail("soundness", row.method + " below tau");
                    }
                }
                if (best_lower > -std::numeric_limits<double>::infinity())
                    report.max_gap = std::max(report.max_gap, tau - best_lower);
            }

            // Monotonicity in t and the pair-vs-single ordering.
            for (const char* method :
                 {"gamma_t", "omega_t", "gamma_tilde_t", "omega_tilde_t"}) {
                double prev = -std::numeric_limits<double>::infinity();
                for (const BoundResult& row : bounds.rows) {
                    if (row.method != method || !row.applicable) continue;
                    if (*row.value < prev - 1e-12)
                        fail("monotone_t", std::string(method) + " decreased in t");
                    prev = *row.value;
                }
            }
            for (int t = 1; t <= t_max; ++t) {
                std::optional<double> g, o;
                for (const BoundResult& row : bounds.rows) {
                    if (!row.applicable || row.t != t) continue;
                    if (row.method == "gamma_t") g = row.value;
                    if (row.method == "omega_t") o = row.value;
                }
                if (g && o && *g < *o - 1e-12) fail("gamma_ge_omega", "Gamma_t < Omega_t");
            }

            // Two-bound chain for a random nonnegative B.
            {
                std::mt19937_64 brng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
                DenseMatrix b(n);
                for (double& v : b.data()) v = uniform01(brng);
                const HadamardBound hb = hadamard_upper(a, inv.inverse, b, ladder, 1);
                if (hb.applicable) {
                    const double rho = spectral_radius_nonneg(hadamard(b, inv.inverse)).value;
                    if (rho > *hb.tight + 1e-8) fail("hadamard_chain", "rho > tight");
                    if (*hb.tight > *hb.loose + 1e-8) fail("hadamard_chain", "tight > loose");
                }
            }

            if (spec.family != GenFamily::sdd) {
                for (int i = 1; i < n; ++i)
                    if (a(i, i) != a(0, 0)) fail("ds_diag", "diagonal not constant");
                if (!is_doubly_stochastic(inv.inverse, 1e-10))
                    fail("ds_inverse", "inverse not doubly stochastic");
                const double rho_ja =
                    spectral_radius_nonneg(jacobi_matrix(a)).value;
                if (std::abs(rho_ja - (1.0 - 1.0 / a(0, 0))) > 1e-9)
                    fail("ds_jacobi_radius", "rho(J_A) != 1 - 1/a_ii");

                // Equal-diagonal family orderings against the legacy bounds.
                auto value_of = [&](const std::string& method,
                                    std::optional<int> t) -> std::optional<double> {
                    for (const BoundResult& row : bounds.rows)
                        if (row.method == method && row.t == t && row.applicable)
                            return row.value;
                    return std::nullopt;
                };
                for (int t = 1; t <= t_max; ++t) {
                    const auto g = value_of("gamma_t", t), o = value_of("omega_t", t);
                    const auto gt = value_of("gamma_tilde_t", t),
                               ot = value_of("omega_tilde_t", t);
                    const auto v2 = value_of("th31_tianhuang", std::nullopt);
                    const auto v3 = value_of("cor34_tianhuang", std::nullopt);
                    const auto v4 = value_of("li_inverse", std::nullopt);
                    const auto v5 = value_of("li_entries", std::nullopt);
                    const double slack = 1e-10;
                    if (g && o && v2 && (*g < *o - slack || *o < *v2 - slack))
                        fail("equal_diag_order_a",
                             "gamma_t >= omega_t >= th31_tianhuang violated");
                    if (g && v4 && v2 && (*g < *v4 - slack || *v4 < *v2 - slack))
                        fail("equal_diag_order_b",
                             "gamma_t >= li_inverse >= th31_tianhuang violated");
                    if (ot && v3 && *ot < *v3 - slack)
                        fail("equal_diag_order_c",
                             "omega_tilde_t >= cor34_tianhuang violated");
                    if (gt && v5 && *gt < *v5 - slack)
                        fail("equal_diag_order_d",
                             "gamma_tilde_t >= li_entries violated");
                }
            }
        } catch (const Error& e) {
            fail("exception", e.what());
        }
    }
    return report;
}

} // namespace mmineig
