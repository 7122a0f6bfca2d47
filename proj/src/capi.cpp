#include "mmineig.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "mmineig/bounds.hpp"
#include "mmineig/harness.hpp"
#include "mmineig/io.hpp"
#include "mmineig/matcore.hpp"
#include "mmineig/matrix.hpp"

using namespace mmineig;

struct mm_matrix {
    DenseMatrix m;
};

struct mm_report {
    BoundReport report;
    std::vector<std::string> kinds;
};

namespace {

thread_local std::string g_last_error;

mm_status set_error(mm_status code, const std::string& what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
mm_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const InputError& e) {
        return set_error(MM_ERR_INPUT, e.what());
    } catch (const SingularError& e) {
        return set_error(MM_ERR_SINGULAR, e.what());
    } catch (const ConvergenceError& e) {
        return set_error(MM_ERR_NO_CONVERGENCE, e.what());
    } catch (const std::exception& e) {
        return set_error(MM_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mm_status parse_format(const char* name, MatrixFormat& fmt) {
    if (name == nullptr) return set_error(MM_ERR_INPUT, "format must not be NULL");
    const auto parsed = format_from_name(name);
    if (!parsed)
        return set_error(MM_ERR_INPUT, std::string("unknown format '") + name + "'");
    fmt = *parsed;
    return MM_OK;
}

} // namespace

extern "C" {

const char* mm_last_error(void) { return g_last_error.c_str(); }

mm_status mm_matrix_create(int n, const double* entries, mm_matrix** out) {
    return guarded([&] {
        if (entries == nullptr || out == nullptr)
            return set_error(MM_ERR_INPUT, "NULL argument");
        std::vector<double> data(entries, entries + static_cast<std::size_t>(n) * n);
        *out = new mm_matrix{DenseMatrix(n, std::move(data))};
        return MM_OK;
    });
}

mm_status mm_matrix_parse_file(const char* path, const char* format, mm_matrix** out) {
    return guarded([&] {
        if (path == nullptr || out == nullptr)
            return set_error(MM_ERR_INPUT, "NULL argument");
        std::optional<MatrixFormat> fmt;
        if (format != nullptr) {
            MatrixFormat f;
            const mm_status st = parse_format(format, f);
            if (st != MM_OK) return st;
            fmt = f;
        }
        *out = new mm_matrix{parse_matrix(path, fmt).matrix};
        return MM_OK;
    });
}

mm_status mm_matrix_fixture(const char* name, mm_matrix** out) {
    return guarded([&] {
        if (name == nullptr || out == nullptr)
            return set_error(MM_ERR_INPUT, "NULL argument");
        *out = new mm_matrix{fixture(name)};
        return MM_OK;
    });
}

int mm_matrix_order(const mm_matrix* m) { return m ? m->m.order() : 0; }

double mm_matrix_get(const mm_matrix* m, int i, int j) { return m->m(i, j); }

mm_status mm_matrix_write_file(const mm_matrix* m, const char* path, const char* format) {
    return guarded([&] {
        if (m == nullptr || path == nullptr)
            return set_error(MM_ERR_INPUT, "NULL argument");
        MatrixFormat fmt;
        const mm_status st = parse_format(format, fmt);
        if (st != MM_OK) return st;
        write_matrix(m->m, path, fmt);
        return MM_OK;
    });
}

mm_status mm_matrix_render(const mm_matrix* m, const char* format, char** out) {
    return guarded([&] {
        if (m == nullptr || out == nullptr)
            return set_error(MM_ERR_INPUT, "NULL argument");
        MatrixFormat fmt;
        const mm_status st = parse_format(format, fmt);
        if (st != MM_OK) return st;
        *out = dup_string(render_matrix(m->m, fmt));
        return MM_OK;
    });
}

void mm_matrix_free(mm_matrix* m) { delete m; }

void mm_string_free(char* s) { std::free(s); }

mm_status mm_classify(const mm_matrix* m, double eps, mm_class_info* info,
                      double* dominance_ratios) {
    return guarded([&] {
        if (m == nullptr || info == nullptr)
            return set_error(MM_ERR_INPUT, "NULL argument");
        const MatrixClass cls = classify(m->m, eps);
        info->is_z_matrix = cls.is_z_matrix;
        info->positive_diagonal = cls.positive_diagonal;
        info->is_sdd = cls.is_sdd;
        info->is_wcdd = cls.is_wcdd;
        info->is_m_matrix = cls.is_m_matrix;
        info->zero_tolerance = cls.zero_tolerance;
        if (dominance_ratios != nullptr)
            std::memcpy(dominance_ratios, cls.dominance_ratios.data(),
                        cls.dominance_ratios.size() * sizeof(double));
        return MM_OK;
    });
}

mm_status mm_tau_oracle(const mm_matrix* m, double tol, double* tau) {
    return guarded([&] {
        if (m == nullptr || tau == nullptr)
            return set_error(MM_ERR_INPUT, "NULL argument");
        *tau = tau_oracle(m->m, tol);
        return MM_OK;
    });
}

mm_status mm_report_run(const mm_matrix* m, int t_max, double tol, mm_report** out) {
    return guarded([&] {
        if (m == nullptr || out == nullptr)
            return set_error(MM_ERR_INPUT, "NULL argument");
        auto* r = new mm_report{full_report(m->m, t_max, tol), {}};
        r->kinds.reserve(r->report.rows.size());
        for (const BoundResult& row : r->report.rows)
            r->kinds.push_back(row.kind == BoundKind::lower ? "lower" : "upper");
        *out = r;
        return MM_OK;
    });
}

int mm_report_row_count(const mm_report* r) {
    return r ? static_cast<int>(r->report.rows.size()) : 0;
}

mm_status mm_report_row(const mm_report* r, int index, mm_bound_row* row) {
    if (r == nullptr || row == nullptr)
        return set_error(MM_ERR_INPUT, "NULL argument");
    if (index < 0 || index >= static_cast<int>(r->report.rows.size()))
        return set_error(MM_ERR_INPUT, "row index out of range");
    const BoundResult& b = r->report.rows[index];
    row->method = b.method.c_str();
    row->kind = r->kinds[index].c_str();
    row->t = b.t.value_or(-1);
    row->applicable = b.applicable;
    row->value = b.value.value_or(0.0);
    row->reason = b.reason.c_str();
    return MM_OK;
}

mm_status mm_report_tau(const mm_report* r, double* tau, int* has_tau) {
    if (r == nullptr || tau == nullptr || has_tau == nullptr)
        return set_error(MM_ERR_INPUT, "NULL argument");
    *has_tau = r->report.tau.has_value();
    *tau = r->report.tau.value_or(0.0);
    return MM_OK;
}

void mm_report_free(mm_report* r) { delete r; }

mm_status mm_generate_sdd(int n, uint64_t seed, double dominance_margin, double density,
                          double magnitude, mm_matrix** out) {
    return guarded([&] {
        if (out == nullptr) return set_error(MM_ERR_INPUT, "NULL argument");
        GenSpec spec;
        spec.family = GenFamily::sdd;
        spec.n = n;
        spec.seed = seed;
        spec.dominance_margin = dominance_margin;
        spec.density = density;
        spec.magnitude = magnitude;
        *out = new mm_matrix{gen_sdd_m(spec)};
        return MM_OK;
    });
}

mm_status mm_generate_ds_inverse(int n, uint64_t seed, double strength, mm_matrix** out) {
    return guarded([&] {
        if (out == nullptr) return set_error(MM_ERR_INPUT, "NULL argument");
        *out = new mm_matrix{gen_ds_inverse(n, seed, strength)};
        return MM_OK;
    });
}

mm_status mm_verify(int trials, int t_max, uint64_t seed, char** failures_text,
                    int* failure_count, double* max_gap) {
    return guarded([&] {
        if (trials < 1) return set_error(MM_ERR_INPUT, "trials must be >= 1");
        std::vector<GenSpec> specs;
        for (int k = 0; k < trials; ++k) {
            GenSpec spec;
            spec.family = GenFamily::sdd;
            spec.n = 3 + static_cast<int>((seed + k) % 10); // orders 3..12
            spec.seed = seed * 1000003ULL + static_cast<std::uint64_t>(k);
            spec.density = 0.5 + 0.5 * ((k % 2) == 0);
            specs.push_back(spec);
        }
        for (int k = 0; k < trials / 4; ++k) {
            GenSpec spec;
            spec.family = GenFamily::ds_inverse;
            spec.n = 4 + static_cast<int>((seed + k) % 9);
            spec.seed = seed * 2000003ULL + static_cast<std::uint64_t>(k);
            spec.strength = 1.0 + static_cast<double>(k % 5);
            specs.push_back(spec);
        }
        const PropertyReport report = check_properties(specs, t_max);
        if (failure_count != nullptr)
            *failure_count = static_cast<int>(report.failures.size());
        if (max_gap != nullptr) *max_gap = report.max_gap;
        if (failures_text != nullptr) {
            std::string text;
            for (const PropertyFailure& f : report.failures)
                text += f.property + " (n=" + std::to_string(f.spec.n) +
                        ", seed=" + std::to_string(f.spec.seed) + "): " + f.detail + "\n";
            *failures_text = dup_string(text);
        }
        return MM_OK;
    });
}

} // extern "C"
