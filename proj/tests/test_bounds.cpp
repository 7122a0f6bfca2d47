#include <doctest.h>

#include <cmath>
#include <map>

#include "mmineig/bounds.hpp"
#include "mmineig/harness.hpp"
#include "mmineig/io.hpp"
#include "mmineig/matcore.hpp"
#include "mmineig/sequences.hpp"

using namespace mmineig;

namespace {

struct Prepared {
    DenseMatrix a;
    DenseMatrix inv;
    AuxLadder ladder;
    BaseQuantities base;
    MatrixClass cls;
    double rho_ja = 0.0;
};

Prepared prepare(const DenseMatrix& a, int t_max) {
    Prepared p{a, invert(a).inverse, build_ladder(a, t_max), base_quantities(a), classify(a),
               0.0};
    p.rho_ja = spectral_radius_nonneg(jacobi_matrix(a)).value;
    return p;
}

std::map<std::string, BoundResult> by_method(const std::vector<BoundResult>& rows) {
    std::map<std::string, BoundResult> out;
    for (const BoundResult& r : rows) out.emplace(r.method, r);
    return out;
}

} // namespace

TEST_CASE("legacy_bounds: Example 1 single values and inapplicable rows") {
    const Prepared p = prepare(fixture("ex1"), 10);
    const auto rows = by_method(legacy_bounds(p.a, p.inv, p.ladder, p.base, p.cls, p.rho_ja, 1));

    CHECK(std::abs(*rows.at("th31_tianhuang").value - 0.7195) <= 5e-5);
    CHECK(std::abs(*rows.at("li_inverse").value - 0.7260) <= 5e-5);
    CHECK(std::abs(*rows.at("wang_sun").value - 0.7223) <= 5e-5);
    CHECK(std::abs(*rows.at("upsilon_t").value - 0.7380) <= 5e-5);

    for (const char* name : {"shivakumar_lower", "shivakumar_inv_lower", "cor34_tianhuang",
                             "li_entries", "upsilon_tilde_t"}) {
        CHECK_FALSE(rows.at(name).applicable);
        CHECK_FALSE(rows.at(name).reason.empty());
    }

    const auto rows10 = by_method(legacy_bounds(p.a, p.inv, p.ladder, p.base, p.cls, p.rho_ja, 10));
    CHECK(std::abs(*rows10.at("upsilon_t").value - 0.8351) <= 5e-5);
}

TEST_CASE("legacy_bounds: Example 2 single values") {
    const Prepared p = prepare(fixture("ex2"), 10);
    const auto rows = by_method(legacy_bounds(p.a, p.inv, p.ladder, p.base, p.cls, p.rho_ja, 1));
    CHECK(std::abs(*rows.at("shivakumar_lower").value - 0.1000) <= 5e-5);
    CHECK(std::abs(*rows.at("cor34_tianhuang").value - 0.1265) <= 5e-5);
    CHECK(std::abs(*rows.at("li_entries").value - 0.1559) <= 5e-5);
    CHECK(std::abs(*rows.at("upsilon_tilde_t").value - 0.6219) <= 5e-5);

    const auto rows10 = by_method(legacy_bounds(p.a, p.inv, p.ladder, p.base, p.cls, p.rho_ja, 10));
    CHECK(std::abs(*rows10.at("upsilon_tilde_t").value - 1.0147) <= 5e-5);
}

TEST_CASE("legacy_bounds: identity collapses every lower bound to 1") {
    const Prepared p = prepare(DenseMatrix::identity(3), 2);
    for (int t = 1; t <= 2; ++t) {
        const auto rows = by_method(legacy_bounds(p.a, p.inv, p.ladder, p.base, p.cls, p.rho_ja, t));
        for (const char* name :
             {"shivakumar_lower", "th31_tianhuang", "li_inverse", "upsilon_t"})
            CHECK(*rows.at(name).value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gamma: table values and exact cases") {
    const Prepared ex1 = prepare(fixture("ex1"), 10);
    CHECK(std::abs(*gamma(ex1.inv, ex1.ladder, 1).value - 0.7905) <= 5e-5);
    CHECK(std::abs(*gamma(ex1.inv, ex1.ladder, 10).value - 0.8759) <= 5e-5);

    const Prepared ex3 = prepare(fixture("ex3"), 1);
    CHECK(std::abs(*gamma(ex3.inv, ex3.ladder, 1).value - 1.0) <= 1e-9);

    const Prepared two = prepare(DenseMatrix(2, {2, -1, -1, 2}), 1);
    CHECK(*gamma(two.inv, two.ladder, 1).value == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(gamma(ex3.inv, ex3.ladder, 2), InputError);
}

TEST_CASE("omega: table values and frozen Example 1 value") {
    const Prepared ex3 = prepare(fixture("ex3"), 1);
    CHECK(std::abs(*omega(ex3.inv, ex3.ladder, 1).value - 1.0) <= 1e-9);

    const Prepared diag = prepare(DenseMatrix(2, {2, 0, 0, 3}), 1);
    CHECK(*omega(diag.inv, diag.ladder, 1).value == doctest::Approx(2.0).epsilon(1e-12));

    const Prepared ex1 = prepare(fixture("ex1"), 1);
    const double v = *omega(ex1.inv, ex1.ladder, 1).value;
    CHECK(v == doctest::Approx(0.78820467695676).epsilon(1e-10));
    CHECK(v <= *gamma(ex1.inv, ex1.ladder, 1).value);
    CHECK(v <= 0.8873);
}

TEST_CASE("gamma_tilde: table values, hand case, inapplicability") {
    const Prepared ex2 = prepare(fixture("ex2"), 10);
    CHECK(std::abs(*gamma_tilde(ex2.a, ex2.cls, ex2.ladder, 1).value - 0.6288) <= 5e-5);
    CHECK(std::abs(*gamma_tilde(ex2.a, ex2.cls, ex2.ladder, 10).value - 1.0785) <= 5e-5);

    const Prepared two = prepare(DenseMatrix(2, {2, -1, -1, 2}), 1);
    CHECK(*gamma_tilde(two.a, two.cls, two.ladder, 1).value ==
          doctest::Approx(1.0).epsilon(1e-12));

    const Prepared diag = prepare(DenseMatrix(2, {2, 0, 0, 3}), 1);
    CHECK(*gamma_tilde(diag.a, diag.cls, diag.ladder, 1).value ==
          doctest::Approx(2.0).epsilon(1e-12));

    const Prepared ex1 = prepare(fixture("ex1"), 1);
    const BoundResult na = gamma_tilde(ex1.a, ex1.cls, ex1.ladder, 1);
    CHECK_FALSE(na.applicable);
    CHECK(na.reason == "matrix not strictly diagonally dominant");
}

TEST_CASE("omega_tilde: exact case and frozen Example 2 value") {
    const Prepared ex3 = prepare(fixture("ex3"), 1);
    CHECK(std::abs(*omega_tilde(ex3.a, ex3.cls, ex3.ladder, 1).value - 1.0) <= 1e-9);

    const Prepared diag = prepare(DenseMatrix(2, {2, 0, 0, 3}), 1);
    CHECK(*omega_tilde(diag.a, diag.cls, diag.ladder, 1).value ==
          doctest::Approx(2.0).epsilon(1e-12));

    const Prepared ex2 = prepare(fixture("ex2"), 1);
    const double v = *omega_tilde(ex2.a, ex2.cls, ex2.ladder, 1).value;
    CHECK(v == doctest::Approx(0.60579407875484).epsilon(1e-10));
    CHECK(v <= *gamma_tilde(ex2.a, ex2.cls, ex2.ladder, 1).value);
}

TEST_CASE("hadamard_upper: chain and special B") {
    const Prepared ex3 = prepare(fixture("ex3"), 1);
    DenseMatrix ones(10);
    for (double& v : ones.data()) v = 1.0;
    const HadamardBound hb = hadamard_upper(ex3.a, ex3.inv, ones, ex3.ladder, 1);
    REQUIRE(hb.applicable);
    CHECK(*hb.tight == doctest::Approx(1.0).epsilon(1e-12)); // rho(inv(A)) exactly
    CHECK(*hb.tight <= *hb.loose + 1e-12);

    const HadamardBound hid =
        hadamard_upper(ex3.a, ex3.inv, DenseMatrix::identity(10), ex3.ladder, 1);
    double max_aii = 0.0;
    for (int i = 0; i < 10; ++i) max_aii = std::max(max_aii, ex3.inv(i, i));
    CHECK(*hid.tight == doctest::Approx(max_aii).epsilon(1e-12));
    CHECK(*hid.loose == doctest::Approx(max_aii).epsilon(1e-12));

    const Prepared ex1 = prepare(fixture("ex1"), 1);
    DenseMatrix ones1(10);
    for (double& v : ones1.data()) v = 1.0;
    const HadamardBound h1 = hadamard_upper(ex1.a, ex1.inv, ones1, ex1.ladder, 1);
    CHECK(*h1.tight ==
          doctest::Approx(1.0 / *gamma(ex1.inv, ex1.ladder, 1).value).epsilon(1e-12));

    DenseMatrix bad(10);
    bad(0, 1) = -1.0;
    CHECK_THROWS_AS(hadamard_upper(ex3.a, ex3.inv, bad, ex3.ladder, 1), InputError);
}

TEST_CASE("full_report: ordering, identity and row completeness") {
    const BoundReport report = full_report(DenseMatrix::identity(3), 2);
    REQUIRE(report.tau.has_value());
    CHECK(*report.tau == doctest::Approx(1.0).epsilon(1e-12));
    for (const BoundResult& row : report.rows)
        if (row.applicable && row.kind == BoundKind::lower)
            CHECK(*row.value == doctest::Approx(1.0).epsilon(1e-10));

    // Every sequence method appears for every t.
    for (const char* method :
         {"upsilon_t", "gamma_t", "omega_t", "upsilon_tilde_t", "gamma_tilde_t",
          "omega_tilde_t"}) {
        int count = 0;
        for (const BoundResult& row : report.rows)
            if (row.method == method) {
                ++count;
                CHECK(row.t.has_value());
            }
        CHECK(count == 2);
    }
    CHECK(report.rows.front().method == "shivakumar_lower");
}

TEST_CASE("bounds scale by 1/c when the matrix scales by c") {
    GenSpec spec;
    spec.n = 6;
    spec.seed = 7;
    const DenseMatrix a = gen_sdd_m(spec);
    const BoundReport base = full_report(a, 2);
    for (double c : {2.0, 0.5}) {
        DenseMatrix scaled = a;
        for (double& v : scaled.data()) v *= c;
        const BoundReport rep = full_report(scaled, 2);
        REQUIRE(rep.rows.size() == base.rows.size());
        for (std::size_t k = 0; k < rep.rows.size(); ++k) {
            if (!base.rows[k].applicable) continue;
            if (base.rows[k].kind != BoundKind::lower) continue;
            CHECK(*rep.rows[k].value ==
                  doctest::Approx(c * *base.rows[k].value).epsilon(1e-9));
        }
    }
}
