#include <doctest.h>

#include <string>

#include "mmineig/harness.hpp"
#include "mmineig/io.hpp"

using namespace mmineig;

TEST_CASE("fixtures") {
    const DenseMatrix& ex3 = fixture("ex3");
    CHECK(ex3.order() == 10);
    CHECK(ex3(0, 0) == 10.0);
    CHECK(ex3(0, 1) == -1.0);
    CHECK(fixture("ex1")(9, 9) == 37.9);
    CHECK(fixture("ex2")(9, 9) == 38.1);
    CHECK(is_fixture_name("ex2"));
    CHECK_FALSE(is_fixture_name("ex9"));
    CHECK_THROWS_AS(fixture("ex9"), InputError);
}

TEST_CASE("plain format") {
    const DenseMatrix m = parse_text("2\n2 -1\n-1 2", MatrixFormat::plain);
    CHECK(m == DenseMatrix(2, {2, -1, -1, 2}));

    CHECK_THROWS_AS(parse_text("2\n1 2 3", MatrixFormat::plain), InputError);
    CHECK_THROWS_AS(parse_text("2\n1 2 3 x", MatrixFormat::plain), InputError);
    CHECK_THROWS_AS(parse_text("0", MatrixFormat::plain), InputError);
}

TEST_CASE("csv format and error locations") {
    const DenseMatrix m = parse_text("2,-1\n-1,2\n", MatrixFormat::csv);
    CHECK(m.order() == 2);

    try {
        parse_text("1,2,3\n4,5\n", MatrixFormat::csv);
        FAIL("expected a parse error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("row 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_text("1,foo\n3,4\n", MatrixFormat::csv), InputError);
}

TEST_CASE("json format") {
    const DenseMatrix m =
        parse_text(R"({"n": 2, "rows": [[2, -1], [-1, 2]]})", MatrixFormat::json);
    CHECK(m == DenseMatrix(2, {2, -1, -1, 2}));
    CHECK_THROWS_AS(parse_text(R"({"rows": []})", MatrixFormat::json), InputError);
    CHECK_THROWS_AS(parse_text(R"({"n": 2, "rows": [[1, 2]]})", MatrixFormat::json),
                    InputError);
}

TEST_CASE("render/parse round trip is bitwise for all formats") {
    GenSpec spec;
    spec.n = 6;
    spec.seed = 31337;
    spec.density = 0.7;
    const DenseMatrix m = gen_sdd_m(spec);
    for (MatrixFormat fmt : {MatrixFormat::plain, MatrixFormat::csv, MatrixFormat::json})
        CHECK(parse_text(render_matrix(m, fmt), fmt) == m);
    // and on a fixture carrying a non-representable decimal
    for (MatrixFormat fmt : {MatrixFormat::plain, MatrixFormat::csv, MatrixFormat::json})
        CHECK(parse_text(render_matrix(fixture("ex1"), fmt), fmt) == fixture("ex1"));
}

TEST_CASE("parse_matrix resolves fixture names without touching disk") {
    const MatrixDocument doc = parse_matrix("ex3");
    CHECK(doc.matrix == fixture("ex3"));
    CHECK_THROWS_AS(parse_matrix("/nonexistent/file.mat"), InputError);
}
