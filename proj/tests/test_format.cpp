#include <doctest.h>

#include <string>

#include "bicx/format.hpp"
#include "support/oracles.hpp"

using namespace bicx;

TEST_CASE("both text forms round trip through the parser") {
    oracles::Rng rng(201);
    for (int it = 0; it < 500; ++it) {
        const Bicomplex w = rng.value_ranged();
        CHECK(approx_eq(parse_bicomplex(to_cartesian_string(w)), w,
                        1e-13 * euclid_norm(w)));
        CHECK(approx_eq(parse_bicomplex(to_idempotent_string(w)), w, 0.0));
    }
}

TEST_CASE("parser accepts the documented spellings") {
    CHECK(approx_eq(parse_bicomplex("1"), Bicomplex::one(), 0.0));
    CHECK(approx_eq(parse_bicomplex("-2.5"), Bicomplex(-2.5), 0.0));
    CHECK(approx_eq(parse_bicomplex("1+2i1"), Bicomplex(Complex{1.0, 2.0}), 0.0));
    CHECK(approx_eq(parse_bicomplex("1-2i1"), Bicomplex(Complex{1.0, -2.0}), 0.0));
    CHECK(approx_eq(parse_bicomplex("3i1"), Bicomplex(Complex{0.0, 3.0}), 0.0));
    CHECK(approx_eq(parse_bicomplex("i1"), Bicomplex(Complex{0.0, 1.0}), 0.0));
    CHECK(approx_eq(parse_bicomplex("-i1"), Bicomplex(Complex{0.0, -1.0}), 0.0));
    CHECK(approx_eq(parse_bicomplex("1+i1"), Bicomplex(Complex{1.0, 1.0}), 0.0));
    CHECK(approx_eq(parse_bicomplex("1e-3+2.5e2i1"), Bicomplex(Complex{1e-3, 2.5e2}), 0.0));
    CHECK(approx_eq(parse_bicomplex("[1, -1]"), Bicomplex::j(), 0.0));
    CHECK(approx_eq(parse_bicomplex("[ 1+0i1 , 0+0i1 ]"), Bicomplex::e1(), 0.0));
    CHECK(approx_eq(parse_bicomplex("(0) + (0+1i1) i2"), Bicomplex::j(), 0.0));
    CHECK(approx_eq(parse_bicomplex("(1+2i1) + (3+4i1) i2"),
                    Bicomplex::from_cartesian({1.0, 2.0}, {3.0, 4.0}), 0.0));
    CHECK(approx_eq(parse_bicomplex("(1) - (1) i2"),
                    Bicomplex::from_cartesian({1.0, 0.0}, {-1.0, 0.0}), 0.0));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS((void)parse_bicomplex(""), ParseError);
    CHECK_THROWS_AS((void)parse_bicomplex("bogus"), ParseError);
    CHECK_THROWS_AS((void)parse_bicomplex("1+2i3"), ParseError);
    CHECK_THROWS_AS((void)parse_bicomplex("[1]"), ParseError);
    CHECK_THROWS_AS((void)parse_bicomplex("[1, 2, 3]"), ParseError);
    CHECK_THROWS_AS((void)parse_bicomplex("(1) + (2)"), ParseError);
    CHECK_THROWS_AS((void)parse_bicomplex("(1 + (2) i2"), ParseError);
    CHECK_THROWS_AS((void)parse_bicomplex("1+2i1garbage"), ParseError);
    CHECK_THROWS_AS((void)parse_bicomplex_list("[1, 2"), ParseError);
}

TEST_CASE("list parsing splits on top-level separators only") {
    const auto values = parse_bicomplex_list("[1, -1], (0) + (1i1) i2\n 2, -3i1\n");
    REQUIRE(values.size() == 4);
    CHECK(approx_eq(values[0], Bicomplex::j(), 0.0));
    CHECK(approx_eq(values[1], Bicomplex::j(), 0.0));
    CHECK(approx_eq(values[2], Bicomplex(2.0), 0.0));
    CHECK(approx_eq(values[3], Bicomplex(Complex{0.0, -3.0}), 0.0));
}

TEST_CASE("csv cells use the plain a+bi spelling with both halves") {
    CHECK(to_csv_cell(Bicomplex::one()) == "1+0i;1+0i");
    CHECK(to_csv_cell(Bicomplex::j()) == "1+0i;-1+0i");
    CHECK(to_csv_cell(Bicomplex::from_idempotent({0.5, -2.0}, {0.0, 1.0})) ==
          "0.5-2i;0+1i");
}

TEST_CASE("formatting is 17-significant-digit and locale independent") {
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    const std::string cell = to_csv_cell(Bicomplex(1.0 / 3.0));
    CHECK(cell.find(',') == std::string::npos);
}

TEST_CASE("tvector json round trip") {
    oracles::Rng rng(202);
    const TVector psi = rng.tvector(7);
    const TVector back = tvector_from_json(tvector_to_json(psi));
    REQUIRE(back.size() == psi.size());
    for (std::size_t l = 0; l < psi.size(); ++l) CHECK(approx_eq(back[l], psi[l], 0.0));

    CHECK_THROWS_AS((void)tvector_from_json("{\"not\": \"an array\"}"), ParseError);
    CHECK_THROWS_AS((void)tvector_from_json("[42]"), ParseError);
    CHECK_THROWS_AS((void)tvector_from_json("not json"), ParseError);
}

TEST_CASE("gausspoly json and pretty forms") {
    const GaussPoly u = GaussPoly::monomial(2, 1.0, Bicomplex::j()) +
                        GaussPoly::monomial(0, 0.5, Bicomplex(Complex{0.0, 1.0}));
    const GaussPoly back = gausspoly_from_json(gausspoly_to_json(u));
    REQUIRE(back.terms().size() == u.terms().size());
    for (std::size_t i = 0; i < u.terms().size(); ++i) {
        CHECK(back.terms()[i].n == u.terms()[i].n);
        CHECK(back.terms()[i].alpha == u.terms()[i].alpha);
        CHECK(approx_eq(back.terms()[i].coeff, u.terms()[i].coeff, 0.0));
    }
    CHECK(gausspoly_pretty(GaussPoly()) == "0");
    CHECK(gausspoly_pretty(u).find("x^2") != std::string::npos);
    CHECK(gausspoly_pretty(u).find("exp(-0.5 x^2)") != std::string::npos);

    CHECK_THROWS_AS((void)gausspoly_from_json("[{\"n\": 1}]"), ParseError);
}

TEST_CASE("matrix csv layout") {
    const std::vector<std::vector<Bicomplex>> m{{Bicomplex::one(), Bicomplex()},
                                                {Bicomplex(), Bicomplex::one()}};
    CHECK(matrix_to_csv(m) == "1+0i;1+0i,0+0i;0+0i\r\n0+0i;0+0i,1+0i;1+0i\r\n");
}
