#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bicx/oscillator.hpp"
#include "support/oracles.hpp"

using namespace bicx;

namespace {

OscillatorParams params(double xi1, double xi2, double m = 1.0, double omega = 1.0,
                        double hbar = 1.0) {
    OscillatorParams p;
    p.mass = m;
    p.omega = omega;
    p.hbar = hbar;
    p.xi = Bicomplex::from_idempotent({xi1, 0.0}, {xi2, 0.0});
    return p;
}

double fs_norm(const GaussPoly& u) {
    const Bicomplex g = inner_product(u, u);
    return std::sqrt(std::max(0.0, 0.5 * (g.z1hat().real() + g.z2hat().real())));
}

}  // namespace

TEST_CASE("hermite coefficients") {
    CHECK(hermite_coeffs(0) == std::vector<double>{1.0});
    CHECK(hermite_coeffs(1) == std::vector<double>{0.0, 2.0});
    CHECK(hermite_coeffs(2) == std::vector<double>{-2.0, 0.0, 4.0});
    CHECK(hermite_coeffs(3) == std::vector<double>{0.0, -12.0, 0.0, 8.0});

    CHECK_THROWS_AS((void)hermite_coeffs(41), IndexTooLarge);
    CHECK_THROWS_AS((void)hermite_coeffs(-1), PreconditionViolation);

    SUBCASE("derivative identity d/dtheta H_l = 2 l H_{l-1}") {
        for (int l = 1; l <= 10; ++l) {
            const auto h = hermite_coeffs(l);
            const auto hm = hermite_coeffs(l - 1);
            for (std::size_t d = 1; d < h.size(); ++d) {
                CHECK(h[d] * static_cast<double>(d) ==
                      doctest::Approx(2.0 * l * hm[d - 1]).epsilon(1e-15));
            }
        }
    }
    SUBCASE("top guard value stays finite and integer-like") {
        const auto h40 = hermite_coeffs(40);
        REQUIRE(h40.size() == 41);
        CHECK(h40[40] == std::pow(2.0, 40));
        CHECK(std::isfinite(h40[0]));
    }
}

TEST_CASE("eigenfunctions") {
    SUBCASE("ground state at xi = 1 is a single real Gaussian") {
        const GaussPoly phi0 = eigenfunction(0, params(1.0, 1.0));
        REQUIRE(phi0.terms().size() == 1);
        CHECK(phi0.terms()[0].n == 0);
        CHECK(phi0.terms()[0].alpha == 0.5);
        const double expected = std::pow(1.0 / std::numbers::pi, 0.25);
        CHECK(approx_eq(phi0.terms()[0].coeff, Bicomplex(expected), 1e-15));
    }
    SUBCASE("normalization and orthogonality up to l = 8") {
        const OscillatorParams p = params(1.0, 2.0);
        std::vector<GaussPoly> phis;
        for (int l = 0; l <= 8; ++l) phis.push_back(eigenfunction(l, p));
        for (int l = 0; l <= 8; ++l) {
            for (int m = 0; m <= 8; ++m) {
                const Bicomplex expected = l == m ? Bicomplex::one() : Bicomplex();
                CHECK(euclid_norm(inner_product(phis[l], phis[m]) - expected) <= 1e-10);
            }
        }
    }
    SUBCASE("channels reduce to the standard oscillator with hbar -> hbar xi_k") {
        const OscillatorParams p = params(0.5, 2.0);
        for (int l : {0, 1, 4, 7}) {
            const GaussPoly phi = eigenfunction(l, p);
            for (int k : {1, 2}) {
                const double xik = k == 1 ? 0.5 : 2.0;
                const GaussPoly classical =
                    eigenfunction(l, params(xik, xik));
                const GaussPoly chan = channel(phi, k);
                // Compare pointwise on a small grid.
                for (double x : {-1.7, -0.3, 0.0, 0.9, 2.2}) {
                    const Complex a = project(evaluate(chan, x), k);
                    const Complex b = project(evaluate(classical, x), k);
                    CHECK(std::abs(a - b) <= 1e-13 * (1.0 + std::abs(b)));
                }
            }
        }
    }
    SUBCASE("equal channels give real coefficients") {
        const GaussPoly phi = eigenfunction(5, params(1.5, 1.5));
        for (const GaussTerm& t : phi.terms()) {
            CHECK(std::abs(t.coeff.z2()) == 0.0);
            CHECK(t.coeff.z1hat().imag() == 0.0);
        }
    }
    SUBCASE("parameter validation") {
        OscillatorParams bad = params(1.0, 1.0);
        bad.mass = -1.0;
        CHECK_THROWS_AS((void)eigenfunction(0, bad), PreconditionViolation);
        CHECK_THROWS_AS((void)eigenfunction(0, params(1.0, 0.0)), InvalidXi);
        OscillatorParams nonhyp = params(1.0, 1.0);
        nonhyp.xi = Bicomplex::i1();
        CHECK_THROWS_AS((void)eigenfunction(0, nonhyp), InvalidXi);
    }
}

TEST_CASE("hamiltonian and eigenvalues") {
    SUBCASE("ground state energy") {
        const OscillatorParams p = params(1.0, 1.0);
        const GaussPoly phi0 = eigenfunction(0, p);
        const GaussPoly h = apply_H(phi0, p);
        const GaussPoly diff = h - scale(phi0, Bicomplex(0.5));
        CHECK(fs_norm(diff) <= 1e-14);
        CHECK(approx_eq(eigenvalue(0, p), Bicomplex(0.5), 0.0));
    }
    SUBCASE("H of zero is zero") {
        CHECK(apply_H(GaussPoly(), params(1.0, 2.0)).is_zero());
    }
    SUBCASE("eigen-residual across xi ratios in [1/4, 4]") {
        for (const auto& [x1, x2] : {std::pair{1.0, 0.25}, {1.0, 4.0}, {2.0, 1.3}}) {
            const OscillatorParams p = params(x1, x2);
            for (int l = 0; l <= 10; ++l) {
                const GaussPoly phi = eigenfunction(l, p);
                const GaussPoly residual = apply_H(phi, p) - scale(phi, eigenvalue(l, p));
                CHECK(fs_norm(residual) <= 1e-9 * fs_norm(phi));
            }
        }
    }
    SUBCASE("eigenvalue scales componentwise with xi") {
        const OscillatorParams p = params(3.0, 0.5, 1.0, 2.0, 0.7);
        for (int l : {0, 1, 5}) {
            const Bicomplex e = eigenvalue(l, p);
            const double factor = (l + 0.5) * p.hbar * p.omega;
            CHECK(approx_eq(e, Bicomplex::from_idempotent({factor * 3.0, 0.0},
                                                          {factor * 0.5, 0.0}),
                            1e-13 * factor));
            CHECK(is_strict_dplus(e));
        }
    }
    SUBCASE("commutator holds on eigenfunctions") {
        const OscillatorParams p = params(1.0, 2.0);
        const Bicomplex factor = Bicomplex::i1() * Bicomplex(p.hbar) * p.xi;
        for (int l = 0; l <= 6; ++l) {
            const GaussPoly phi = eigenfunction(l, p);
            const GaussPoly diff = commutator_XP(phi, p.hbar, p.xi) - scale(phi, factor);
            CHECK(fs_norm(diff) <= 1e-12);
        }
    }
}

TEST_CASE("gram matrix") {
    SUBCASE("1x1 case") {
        const auto g = gram_matrix(0, params(1.0, 1.0));
        REQUIRE(g.size() == 1);
        CHECK(approx_eq(g[0][0], Bicomplex::one(), 1e-12));
    }
    SUBCASE("identity and dag3 hermiticity at lmax 8") {
        const auto g = gram_matrix(8, params(1.0, 2.0));
        for (int l = 0; l <= 8; ++l) {
            for (int m = 0; m <= 8; ++m) {
                const Bicomplex expected = l == m ? Bicomplex::one() : Bicomplex();
                CHECK(euclid_norm(g[l][m] - expected) <= 1e-10);
                CHECK(approx_eq(g[l][m], conjugate(g[m][l], ConjKind::Dag3), 1e-13));
            }
        }
    }
    SUBCASE("bicomplex gram recombines the channel grams") {
        const OscillatorParams p = params(0.5, 3.0);
        const auto g = gram_matrix(4, p);
        for (int l = 0; l <= 4; ++l) {
            for (int m = 0; m <= 4; ++m) {
                const GaussPoly cl1 = channel(eigenfunction(l, p), 1);
                const GaussPoly cm1 = channel(eigenfunction(m, p), 1);
                const GaussPoly cl2 = channel(eigenfunction(l, p), 2);
                const GaussPoly cm2 = channel(eigenfunction(m, p), 2);
                const Bicomplex rec =
                    Bicomplex::e1() * Bicomplex(project(inner_product(cl1, cm1), 1)) +
                    Bicomplex::e2() * Bicomplex(project(inner_product(cl2, cm2), 2));
                CHECK(euclid_norm(g[l][m] - rec) <= 1e-12);
            }
        }
    }
    SUBCASE("guard") {
        CHECK_THROWS_AS((void)gram_matrix(21, params(1.0, 1.0)), IndexTooLarge);
        CHECK_THROWS_AS((void)gram_matrix(-1, params(1.0, 1.0)), PreconditionViolation);
    }
}

TEST_CASE("expansion in the eigenbasis") {
    const OscillatorParams p = params(1.0, 2.0);

    SUBCASE("an eigenfunction expands to a coordinate vector") {
        const auto coeffs = expand(eigenfunction(3, p), 5, p);
        REQUIRE(coeffs.size() == 6);
        for (int l = 0; l <= 5; ++l) {
            const Bicomplex expected = l == 3 ? Bicomplex::one() : Bicomplex();
            CHECK(euclid_norm(coeffs[l] - expected) <= 1e-10);
        }
    }
    SUBCASE("zero expands to zeros") {
        for (const Bicomplex& c : expand(GaussPoly(), 4, p)) {
            CHECK(euclid_norm(c) == 0.0);
        }
    }
    SUBCASE("mixed channel indices split as e1 w_2 + e2 w_5") {
        const GaussPoly u = scale(eigenfunction(2, p), Bicomplex::e1()) +
                            scale(eigenfunction(5, p), Bicomplex::e2());
        const auto coeffs = expand(u, 6, p);
        for (int l = 0; l <= 6; ++l) {
            Bicomplex expected;
            if (l == 2) expected = Bicomplex::e1();
            if (l == 5) expected = Bicomplex::e2();
            CHECK(euclid_norm(coeffs[l] - expected) <= 1e-10);
        }
    }
}
