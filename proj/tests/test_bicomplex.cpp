#include <doctest.h>

#include <cmath>
#include <limits>

#include "bicx/bicomplex.hpp"
#include "support/oracles.hpp"

using namespace bicx;

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("idempotent basis relations") {
    CHECK(euclid_norm(Bicomplex::e1() * Bicomplex::e2()) == 0.0);
    CHECK(euclid_norm(Bicomplex::e1() + Bicomplex::e2() - Bicomplex::one()) == 0.0);
    CHECK(euclid_norm(Bicomplex::e1() * Bicomplex::e1() - Bicomplex::e1()) == 0.0);
    CHECK(euclid_norm(Bicomplex::e2() * Bicomplex::e2() - Bicomplex::e2()) == 0.0);
}

TEST_CASE("unit table") {
    CHECK(approx_eq(Bicomplex::i1() * Bicomplex::i2(), Bicomplex::j(), 0.0));
    CHECK(approx_eq(Bicomplex::i1() * Bicomplex::j(), -Bicomplex::i2(), 0.0));
    CHECK(approx_eq(Bicomplex::i2() * Bicomplex::j(), -Bicomplex::i1(), 0.0));
    CHECK(approx_eq(Bicomplex::j() * Bicomplex::j(), Bicomplex::one(), 0.0));
    CHECK(approx_eq(Bicomplex::i1() * Bicomplex::i1(), Bicomplex(-1.0), 0.0));
    CHECK(approx_eq(Bicomplex::i2() * Bicomplex::i2(), Bicomplex(-1.0), 0.0));
}

TEST_CASE("cartesian round trip stays within 4 eps of the value scale") {
    oracles::Rng rng(101);
    for (int it = 0; it < 2000; ++it) {
        const Complex z1{rng.ranged(), rng.ranged()};
        const Complex z2{rng.ranged(), rng.ranged()};
        const Bicomplex w = Bicomplex::from_cartesian(z1, z2);
        const double scale = std::max(std::abs(w.z1hat()), std::abs(w.z2hat()));
        CHECK(std::abs(w.z1() - z1) <= 4.0 * kEps * scale);
        CHECK(std::abs(w.z2() - z2) <= 4.0 * kEps * scale);
    }
}

TEST_CASE("multiplication matches the schoolbook cartesian expansion") {
    const Bicomplex w = Bicomplex::from_cartesian({1.0, 2.0}, {3.0, 4.0});
    const Bicomplex sq = w * w;
    // (1+2i1 + (3+4i1)i2)^2 = (4-20i1) + (-10+20i1) i2
    CHECK(approx_eq(sq, Bicomplex::from_cartesian({4.0, -20.0}, {-10.0, 20.0}), 1e-12));
    CHECK(approx_eq(sq, oracles::mul_cartesian(w, w), 1e-12));

    oracles::Rng rng(102);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex s = rng.value_ranged();
        const Bicomplex t = rng.value_ranged();
        CHECK(oracles::rel_dev(s * t, oracles::mul_cartesian(s, t)) <= 1e-13);
        CHECK(approx_eq(s * Bicomplex::one(), s, 0.0));
        CHECK(approx_eq(s + t - t, s, 4.0 * kEps * (euclid_norm(s) + euclid_norm(t))));
    }
}

TEST_CASE("conjugations: definition, involution, distribution") {
    const Bicomplex w = Bicomplex::from_cartesian({1.0, 2.0}, {3.0, 4.0});
    // dag3: (1-2i1) - (3-4i1) i2
    CHECK(approx_eq(conjugate(w, ConjKind::Dag3),
                    Bicomplex::from_cartesian({1.0, -2.0}, {-3.0, 4.0}), 0.0));
    for (ConjKind kind : {ConjKind::Dag1, ConjKind::Dag2, ConjKind::Dag3}) {
        CHECK(approx_eq(conjugate(Bicomplex::one(), kind), Bicomplex::one(), 0.0));
    }

    oracles::Rng rng(103);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex s = rng.value_ranged();
        const Bicomplex t = rng.value_ranged();
        for (ConjKind kind : {ConjKind::Dag1, ConjKind::Dag2, ConjKind::Dag3}) {
            CHECK(oracles::rel_dev(conjugate(s, kind), oracles::conj_cartesian(s, kind)) <=
                  1e-13);
            CHECK(approx_eq(conjugate(conjugate(s, kind), kind), s, 0.0));
            CHECK(oracles::rel_dev(conjugate(s + t, kind),
                                   conjugate(s, kind) + conjugate(t, kind)) <= 1e-13);
            CHECK(oracles::rel_dev(conjugate(s * t, kind),
                                   conjugate(s, kind) * conjugate(t, kind)) <= 1e-12);
        }
    }
}

TEST_CASE("moduli land in their stated subsets and multiply") {
    const Bicomplex w = Bicomplex::from_cartesian({1.0, 2.0}, {3.0, 4.0});
    // |w|_{i1}^2 = z1^2 + z2^2 = -10 + 28 i1
    CHECK(approx_eq(modulus_sq(w, ModulusKind::I1),
                    Bicomplex::from_cartesian({-10.0, 28.0}, {0.0, 0.0}), 1e-12));

    for (ModulusKind kind : {ModulusKind::I1, ModulusKind::I2, ModulusKind::J}) {
        CHECK(euclid_norm(modulus_sq(Bicomplex(), kind)) == 0.0);
    }

    oracles::Rng rng(104);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex s = rng.value_ranged();
        const Bicomplex t = rng.value_ranged();
        for (ModulusKind kind : {ModulusKind::I1, ModulusKind::I2, ModulusKind::J}) {
            CHECK(oracles::rel_dev(modulus_sq(s * t, kind),
                                   modulus_sq(s, kind) * modulus_sq(t, kind)) <= 1e-12);
        }
        // Landing sets: C(i1) has z2 = 0, C(i2) has real cartesian parts, D has
        // real idempotent components.
        const double scale = euclid_norm(s) * euclid_norm(s);
        CHECK(std::abs(modulus_sq(s, ModulusKind::I1).z2()) <= 4.0 * kEps * scale);
        const Bicomplex m2 = modulus_sq(s, ModulusKind::I2);
        CHECK(std::abs(m2.z1().imag()) <= 4.0 * kEps * scale);
        CHECK(std::abs(m2.z2().imag()) <= 4.0 * kEps * scale);
        const Bicomplex mj = modulus_sq(s, ModulusKind::J);
        CHECK(std::abs(mj.z1hat().imag()) <= 4.0 * kEps * scale);
        CHECK(std::abs(mj.z2hat().imag()) <= 4.0 * kEps * scale);
        CHECK(classify(mj, 4.0 * kEps * scale) == NumberClass::HyperbolicPositive);
    }
}

TEST_CASE("euclidean norm: values, bounds, idempotent formula") {
    CHECK(euclid_norm(Bicomplex::e1()) == doctest::Approx(1.0 / kSqrt2).epsilon(1e-15));

    // Multiplicative bound attained with equality at s = t = e1.
    const double lhs = euclid_norm(Bicomplex::e1() * Bicomplex::e1());
    const double rhs = kSqrt2 * euclid_norm(Bicomplex::e1()) * euclid_norm(Bicomplex::e1());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
    CHECK(lhs == doctest::Approx(1.0 / kSqrt2).epsilon(1e-15));

    oracles::Rng rng(105);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex s = rng.value_ranged();
        const Bicomplex t = rng.value_ranged();
        const double ns = euclid_norm(s);
        const double nt = euclid_norm(t);
        CHECK(euclid_norm(s + t) <= (ns + nt) * (1.0 + 1e-12));
        CHECK(euclid_norm(s * t) <= kSqrt2 * ns * nt * (1.0 + 1e-12));
        // The cartesian and idempotent norm formulas agree.
        const double cart = std::sqrt(std::norm(s.z1()) + std::norm(s.z2()));
        CHECK(std::abs(cart - ns) <= 4.0 * kEps * ns);
        CHECK((ns == 0.0) == s.is_zero());
    }
}

TEST_CASE("inverse is componentwise and rejects the null cone") {
    const Bicomplex w = Bicomplex::from_idempotent({2.0, 0.0}, {4.0, 0.0});
    CHECK(approx_eq(inverse(w), Bicomplex::from_idempotent({0.5, 0.0}, {0.25, 0.0}), 0.0));
    CHECK_THROWS_AS((void)inverse(Bicomplex::e1()), NullConeError);
    CHECK_THROWS_AS((void)inverse(Bicomplex()), NullConeError);

    oracles::Rng rng(106);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex s = rng.value_ranged();
        CHECK(euclid_norm(inverse(s) * s - Bicomplex::one()) <= 1e-12);
    }
}

TEST_CASE("null cone detection") {
    CHECK(is_null_cone(Bicomplex::e2()));
    CHECK(is_null_cone(Bicomplex::e1()));
    CHECK(is_null_cone(Bicomplex()));
    CHECK_FALSE(is_null_cone(Bicomplex::one()));
    // 1 + i1 i2 has z1^2 + z2^2 = 1 + (i1)^2 = 0.
    const Bicomplex w = Bicomplex::one() + Bicomplex::i1() * Bicomplex::i2();
    CHECK(is_null_cone(w));
    CHECK(std::abs(w.z1() * w.z1() + w.z2() * w.z2()) == 0.0);
}

TEST_CASE("principal roots") {
    CHECK(approx_eq(nth_root_principal(Bicomplex::one(), 2), Bicomplex::one(), 1e-15));
    CHECK(approx_eq(nth_root_principal(Bicomplex::from_idempotent({4.0, 0.0}, {9.0, 0.0}), 2),
                    Bicomplex::from_idempotent({2.0, 0.0}, {3.0, 0.0}), 1e-14));
    CHECK(euclid_norm(nth_root_principal(Bicomplex(), 5)) == 0.0);
    CHECK_THROWS_AS((void)nth_root_principal(Bicomplex::one(), 0), PreconditionViolation);

    oracles::Rng rng(107);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex s = rng.value_ranged();
        const Bicomplex r = nth_root_principal(s, 3);
        CHECK(oracles::rel_dev(r * r * r, s) <= 1e-13);
    }
}

TEST_CASE("classification") {
    CHECK(classify(Bicomplex::e1() + Bicomplex(2.0) * Bicomplex::e2()) ==
          NumberClass::HyperbolicPositive);
    CHECK(classify(Bicomplex::j()) == NumberClass::Hyperbolic);
    CHECK(classify(Bicomplex(Complex{1.0, 2.0})) == NumberClass::ComplexI1);
    CHECK(classify(Bicomplex::i2()) == NumberClass::General);

    oracles::Rng rng(108);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex s = rng.value_ranged();
        const double scale = euclid_norm(s) * euclid_norm(s);
        CHECK(classify(s * conjugate(s, ConjKind::Dag3), 4.0 * kEps * scale) ==
              NumberClass::HyperbolicPositive);
    }
}

TEST_CASE("idempotent projections") {
    CHECK(project(Bicomplex::one(), 1) == Complex{1.0, 0.0});
    CHECK(project(Bicomplex::j(), 2) == Complex{-1.0, 0.0});
    CHECK_THROWS_AS((void)project(Bicomplex::one(), 3), PreconditionViolation);

    oracles::Rng rng(109);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex s = rng.value_ranged();
        const Bicomplex t = rng.value_ranged();
        for (int k : {1, 2}) {
            CHECK(std::abs(project(s * t, k) - project(s, k) * project(t, k)) <=
                  1e-12 * std::abs(project(s, k) * project(t, k)));
            CHECK(project(s + t, k) == project(s, k) + project(t, k));
            // P_k is idempotent on the embedded C(i1) value.
            CHECK(project(Bicomplex(project(s, k)), k) == project(s, k));
        }
        // Reconstruction e1 P1(w) + e2 P2(w) = w.
        CHECK(approx_eq(Bicomplex::e1() * Bicomplex(project(s, 1)) +
                            Bicomplex::e2() * Bicomplex(project(s, 2)),
                        s, 0.0));
    }
}
