#pragma once

#include <cmath>
#include <complex>

#include "bicx/errors.hpp"

namespace bicx {

/// Complex numbers over the first imaginary unit i1.
using Complex = std::complex<double>;

/// Default absolute tolerance for classification and approximate comparison.
inline constexpr double kDefaultTol = 1e-12;

/// The three bicomplex conjugations: dag1 conjugates the cartesian parts,
/// dag2 flips the sign of the i2 part, dag3 does both.
enum class ConjKind { Dag1, Dag2, Dag3 };

/// Selects which modulus square to compute: |w|^2 in C(i1), C(i2), or D.
enum class ModulusKind { I1, I2, J };

/// Structural classification of a bicomplex value.
enum class NumberClass { General, Hyperbolic, HyperbolicPositive, ComplexI1 };

/// A bicomplex number w = z1 + z2 i2, stored as its idempotent pair
/// (z1hat, z2hat) with w = z1hat e1 + z2hat e2.  Multiplication, inversion,
/// roots and the null-cone test are all componentwise in this basis; the
/// cartesian view is recomputed on demand.
class Bicomplex {
public:
    Bicomplex() noexcept : z1hat_(0.0, 0.0), z2hat_(0.0, 0.0) {}

    /// Real numbers embed diagonally: x = x e1 + x e2.
    Bicomplex(double x) noexcept : z1hat_(x, 0.0), z2hat_(x, 0.0) {}

    /// C(i1) scalars embed diagonally as well (z2 = 0).
    Bicomplex(const Complex& z) noexcept : z1hat_(z), z2hat_(z) {}

    static Bicomplex from_idempotent(const Complex& z1hat, const Complex& z2hat) noexcept {
        Bicomplex w;
        w.z1hat_ = z1hat;
        w.z2hat_ = z2hat;
        return w;
    }

    /// Builds from the cartesian pair via z1hat = z1 - z2 i1, z2hat = z1 + z2 i1.
    static Bicomplex from_cartesian(const Complex& z1, const Complex& z2) noexcept {
        return from_idempotent(Complex(z1.real() + z2.imag(), z1.imag() - z2.real()),
                               Complex(z1.real() - z2.imag(), z1.imag() + z2.real()));
    }

    const Complex& z1hat() const noexcept { return z1hat_; }
    const Complex& z2hat() const noexcept { return z2hat_; }

    /// Cartesian accessors, inverting the idempotent decomposition.
    Complex z1() const noexcept {
        return Complex(0.5 * (z1hat_.real() + z2hat_.real()),
                       0.5 * (z1hat_.imag() + z2hat_.imag()));
    }
    Complex z2() const noexcept {
        return Complex(0.5 * (z2hat_.imag() - z1hat_.imag()),
                       0.5 * (z1hat_.real() - z2hat_.real()));
    }

    bool is_zero() const noexcept {
        return z1hat_.real() == 0.0 && z1hat_.imag() == 0.0 &&
               z2hat_.real() == 0.0 && z2hat_.imag() == 0.0;
    }

    // Units and idempotents.
    static Bicomplex zero() noexcept { return Bicomplex(); }
    static Bicomplex one() noexcept { return Bicomplex(1.0); }
    static Bicomplex i1() noexcept { return from_idempotent({0.0, 1.0}, {0.0, 1.0}); }
    static Bicomplex i2() noexcept { return from_idempotent({0.0, -1.0}, {0.0, 1.0}); }
    static Bicomplex j() noexcept { return from_idempotent({1.0, 0.0}, {-1.0, 0.0}); }
    static Bicomplex e1() noexcept { return from_idempotent({1.0, 0.0}, {0.0, 0.0}); }
    static Bicomplex e2() noexcept { return from_idempotent({0.0, 0.0}, {1.0, 0.0}); }

    Bicomplex& operator+=(const Bicomplex& rhs) noexcept {
        z1hat_ += rhs.z1hat_;
        z2hat_ += rhs.z2hat_;
        return *this;
    }
    Bicomplex& operator-=(const Bicomplex& rhs) noexcept {
        z1hat_ -= rhs.z1hat_;
        z2hat_ -= rhs.z2hat_;
        return *this;
    }
    Bicomplex& operator*=(const Bicomplex& rhs) noexcept {
        z1hat_ *= rhs.z1hat_;
        z2hat_ *= rhs.z2hat_;
        return *this;
    }

    friend Bicomplex operator+(Bicomplex lhs, const Bicomplex& rhs) noexcept { return lhs += rhs; }
    friend Bicomplex operator-(Bicomplex lhs, const Bicomplex& rhs) noexcept { return lhs -= rhs; }
    friend Bicomplex operator*(Bicomplex lhs, const Bicomplex& rhs) noexcept { return lhs *= rhs; }
    friend Bicomplex operator-(const Bicomplex& w) noexcept {
        return from_idempotent(-w.z1hat_, -w.z2hat_);
    }

private:
    Complex z1hat_;
    Complex z2hat_;
};

inline Bicomplex conjugate(const Bicomplex& w, ConjKind kind) noexcept {
    switch (kind) {
        case ConjKind::Dag1:
            return Bicomplex::from_idempotent(std::conj(w.z2hat()), std::conj(w.z1hat()));
        case ConjKind::Dag2:
            return Bicomplex::from_idempotent(w.z2hat(), w.z1hat());
        case ConjKind::Dag3:
        default:
            return Bicomplex::from_idempotent(std::conj(w.z1hat()), std::conj(w.z2hat()));
    }
}

/// w * w^{dag2} (kind I1, lands in C(i1)), w * w^{dag1} (kind I2, lands in
/// C(i2)) or w * w^{dag3} (kind J, lands in D+).
inline Bicomplex modulus_sq(const Bicomplex& w, ModulusKind kind) noexcept {
    switch (kind) {
        case ModulusKind::I1:
            return w * conjugate(w, ConjKind::Dag2);
        case ModulusKind::I2:
            return w * conjugate(w, ConjKind::Dag1);
        case ModulusKind::J:
        default:
            return w * conjugate(w, ConjKind::Dag3);
    }
}

/// Euclidean R^4 norm: sqrt(|z1|^2 + |z2|^2) = sqrt((|z1hat|^2 + |z2hat|^2)/2).
inline double euclid_norm(const Bicomplex& w) noexcept {
    return std::sqrt(0.5 * (std::norm(w.z1hat()) + std::norm(w.z2hat())));
}

/// True iff an idempotent component vanishes exactly (zero divisors and 0).
inline bool is_null_cone(const Bicomplex& w) noexcept {
    return (w.z1hat().real() == 0.0 && w.z1hat().imag() == 0.0) ||
           (w.z2hat().real() == 0.0 && w.z2hat().imag() == 0.0);
}

/// Componentwise reciprocal; defined exactly off the null cone.
inline Bicomplex inverse(const Bicomplex& w) {
    if (is_null_cone(w)) {
        throw NullConeError("inverse: value lies on the null cone");
    }
    return Bicomplex::from_idempotent(1.0 / w.z1hat(), 1.0 / w.z2hat());
}

/// Componentwise principal n-th root; 0 maps to 0.
inline Bicomplex nth_root_principal(const Bicomplex& w, int n) {
    if (n < 1) {
        throw PreconditionViolation("nth_root_principal: n must be >= 1");
    }
    auto root = [n](const Complex& z) -> Complex {
        if (z.real() == 0.0 && z.imag() == 0.0) return {0.0, 0.0};
        return std::pow(z, 1.0 / static_cast<double>(n));
    };
    return Bicomplex::from_idempotent(root(w.z1hat()), root(w.z2hat()));
}

/// Idempotent projection P_k(w) = zkhat, k in {1, 2}.
inline Complex project(const Bicomplex& w, int k) {
    if (k == 1) return w.z1hat();
    if (k == 2) return w.z2hat();
    throw PreconditionViolation("project: k must be 1 or 2");
}

/// Classification with priority hyperbolic_positive > hyperbolic > complex_i1;
/// a real number is reported through the hyperbolic branch.
inline NumberClass classify(const Bicomplex& w, double tol = kDefaultTol) noexcept {
    const bool real1 = std::abs(w.z1hat().imag()) <= tol;
    const bool real2 = std::abs(w.z2hat().imag()) <= tol;
    if (real1 && real2) {
        if (w.z1hat().real() >= -tol && w.z2hat().real() >= -tol) {
            return NumberClass::HyperbolicPositive;
        }
        return NumberClass::Hyperbolic;
    }
    if (std::abs(w.z2()) <= tol) {
        return NumberClass::ComplexI1;
    }
    return NumberClass::General;
}

/// Strict D+ membership: both idempotent components real (within tol) and > 0.
inline bool is_strict_dplus(const Bicomplex& w, double tol = kDefaultTol) noexcept {
    return std::abs(w.z1hat().imag()) <= tol && std::abs(w.z2hat().imag()) <= tol &&
           w.z1hat().real() > 0.0 && w.z2hat().real() > 0.0;
}

/// Tolerance-based equality in the Euclidean norm.
inline bool approx_eq(const Bicomplex& a, const Bicomplex& b, double tol = kDefaultTol) noexcept {
    return euclid_norm(a - b) <= tol;
}

}  // namespace bicx
