#include "bicx/tmodule.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace bicx {
namespace {

constexpr double kWeightTol = 1e-12;
// Dependence threshold of the orthonormalization: residual projected norm
// below kDependenceTol times the input norm counts as linearly dependent.
constexpr double kDependenceTol = 1e-10;

void check_same_size(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionMismatch(a, b);
}

// Neumaier-compensated accumulator; deterministic sequential order.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) noexcept {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double value() const noexcept { return sum + comp; }
};

// Real k-th parts of a hyperbolic weight vector; empty result means weight 1.
std::vector<double> weight_component(std::span<const Bicomplex> weights, int k) {
    std::vector<double> out;
    out.reserve(weights.size());
    for (const Bicomplex& w : weights) {
        out.push_back(k == 1 ? w.z1hat().real() : w.z2hat().real());
    }
    return out;
}

void check_weights_hyperbolic(std::span<const Bicomplex> weights, std::size_t n) {
    check_same_size(weights.size(), n);
    for (const Bicomplex& w : weights) {
        if (std::abs(w.z1hat().imag()) > kWeightTol || std::abs(w.z2hat().imag()) > kWeightTol) {
            throw PreconditionViolation("weights must be hyperbolic");
        }
        if (w.z1hat().real() == 0.0 || w.z2hat().real() == 0.0) {
            throw PreconditionViolation("weights must be invertible");
        }
    }
}

void check_weights_strict_dplus(std::span<const Bicomplex> weights, std::size_t n) {
    check_weights_hyperbolic(weights, n);
    for (const Bicomplex& w : weights) {
        if (w.z1hat().real() <= 0.0 || w.z2hat().real() <= 0.0) {
            throw PreconditionViolation("weights must be strictly positive hyperbolic");
        }
    }
}

// k-th component of the product: sum_l w_l conj(a_l) b_l over C(i1).
Complex component_dot(std::span<const Bicomplex> a, std::span<const Bicomplex> b, int k,
                      std::span<const double> w) {
    CompensatedSum re;
    CompensatedSum im;
    for (std::size_t l = 0; l < a.size(); ++l) {
        const Complex& ak = k == 1 ? a[l].z1hat() : a[l].z2hat();
        const Complex& bk = k == 1 ? b[l].z1hat() : b[l].z2hat();
        Complex p = std::conj(ak) * bk;
        if (!w.empty()) p *= w[l];
        re.add(p.real());
        im.add(p.imag());
    }
    return {re.value(), im.value()};
}

Bicomplex scalar_product_impl(const TVector& psi, const TVector& phi,
                              std::span<const double> w1, std::span<const double> w2) {
    check_same_size(psi.size(), phi.size());
    return Bicomplex::from_idempotent(component_dot(psi.coeffs(), phi.coeffs(), 1, w1),
                                      component_dot(psi.coeffs(), phi.coeffs(), 2, w2));
}

double t_norm_impl(const TVector& psi, std::span<const double> w1, std::span<const double> w2) {
    const Bicomplex g = scalar_product_impl(psi, psi, w1, w2);
    return std::sqrt(0.5 * (g.z1hat().real() + g.z2hat().real()));
}

// Modified Gram-Schmidt in one idempotent component, with an unconditional
// re-orthogonalization pass.  Returns the component columns of the output.
std::vector<std::vector<Complex>> component_gram_schmidt(std::span<const TVector> kets, int k,
                                                         std::span<const double> w) {
    const std::size_t n = kets.empty() ? 0 : kets.front().size();
    std::vector<std::vector<Complex>> basis;
    basis.reserve(kets.size());

    auto dot = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        CompensatedSum re;
        CompensatedSum im;
        for (std::size_t l = 0; l < a.size(); ++l) {
            Complex p = std::conj(a[l]) * b[l];
            if (!w.empty()) p *= w[l];
            re.add(p.real());
            im.add(p.imag());
        }
        return Complex(re.value(), im.value());
    };
    auto norm = [&](const std::vector<Complex>& a) { return std::sqrt(dot(a, a).real()); };

    for (std::size_t i = 0; i < kets.size(); ++i) {
        check_same_size(kets[i].size(), n);
        std::vector<Complex> v(n);
        for (std::size_t l = 0; l < n; ++l) {
            v[l] = k == 1 ? kets[i][l].z1hat() : kets[i][l].z2hat();
        }
        const double norm0 = norm(v);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                const Complex c = dot(q, v);
                for (std::size_t l = 0; l < n; ++l) v[l] -= c * q[l];
            }
        }
        const double r = norm(v);
        if (norm0 == 0.0 || r < kDependenceTol * norm0) {
            throw DependentComponent(k, i);
        }
        for (std::size_t l = 0; l < n; ++l) v[l] /= r;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<TVector> orthonormalize_impl(std::span<const TVector> kets,
                                         std::span<const double> w1,
                                         std::span<const double> w2) {
    const auto basis1 = component_gram_schmidt(kets, 1, w1);
    const auto basis2 = component_gram_schmidt(kets, 2, w2);
    std::vector<TVector> out;
    out.reserve(kets.size());
    for (std::size_t i = 0; i < kets.size(); ++i) {
        std::vector<Bicomplex> coeffs(kets[i].size());
        for (std::size_t l = 0; l < coeffs.size(); ++l) {
            coeffs[l] = Bicomplex::from_idempotent(basis1[i][l], basis2[i][l]);
        }
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

TVector riesz_impl(const LinearFunctional& f, std::span<const double> w1,
                   std::span<const double> w2) {
    std::vector<Bicomplex> coeffs(f.size());
    for (std::size_t l = 0; l < f.size(); ++l) {
        Complex c1 = std::conj(f[l].z1hat());
        Complex c2 = std::conj(f[l].z2hat());
        if (!w1.empty()) c1 /= w1[l];
        if (!w2.empty()) c2 /= w2[l];
        coeffs[l] = Bicomplex::from_idempotent(c1, c2);
    }
    return TVector(std::move(coeffs));
}

bool is_c1_closed_impl(std::span<const TVector> kets, double tol,
                       std::span<const double> w1, std::span<const double> w2) {
    for (const TVector& ket : kets) {
        for (const Bicomplex& c : ket.coeffs()) {
            if (std::abs(c.z2()) > tol) {
                throw PreconditionViolation(
                    "is_c1_closed_sample: ket coefficient outside C(i1)");
            }
        }
    }
    for (std::size_t i = 0; i < kets.size(); ++i) {
        for (std::size_t j = 0; j < kets.size(); ++j) {
            const Bicomplex p = scalar_product_impl(kets[i], kets[j], w1, w2);
            const Complex z2 = p.z2();
            // i2-part is Re(z2), j-part is Im(z2).
            if (std::abs(z2.real()) > tol || std::abs(z2.imag()) > tol) return false;
        }
    }
    return true;
}

}  // namespace

TVector add(const TVector& a, const TVector& b) {
    check_same_size(a.size(), b.size());
    std::vector<Bicomplex> coeffs(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) coeffs[l] = a[l] + b[l];
    return TVector(std::move(coeffs));
}

TVector sub(const TVector& a, const TVector& b) {
    check_same_size(a.size(), b.size());
    std::vector<Bicomplex> coeffs(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) coeffs[l] = a[l] - b[l];
    return TVector(std::move(coeffs));
}

TVector scale(const TVector& psi, const Bicomplex& w) {
    std::vector<Bicomplex> coeffs(psi.size());
    for (std::size_t l = 0; l < psi.size(); ++l) coeffs[l] = w * psi[l];
    return TVector(std::move(coeffs));
}

TVector zero_pad(const TVector& psi, std::size_t n) {
    if (n < psi.size()) {
        throw PreconditionViolation("zero_pad: target order below current order");
    }
    std::vector<Bicomplex> coeffs(psi.coeffs().begin(), psi.coeffs().end());
    coeffs.resize(n);
    return TVector(std::move(coeffs));
}

TVector vk_part(const TVector& psi, int k) {
    if (k != 1 && k != 2) throw PreconditionViolation("vk_part: k must be 1 or 2");
    const Bicomplex ek = k == 1 ? Bicomplex::e1() : Bicomplex::e2();
    return scale(psi, ek);
}

TVector v_projection(const TVector& psi, int k) {
    if (k != 1 && k != 2) throw PreconditionViolation("v_projection: k must be 1 or 2");
    std::vector<Bicomplex> coeffs(psi.size());
    for (std::size_t l = 0; l < psi.size(); ++l) {
        coeffs[l] = Bicomplex(project(psi[l], k));
    }
    return TVector(std::move(coeffs));
}

Bicomplex scalar_product(const TVector& psi, const TVector& phi) {
    return scalar_product_impl(psi, phi, {}, {});
}

Bicomplex scalar_product(const TVector& psi, const TVector& phi,
                         std::span<const Bicomplex> weights) {
    check_weights_hyperbolic(weights, psi.size());
    return scalar_product_impl(psi, phi, weight_component(weights, 1),
                               weight_component(weights, 2));
}

Complex projected_product(const TVector& psi, const TVector& phi, int k) {
    return project(scalar_product(psi, phi), k);
}

Complex projected_product(const TVector& psi, const TVector& phi, int k,
                          std::span<const Bicomplex> weights) {
    return project(scalar_product(psi, phi, weights), k);
}

double t_norm(const TVector& psi) { return t_norm_impl(psi, {}, {}); }

double t_norm(const TVector& psi, std::span<const Bicomplex> weights) {
    check_weights_strict_dplus(weights, psi.size());
    return t_norm_impl(psi, weight_component(weights, 1), weight_component(weights, 2));
}

double schwarz_gap(const TVector& psi, const TVector& phi) {
    check_same_size(psi.size(), phi.size());
    return std::sqrt(2.0) * t_norm(psi) * t_norm(phi) - euclid_norm(scalar_product(psi, phi));
}

double schwarz_gap(const TVector& psi, const TVector& phi,
                   std::span<const Bicomplex> weights) {
    check_same_size(psi.size(), phi.size());
    check_weights_strict_dplus(weights, psi.size());
    const auto w1 = weight_component(weights, 1);
    const auto w2 = weight_component(weights, 2);
    return std::sqrt(2.0) * t_norm_impl(psi, w1, w2) * t_norm_impl(phi, w1, w2) -
           euclid_norm(scalar_product_impl(psi, phi, w1, w2));
}

std::vector<TVector> orthonormalize(std::span<const TVector> kets) {
    return orthonormalize_impl(kets, {}, {});
}

std::vector<TVector> orthonormalize(std::span<const TVector> kets,
                                    std::span<const Bicomplex> weights) {
    const std::size_t n = kets.empty() ? 0 : kets.front().size();
    check_weights_strict_dplus(weights, n);
    return orthonormalize_impl(kets, weight_component(weights, 1),
                               weight_component(weights, 2));
}

Bicomplex functional_apply(const LinearFunctional& f, const TVector& phi) {
    check_same_size(f.size(), phi.size());
    CompensatedSum re1, im1, re2, im2;
    for (std::size_t l = 0; l < f.size(); ++l) {
        const Complex p1 = f[l].z1hat() * phi[l].z1hat();
        const Complex p2 = f[l].z2hat() * phi[l].z2hat();
        re1.add(p1.real());
        im1.add(p1.imag());
        re2.add(p2.real());
        im2.add(p2.imag());
    }
    return Bicomplex::from_idempotent({re1.value(), im1.value()}, {re2.value(), im2.value()});
}

TVector riesz_representer(const LinearFunctional& f) { return riesz_impl(f, {}, {}); }

TVector riesz_representer(const LinearFunctional& f, std::span<const Bicomplex> weights) {
    check_weights_strict_dplus(weights, f.size());
    return riesz_impl(f, weight_component(weights, 1), weight_component(weights, 2));
}

double parseval_residual(std::span<const Bicomplex> coeffs) {
    const TVector psi{std::vector<Bicomplex>(coeffs.begin(), coeffs.end())};
    const Bicomplex g = scalar_product(psi, psi);
    const double lhs = 0.5 * (g.z1hat().real() + g.z2hat().real());
    CompensatedSum rhs;
    for (const Bicomplex& w : coeffs) {
        rhs.add(0.5 * (std::norm(w.z1hat()) + std::norm(w.z2hat())));
    }
    return std::abs(lhs - rhs.value());
}

bool is_c1_closed_sample(std::span<const TVector> kets, double tol) {
    return is_c1_closed_impl(kets, tol, {}, {});
}

bool is_c1_closed_sample(std::span<const TVector> kets, double tol,
                         std::span<const Bicomplex> weights) {
    const std::size_t n = kets.empty() ? 0 : kets.front().size();
    check_weights_hyperbolic(weights, n);
    return is_c1_closed_impl(kets, tol, weight_component(weights, 1),
                             weight_component(weights, 2));
}

}  // namespace bicx
