#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/errors.hpp"

namespace bicx {

/// A finite-truncation ket: the coefficients w_l of psi = sum_l w_l |m_l>
/// relative to an implicit orthonormal Schauder T-basis.  The length is the
/// truncation order; vectors of different orders never combine implicitly
/// (use zero_pad).
class TVector {
public:
    TVector() = default;
    explicit TVector(std::vector<Bicomplex> coeffs) : coeffs_(std::move(coeffs)) {}
    TVector(std::initializer_list<Bicomplex> coeffs) : coeffs_(coeffs) {}

    static TVector zero(std::size_t n) { return TVector(std::vector<Bicomplex>(n)); }

    std::size_t size() const noexcept { return coeffs_.size(); }
    bool empty() const noexcept { return coeffs_.empty(); }
    const Bicomplex& operator[](std::size_t l) const noexcept { return coeffs_[l]; }
    Bicomplex& operator[](std::size_t l) noexcept { return coeffs_[l]; }
    std::span<const Bicomplex> coeffs() const noexcept { return coeffs_; }

private:
    std::vector<Bicomplex> coeffs_;
};

/// A linear functional on the truncated module, given by its values f(|m_l>).
class LinearFunctional {
public:
    LinearFunctional() = default;
    explicit LinearFunctional(std::vector<Bicomplex> values) : values_(std::move(values)) {}
    LinearFunctional(std::initializer_list<Bicomplex> values) : values_(values) {}

    std::size_t size() const noexcept { return values_.size(); }
    const Bicomplex& operator[](std::size_t l) const noexcept { return values_[l]; }
    std::span<const Bicomplex> values() const noexcept { return values_; }

private:
    std::vector<Bicomplex> values_;
};

// Module operations (throw DimensionMismatch on unequal truncation orders).
TVector add(const TVector& a, const TVector& b);
TVector sub(const TVector& a, const TVector& b);
TVector scale(const TVector& psi, const Bicomplex& w);

inline TVector operator+(const TVector& a, const TVector& b) { return add(a, b); }
inline TVector operator-(const TVector& a, const TVector& b) { return sub(a, b); }
inline TVector operator*(const Bicomplex& w, const TVector& psi) { return scale(psi, w); }

/// Explicit zero padding to truncation order n >= size.
TVector zero_pad(const TVector& psi, std::size_t n);

/// e_k psi, the V_k part of psi; vk_part(psi,1) + vk_part(psi,2) == psi exactly.
TVector vk_part(const TVector& psi, int k);

/// Coefficientwise idempotent projection into V: every w_l is replaced by
/// P_k(w_l) reinterpreted as a C(i1) scalar.
TVector v_projection(const TVector& psi, int k);

/// Canonical bicomplex scalar product sum_l (w_l)^{dag3} v_l, and the variant
/// with a diagonal hyperbolic weight vector (one weight per basis ket).
/// Weighted overloads require hyperbolic, invertible weights; operations that
/// induce norms additionally require strict D+ weights.
Bicomplex scalar_product(const TVector& psi, const TVector& phi);
Bicomplex scalar_product(const TVector& psi, const TVector& phi,
                         std::span<const Bicomplex> weights);

/// P_k of the scalar product: a standard complex inner product on V_k.
Complex projected_product(const TVector& psi, const TVector& phi, int k);
Complex projected_product(const TVector& psi, const TVector& phi, int k,
                          std::span<const Bicomplex> weights);

/// T-norm: sqrt(((psi,psi)_1 + (psi,psi)_2) / 2).
double t_norm(const TVector& psi);
double t_norm(const TVector& psi, std::span<const Bicomplex> weights);

/// sqrt(2) ||psi|| ||phi|| - |(psi,phi)|; nonnegative up to rounding.
double schwarz_gap(const TVector& psi, const TVector& phi);
double schwarz_gap(const TVector& psi, const TVector& phi,
                   std::span<const Bicomplex> weights);

/// Gram-Schmidt per idempotent component (modified variant with one
/// re-orthogonalization pass), recombined as s' = e1 s'(1) + e2 s'(2).
/// Throws DependentComponent(k, i) when ket i's k-th projection depends on
/// its predecessors.
std::vector<TVector> orthonormalize(std::span<const TVector> kets);
std::vector<TVector> orthonormalize(std::span<const TVector> kets,
                                    std::span<const Bicomplex> weights);

/// Evaluation of f by linearity: sum_l f(|m_l>) w_l.
Bicomplex functional_apply(const LinearFunctional& f, const TVector& phi);

/// The unique psi with (psi, phi) = f(phi) for all phi, built per idempotent
/// component.  For the canonical product psi_l = f(|m_l>)^{dag3}.
TVector riesz_representer(const LinearFunctional& f);
TVector riesz_representer(const LinearFunctional& f, std::span<const Bicomplex> weights);

/// |t_norm(psi)^2 - sum_l euclid_norm(w_l)^2| for psi built from coeffs on the
/// coordinate basis; the finite-truncation Parseval identity.
double parseval_residual(std::span<const Bicomplex> coeffs);

/// Sampled C(i1)-closedness of the product on kets with C(i1) coefficients:
/// true iff all pairwise products have i2- and j-parts of magnitude <= tol.
bool is_c1_closed_sample(std::span<const TVector> kets, double tol);
bool is_c1_closed_sample(std::span<const TVector> kets, double tol,
                         std::span<const Bicomplex> weights);

}  // namespace bicx
