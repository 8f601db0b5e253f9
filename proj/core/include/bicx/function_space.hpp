#pragma once

#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/errors.hpp"

namespace bicx {

/// One summand coeff * x^n * exp(-alpha x^2) of an element of M_S.
struct GaussTerm {
    int n = 0;
    double alpha = 1.0;
    Bicomplex coeff = Bicomplex::one();
};

/// Canonicalization threshold: terms with euclid_norm(coeff) <= this are dropped.
inline constexpr double kTermDropTol = 1e-14;

/// A finite bicomplex-weighted sum of Gaussian-polynomial terms, kept in
/// canonical form: terms sorted by (alpha, n), like keys merged (alpha is
/// compared bitwise), near-zero coefficients dropped.
class GaussPoly {
public:
    GaussPoly() = default;
    explicit GaussPoly(std::vector<GaussTerm> terms);

    /// The basis function f_{n,alpha}, optionally scaled.
    static GaussPoly monomial(int n, double alpha, const Bicomplex& coeff = Bicomplex::one());

    const std::vector<GaussTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

private:
    std::vector<GaussTerm> terms_;
};

GaussPoly add(const GaussPoly& a, const GaussPoly& b);
GaussPoly scale(const GaussPoly& u, const Bicomplex& w);

inline GaussPoly operator+(const GaussPoly& a, const GaussPoly& b) { return add(a, b); }
inline GaussPoly operator-(const GaussPoly& a, const GaussPoly& b) {
    return add(a, scale(b, Bicomplex(-1.0)));
}
inline GaussPoly operator*(const Bicomplex& w, const GaussPoly& u) { return scale(u, w); }

/// Pointwise value sum_t coeff_t x^n_t exp(-alpha_t x^2).
Bicomplex evaluate(const GaussPoly& u, double x);

/// The k-th idempotent channel u_khat of u, an element of S (C(i1) coefficients).
GaussPoly channel(const GaussPoly& u, int k);

/// Integral of x^n exp(-beta x^2) over the real line: 0 for odd n, otherwise
/// by the recurrence M_n = ((n-1)/(2 beta)) M_{n-2}, M_0 = sqrt(pi/beta).
double gaussian_moment(int n, double beta);

/// The bicomplex scalar product of M_S: integral of u^{dag3}(x) v(x) dx,
/// evaluated in closed form through Gaussian moments.
Bicomplex inner_product(const GaussPoly& u, const GaussPoly& v);

/// X{u} = x u(x); exact shift n -> n+1 on every term.
GaussPoly apply_X(const GaussPoly& u);

/// P{u} = -i1 hbar xi du/dx, termwise exact differentiation.  xi must be
/// hyperbolic with strictly positive components.
GaussPoly apply_P(const GaussPoly& u, double hbar, const Bicomplex& xi);

/// X(P u) - P(X u); equals i1 hbar xi u in canonical form.
GaussPoly commutator_XP(const GaussPoly& u, double hbar, const Bicomplex& xi);

}  // namespace bicx
