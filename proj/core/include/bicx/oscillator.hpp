#pragma once

#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/errors.hpp"
#include "bicx/function_space.hpp"

namespace bicx {

/// Physical parameters of the bicomplex harmonic oscillator.  xi is the
/// hyperbolic deformation entering P = -i1 hbar xi d/dx; both idempotent
/// components must be strictly positive for the channel square roots.
struct OscillatorParams {
    double mass = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    Bicomplex xi = Bicomplex(1.0);

    void validate() const;
};

/// Guard on the Hermite recurrence; coefficients stay exactly representable
/// in the internal 128-bit integers up to this order.
inline constexpr int kMaxHermiteIndex = 40;

/// Guard on Gram/expansion truncations; beyond this the monomial expansions
/// lose too much precision in double arithmetic.
inline constexpr int kMaxGramIndex = 20;

/// Coefficients (ascending powers) of the physicists' Hermite polynomial H_l.
/// Values are integers, returned as doubles for downstream arithmetic.
std::vector<double> hermite_coeffs(int l);

/// The l-th eigenfunction: per channel k, the normalized standard-oscillator
/// eigenfunction with hbar replaced by hbar xi_k, recombined with e_k weights.
GaussPoly eigenfunction(int l, const OscillatorParams& p);

/// H u = (1/2m) P^2 u + (m omega^2 / 2) X^2 u, exact in canonical form.
GaussPoly apply_H(const GaussPoly& u, const OscillatorParams& p);

/// (l + 1/2) hbar omega xi; certified against apply_H by the residual checks.
Bicomplex eigenvalue(int l, const OscillatorParams& p);

/// Matrix of inner products of the first lmax+1 eigenfunctions.
std::vector<std::vector<Bicomplex>> gram_matrix(int lmax, const OscillatorParams& p);

/// Expansion coefficients w_l = (phi_l, u) for l = 0..lmax.
std::vector<Bicomplex> expand(const GaussPoly& u, int lmax, const OscillatorParams& p);

}  // namespace bicx
