#include "bicx/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace bicx {
namespace {

double xi_component(const OscillatorParams& p, int k) {
    return k == 1 ? p.xi.z1hat().real() : p.xi.z2hat().real();
}

}  // namespace

void OscillatorParams::validate() const {
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0)) {
        throw PreconditionViolation("oscillator parameters m, omega, hbar must be positive");
    }
    if (!is_strict_dplus(xi)) {
        throw InvalidXi("xi must be hyperbolic with strictly positive components");
    }
}

std::vector<double> hermite_coeffs(int l) {
    if (l < 0) throw PreconditionViolation("hermite_coeffs: l must be nonnegative");
    if (l > kMaxHermiteIndex) throw IndexTooLarge(l, kMaxHermiteIndex);

    // H_{l+1} = 2 theta H_l - 2 l H_{l-1}; exact in 128-bit integers up to l = 40.
    using Wide = __int128;
    std::vector<Wide> prev{1};           // H_0
    if (l == 0) return {1.0};
    std::vector<Wide> cur{0, 2};         // H_1
    for (int m = 1; m < l; ++m) {
        std::vector<Wide> next(m + 2, 0);
        for (std::size_t d = 0; d < cur.size(); ++d) next[d + 1] += 2 * cur[d];
        for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= 2 * Wide(m) * prev[d];
        prev = std::move(cur);
        cur = std::move(next);
    }
    std::vector<double> out(cur.size());
    for (std::size_t d = 0; d < cur.size(); ++d) out[d] = static_cast<double>(cur[d]);
    return out;
}

GaussPoly eigenfunction(int l, const OscillatorParams& p) {
    p.validate();
    const std::vector<double> h = hermite_coeffs(l);

    double two_l_factorial = 1.0;  // 2^l l!
    for (int m = 1; m <= l; ++m) two_l_factorial *= 2.0 * m;

    std::vector<GaussTerm> terms;
    terms.reserve(2 * h.size());
    for (int k = 1; k <= 2; ++k) {
        const double xik = xi_component(p, k);
        const double alpha = p.mass * p.omega / (2.0 * p.hbar * xik);
        const double s = std::sqrt(p.mass * p.omega / (p.hbar * xik));  // theta_k = s x
        const double norm = std::pow(p.mass * p.omega / (std::numbers::pi * p.hbar * xik), 0.25) /
                            std::sqrt(two_l_factorial);
        double spow = 1.0;
        for (std::size_t d = 0; d < h.size(); ++d) {
            if (h[d] != 0.0) {
                const double c = norm * h[d] * spow;
                const Bicomplex coeff = k == 1 ? Bicomplex::from_idempotent({c, 0.0}, {0.0, 0.0})
                                               : Bicomplex::from_idempotent({0.0, 0.0}, {c, 0.0});
                terms.push_back({static_cast<int>(d), alpha, coeff});
            }
            spow *= s;
        }
    }
    return GaussPoly(std::move(terms));
}

GaussPoly apply_H(const GaussPoly& u, const OscillatorParams& p) {
    p.validate();
    const GaussPoly p2 = apply_P(apply_P(u, p.hbar, p.xi), p.hbar, p.xi);
    const GaussPoly x2 = apply_X(apply_X(u));
    return scale(p2, Bicomplex(0.5 / p.mass)) +
           scale(x2, Bicomplex(0.5 * p.mass * p.omega * p.omega));
}

Bicomplex eigenvalue(int l, const OscillatorParams& p) {
    p.validate();
    if (l < 0) throw PreconditionViolation("eigenvalue: l must be nonnegative");
    return Bicomplex((l + 0.5) * p.hbar * p.omega) * p.xi;
}

std::vector<std::vector<Bicomplex>> gram_matrix(int lmax, const OscillatorParams& p) {
    p.validate();
    if (lmax < 0) throw PreconditionViolation("gram_matrix: lmax must be nonnegative");
    if (lmax > kMaxGramIndex) throw IndexTooLarge(lmax, kMaxGramIndex);

    std::vector<GaussPoly> phis;
    phis.reserve(lmax + 1);
    for (int l = 0; l <= lmax; ++l) phis.push_back(eigenfunction(l, p));

    std::vector<std::vector<Bicomplex>> g(lmax + 1, std::vector<Bicomplex>(lmax + 1));
    for (int l = 0; l <= lmax; ++l) {
        for (int m = 0; m <= lmax; ++m) {
            g[l][m] = inner_product(phis[l], phis[m]);
        }
    }
    return g;
}

std::vector<Bicomplex> expand(const GaussPoly& u, int lmax, const OscillatorParams& p) {
    p.validate();
    if (lmax < 0) throw PreconditionViolation("expand: lmax must be nonnegative");
    std::vector<Bicomplex> coeffs;
    coeffs.reserve(lmax + 1);
    for (int l = 0; l <= lmax; ++l) {
        coeffs.push_back(inner_product(eigenfunction(l, p), u));
    }
    return coeffs;
}

}  // namespace bicx
