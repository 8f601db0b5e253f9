#include "bicx/function_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <utility>

namespace bicx {
namespace {

void check_xi(const Bicomplex& xi) {
    if (!is_strict_dplus(xi)) {
        throw InvalidXi("xi must be hyperbolic with strictly positive components");
    }
}

void check_term(const GaussTerm& t) {
    if (t.n < 0) throw PreconditionViolation("GaussTerm: exponent must be nonnegative");
    if (!(t.alpha > 0.0) || !std::isfinite(t.alpha)) {
        throw PreconditionViolation("GaussTerm: alpha must be a positive finite real");
    }
}

std::vector<GaussTerm> canonicalize(std::vector<GaussTerm> terms) {
    for (const GaussTerm& t : terms) check_term(t);
    std::sort(terms.begin(), terms.end(), [](const GaussTerm& a, const GaussTerm& b) {
        return std::tie(a.alpha, a.n) < std::tie(b.alpha, b.n);
    });
    std::vector<GaussTerm> out;
    out.reserve(terms.size());
    for (const GaussTerm& t : terms) {
        if (!out.empty() && out.back().alpha == t.alpha && out.back().n == t.n) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(t);
        }
    }
    std::erase_if(out, [](const GaussTerm& t) { return euclid_norm(t.coeff) <= kTermDropTol; });
    return out;
}

}  // namespace

GaussPoly::GaussPoly(std::vector<GaussTerm> terms) : terms_(canonicalize(std::move(terms))) {}

GaussPoly GaussPoly::monomial(int n, double alpha, const Bicomplex& coeff) {
    return GaussPoly({GaussTerm{n, alpha, coeff}});
}

GaussPoly add(const GaussPoly& a, const GaussPoly& b) {
    std::vector<GaussTerm> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return GaussPoly(std::move(terms));
}

GaussPoly scale(const GaussPoly& u, const Bicomplex& w) {
    std::vector<GaussTerm> terms = u.terms();
    for (GaussTerm& t : terms) t.coeff = w * t.coeff;
    return GaussPoly(std::move(terms));
}

Bicomplex evaluate(const GaussPoly& u, double x) {
    Bicomplex acc;
    for (const GaussTerm& t : u.terms()) {
        const double base = std::pow(x, t.n) * std::exp(-t.alpha * x * x);
        acc += t.coeff * Bicomplex(base);
    }
    return acc;
}

GaussPoly channel(const GaussPoly& u, int k) {
    std::vector<GaussTerm> terms = u.terms();
    for (GaussTerm& t : terms) t.coeff = Bicomplex(project(t.coeff, k));
    return GaussPoly(std::move(terms));
}

double gaussian_moment(int n, double beta) {
    if (n < 0) throw PreconditionViolation("gaussian_moment: n must be nonnegative");
    if (!(beta > 0.0)) throw PreconditionViolation("gaussian_moment: beta must be positive");
    if (n % 2 == 1) return 0.0;
    double m = std::sqrt(std::numbers::pi / beta);
    for (int k = 2; k <= n; k += 2) {
        m *= static_cast<double>(k - 1) / (2.0 * beta);
    }
    return m;
}

Bicomplex inner_product(const GaussPoly& u, const GaussPoly& v) {
    // Terms iterate in canonical sorted order; the reduction is sequential
    // and deterministic.
    Bicomplex acc;
    for (const GaussTerm& tu : u.terms()) {
        const Bicomplex cu = conjugate(tu.coeff, ConjKind::Dag3);
        for (const GaussTerm& tv : v.terms()) {
            const double m = gaussian_moment(tu.n + tv.n, tu.alpha + tv.alpha);
            if (m != 0.0) acc += cu * tv.coeff * Bicomplex(m);
        }
    }
    return acc;
}

GaussPoly apply_X(const GaussPoly& u) {
    std::vector<GaussTerm> terms = u.terms();
    for (GaussTerm& t : terms) ++t.n;
    return GaussPoly(std::move(terms));
}

GaussPoly apply_P(const GaussPoly& u, double hbar, const Bicomplex& xi) {
    if (!(hbar > 0.0)) throw PreconditionViolation("apply_P: hbar must be positive");
    check_xi(xi);
    const Bicomplex factor = -Bicomplex::i1() * Bicomplex(hbar) * xi;
    std::vector<GaussTerm> terms;
    terms.reserve(2 * u.terms().size());
    for (const GaussTerm& t : u.terms()) {
        // d/dx [x^n e^{-a x^2}] = n x^{n-1} e^{-a x^2} - 2a x^{n+1} e^{-a x^2}
        if (t.n >= 1) {
            terms.push_back({t.n - 1, t.alpha, factor * Bicomplex(double(t.n)) * t.coeff});
        }
        terms.push_back({t.n + 1, t.alpha, factor * Bicomplex(-2.0 * t.alpha) * t.coeff});
    }
    return GaussPoly(std::move(terms));
}

GaussPoly commutator_XP(const GaussPoly& u, double hbar, const Bicomplex& xi) {
    return apply_X(apply_P(u, hbar, xi)) - apply_P(apply_X(u), hbar, xi);
}

}  // namespace bicx
