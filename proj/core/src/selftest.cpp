#include "bicx/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "bicx/bicomplex.hpp"
#include "bicx/function_space.hpp"
#include "bicx/oscillator.hpp"
#include "bicx/tmodule.hpp"

namespace bicx::selftest {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Criteria without a stated runtime budget are not time-limited.
constexpr double kNoBudget = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Tracks the worst deviation normalized by its tolerance; > 1 fails.
struct Tracker {
    double worst = 0.0;
    std::string first_failure;

    void ratio(double r, const char* what) {
        if (r > worst) worst = r;
        if (r > 1.0 && first_failure.empty()) {
            first_failure = what;
        }
    }
    bool ok() const { return worst <= 1.0; }
};

CriterionResult finish(int id, std::string name, Tracker& t, Clock::time_point start,
                       double budget_seconds) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.worst = t.worst;
    r.seconds = elapsed_seconds(start);
    r.passed = t.ok() && r.seconds <= budget_seconds;
    if (!t.ok()) {
        r.detail = t.first_failure;
    } else if (r.seconds > budget_seconds) {
        r.detail = "runtime budget exceeded";
    }
    return r;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(gen);
    }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen); }
    int index(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    // A real with |x| in [1e-3, 1e3], log-uniform.
    double component() {
        const double mag = std::pow(10.0, uniform(-3.0, 3.0));
        return gen() % 2 == 0 ? mag : -mag;
    }
    Bicomplex value_in_range() {
        return Bicomplex::from_cartesian({component(), component()}, {component(), component()});
    }
    Bicomplex value_normal() {
        return Bicomplex::from_cartesian({normal(), normal()}, {normal(), normal()});
    }
    TVector tvector_normal(std::size_t n) {
        std::vector<Bicomplex> coeffs(n);
        for (auto& c : coeffs) c = value_normal();
        return TVector(std::move(coeffs));
    }
};

double rel_dev(const Bicomplex& a, const Bicomplex& b) {
    const double scale = std::max(euclid_norm(a), euclid_norm(b));
    if (scale == 0.0) return 0.0;
    return euclid_norm(a - b) / scale;
}

double rel_dev(const Complex& a, const Complex& b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

// T-norm on M_S through the closed-form product.
double fs_norm(const GaussPoly& u) {
    const Bicomplex g = inner_product(u, u);
    return std::sqrt(std::max(0.0, 0.5 * (g.z1hat().real() + g.z2hat().real())));
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    // Fixed pre-split so narrow features cannot hide between the initial
    // sample points of the adaptive recursion.
    constexpr int kPanels = 16;
    const double h = (b - a) / kPanels;
    double total = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        const double lo = a + i * h;
        const double hi = lo + h;
        const double fa = f(lo);
        const double fb = f(hi);
        const double fm = f(0.5 * (lo + hi));
        const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
        total += adaptive_simpson_rec(f, lo, hi, fa, fm, fb, whole, tol / kPanels, 40);
    }
    return total;
}

// Criterion 1: ring, conjugation, projector, modulus and norm laws at
// relative tolerance 1e-12; cartesian round trip within 4 eps; <= 5 s.
CriterionResult run_bicomplex_algebra(const Options& opts) {
    const auto start = Clock::now();
    Rng rng(opts.seed + 1);
    Tracker t;
    constexpr double kRelTol = 1e-12;
    constexpr int kIterations = 100000;

    // Unit table, checked once: i1 i2 = j, i1 j = -i2, i2 j = -i1, j^2 = 1.
    t.ratio(euclid_norm(Bicomplex::i1() * Bicomplex::i2() - Bicomplex::j()) / kRelTol,
            "unit table: i1*i2 != j");
    t.ratio(euclid_norm(Bicomplex::i1() * Bicomplex::j() + Bicomplex::i2()) / kRelTol,
            "unit table: i1*j != -i2");
    t.ratio(euclid_norm(Bicomplex::i2() * Bicomplex::j() + Bicomplex::i1()) / kRelTol,
            "unit table: i2*j != -i1");
    t.ratio(euclid_norm(Bicomplex::j() * Bicomplex::j() - Bicomplex::one()) / kRelTol,
            "unit table: j^2 != 1");

    for (int it = 0; it < kIterations; ++it) {
        const Complex z1{rng.component(), rng.component()};
        const Complex z2{rng.component(), rng.component()};
        const Bicomplex s = Bicomplex::from_cartesian(z1, z2);
        const Bicomplex u = rng.value_in_range();

        // Round trip cartesian -> idempotent -> cartesian, absolute vs the value scale.
        const double scale = std::max(std::abs(s.z1hat()), std::abs(s.z2hat()));
        t.ratio(std::abs(s.z1() - z1) / (4.0 * kEps * scale), "round trip z1");
        t.ratio(std::abs(s.z2() - z2) / (4.0 * kEps * scale), "round trip z2");

        for (ConjKind kind : {ConjKind::Dag1, ConjKind::Dag2, ConjKind::Dag3}) {
            t.ratio(rel_dev(conjugate(s + u, kind), conjugate(s, kind) + conjugate(u, kind)) /
                        kRelTol,
                    "conjugation additivity");
            t.ratio(rel_dev(conjugate(conjugate(s, kind), kind), s) / kRelTol,
                    "conjugation involution");
            t.ratio(rel_dev(conjugate(s * u, kind), conjugate(s, kind) * conjugate(u, kind)) /
                        kRelTol,
                    "conjugation multiplicativity");
        }

        for (int k : {1, 2}) {
            t.ratio(rel_dev(project(s + u, k), project(s, k) + project(u, k)) / kRelTol,
                    "projector additivity");
            t.ratio(rel_dev(project(s * u, k), project(s, k) * project(u, k)) / kRelTol,
                    "projector multiplicativity");
        }

        for (ModulusKind kind : {ModulusKind::I1, ModulusKind::I2, ModulusKind::J}) {
            t.ratio(rel_dev(modulus_sq(s * u, kind), modulus_sq(s, kind) * modulus_sq(u, kind)) /
                        kRelTol,
                    "modulus multiplicativity");
        }

        const double ns = euclid_norm(s);
        const double nu = euclid_norm(u);
        const double triangle = euclid_norm(s + u) - (ns + nu);
        t.ratio(triangle / (kRelTol * (ns + nu)), "triangle inequality");
        const double product_bound = euclid_norm(s * u) - std::sqrt(2.0) * ns * nu;
        t.ratio(product_bound / (kRelTol * std::sqrt(2.0) * ns * nu),
                "product norm bound");
    }
    return finish(1, "bicomplex algebra laws", t, start, 5.0);
}

// Criterion 2: scalar-product axioms, recombination, D+ positivity and the
// Schwarz gap on 1e4 random pairs with N <= 32; <= 5 s.
CriterionResult run_scalar_product(const Options& opts) {
    const auto start = Clock::now();
    Rng rng(opts.seed + 2);
    Tracker t;
    constexpr double kRelTol = 1e-12;
    constexpr double kSchwarzFloor = -1e-12;
    constexpr int kPairs = 10000;

    for (int it = 0; it < kPairs; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.index(1, 32));
        const TVector psi = rng.tvector_normal(n);
        const TVector phi = rng.tvector_normal(n);
        const TVector chi = rng.tvector_normal(n);
        const Bicomplex alpha = rng.value_normal();

        // Recombination through the channel products, exact to 4 eps.
        const Bicomplex lhs = scalar_product(psi, phi);
        const Bicomplex rhs =
            Bicomplex::e1() *
                Bicomplex(projected_product(vk_part(psi, 1), vk_part(phi, 1), 1)) +
            Bicomplex::e2() *
                Bicomplex(projected_product(vk_part(psi, 2), vk_part(phi, 2), 2));
        t.ratio(rel_dev(lhs, rhs) / (4.0 * kEps), "channel recombination identity");

        // Scalar-product axioms.
        t.ratio(rel_dev(scalar_product(psi, phi + chi),
                        scalar_product(psi, phi) + scalar_product(psi, chi)) /
                    kRelTol,
                "scalar product additivity");
        t.ratio(rel_dev(scalar_product(psi, alpha * phi), alpha * scalar_product(psi, phi)) /
                    kRelTol,
                "scalar product homogeneity");
        t.ratio(rel_dev(lhs, conjugate(scalar_product(phi, psi), ConjKind::Dag3)) / kRelTol,
                "dag3 hermiticity");

        // Hyperbolic positivity of (psi, psi).
        const Bicomplex g = scalar_product(psi, psi);
        const double gscale = std::max(1.0, euclid_norm(g));
        t.ratio(std::abs(g.z1hat().imag()) / (kRelTol * gscale), "(psi,psi) not hyperbolic");
        t.ratio(std::abs(g.z2hat().imag()) / (kRelTol * gscale), "(psi,psi) not hyperbolic");
        t.ratio(-g.z1hat().real() / (kRelTol * gscale), "(psi,psi) not in D+");
        t.ratio(-g.z2hat().real() / (kRelTol * gscale), "(psi,psi) not in D+");
        // Nondegeneracy: psi is nonzero, so (psi,psi) must be too.
        t.ratio(g.z1hat().real() + g.z2hat().real() > 0.0 ? 0.0 : 2.0,
                "(psi,psi) vanished on a nonzero ket");

        // Schwarz gap, generic and near-parallel.
        t.ratio(schwarz_gap(psi, phi) / kSchwarzFloor, "Schwarz gap (random pair)");
        t.ratio(schwarz_gap(psi, alpha * psi) / kSchwarzFloor, "Schwarz gap (parallel pair)");
    }
    return finish(2, "bicomplex scalar product", t, start, 5.0);
}

namespace {

// Dense complex solve by Gaussian elimination with partial pivoting; the
// independent route used to re-derive Riesz representers.
std::vector<Complex> solve_dense(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t rev = 0; rev < n; ++rev) {
        const std::size_t r = n - 1 - rev;
        Complex acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return x;
}

}  // namespace

// Criterion 3: Riesz reconstruction within 1e-11 over 100 probes, and
// agreement with an independent per-component linear solve within 1e-11.
CriterionResult run_riesz(const Options& opts) {
    const auto start = Clock::now();
    Rng rng(opts.seed + 3);
    Tracker t;
    constexpr double kTol = 1e-11;
    constexpr int kFunctionals = 1000;
    constexpr int kProbes = 100;

    for (int it = 0; it < kFunctionals; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.index(1, 32));
        std::vector<Bicomplex> values(n);
        for (auto& v : values) v = rng.value_normal();
        const LinearFunctional f{values};
        const TVector psi = riesz_representer(f);

        for (int probe = 0; probe < kProbes; ++probe) {
            const TVector phi = rng.tvector_normal(n);
            t.ratio(euclid_norm(functional_apply(f, phi) - scalar_product(psi, phi)) / kTol,
                    "Riesz reconstruction");
        }

        // Independent re-solve: per component k, the defining equations
        // (psi', m_i) = f(m_i) on the coordinate kets give A y = b with
        // A[i][l] = conj((m_l, m_i)_k) and y = conj(psi'_k).
        std::vector<TVector> basis;
        basis.reserve(n);
        for (std::size_t l = 0; l < n; ++l) {
            TVector m = TVector::zero(n);
            m[l] = Bicomplex::one();
            basis.push_back(std::move(m));
        }
        std::vector<Bicomplex> resolved(n);
        for (int k : {1, 2}) {
            std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
            std::vector<Complex> b(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t l = 0; l < n; ++l) {
                    a[i][l] = std::conj(projected_product(basis[l], basis[i], k));
                }
                b[i] = project(f[i], k);
            }
            const std::vector<Complex> y = solve_dense(std::move(a), std::move(b));
            for (std::size_t l = 0; l < n; ++l) {
                const Complex x = std::conj(y[l]);
                resolved[l] = k == 1 ? Bicomplex::from_idempotent(x, resolved[l].z2hat())
                                     : Bicomplex::from_idempotent(resolved[l].z1hat(), x);
            }
        }
        t.ratio(t_norm(psi - TVector(std::move(resolved))) / kTol, "Riesz uniqueness");
    }
    return finish(3, "riesz representer", t, start, kNoBudget);
}

// Criterion 4: orthonormalization returns an identity Gram matrix within
// 1e-10 on 1e3 random independent sets; (e1, 0, ...) must be rejected.
CriterionResult run_orthonormalization(const Options& opts) {
    const auto start = Clock::now();
    Rng rng(opts.seed + 4);
    Tracker t;
    constexpr double kTol = 1e-10;
    constexpr int kSets = 1000;

    for (int it = 0; it < kSets; ++it) {
        const int size = rng.index(1, 12);
        const std::size_t n = static_cast<std::size_t>(rng.index(size, 16));
        std::vector<TVector> kets;
        kets.reserve(size);
        for (int i = 0; i < size; ++i) kets.push_back(rng.tvector_normal(n));

        const std::vector<TVector> ortho = orthonormalize(kets);
        for (std::size_t i = 0; i < ortho.size(); ++i) {
            for (std::size_t j = 0; j < ortho.size(); ++j) {
                const Bicomplex g = scalar_product(ortho[i], ortho[j]);
                const Bicomplex expected = i == j ? Bicomplex::one() : Bicomplex::zero();
                t.ratio(euclid_norm(g - expected) / kTol, "Gram not identity");
            }
        }
    }

    // Normalizability remark: a ket with (psi,psi) outside strict D+ cannot
    // be orthonormalized.
    bool rejected = false;
    try {
        const std::vector<TVector> kets{TVector{Bicomplex::e1(), Bicomplex::zero()}};
        (void)orthonormalize(kets);
    } catch (const DependentComponent& e) {
        rejected = e.component() == 2 && e.index() == 0;
    }
    t.ratio(rejected ? 0.0 : 2.0, "(e1, 0) not flagged as DependentComponent(2, 0)");

    return finish(4, "orthonormalization", t, start, kNoBudget);
}

// Criterion 5: finite Parseval identity, residual <= 1e-10 for 1e3 random
// coefficient lists of length 1e3 and magnitude <= 10.
CriterionResult run_parseval(const Options& opts) {
    const auto start = Clock::now();
    Rng rng(opts.seed + 5);
    Tracker t;
    constexpr double kTol = 1e-10;
    constexpr int kLists = 1000;
    constexpr std::size_t kLength = 1000;
    const double bound = 10.0 / std::sqrt(2.0);  // euclid norm <= 10 per coefficient

    for (int it = 0; it < kLists; ++it) {
        std::vector<Bicomplex> coeffs(kLength);
        for (auto& c : coeffs) {
            c = Bicomplex::from_idempotent({rng.uniform(-bound, bound), rng.uniform(-bound, bound)},
                                           {rng.uniform(-bound, bound), rng.uniform(-bound, bound)});
        }
        t.ratio(parseval_residual(coeffs) / kTol, "Parseval residual");
    }
    return finish(5, "parseval identity", t, start, kNoBudget);
}

// Criterion 6: oscillator suite at xi = e1 + 2 e2, m = omega = hbar = 1.
CriterionResult run_oscillator(const Options& opts) {
    const auto start = Clock::now();
    (void)opts;
    Tracker t;
    OscillatorParams p;
    p.xi = Bicomplex::from_idempotent({1.0, 0.0}, {2.0, 0.0});

    // Gram of the first 9 eigenfunctions: identity within 1e-10.
    constexpr double kGramTol = 1e-10;
    constexpr int kLmax = 8;
    const auto g = gram_matrix(kLmax, p);
    for (int l = 0; l <= kLmax; ++l) {
        for (int m = 0; m <= kLmax; ++m) {
            const Bicomplex expected = l == m ? Bicomplex::one() : Bicomplex::zero();
            t.ratio(euclid_norm(g[l][m] - expected) / kGramTol, "oscillator Gram not identity");
        }
    }

    // Quadrature cross-check of three entries, agreement 1e-8.  The channel
    // integrands are evaluated pointwise, independently of gaussian_moment.
    constexpr double kQuadTol = 1e-8;
    const std::pair<int, int> picks[] = {{0, 0}, {2, 6}, {8, 8}};
    for (const auto& [l, m] : picks) {
        const GaussPoly ul = eigenfunction(l, p);
        const GaussPoly um = eigenfunction(m, p);
        for (int k : {1, 2}) {
            const GaussPoly cl = channel(ul, k);
            const GaussPoly cm = channel(um, k);
            const double numeric = integrate_adaptive(
                [&](double x) {
                    return evaluate(cl, x).z1hat().real() * evaluate(cm, x).z1hat().real();
                },
                -12.0, 12.0, 1e-10);
            t.ratio(std::abs(numeric - project(g[l][m], k).real()) / kQuadTol,
                    "Gram entry disagrees with quadrature");
        }
    }

    // Symbolic eigen-residual ||H phi_l - E_l phi_l|| <= 1e-9 ||phi_l||.
    constexpr double kResidualTol = 1e-9;
    for (int l = 0; l <= 10; ++l) {
        const GaussPoly phi = eigenfunction(l, p);
        const GaussPoly residual = apply_H(phi, p) - scale(phi, eigenvalue(l, p));
        t.ratio(fs_norm(residual) / (kResidualTol * fs_norm(phi)), "eigen-residual too large");
    }

    // Commutator identity on f_{n,alpha}, n <= 6, residual <= 1e-12.
    constexpr double kCommTol = 1e-12;
    const Bicomplex target_factor = Bicomplex::i1() * Bicomplex(p.hbar) * p.xi;
    for (int n = 0; n <= 6; ++n) {
        for (double alpha : {0.5, 1.0, 2.0}) {
            const GaussPoly u = GaussPoly::monomial(n, alpha);
            const GaussPoly diff =
                commutator_XP(u, p.hbar, p.xi) - scale(u, target_factor);
            double worst = 0.0;
            for (const GaussTerm& term : diff.terms()) {
                worst = std::max(worst, euclid_norm(term.coeff));
            }
            t.ratio(worst / kCommTol, "commutator identity residual");
        }
    }

    return finish(6, "harmonic oscillator", t, start, 30.0);
}

std::vector<CriterionResult> run_all(const Options& opts) {
    return {run_bicomplex_algebra(opts), run_scalar_product(opts), run_riesz(opts),
            run_orthonormalization(opts), run_parseval(opts), run_oscillator(opts)};
}

bool all_passed(std::span<const CriterionResult> results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

std::string format_report(std::span<const CriterionResult> results) {
    std::ostringstream out;
    for (const CriterionResult& r : results) {
        out << "[" << r.id << "] " << r.name;
        for (std::size_t pad = r.name.size(); pad < 28; ++pad) out << ' ';
        out << (r.passed ? "PASS" : "FAIL");
        out << " (worst " << r.worst << "x tol, " << r.seconds << " s)";
        if (!r.detail.empty()) out << " -- " << r.detail;
        out << '\n';
    }
    return out.str();
}

}  // namespace bicx::selftest
