#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace bicx::selftest {

struct Options {
    std::uint64_t seed = 0xB1C05EEDULL;
};

/// Outcome of one verification suite.  `worst` is the largest observed
/// deviation normalized by the governing tolerance, so any value <= 1 passes;
/// the wall-clock budget is part of the pass condition.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double worst = 0.0;
    double seconds = 0.0;
    std::string detail;
};

CriterionResult run_bicomplex_algebra(const Options& opts);   // criterion 1
CriterionResult run_scalar_product(const Options& opts);      // criterion 2
CriterionResult run_riesz(const Options& opts);               // criterion 3
CriterionResult run_orthonormalization(const Options& opts);  // criterion 4
CriterionResult run_parseval(const Options& opts);            // criterion 5
CriterionResult run_oscillator(const Options& opts);          // criterion 6

std::vector<CriterionResult> run_all(const Options& opts = {});
bool all_passed(std::span<const CriterionResult> results);

/// One line per result, e.g. "[3] riesz representer ... PASS (worst 0.02x tol, 0.31 s)".
std::string format_report(std::span<const CriterionResult> results);

/// Adaptive-Simpson quadrature used as the numeric oracle against the
/// closed-form Gaussian integrals; independent of gaussian_moment.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol);

}  // namespace bicx::selftest
