// bicx: bicomplex Hilbert-space and harmonic-oscillator workbench.
//
// Exit codes: 0 success, 2 usage or input error, 3 tolerance failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicx/bicomplex.hpp"
#include "bicx/format.hpp"
#include "bicx/function_space.hpp"
#include "bicx/oscillator.hpp"
#include "bicx/selftest.hpp"
#include "bicx/tmodule.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;

struct CommonOpts {
    double m = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    double xi1 = 1.0;
    double xi2 = 1.0;
    int lmax = 8;
    double grid_min = -6.0;
    double grid_max = 6.0;
    int grid_points = 241;
    double tol = 1e-10;
    std::string format = "csv";
    std::string output;
    std::string input;
    std::uint64_t seed = 0xB1C05EEDULL;
};

void add_physics_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--m", o.m, "mass (positive)");
    cmd->add_option("--omega", o.omega, "angular frequency (positive)");
    cmd->add_option("--hbar", o.hbar, "reduced Planck constant (positive)");
    cmd->add_option("--xi1", o.xi1, "first idempotent component of xi (positive)");
    cmd->add_option("--xi2", o.xi2, "second idempotent component of xi (positive)");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format: csv or json");
    cmd->add_option("--output", o.output, "output file (default: stdout)");
    cmd->add_option("--tol", o.tol, "verification tolerance");
}

// Throws CLI::ValidationError naming the offending flag.
void validate_common(const CommonOpts& o) {
    auto positive = [](double v, const char* flag) {
        if (!(v > 0.0)) throw CLI::ValidationError(flag, "must be positive");
    };
    positive(o.m, "--m");
    positive(o.omega, "--omega");
    positive(o.hbar, "--hbar");
    positive(o.xi1, "--xi1");
    positive(o.xi2, "--xi2");
    if (o.lmax < 0) throw CLI::ValidationError("--lmax", "must be nonnegative");
    if (o.grid_points < 2) throw CLI::ValidationError("--grid-points", "must be at least 2");
    if (!(o.grid_min < o.grid_max)) {
        throw CLI::ValidationError("--grid-min/--grid-max", "must satisfy min < max");
    }
    if (o.tol < 0.0) throw CLI::ValidationError("--tol", "must be nonnegative");
    if (o.format != "csv" && o.format != "json") {
        throw CLI::ValidationError("--format", "must be csv or json");
    }
}

bicx::OscillatorParams params_from(const CommonOpts& o) {
    bicx::OscillatorParams p;
    p.mass = o.m;
    p.omega = o.omega;
    p.hbar = o.hbar;
    p.xi = bicx::Bicomplex::from_idempotent({o.xi1, 0.0}, {o.xi2, 0.0});
    return p;
}

int write_output(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) {
        std::cerr << "bicx: cannot open --output file '" << o.output << "'\n";
        return kExitUsage;
    }
    out << text;
    return kExitOk;
}

std::string read_input(const CommonOpts& o) {
    if (o.input.empty() || o.input == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw bicx::ParseError("cannot open --input file '" + o.input + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<bicx::TVector> random_kets(std::uint64_t seed, std::size_t count, std::size_t n) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<bicx::TVector> kets;
    kets.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<bicx::Bicomplex> coeffs(n);
        for (auto& c : coeffs) {
            c = bicx::Bicomplex::from_idempotent({dist(gen), dist(gen)}, {dist(gen), dist(gen)});
        }
        kets.emplace_back(std::move(coeffs));
    }
    return kets;
}

int cmd_eval(const CommonOpts& o) {
    if (o.lmax > bicx::kMaxHermiteIndex) {
        std::cerr << "bicx eval: --lmax exceeds the Hermite guard ("
                  << bicx::kMaxHermiteIndex << ")\n";
        return kExitUsage;
    }
    const bicx::OscillatorParams p = params_from(o);
    std::vector<bicx::GaussPoly> phis;
    phis.reserve(o.lmax + 1);
    for (int l = 0; l <= o.lmax; ++l) phis.push_back(bicx::eigenfunction(l, p));

    const double step = (o.grid_max - o.grid_min) / (o.grid_points - 1);
    if (o.format == "csv") {
        std::string text = "x";
        for (int l = 0; l <= o.lmax; ++l) text += ",phi" + std::to_string(l);
        text += "\r\n";
        for (int i = 0; i < o.grid_points; ++i) {
            const double x = o.grid_min + i * step;
            text += bicx::format_double(x);
            for (const auto& phi : phis) {
                text += "," + bicx::to_csv_cell(bicx::evaluate(phi, x));
            }
            text += "\r\n";
        }
        return write_output(o, text);
    }
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < o.grid_points; ++i) {
        const double x = o.grid_min + i * step;
        nlohmann::json values = nlohmann::json::array();
        for (const auto& phi : phis) {
            const bicx::Bicomplex v = bicx::evaluate(phi, x);
            values.push_back({bicx::format_complex_i1(v.z1hat()),
                              bicx::format_complex_i1(v.z2hat())});
        }
        rows.push_back({{"x", x}, {"phi", values}});
    }
    return write_output(o, rows.dump(2) + "\n");
}

int cmd_gram(const CommonOpts& o) {
    if (o.lmax > bicx::kMaxGramIndex) {
        std::cerr << "bicx gram: --lmax exceeds the Gram guard (" << bicx::kMaxGramIndex
                  << ")\n";
        return kExitUsage;
    }
    const auto g = bicx::gram_matrix(o.lmax, params_from(o));

    double worst = 0.0;
    for (std::size_t l = 0; l < g.size(); ++l) {
        for (std::size_t m = 0; m < g.size(); ++m) {
            const bicx::Bicomplex expected = l == m ? bicx::Bicomplex::one() : bicx::Bicomplex();
            worst = std::max(worst, bicx::euclid_norm(g[l][m] - expected));
        }
    }

    int rc;
    if (o.format == "csv") {
        rc = write_output(o, bicx::matrix_to_csv(g));
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : g) {
            nlohmann::json cells = nlohmann::json::array();
            for (const auto& cell : row) {
                cells.push_back({bicx::format_complex_i1(cell.z1hat()),
                                 bicx::format_complex_i1(cell.z2hat())});
            }
            rows.push_back(cells);
        }
        rc = write_output(o, rows.dump(2) + "\n");
    }
    if (rc != kExitOk) return rc;
    std::cerr << "max deviation from identity: " << bicx::format_double(worst) << "\n";
    return worst <= o.tol ? kExitOk : kExitTolerance;
}

int cmd_commutator(const CommonOpts& o) {
    const bicx::OscillatorParams p = params_from(o);
    const bicx::Bicomplex target = bicx::Bicomplex::i1() * bicx::Bicomplex(o.hbar) * p.xi;

    double worst = 0.0;
    std::string text = o.format == "csv" ? "n,alpha,residual\r\n" : "";
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= 6; ++n) {
        for (double alpha : {0.5, 1.0, 2.0}) {
            const bicx::GaussPoly u = bicx::GaussPoly::monomial(n, alpha);
            const bicx::GaussPoly diff =
                bicx::commutator_XP(u, o.hbar, p.xi) - bicx::scale(u, target);
            double residual = 0.0;
            for (const auto& term : diff.terms()) {
                residual = std::max(residual, bicx::euclid_norm(term.coeff));
            }
            worst = std::max(worst, residual);
            if (o.format == "csv") {
                text += std::to_string(n) + "," + bicx::format_double(alpha) + "," +
                        bicx::format_double(residual) + "\r\n";
            } else {
                rows.push_back({{"n", n}, {"alpha", alpha}, {"residual", residual}});
            }
        }
    }
    const int rc = write_output(o, o.format == "csv" ? text : rows.dump(2) + "\n");
    if (rc != kExitOk) return rc;
    std::cerr << "max commutator residual: " << bicx::format_double(worst) << "\n";
    return worst <= o.tol ? kExitOk : kExitTolerance;
}

int cmd_riesz(const CommonOpts& o) {
    std::vector<bicx::Bicomplex> values;
    try {
        values = bicx::parse_bicomplex_list(read_input(o));
    } catch (const bicx::ParseError& e) {
        std::cerr << "bicx riesz: " << e.what() << "\n";
        return kExitUsage;
    }
    if (values.empty()) {
        std::cerr << "bicx riesz: no functional values supplied\n";
        return kExitUsage;
    }
    const bicx::LinearFunctional f{values};
    const bicx::TVector psi = bicx::riesz_representer(f);

    double worst = 0.0;
    for (const bicx::TVector& phi : random_kets(o.seed, 100, values.size())) {
        worst = std::max(worst, bicx::euclid_norm(bicx::functional_apply(f, phi) -
                                                  bicx::scalar_product(psi, phi)));
    }

    int rc;
    if (o.format == "csv") {
        std::string text;
        for (std::size_t l = 0; l < psi.size(); ++l) {
            if (l > 0) text += ",";
            text += bicx::to_csv_cell(psi[l]);
        }
        text += "\r\n";
        rc = write_output(o, text);
    } else {
        nlohmann::json doc;
        doc["representer"] = nlohmann::json::parse(bicx::tvector_to_json(psi));
        doc["max_reconstruction_error"] = worst;
        rc = write_output(o, doc.dump(2) + "\n");
    }
    if (rc != kExitOk) return rc;
    std::cerr << "max reconstruction error over 100 kets: " << bicx::format_double(worst)
              << "\n";
    return worst <= o.tol ? kExitOk : kExitTolerance;
}

int cmd_orthonormalize(const CommonOpts& o) {
    std::vector<bicx::TVector> kets;
    try {
        std::istringstream lines(read_input(o));
        std::string line;
        while (std::getline(lines, line)) {
            const auto coeffs = bicx::parse_bicomplex_list(line);
            if (!coeffs.empty()) kets.emplace_back(coeffs);
        }
    } catch (const bicx::ParseError& e) {
        std::cerr << "bicx orthonormalize: " << e.what() << "\n";
        return kExitUsage;
    }
    if (kets.empty()) {
        std::cerr << "bicx orthonormalize: no kets supplied (one per line)\n";
        return kExitUsage;
    }

    std::vector<bicx::TVector> ortho;
    try {
        ortho = bicx::orthonormalize(kets);
    } catch (const bicx::DependentComponent& e) {
        std::cerr << "bicx orthonormalize: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const bicx::DimensionMismatch& e) {
        std::cerr << "bicx orthonormalize: " << e.what() << "\n";
        return kExitUsage;
    }

    double worst = 0.0;
    for (std::size_t i = 0; i < ortho.size(); ++i) {
        for (std::size_t j = 0; j < ortho.size(); ++j) {
            const bicx::Bicomplex expected =
                i == j ? bicx::Bicomplex::one() : bicx::Bicomplex();
            worst = std::max(worst, bicx::euclid_norm(bicx::scalar_product(ortho[i], ortho[j]) -
                                                      expected));
        }
    }

    int rc;
    if (o.format == "csv") {
        std::string text;
        for (const auto& ket : ortho) {
            for (std::size_t l = 0; l < ket.size(); ++l) {
                if (l > 0) text += ",";
                text += bicx::to_csv_cell(ket[l]);
            }
            text += "\r\n";
        }
        rc = write_output(o, text);
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& ket : ortho) {
            arr.push_back(nlohmann::json::parse(bicx::tvector_to_json(ket)));
        }
        rc = write_output(o, arr.dump(2) + "\n");
    }
    if (rc != kExitOk) return rc;
    std::cerr << "max Gram deviation from identity: " << bicx::format_double(worst) << "\n";
    return worst <= o.tol ? kExitOk : kExitTolerance;
}

int cmd_selftest(const CommonOpts& o) {
    bicx::selftest::Options opts;
    opts.seed = o.seed;
    const auto results = bicx::selftest::run_all(opts);
    std::cout << bicx::selftest::format_report(results);
    return bicx::selftest::all_passed(results) ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicomplex module and harmonic-oscillator workbench"};
    app.require_subcommand(1);

    CommonOpts o;

    CLI::App* eval = app.add_subcommand("eval", "tabulate eigenfunctions on a grid");
    add_physics_flags(eval, o);
    add_output_flags(eval, o);
    eval->add_option("--lmax", o.lmax, "highest quantum number");
    eval->add_option("--grid-min", o.grid_min, "left grid end");
    eval->add_option("--grid-max", o.grid_max, "right grid end");
    eval->add_option("--grid-points", o.grid_points, "number of grid points (>= 2)");

    CLI::App* gram = app.add_subcommand("gram", "eigenfunction Gram matrix and identity check");
    add_physics_flags(gram, o);
    add_output_flags(gram, o);
    gram->add_option("--lmax", o.lmax, "highest quantum number (<= 20)");

    CLI::App* comm = app.add_subcommand("commutator", "verify [X, P] = i1 hbar xi on f_{n,alpha}");
    add_physics_flags(comm, o);
    add_output_flags(comm, o);

    CLI::App* riesz = app.add_subcommand("riesz", "Riesz representer of a functional");
    add_output_flags(riesz, o);
    riesz->add_option("--input", o.input, "functional values, comma/newline separated ('-' = stdin)");
    riesz->add_option("--seed", o.seed, "seed for the verification kets");

    CLI::App* ortho = app.add_subcommand("orthonormalize", "orthonormalize kets (one per line)");
    add_output_flags(ortho, o);
    ortho->add_option("--input", o.input, "ket list ('-' = stdin)");

    CLI::App* selftest = app.add_subcommand("selftest", "run the full verification suite");
    selftest->add_option("--seed", o.seed, "seed for randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        validate_common(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "bicx: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o);
        if (gram->parsed()) return cmd_gram(o);
        if (comm->parsed()) return cmd_commutator(o);
        if (riesz->parsed()) return cmd_riesz(o);
        if (ortho->parsed()) return cmd_orthonormalize(o);
        if (selftest->parsed()) return cmd_selftest(o);
    } catch (const bicx::Error& e) {
        std::cerr << "bicx: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
