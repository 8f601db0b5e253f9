#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/function_space.hpp"
#include "bicx/tmodule.hpp"

namespace bicx {

/// Locale-independent 17-significant-digit rendering of a double.
std::string format_double(double v);

/// "a+bi1" / "a-bi1"; pure reals drop the imaginary part.
std::string format_complex_i1(const Complex& z);

/// "a+bi" / "a-bi" with both parts always present (CSV cell halves).
std::string format_complex_plain(const Complex& z);

/// Cartesian form "(a+bi1) + (c+di1) i2".
std::string to_cartesian_string(const Bicomplex& w);

/// Idempotent form "[z1hat, z2hat]".
std::string to_idempotent_string(const Bicomplex& w);

/// CSV cell "z1hat;z2hat" with complex halves as "a+bi".
std::string to_csv_cell(const Bicomplex& w);

/// Parses any of: idempotent "[c1, c2]", cartesian "(c1) + (c2) i2", or a bare
/// C(i1) value "a+bi1".  Throws ParseError on malformed input.
Bicomplex parse_bicomplex(std::string_view text);

/// Splits on top-level commas and newlines (brackets and parentheses nest),
/// parsing each element.
std::vector<Bicomplex> parse_bicomplex_list(std::string_view text);

/// TVector as a JSON array of idempotent bicomplex strings.
std::string tvector_to_json(const TVector& psi);
TVector tvector_from_json(const std::string& text);

/// Gram (or any bicomplex) matrix as CSV with cells "z1hat;z2hat".
std::string matrix_to_csv(const std::vector<std::vector<Bicomplex>>& m);

/// GaussPoly as a JSON list of {n, alpha, coeff} records.
std::string gausspoly_to_json(const GaussPoly& u);
GaussPoly gausspoly_from_json(const std::string& text);

/// Human-readable form "c * x^n * exp(-a x^2) + ...".
std::string gausspoly_pretty(const GaussPoly& u);

}  // namespace bicx
