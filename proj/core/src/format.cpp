#include "bicx/format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <system_error>
#include <utility>

#include <json.hpp>

namespace bicx {
namespace {

std::string strip_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Reads a decimal number at the front of s; advances s past it.
double read_number(std::string_view& s) {
    const std::string buf(s);
    const char* begin = buf.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || !std::isfinite(v)) throw ParseError("expected a number at '" + buf + "'");
    s.remove_prefix(end - begin);
    return v;
}

// Consumes an imaginary-unit suffix "i1" or "i"; false if not present.
bool read_i1_suffix(std::string_view& s) {
    if (s.starts_with("i1")) {
        s.remove_prefix(2);
        return true;
    }
    if (s.starts_with("i")) {
        s.remove_prefix(1);
        return true;
    }
    return false;
}

// Grammar (whitespace already stripped):
//   complex := sign? "i1"                      -> pure unit imaginary
//            | number ("i1" | sign number "i1" | sign "i1")?
Complex parse_complex_token(std::string_view s) {
    if (s.empty()) throw ParseError("empty complex value");

    // Unit-imaginary forms: i1, +i1, -i1.
    {
        std::string_view t = s;
        double sign = 1.0;
        if (t.starts_with('+')) {
            t.remove_prefix(1);
        } else if (t.starts_with('-')) {
            sign = -1.0;
            t.remove_prefix(1);
        }
        std::string_view u = t;
        if (read_i1_suffix(u) && u.empty()) return {0.0, sign};
    }

    std::string_view rest = s;
    const double first = read_number(rest);
    if (rest.empty()) return {first, 0.0};
    if (read_i1_suffix(rest)) {
        if (!rest.empty()) throw ParseError("trailing characters in complex value '" + std::string(s) + "'");
        return {0.0, first};
    }
    if (rest.front() != '+' && rest.front() != '-') {
        throw ParseError("malformed complex value '" + std::string(s) + "'");
    }
    // Implicit unit imaginary part: "a+i1" / "a-i1".
    {
        std::string_view t = rest;
        const double sign = t.front() == '-' ? -1.0 : 1.0;
        t.remove_prefix(1);
        std::string_view u = t;
        if (read_i1_suffix(u) && u.empty()) return {first, sign};
    }
    const double second = read_number(rest);
    if (!read_i1_suffix(rest) || !rest.empty()) {
        throw ParseError("malformed complex value '" + std::string(s) + "'");
    }
    return {first, second};
}

// "(c1) + (c2) i2" with optional '-' in place of '+'.
Bicomplex parse_cartesian(std::string_view s) {
    if (!s.starts_with('(')) throw ParseError("cartesian form must start with '('");
    const std::size_t close1 = s.find(')');
    if (close1 == std::string_view::npos) throw ParseError("unterminated '(' in cartesian form");
    const Complex z1 = parse_complex_token(s.substr(1, close1 - 1));

    std::string_view rest = s.substr(close1 + 1);
    if (rest.empty()) return Bicomplex::from_cartesian(z1, {0.0, 0.0});
    double sign = 1.0;
    if (rest.starts_with('+')) {
        rest.remove_prefix(1);
    } else if (rest.starts_with('-')) {
        sign = -1.0;
        rest.remove_prefix(1);
    } else {
        throw ParseError("expected '+' or '-' between cartesian groups");
    }
    if (!rest.starts_with('(')) throw ParseError("expected '(' before the i2 group");
    const std::size_t close2 = rest.find(')');
    if (close2 == std::string_view::npos) throw ParseError("unterminated '(' in i2 group");
    Complex z2 = parse_complex_token(rest.substr(1, close2 - 1));
    rest.remove_prefix(close2 + 1);
    if (rest != "i2") throw ParseError("cartesian form must end with 'i2'");
    z2 *= sign;
    return Bicomplex::from_cartesian(z1, z2);
}

Bicomplex parse_idempotent(std::string_view s) {
    if (!s.starts_with('[') || !s.ends_with(']')) {
        throw ParseError("idempotent form must be bracketed");
    }
    s = s.substr(1, s.size() - 2);
    const std::size_t comma = s.find(',');
    if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError("idempotent form takes exactly two components");
    }
    return Bicomplex::from_idempotent(parse_complex_token(s.substr(0, comma)),
                                      parse_complex_token(s.substr(comma + 1)));
}

}  // namespace

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0.0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc()) return "nan";
    return std::string(buf, res.ptr);
}

std::string format_complex_i1(const Complex& z) {
    if (z.imag() == 0.0) return format_double(z.real());
    const char sign = std::signbit(z.imag()) ? '-' : '+';
    return format_double(z.real()) + sign + format_double(std::abs(z.imag())) + "i1";
}

std::string format_complex_plain(const Complex& z) {
    const char sign = z.imag() == 0.0 ? '+' : (std::signbit(z.imag()) ? '-' : '+');
    return format_double(z.real()) + sign + format_double(std::abs(z.imag())) + "i";
}

std::string to_cartesian_string(const Bicomplex& w) {
    return "(" + format_complex_i1(w.z1()) + ") + (" + format_complex_i1(w.z2()) + ") i2";
}

std::string to_idempotent_string(const Bicomplex& w) {
    return "[" + format_complex_i1(w.z1hat()) + ", " + format_complex_i1(w.z2hat()) + "]";
}

std::string to_csv_cell(const Bicomplex& w) {
    return format_complex_plain(w.z1hat()) + ";" + format_complex_plain(w.z2hat());
}

Bicomplex parse_bicomplex(std::string_view text) {
    const std::string s = strip_ws(text);
    if (s.empty()) throw ParseError("empty bicomplex value");
    if (s.front() == '[') return parse_idempotent(s);
    if (s.front() == '(') return parse_cartesian(s);
    return Bicomplex(parse_complex_token(s));
}

std::vector<Bicomplex> parse_bicomplex_list(std::string_view text) {
    std::vector<Bicomplex> out;
    std::size_t start = 0;
    int depth = 0;
    auto flush = [&](std::size_t end) {
        const std::string_view token = trim(text.substr(start, end - start));
        if (!token.empty()) out.push_back(parse_bicomplex(token));
        start = end + 1;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if ((c == ',' || c == '\n') && depth == 0) flush(i);
    }
    if (depth != 0) throw ParseError("unbalanced brackets in list");
    flush(text.size());
    return out;
}

std::string tvector_to_json(const TVector& psi) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Bicomplex& w : psi.coeffs()) arr.push_back(to_idempotent_string(w));
    return arr.dump();
}

TVector tvector_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("expected a JSON array of bicomplex strings");
    std::vector<Bicomplex> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) throw ParseError("expected a JSON array of bicomplex strings");
        coeffs.push_back(parse_bicomplex(item.get<std::string>()));
    }
    return TVector(std::move(coeffs));
}

std::string matrix_to_csv(const std::vector<std::vector<Bicomplex>>& m) {
    std::string out;
    for (const auto& row : m) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out.push_back(',');
            out += to_csv_cell(row[c]);
        }
        out += "\r\n";
    }
    return out;
}

std::string gausspoly_to_json(const GaussPoly& u) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GaussTerm& t : u.terms()) {
        arr.push_back({{"n", t.n}, {"alpha", t.alpha}, {"coeff", to_idempotent_string(t.coeff)}});
    }
    return arr.dump();
}

GaussPoly gausspoly_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("expected a JSON array of term records");
    std::vector<GaussTerm> terms;
    terms.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_object() || !item.contains("n") || !item.contains("alpha") ||
            !item.contains("coeff") || !item["coeff"].is_string()) {
            throw ParseError("term records need integer n, real alpha and a coeff string");
        }
        terms.push_back({item["n"].get<int>(), item["alpha"].get<double>(),
                         parse_bicomplex(item["coeff"].get<std::string>())});
    }
    return GaussPoly(std::move(terms));
}

std::string gausspoly_pretty(const GaussPoly& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const GaussTerm& t : u.terms()) {
        if (!out.empty()) out += " + ";
        out += to_idempotent_string(t.coeff);
        if (t.n > 0) out += " * x^" + std::to_string(t.n);
        out += " * exp(-" + format_double(t.alpha) + " x^2)";
    }
    return out;
}

}  // namespace bicx
