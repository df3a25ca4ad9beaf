#pragma once

// Text and LaTeX rendering. Terms come out in canonical order with reduced
// fractions, so output is stable enough to diff.

#include <dynmag/lie.hpp>
#include <dynmag/series.hpp>
#include <dynmag/symtensor.hpp>

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace dynmag {

enum class Style { text, latex };

/// Names of the variables X_1, X_2, ...; an empty list means X1, X2, ...
using VariableNames = std::vector<std::string>;

inline std::string variable_name(Letter x, const VariableNames& names, Style style) {
    if (x >= 1 && static_cast<std::size_t>(x) <= names.size()) return names[static_cast<std::size_t>(x - 1)];
    return style == Style::latex ? "X_{" + std::to_string(x) + "}" : "X" + std::to_string(x);
}

inline std::string render_scalar(const Rational& r, Style style) {
    if (style == Style::text || r.is_integer()) return r.to_string();
    const std::string num = (r.sign() < 0 ? -r : r).numerator().get_str();
    return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + num + "}{" + r.denominator().get_str() + "}";
}

inline std::string render(const LieMonomial& m, Style style, const VariableNames& names = {}) {
    if (m.is_leaf()) return variable_name(m.letter(), names, style);
    return "[" + render(m.left(), style, names) + "," + render(m.right(), style, names) + "]";
}

inline std::string render(const Word& w, Style style, const VariableNames& names = {}) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && style == Style::text) out += "*";
        out += variable_name(w.letters[i], names, style);
    }
    return out;
}

namespace detail {

/// c1 t1 + c2 t2 - ... with unit coefficients dropped.
template <class Terms, class F>
std::string render_sum(const Terms& terms, Style style, F&& term) {
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        const std::string body = term(k);
        if (body == "1") out += render_scalar(magnitude, style);
        else if (magnitude == Rational(1)) out += body;
        else out += render_scalar(magnitude, style) + " " + body;
        first = false;
    }
    return first ? "0" : out;
}

}  // namespace detail

inline std::string render(const LiePolynomial& p, Style style, const VariableNames& names = {}) {
    return detail::render_sum(p, style, [&](const LieMonomial& m) { return render(m, style, names); });
}

inline std::string render(const NCPolynomial& p, Style style, const VariableNames& names = {}) {
    return detail::render_sum(p, style, [&](const Word& w) { return render(w, style, names); });
}

/// Monomials a.b.c of a symmetric tensor; `atom` names each atom.
template <class Atom>
std::string render(const SymTensor<Atom>& t, Style style, const std::function<std::string(const Atom&)>& atom) {
    return detail::render_sum(t, style, [&](const std::vector<Atom>& atoms) {
        if (atoms.empty()) return std::string("1");
        std::string out;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (i > 0) out += style == Style::latex ? " \\odot " : " . ";
            out += atom(atoms[i]);
        }
        return out;
    });
}

/// beta / beta-tilde as one comma-separated row; alpha as one row per s.
inline std::string render(const CoeffSeries& s, Style style) {
    std::ostringstream os;
    auto row = [&](const std::vector<Rational>& values, const char* sep) {
        for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << render_scalar(values[i], style);
    };
    if (s.kind != CoeffKind::alpha) {
        row(s.values.front(), ", ");
        os << '\n';
        return os.str();
    }
    if (style == Style::latex) {
        os << "\\begin{pmatrix}\n";
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            row(s.values[i], " & ");
            os << (i + 1 < s.values.size() ? " \\\\\n" : "\n");
        }
        os << "\\end{pmatrix}\n";
        return os.str();
    }
    for (const auto& r : s.values) {
        row(r, ", ");
        os << '\n';
    }
    return os.str();
}

}  // namespace dynmag
