#pragma once

// JSON forms. A polynomial is a list of {"coeff": "p/q", "term": ...}:
//   Word        [1,2,3]
//   LieMonomial nested pairs with integer leaves, [1,[2,3]]
//   SymTensor   list of atoms (basis indices for enveloping elements)
// Parsing rejects anything that would not print back identically.

#include <dynmag/lie.hpp>
#include <dynmag/nilpotent.hpp>
#include <dynmag/pbw.hpp>
#include <dynmag/series.hpp>
#include <dynmag/symtensor.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace dynmag {

using Json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Json to_json(const Rational& r) { return r.fraction_string(); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw FormatError("coefficient must be a \"p/q\" string");
    const auto s = j.get<std::string>();
    if (s.find('/') == std::string::npos) throw FormatError("coefficient must be a \"p/q\" string");
    Rational r;
    try {
        r = Rational::parse(s);
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    if (r.fraction_string() != s) throw FormatError("coefficient '" + s + "' is not in lowest terms");
    return r;
}

inline Json to_json(const Word& w) { return w.letters; }

inline Word word_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("word must be a list of integers");
    std::vector<Letter> letters;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() < 1) throw FormatError("word letters must be positive integers");
        letters.push_back(x.get<int>());
    }
    return Word(std::move(letters));
}

inline Json to_json(const LieMonomial& m) {
    if (m.is_leaf()) return m.letter();
    return Json::array({to_json(m.left()), to_json(m.right())});
}

inline LieMonomial lie_monomial_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.get<int>() < 1) throw FormatError("leaves must be positive integers");
        return LieMonomial::leaf(j.get<int>());
    }
    if (!j.is_array() || j.size() != 2) throw FormatError("bracket must be a two-element list");
    return LieMonomial::bracket(lie_monomial_from_json(j[0]), lie_monomial_from_json(j[1]));
}

template <class Key, class Compare, class F>
Json combination_to_json(const Combination<Key, Compare>& c, F&& term) {
    Json out = Json::array();
    for (const auto& [k, v] : c) out.push_back(Json{{"coeff", to_json(v)}, {"term", term(k)}});
    return out;
}

template <class Key, class F>
Combination<Key> combination_from_json(const Json& j, F&& term) {
    if (!j.is_array()) throw FormatError("polynomial must be a list of terms");
    Combination<Key> out;
    for (const auto& t : j) {
        if (!t.is_object() || t.size() != 2 || !t.contains("coeff") || !t.contains("term"))
            throw FormatError("term must be {\"coeff\", \"term\"}");
        const Rational c = rational_from_json(t["coeff"]);
        if (c.is_zero()) throw FormatError("zero coefficient");
        Key k = term(t["term"]);
        if (!out.coeff(k).is_zero()) throw FormatError("repeated term");
        out.add(std::move(k), c);
    }
    return out;
}

inline Json to_json(const NCPolynomial& p) {
    return combination_to_json(p, [](const Word& w) { return to_json(w); });
}

inline NCPolynomial nc_polynomial_from_json(const Json& j) { return combination_from_json<Word>(j, word_from_json); }

inline Json to_json(const LiePolynomial& p) {
    return combination_to_json(p.terms(), [](const LieMonomial& m) { return to_json(m); });
}

/// Only canonical basis monomials are accepted, so the value is already
/// normalized.
inline LiePolynomial lie_polynomial_from_json(const Json& j) {
    LieExpr e = combination_from_json<LieMonomial>(j, lie_monomial_from_json);
    for (const auto& [m, c] : e)
        if (!is_canonical(m)) throw FormatError("term is not a canonical basis monomial");
    return LiePolynomial::from_canonical(std::move(e));
}

template <class Atom>
Json to_json(const SymTensor<Atom>& t) {
    return combination_to_json(t.terms(), [](const std::vector<Atom>& atoms) { return Json(atoms); });
}

inline SymTensor<int> sym_tensor_from_json(const Json& j) {
    auto c = combination_from_json<std::vector<int>>(j, [](const Json& atoms) {
        if (!atoms.is_array()) throw FormatError("symmetric tensor term must be a list");
        std::vector<int> v;
        for (const auto& a : atoms) {
            if (!a.is_number_integer()) throw FormatError("atoms must be integers");
            v.push_back(a.get<int>());
        }
        if (!std::is_sorted(v.begin(), v.end())) throw FormatError("atoms must be sorted");
        return v;
    });
    SymTensor<int> out;
    for (const auto& [k, v] : c) out.add(k, v);
    return out;
}

inline Json to_json(const CoeffSeries& s) {
    Json rows = Json::array();
    for (const auto& row : s.values) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        rows.push_back(r);
    }
    const char* kind = s.kind == CoeffKind::beta ? "beta" : s.kind == CoeffKind::beta_tilde ? "beta-tilde" : "alpha";
    if (s.kind == CoeffKind::alpha) return Json{{"kind", kind}, {"values", rows}};
    return Json{{"kind", kind}, {"values", rows.front()}};
}

inline Json to_json(const VerificationReport& r) {
    Json j{{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"failures", r.failures}};
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    return j;
}

/// Structure constants with 1-based basis indices, so X_i is index i.
inline Json structure_constants_json(const NilpotentAlgebra& alg) {
    Json basis = Json::array();
    for (const auto& m : alg.basis()) basis.push_back(to_json(m));
    Json brackets = Json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            const auto& v = alg.bracket(static_cast<int>(i), static_cast<int>(j));
            if (v.is_zero()) continue;
            Json value = Json::array();
            for (const auto& [idx, c] : v) value.push_back(Json::array({to_json(c), idx + 1}));
            brackets.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"value", value}});
        }
    return Json{{"generators", alg.generators()},
                {"nilpotency", alg.nilpotency()},
                {"dim", alg.dim()},
                {"grading", alg.grading()},
                {"basis", basis},
                {"brackets", brackets}};
}

}  // namespace dynmag
