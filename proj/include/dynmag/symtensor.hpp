#pragma once

// Symmetric tensors: rational combinations of multisets of atoms. The empty
// multiset is the unit.

#include <dynmag/combination.hpp>

#include <algorithm>
#include <span>
#include <vector>

namespace dynmag {

template <class Atom>
class SymTensor {
public:
    using Multiset = std::vector<Atom>;
    using const_iterator = typename Combination<Multiset>::const_iterator;

    SymTensor() = default;

    static SymTensor unit() {
        SymTensor t;
        t.terms_.add(Multiset{}, Rational(1));
        return t;
    }
    static SymTensor monomial(Multiset atoms, Rational coeff = Rational(1)) {
        SymTensor t;
        t.add(std::move(atoms), coeff);
        return t;
    }

    /// Adds coeff * (a1 . a2 . ... . an); the atoms may come in any order.
    void add(Multiset atoms, const Rational& coeff) {
        std::sort(atoms.begin(), atoms.end());
        terms_.add(atoms, coeff);
    }

    [[nodiscard]] const Combination<Multiset>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
    [[nodiscard]] const_iterator end() const { return terms_.end(); }
    [[nodiscard]] Rational coeff(Multiset atoms) const {
        std::sort(atoms.begin(), atoms.end());
        return terms_.coeff(atoms);
    }

    SymTensor& operator+=(const SymTensor& o) { terms_ += o.terms_; return *this; }
    SymTensor& operator-=(const SymTensor& o) { terms_ -= o.terms_; return *this; }
    SymTensor& operator*=(const Rational& s) { terms_ *= s; return *this; }
    void add_scaled(const SymTensor& o, const Rational& s) { terms_.add_scaled(o.terms_, s); }

    friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
    friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
    friend SymTensor operator*(const Rational& s, SymTensor a) { return a *= s; }
    friend bool operator==(const SymTensor&, const SymTensor&) = default;

private:
    Combination<Multiset> terms_;
};

/// Commutative product of symmetric tensors.
template <class Atom>
SymTensor<Atom> sym_product(const SymTensor<Atom>& a, const SymTensor<Atom>& b) {
    SymTensor<Atom> out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            std::vector<Atom> merged(ka);
            merged.insert(merged.end(), kb.begin(), kb.end());
            out.add(std::move(merged), ca * cb);
        }
    return out;
}

/// e1 . e2 . ... . es for linear combinations of atoms, expanded
/// multilinearly.
template <class Atom>
SymTensor<Atom> sym_product(std::span<const Combination<Atom>> factors) {
    SymTensor<Atom> out = SymTensor<Atom>::unit();
    for (const auto& f : factors) {
        SymTensor<Atom> next;
        for (const auto& [k, c] : out)
            for (const auto& [atom, cf] : f) {
                std::vector<Atom> merged(k);
                merged.push_back(atom);
                next.add(std::move(merged), c * cf);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace dynmag
