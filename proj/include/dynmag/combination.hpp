#pragma once

// Finite rational linear combinations over an ordered key type. All the
// polynomial-like objects of the library (noncommutative polynomials, Lie
// expressions, symmetric tensors, algebra elements) are instances.

#include <dynmag/rational.hpp>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

namespace dynmag {

/// Sparse map Key -> Rational. Zero coefficients are never stored, so two
/// combinations are equal exactly when their maps are equal.
template <class Key, class Compare = std::less<Key>>
class Combination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    Combination() = default;
    Combination(std::initializer_list<std::pair<Key, Rational>> terms) {
        for (const auto& [k, c] : terms) add(k, c);
    }
    static Combination single(Key key, Rational coeff = Rational(1)) {
        Combination out;
        out.add(std::move(key), std::move(coeff));
        return out;
    }

    void add(const Key& key, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] Rational coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
    [[nodiscard]] const_iterator end() const { return terms_.end(); }
    [[nodiscard]] const map_type& terms() const { return terms_; }

    Combination& operator+=(const Combination& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Combination& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    /// this += s * o
    void add_scaled(const Combination& o, const Rational& s) {
        if (s.is_zero()) return;
        for (const auto& [k, c] : o.terms_) add(k, c * s);
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator-(Combination a) { return a *= Rational(-1); }
    friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
    friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
    friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

    /// Applies f to every key, summing coefficients of keys that collide.
    template <class F>
    [[nodiscard]] auto map_keys(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const Key&>()))>;
        Combination<Out> out;
        for (const auto& [k, c] : terms_) out.add(f(k), c);
        return out;
    }

private:
    map_type terms_;
};

}  // namespace dynmag
