#pragma once

// Words and noncommutative polynomials over Q in the variables X1, X2, ...

#include <dynmag/combination.hpp>

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace dynmag {

/// Variable index; X1 is 1.
using Letter = int;

/// Associative monomial. Ordered length-first, then lexicographically.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> l) : letters(std::move(l)) {
        for (Letter x : letters)
            if (x < 1) throw std::invalid_argument("Word: variable indices start at 1");
    }
    Word(std::initializer_list<Letter> l) : Word(std::vector<Letter>(l)) {}

    [[nodiscard]] std::size_t size() const { return letters.size(); }
    [[nodiscard]] bool empty() const { return letters.empty(); }

    friend Word operator*(const Word& a, const Word& b) {
        Word out;
        out.letters.reserve(a.size() + b.size());
        out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
        out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.letters <=> b.letters;
    }
};

using NCPolynomial = Combination<Word>;

inline NCPolynomial nc_unit() { return NCPolynomial::single(Word{}); }
inline NCPolynomial nc_variable(Letter x) { return NCPolynomial::single(Word{x}); }

/// Concatenation product, bilinear. Terms whose length exceeds max_degree are
/// dropped when a bound is given.
inline NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b,
                                std::size_t max_degree = static_cast<std::size_t>(-1)) {
    NCPolynomial out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            if (wa.size() + wb.size() > max_degree) continue;
            out.add(wa * wb, ca * cb);
        }
    }
    return out;
}

inline NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) { return nc_multiply(a, b); }

inline NCPolynomial nc_commutator(const NCPolynomial& a, const NCPolynomial& b) {
    return nc_multiply(a, b) - nc_multiply(b, a);
}

/// Homogeneous component of the given degree.
inline NCPolynomial degree_part(const NCPolynomial& p, std::size_t degree) {
    NCPolynomial out;
    for (const auto& [w, c] : p)
        if (w.size() == degree) out.add(w, c);
    return out;
}

/// (1/s!) * sum over orderings of the factors of their products.
inline NCPolynomial symmetrized_product(std::span<const NCPolynomial> factors) {
    const std::size_t s = factors.size();
    if (s == 0) return nc_unit();
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), 0);
    NCPolynomial out;
    do {
        NCPolynomial prod = factors[order[0]];
        for (std::size_t i = 1; i < s; ++i) prod = nc_multiply(prod, factors[order[i]]);
        out += prod;
    } while (std::next_permutation(order.begin(), order.end()));
    out *= Rational(1) / factorial(static_cast<unsigned>(s));
    return out;
}

/// Renames variables: letter x becomes images[x-1].
inline NCPolynomial relabel(const NCPolynomial& p, std::span<const Letter> images) {
    return p.map_keys([&](const Word& w) {
        std::vector<Letter> l;
        l.reserve(w.size());
        for (Letter x : w.letters) l.push_back(images[static_cast<std::size_t>(x - 1)]);
        return Word(std::move(l));
    });
}

}  // namespace dynmag
