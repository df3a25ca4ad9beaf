#pragma once

// Co-shuffle maps on noncommutative polynomials. F_p = m^(p-1) o Delta^(p-1)
// with Delta(X) = X (x) 1 + 1 (x) X: a word is sent to the sum over all p^n
// ways of routing its letters into p slots (keeping their order within a
// slot), each routing contributing the concatenation of the slots.
// F_0 is the counit.

#include <dynmag/ncpoly.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dynmag {

namespace detail {

/// F_p(w) = sum over subsequences u of w of u * F_{p-1}(complement of u).
/// Shared across the words of one polynomial, since subsequences repeat.
class CoshuffleTable {
public:
    const NCPolynomial& get(const Word& w, int fold) {
        auto key = std::make_pair(fold, w);
        if (auto it = table_.find(key); it != table_.end()) return it->second;
        NCPolynomial out;
        if (fold == 0) {
            if (w.empty()) out.add(w, Rational(1));
        } else if (fold == 1 || w.empty()) {
            out.add(w, Rational(1));
        } else {
            const std::size_t n = w.size();
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                std::vector<Letter> first, rest;
                for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? first : rest).push_back(w.letters[i]);
                const Word head(std::move(first));
                for (const auto& [tail, c] : get(Word(std::move(rest)), fold - 1)) out.add(head * tail, c);
            }
        }
        return table_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    std::map<std::pair<int, Word>, NCPolynomial> table_;
};

}  // namespace detail

/// Sum over the p^n routings of the letters of w into p ordered slots of the
/// concatenated slots.
inline NCPolynomial coshuffle(const Word& w, int fold) {
    if (fold < 0) throw std::invalid_argument("coshuffle: fold must be >= 0");
    detail::CoshuffleTable table;
    return table.get(w, fold);
}

inline NCPolynomial coshuffle(const NCPolynomial& poly, int fold) {
    if (fold < 0) throw std::invalid_argument("coshuffle: fold must be >= 0");
    detail::CoshuffleTable table;
    NCPolynomial out;
    for (const auto& [w, c] : poly) out.add_scaled(table.get(w, fold), c);
    return out;
}

/// sum_{i=1}^{p} ((-1)^(i-1)/i) C(p,i) F_i(word): the projection onto the
/// symmetric-degree-1 component, valid for multilinear words of length <= p.
inline NCPolynomial coshuffle_projection(const Word& word, int p) {
    if (p < 1) throw std::invalid_argument("coshuffle_projection: p must be >= 1");
    if (word.size() > static_cast<std::size_t>(p))
        throw std::invalid_argument("coshuffle_projection: word longer than p");
    std::vector<Letter> sorted = word.letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("coshuffle_projection: word must be multilinear");
    NCPolynomial out;
    for (int i = 1; i <= p; ++i) {
        const Rational c = binomial(static_cast<unsigned>(p), static_cast<unsigned>(i)) * Rational(i % 2 == 1 ? 1 : -1, i);
        out.add_scaled(coshuffle(word, i), c);
    }
    return out;
}

}  // namespace dynmag
