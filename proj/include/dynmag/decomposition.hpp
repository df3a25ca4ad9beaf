#pragma once

// Decomposition of the word X1...Xn into symmetrized products of
// left-iterated commutators indexed by Lie-permutations:
//
//   X1...Xn = sum_{Ii} b_{Ii} [block_1]_L . ... . [block_s]_L   (symmetrized)
//
// Two independent solvers: the symmetrize-and-descend rewriting and an exact
// n! x n! linear system.

#include <dynmag/combinatorics.hpp>
#include <dynmag/lie.hpp>
#include <dynmag/linalg.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dynmag {

using LiePermutationCombination = Combination<LiePermutation>;

/// Symmetrized product of the commutator evaluations of the blocks.
inline NCPolynomial evaluate_lie_permutation(const LiePermutation& ip) {
    std::vector<NCPolynomial> factors;
    factors.reserve(ip.block_count());
    for (const auto& b : ip.blocks()) factors.push_back(commutator_evaluate(LieMonomial::left_iterated(b)));
    return symmetrized_product(factors);
}

namespace detail {

/// Canonical multilinear monomials, one per block, to a Lie-permutation.
inline LiePermutation to_lie_permutation(std::vector<LieMonomial> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const LieMonomial& a, const LieMonomial& b) { return a.max_letter() < b.max_letter(); });
    std::vector<LiePermutation::Block> blocks;
    blocks.reserve(factors.size());
    for (const auto& f : factors) blocks.push_back(f.foliage());
    return LiePermutation(std::move(blocks));
}

}  // namespace detail

/// Symmetrize-and-descend. A product C1...Cs of commutator monomials equals
/// its symmetrization plus (1/s!) sum_pi (C1...Cs - C_pi(1)...C_pi(s)); each
/// difference is walked through adjacent transpositions, every swap
/// contributing the product with the two neighbours replaced by their
/// bracket, which has one factor fewer. Levels are processed from s = n down.
inline LiePermutationCombination decompose_word_rewriting(int n) {
    if (n < 0) throw std::invalid_argument("decompose_word_rewriting: n must be >= 0");
    using Product = std::vector<LieMonomial>;
    LiePermutationCombination out;
    if (n == 0) {
        out.add(LiePermutation{}, Rational(1));
        return out;
    }
    std::map<Product, Rational> level;
    {
        Product start;
        for (int i = 1; i <= n; ++i) start.push_back(LieMonomial::leaf(i));
        level.emplace(std::move(start), Rational(1));
    }
    for (int s = n; s >= 1; --s) {
        std::map<Product, Rational> next;
        const Rational weight = Rational(1) / factorial(static_cast<unsigned>(s));
        auto push_merged = [&](const Product& arr, std::size_t t, const Rational& coeff) {
            const LiePolynomial merged = lie_bracket(LiePolynomial::from_canonical(LieExpr::single(arr[t])),
                                                     LiePolynomial::from_canonical(LieExpr::single(arr[t + 1])));
            Product reduced;
            reduced.reserve(arr.size() - 1);
            reduced.insert(reduced.end(), arr.begin(), arr.begin() + static_cast<std::ptrdiff_t>(t));
            reduced.emplace_back();
            reduced.insert(reduced.end(), arr.begin() + static_cast<std::ptrdiff_t>(t + 2), arr.end());
            for (const auto& [m, c] : merged) {
                reduced[t] = m;
                Rational& slot = next[reduced];
                slot += coeff * c;
            }
        };
        for (const auto& [prod, c] : level) {
            if (c.is_zero()) continue;
            out.add(detail::to_lie_permutation(prod), c);
            if (s == 1) continue;
            const Rational share = c * weight;
            std::vector<std::size_t> target(static_cast<std::size_t>(s));
            std::iota(target.begin(), target.end(), 0);
            do {
                std::vector<std::size_t> arr(target.size());
                std::iota(arr.begin(), arr.end(), 0);
                for (std::size_t i = 0; i < arr.size(); ++i) {
                    auto j = static_cast<std::size_t>(std::find(arr.begin() + static_cast<std::ptrdiff_t>(i), arr.end(), target[i]) - arr.begin());
                    for (; j > i; --j) {
                        Product current;
                        current.reserve(arr.size());
                        for (std::size_t k : arr) current.push_back(prod[k]);
                        push_merged(current, j - 1, share);
                        std::swap(arr[j - 1], arr[j]);
                    }
                }
            } while (std::next_permutation(target.begin(), target.end()));
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        level = std::move(next);
    }
    return out;
}

struct LinearDecomposition {
    LiePermutationCombination coefficients;
    std::size_t rank = 0;
    std::size_t dimension = 0;
    [[nodiscard]] bool unique() const { return rank == dimension; }
};

/// Solves for the coefficients of X1...Xn against the n! evaluated basis
/// products over the n! words with distinct letters.
inline LinearDecomposition decompose_word_linear(int n) {
    if (n < 0) throw std::invalid_argument("decompose_word_linear: n must be >= 0");
    const auto perms = enumerate_lie_permutations(n);
    std::map<Word, std::size_t> row_of;
    for_each_permutation(n, [&](const Permutation& p) { row_of.emplace(Word(p.images()), row_of.size()); });
    const std::size_t dim = perms.size();
    RationalMatrix a(dim, std::vector<Rational>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        for (const auto& [w, c] : evaluate_lie_permutation(perms[col])) a[row_of.at(w)][col] = c;
    }
    std::vector<Rational> rhs(dim);
    {
        std::vector<Letter> id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 1);
        rhs[row_of.at(Word(id))] = Rational(1);
    }
    LinearDecomposition out;
    out.dimension = dim;
    out.rank = exact_rank(a);
    if (auto x = solve_exact(std::move(a), std::move(rhs))) {
        for (std::size_t i = 0; i < dim; ++i) out.coefficients.add(perms[i], (*x)[i]);
    }
    return out;
}

}  // namespace dynmag
