#pragma once

// Free k-nilpotent Lie algebras on d generators, presented by structure
// constants over the canonical free-Lie basis truncated at degree k.

#include <dynmag/lie.hpp>
#include <dynmag/lyndon.hpp>

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace dynmag {

class NilpotentAlgebra {
public:
    /// Vector in the algebra: basis index (0-based) -> coefficient.
    using Element = Combination<int>;

    /// Builds the free k-nilpotent Lie algebra on d generators. Basis: the
    /// canonical free-Lie basis monomials of degree 1..k (left-iterated for
    /// multilinear multidegrees, Lyndon otherwise), sorted by degree then
    /// leaf sequence, so basis index i < d is the generator X_{i+1}.
    static NilpotentAlgebra free_nilpotent(int d, int k) {
        if (d < 1) throw std::invalid_argument("free_nilpotent: need at least one generator");
        if (k < 1) throw std::invalid_argument("free_nilpotent: nilpotency must be >= 1");
        NilpotentAlgebra alg;
        alg.generators_ = d;
        alg.nilpotency_ = k;
        for (const auto& w : lyndon_words(d, static_cast<std::size_t>(k))) {
            std::vector<Letter> sorted(w);
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && w.size() > 1) {
                // one Lyndon word per multilinear letter set; swap in the
                // left-iterated basis of that component
                if (w != sorted) continue;
                std::vector<Letter> rest(sorted.begin(), sorted.end() - 1);
                do {
                    std::vector<Letter> seq(rest);
                    seq.push_back(sorted.back());
                    alg.basis_.push_back(LieMonomial::left_iterated(seq));
                } while (std::next_permutation(rest.begin(), rest.end()));
            } else {
                alg.basis_.push_back(standard_bracketing(w));
            }
        }
        std::sort(alg.basis_.begin(), alg.basis_.end());
        for (std::size_t i = 0; i < alg.basis_.size(); ++i) alg.index_.emplace(alg.basis_[i], static_cast<int>(i));

        const std::size_t n = alg.basis_.size();
        alg.table_.assign(n, std::vector<Element>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (alg.basis_[i].degree() + alg.basis_[j].degree() > static_cast<std::size_t>(k)) continue;
                const LiePolynomial br = lie_bracket(LiePolynomial::from_canonical(LieExpr::single(alg.basis_[i])),
                                                     LiePolynomial::from_canonical(LieExpr::single(alg.basis_[j])));
                Element e = alg.from_lie(br);
                for (const auto& [idx, c] : e)
                    if (!c.is_integer()) throw std::logic_error("free_nilpotent: non-integral structure constant");
                alg.table_[j][i] = -e;
                alg.table_[i][j] = std::move(e);
            }
        }
        return alg;
    }

    [[nodiscard]] int generators() const { return generators_; }
    [[nodiscard]] int nilpotency() const { return nilpotency_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<LieMonomial>& basis() const { return basis_; }
    [[nodiscard]] int degree(int index) const { return static_cast<int>(basis_[static_cast<std::size_t>(index)].degree()); }
    [[nodiscard]] std::vector<int> grading() const {
        std::vector<int> g;
        for (const auto& b : basis_) g.push_back(static_cast<int>(b.degree()));
        return g;
    }

    [[nodiscard]] Element basis_element(int index) const { return Element::single(index); }
    [[nodiscard]] Element generator(Letter x) const { return Element::single(index_of(LieMonomial::leaf(x))); }

    [[nodiscard]] int index_of(const LieMonomial& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) throw std::out_of_range("NilpotentAlgebra: monomial is not a basis element");
        return it->second;
    }

    /// Structure constants [e_i, e_j].
    [[nodiscard]] const Element& bracket(int i, int j) const {
        return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    [[nodiscard]] Element bracket(const Element& a, const Element& b) const {
        Element out;
        for (const auto& [i, ca] : a)
            for (const auto& [j, cb] : b) out.add_scaled(bracket(i, j), ca * cb);
        return out;
    }

    /// Image of a free Lie polynomial in the generators X1..Xd; terms of
    /// degree above k vanish.
    [[nodiscard]] Element from_lie(const LiePolynomial& p) const {
        Element out;
        for (const auto& [m, c] : p) {
            if (m.degree() > static_cast<std::size_t>(nilpotency_)) continue;
            out.add(index_of(m), c);
        }
        return out;
    }

    /// Evaluates a bracket tree with X_i replaced by args[i-1].
    [[nodiscard]] Element evaluate(const LieMonomial& tree, std::span<const Element> args) const {
        if (tree.is_leaf()) return args[static_cast<std::size_t>(tree.letter() - 1)];
        Element left = evaluate(tree.left(), args);
        if (left.is_zero()) return {};
        return bracket(left, evaluate(tree.right(), args));
    }

    [[nodiscard]] Element evaluate(const LiePolynomial& p, std::span<const Element> args) const {
        Element out;
        for (const auto& [m, c] : p) out.add_scaled(evaluate(m, args), c);
        return out;
    }

private:
    int generators_ = 0;
    int nilpotency_ = 0;
    std::vector<LieMonomial> basis_;
    std::map<LieMonomial, int> index_;
    std::vector<std::vector<Element>> table_;
};

/// Dimension of the degree-n part of the free Lie algebra on d generators,
/// (1/n) sum_{e | n} moebius(e) d^(n/e).
inline long long witt_dimension(int d, int n) {
    auto moebius = [](int m) {
        int result = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                result = -result;
            }
        }
        return m > 1 ? -result : result;
    };
    long long total = 0;
    for (int e = 1; e <= n; ++e) {
        if (n % e != 0) continue;
        long long power = 1;
        for (int i = 0; i < n / e; ++i) power *= d;
        total += moebius(e) * power;
    }
    return total / n;
}

}  // namespace dynmag
