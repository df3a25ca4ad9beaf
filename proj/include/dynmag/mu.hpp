#pragma once

// Dynkin-Magnus commutators mu_n(X1,...,Xn) by independent constructions:
//   magnus_L / magnus_R / magnus_C  Bernoulli-weighted recursions over ordered
//                                   block partitions,
//   lieperm                         single-block part of the Lie-permutation
//                                   decomposition of X1...Xn,
//   dynkin                          explicit descent/ascent coefficients read
//                                   off through a pivot variable.
// plus the associative forms and a log-exp oracle.

#include <dynmag/combinatorics.hpp>
#include <dynmag/decomposition.hpp>
#include <dynmag/lie.hpp>
#include <dynmag/memo.hpp>
#include <dynmag/series.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dynmag {

enum class Construction { magnus_L, magnus_R, magnus_C, lieperm, dynkin };

inline constexpr Construction all_constructions[] = {Construction::magnus_L, Construction::magnus_R, Construction::magnus_C,
                                                     Construction::lieperm, Construction::dynkin};

inline std::string_view construction_name(Construction c) {
    switch (c) {
        case Construction::magnus_L: return "magnus-L";
        case Construction::magnus_R: return "magnus-R";
        case Construction::magnus_C: return "magnus-C";
        case Construction::lieperm: return "lieperm";
        case Construction::dynkin: return "dynkin";
    }
    return "?";
}

inline std::optional<Construction> parse_construction(std::string_view name) {
    for (Construction c : all_constructions)
        if (construction_name(c) == name) return c;
    return std::nullopt;
}

struct MuResult {
    int n;
    Construction construction;
    LiePolynomial value;
};

namespace detail {

inline void require_degree(int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

inline Memo<std::pair<int, int>, LiePolynomial>& mu_memo() {
    static Memo<std::pair<int, int>, LiePolynomial> memo;
    return memo;
}

inline std::vector<int> iota_range(int from, int to) {
    std::vector<int> v;
    for (int i = from; i <= to; ++i) v.push_back(i);
    return v;
}

}  // namespace detail

inline const LiePolynomial& mu(int n, Construction c);

namespace detail {

/// Sum over ordered block partitions of `items` into s blocks of
/// [mu(block_1), ..., mu(block_s), X_anchor]_L, grouped by s. Entry s of the
/// result holds that sum.
inline std::vector<LiePolynomial> stacked_sums(const std::vector<int>& items, Letter anchor, Construction sub) {
    std::vector<LiePolynomial> by_blocks(items.size() + 1);
    if (items.empty()) {
        by_blocks[0] = LiePolynomial::generator(anchor);
        return by_blocks;
    }
    for_each_ordered_partition(items, [&](const std::vector<std::vector<int>>& blocks) {
        LiePolynomial acc = LiePolynomial::generator(anchor);
        for (std::size_t i = blocks.size(); i-- > 0;) {
            const auto& b = blocks[i];
            acc = lie_bracket(relabel(mu(static_cast<int>(b.size()), sub), b), acc);
        }
        by_blocks[blocks.size()] += acc;
    });
    return by_blocks;
}

inline LiePolynomial compute_magnus_L(int n) {
    if (n == 1) return LiePolynomial::generator(1);
    const auto beta = beta_coefficients(static_cast<std::size_t>(n));
    const auto sums = stacked_sums(iota_range(2, n), 1, Construction::magnus_L);
    LiePolynomial out;
    for (std::size_t s = 1; s < sums.size(); ++s) out.add_scaled(sums[s], beta[s]);
    return out;
}

inline LiePolynomial compute_magnus_R(int n) {
    if (n == 1) return LiePolynomial::generator(1);
    const auto beta_tilde = beta_tilde_coefficients(static_cast<std::size_t>(n));
    const auto sums = stacked_sums(iota_range(1, n - 1), n, Construction::magnus_R);
    LiePolynomial out;
    for (std::size_t r = 1; r < sums.size(); ++r) out.add_scaled(sums[r], beta_tilde[r]);
    return out;
}

inline LiePolynomial compute_magnus_C(int n) {
    if (n == 1) return LiePolynomial::generator(1);
    const std::vector<int> middle = iota_range(2, n - 1);
    const std::size_t m = middle.size();
    const auto alpha = alpha_coefficients(m, m);
    LiePolynomial out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> left_items, right_items;
        for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1U ? left_items : right_items).push_back(middle[i]);
        const auto left = stacked_sums(left_items, 1, Construction::magnus_C);
        const auto right = stacked_sums(right_items, n, Construction::magnus_C);
        for (std::size_t s = 0; s < left.size(); ++s) {
            if (left[s].is_zero()) continue;
            for (std::size_t r = 0; r < right.size(); ++r) {
                if (right[r].is_zero() || alpha(s, r).is_zero()) continue;
                out.add_scaled(lie_bracket(left[s], right[r]), alpha(s, r));
            }
        }
    }
    return out;
}

}  // namespace detail

/// Coefficient (-1)^des des! asc! / n! of the word X_sigma(1)...X_sigma(n).
inline Rational dynkin_coefficient(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    const int d = sigma.descents();
    const int a = sigma.ascents();
    Rational c = factorial(static_cast<unsigned>(d)) * factorial(static_cast<unsigned>(a)) / factorial(static_cast<unsigned>(n));
    return d % 2 == 0 ? c : -c;
}

/// mu_n^ass = sum_sigma dynkin_coefficient(sigma) X_sigma(1)...X_sigma(n).
inline NCPolynomial mu_ass_dynkin(int n) {
    detail::require_degree(n, "mu_ass_dynkin");
    NCPolynomial out;
    for_each_permutation(n, [&](const Permutation& s) { out.add(Word(s.images()), dynkin_coefficient(s)); });
    return out;
}

/// Weighted Dynkin-Specht-Wever form: the words ending in X_pivot give the
/// coefficients of [X_sigma(1),...,X_sigma(n-1),X_pivot]_L.
inline LiePolynomial mu_dynkin(int n, int pivot) {
    detail::require_degree(n, "mu_dynkin");
    if (pivot < 1 || pivot > n) throw std::out_of_range("mu_dynkin: pivot must lie in 1..n");
    LieExpr raw;
    for_each_permutation(n, [&](const Permutation& s) {
        if (s(n) == pivot) raw.add(LieMonomial::left_iterated(s.images()), dynkin_coefficient(s));
    });
    return lie_normalize(raw);
}

inline LiePolynomial mu_dynkin(int n) { return mu_dynkin(n, n); }

/// Averaged form: (1/n) sum_sigma mu_sigma [X_sigma(1),...,X_sigma(n)]_L.
inline LiePolynomial mu_dynkin_averaged(int n) {
    detail::require_degree(n, "mu_dynkin_averaged");
    LieExpr raw;
    const Rational inv_n = Rational(1, n);
    for_each_permutation(n, [&](const Permutation& s) { raw.add(LieMonomial::left_iterated(s.images()), dynkin_coefficient(s) * inv_n); });
    return lie_normalize(raw);
}

inline LiePolynomial mu_magnus_uncached(int n, Construction variant) {
    detail::require_degree(n, "mu_magnus");
    switch (variant) {
        case Construction::magnus_L: return detail::compute_magnus_L(n);
        case Construction::magnus_R: return detail::compute_magnus_R(n);
        case Construction::magnus_C: return detail::compute_magnus_C(n);
        default: throw std::invalid_argument("mu_magnus: variant must be L, R or C");
    }
}

/// Single-block part of the rewriting decomposition of X1...Xn.
inline LiePolynomial mu_lieperm(int n) {
    detail::require_degree(n, "mu_lieperm");
    LieExpr single;
    for (const auto& [ip, b] : decompose_word_rewriting(n))
        if (ip.block_count() == 1) single.add(LieMonomial::left_iterated(ip.blocks().front()), b);
    return LiePolynomial::from_canonical(std::move(single));
}

/// Memoized mu_n for a construction; the Magnus recursions call back into
/// this for their lower-degree terms, staying within the same construction.
inline const LiePolynomial& mu(int n, Construction c) {
    detail::require_degree(n, "mu");
    return detail::mu_memo().get_or_compute({n, static_cast<int>(c)}, [&]() -> LiePolynomial {
        switch (c) {
            case Construction::lieperm: return mu_lieperm(n);
            case Construction::dynkin: return mu_dynkin(n);
            default: return mu_magnus_uncached(n, c);
        }
    });
}

inline MuResult mu_result(int n, Construction c) { return {n, c, mu(n, c)}; }

inline MuResult mu_magnus(int n, Construction variant) {
    if (variant != Construction::magnus_L && variant != Construction::magnus_R && variant != Construction::magnus_C)
        throw std::invalid_argument("mu_magnus: variant must be L, R or C");
    return mu_result(n, variant);
}

/// Coefficient of t1...tn in log(exp(t1 X1)...exp(tn Xn)). Working modulo
/// t_i^2 means every word with a repeated letter can be discarded, so each
/// exponential truncates to 1 + t_i X_i.
inline NCPolynomial mu_ass_logexp_oracle(int n, int bound = 5) {
    detail::require_degree(n, "mu_ass_logexp_oracle");
    if (n > bound) throw std::invalid_argument("mu_ass_logexp_oracle: n exceeds the configured bound " + std::to_string(bound));
    auto distinct = [](const Word& w) {
        std::vector<Letter> l = w.letters;
        std::sort(l.begin(), l.end());
        return std::adjacent_find(l.begin(), l.end()) == l.end();
    };
    auto multiply = [&](const NCPolynomial& a, const NCPolynomial& b) {
        NCPolynomial out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                Word w = wa * wb;
                if (distinct(w)) out.add(w, ca * cb);
            }
        return out;
    };
    NCPolynomial z = nc_unit();
    for (int i = 1; i <= n; ++i) z = multiply(z, nc_unit() + nc_variable(i));
    const NCPolynomial z1 = z - nc_unit();
    NCPolynomial log_z;
    NCPolynomial power = z1;
    for (int k = 1; k <= n; ++k) {
        log_z.add_scaled(power, Rational(k % 2 == 1 ? 1 : -1, k));
        power = multiply(power, z1);
    }
    return degree_part(log_z, static_cast<std::size_t>(n));
}

}  // namespace dynmag
