#pragma once

// Lyndon words, their standard factorization, and the bracket rewriting that
// keeps Lie elements in the Lyndon basis.

#include <dynmag/combination.hpp>
#include <dynmag/memo.hpp>
#include <dynmag/ncpoly.hpp>

#include <cassert>
#include <utility>
#include <vector>

namespace dynmag {

/// Letters compared lexicographically with a proper prefix smaller than the
/// word, which is the order std::vector already uses.
using LyndonWord = std::vector<Letter>;
using LyndonCombination = Combination<LyndonWord>;

inline bool is_lyndon(const LyndonWord& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        LyndonWord suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (!(w < suffix)) return false;
    }
    return true;
}

/// w = uv with v the longest proper Lyndon suffix. Requires |w| >= 2.
inline std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w) {
    assert(w.size() >= 2);
    for (std::size_t i = 1; i < w.size(); ++i) {
        LyndonWord v(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (is_lyndon(v)) return {LyndonWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), v};
    }
    assert(false && "single letter has no standard factorization");
    return {};
}

/// All Lyndon words over {1..alphabet} of length 1..max_length, in
/// lexicographic order (Duval's generation).
inline std::vector<LyndonWord> lyndon_words(int alphabet, std::size_t max_length) {
    std::vector<LyndonWord> out;
    if (alphabet < 1 || max_length == 0) return out;
    LyndonWord w{1};
    while (!w.empty()) {
        out.push_back(w);
        LyndonWord next;
        next.reserve(max_length);
        while (next.size() < max_length) next.push_back(w[next.size() % w.size()]);
        while (!next.empty() && next.back() == alphabet) next.pop_back();
        if (!next.empty()) ++next.back();
        w = std::move(next);
    }
    return out;
}

namespace detail {

inline Memo<std::pair<LyndonWord, LyndonWord>, LyndonCombination>& lyndon_pair_memo() {
    static Memo<std::pair<LyndonWord, LyndonWord>, LyndonCombination> memo;
    return memo;
}

}  // namespace detail

/// [b(u), b(v)] in the Lyndon basis, for Lyndon words u and v. Uses
/// antisymmetry when u > v and the Jacobi identity
/// [[x,y],z] = [x,[y,z]] + [[x,z],y] when (u, v) is not a standard pair.
inline const LyndonCombination& bracket_lyndon(const LyndonWord& u, const LyndonWord& v) {
    return detail::lyndon_pair_memo().get_or_compute({u, v}, [&]() -> LyndonCombination {
        if (u == v) return {};
        if (v < u) return -bracket_lyndon(v, u);
        if (u.size() == 1) {
            LyndonWord uv(u);
            uv.insert(uv.end(), v.begin(), v.end());
            return LyndonCombination::single(std::move(uv));
        }
        auto [u1, u2] = standard_factorization(u);
        if (!(u2 < v)) {
            LyndonWord uv(u);
            uv.insert(uv.end(), v.begin(), v.end());
            return LyndonCombination::single(std::move(uv));
        }
        LyndonCombination out;
        for (const auto& [w, c] : bracket_lyndon(u2, v)) out.add_scaled(bracket_lyndon(u1, w), c);
        for (const auto& [w, c] : bracket_lyndon(u1, v)) out.add_scaled(bracket_lyndon(w, u2), c);
        return out;
    });
}

inline LyndonCombination bracket_lyndon(const LyndonCombination& a, const LyndonCombination& b) {
    LyndonCombination out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) out.add_scaled(bracket_lyndon(u, v), cu * cv);
    return out;
}

}  // namespace dynmag
