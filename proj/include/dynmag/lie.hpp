#pragma once

// Free Lie algebra over Q: bracket monomials, their commutator evaluation, and
// the normal form used by every LiePolynomial.
//
// Canonical basis, chosen per multidegree component:
//   * multilinear components (every letter at most once) use left-iterated
//     monomials [X_a1,[X_a2,...,[X_a(n-1),X_max]...]] ending in the largest
//     letter of the component;
//   * all other components use the standard bracketing of Lyndon words.

#include <dynmag/combination.hpp>
#include <dynmag/lyndon.hpp>
#include <dynmag/memo.hpp>
#include <dynmag/ncpoly.hpp>

#include <algorithm>
#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

namespace dynmag {

/// Binary bracket tree with variable leaves, stored in prefix order: 0 marks a
/// bracket node, a positive entry is a leaf X_i.
class LieMonomial {
public:
    LieMonomial() : code_{1} {}

    static LieMonomial leaf(Letter x) {
        if (x < 1) throw std::invalid_argument("LieMonomial: variable indices start at 1");
        LieMonomial m;
        m.code_ = {x};
        return m;
    }
    static LieMonomial bracket(const LieMonomial& a, const LieMonomial& b) {
        LieMonomial m;
        m.code_.clear();
        m.code_.reserve(1 + a.code_.size() + b.code_.size());
        m.code_.push_back(0);
        m.code_.insert(m.code_.end(), a.code_.begin(), a.code_.end());
        m.code_.insert(m.code_.end(), b.code_.begin(), b.code_.end());
        return m;
    }
    /// [X_s1,[X_s2,...,[X_s(n-1),X_sn]...]]; requires a nonempty sequence.
    static LieMonomial left_iterated(std::span<const Letter> seq) {
        if (seq.empty()) throw std::invalid_argument("LieMonomial: empty bracket sequence");
        LieMonomial m;
        m.code_.clear();
        m.code_.reserve(2 * seq.size() - 1);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            m.code_.push_back(0);
            m.code_.push_back(seq[i]);
        }
        m.code_.push_back(seq.back());
        return m;
    }
    /// Rebuilds a monomial from a prefix code; throws if malformed.
    static LieMonomial from_code(std::vector<int> code) {
        long need = 1;
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (need == 0) throw std::invalid_argument("LieMonomial: trailing code");
            if (code[i] < 0) throw std::invalid_argument("LieMonomial: negative code");
            need += code[i] == 0 ? 1 : -1;
        }
        if (need != 0 || code.empty()) throw std::invalid_argument("LieMonomial: incomplete tree");
        LieMonomial m;
        m.code_ = std::move(code);
        return m;
    }

    [[nodiscard]] bool is_leaf() const { return code_.size() == 1; }
    [[nodiscard]] Letter letter() const { return code_.front(); }
    [[nodiscard]] const std::vector<int>& code() const { return code_; }

    [[nodiscard]] LieMonomial left() const { return sub(1, left_end()); }
    [[nodiscard]] LieMonomial right() const { return sub(left_end(), code_.size()); }

    [[nodiscard]] std::size_t degree() const { return (code_.size() + 1) / 2; }

    [[nodiscard]] std::vector<Letter> foliage() const {
        std::vector<Letter> out;
        out.reserve(degree());
        for (int c : code_)
            if (c != 0) out.push_back(c);
        return out;
    }
    [[nodiscard]] Letter max_letter() const { return *std::max_element(code_.begin(), code_.end()); }
    [[nodiscard]] bool contains(Letter x) const { return std::find(code_.begin(), code_.end(), x) != code_.end(); }

    [[nodiscard]] bool is_multilinear() const {
        auto f = foliage();
        std::sort(f.begin(), f.end());
        return std::adjacent_find(f.begin(), f.end()) == f.end();
    }

    /// True for [X_a1,...,X_an]_L shapes (right combs), including leaves.
    [[nodiscard]] bool is_left_iterated() const {
        for (std::size_t i = 0; i + 1 < code_.size(); i += 2)
            if (code_[i] != 0 || code_[i + 1] == 0) return false;
        return code_.back() != 0;
    }

    /// Leaf X_i becomes X_{images[i-1]}.
    [[nodiscard]] LieMonomial relabeled(std::span<const Letter> images) const {
        LieMonomial m = *this;
        for (int& c : m.code_)
            if (c != 0) c = images[static_cast<std::size_t>(c - 1)];
        return m;
    }

    friend bool operator==(const LieMonomial&, const LieMonomial&) = default;
    /// Degree first, then the leaf sequence lexicographically, then the shape.
    friend std::strong_ordering operator<=>(const LieMonomial& a, const LieMonomial& b) {
        if (auto c = a.code_.size() <=> b.code_.size(); c != 0) return c;
        auto ia = a.code_.begin();
        auto ib = b.code_.begin();
        while (true) {
            while (ia != a.code_.end() && *ia == 0) ++ia;
            while (ib != b.code_.end() && *ib == 0) ++ib;
            if (ia == a.code_.end() || ib == b.code_.end()) break;
            if (auto c = *ia <=> *ib; c != 0) return c;
            ++ia;
            ++ib;
        }
        return a.code_ <=> b.code_;
    }

private:
    std::size_t left_end() const {
        long need = 1;
        std::size_t i = 1;
        while (need > 0) {
            need += code_[i] == 0 ? 1 : -1;
            ++i;
        }
        return i;
    }
    LieMonomial sub(std::size_t from, std::size_t to) const {
        LieMonomial m;
        m.code_.assign(code_.begin() + static_cast<std::ptrdiff_t>(from), code_.begin() + static_cast<std::ptrdiff_t>(to));
        return m;
    }

    std::vector<int> code_;
};

/// Arbitrary rational combination of bracket trees (not normalized).
using LieExpr = Combination<LieMonomial>;

/// Standard bracketing of a Lyndon word.
inline LieMonomial standard_bracketing(const LyndonWord& w) {
    if (w.size() == 1) return LieMonomial::leaf(w.front());
    auto [u, v] = standard_factorization(w);
    return LieMonomial::bracket(standard_bracketing(u), standard_bracketing(v));
}

/// Membership in the canonical basis described at the top of this header.
inline bool is_canonical(const LieMonomial& m) {
    if (m.is_multilinear()) return m.is_left_iterated() && m.code().back() == m.max_letter();
    auto f = m.foliage();
    return is_lyndon(f) && standard_bracketing(f) == m;
}

namespace detail {

inline Memo<LieMonomial, NCPolynomial>& evaluate_memo() {
    static Memo<LieMonomial, NCPolynomial> memo;
    return memo;
}
inline Memo<LieMonomial, LieExpr>& pivot_memo() {
    static Memo<LieMonomial, LieExpr> memo;
    return memo;
}
inline Memo<LieMonomial, LyndonCombination>& lyndon_memo() {
    static Memo<LieMonomial, LyndonCombination> memo;
    return memo;
}

}  // namespace detail

/// [a,b] -> ab - ba, recursively.
inline const NCPolynomial& commutator_evaluate(const LieMonomial& m) {
    return detail::evaluate_memo().get_or_compute(m, [&]() -> NCPolynomial {
        if (m.is_leaf()) return nc_variable(m.letter());
        return nc_commutator(commutator_evaluate(m.left()), commutator_evaluate(m.right()));
    });
}

inline NCPolynomial commutator_evaluate(const LieExpr& e) {
    NCPolynomial out;
    for (const auto& [m, c] : e) out.add_scaled(commutator_evaluate(m), c);
    return out;
}

/// Multilinear tree in the left-iterated basis ending in its largest letter.
/// For [A,B] with the largest letter in B, B is normalized to terms
/// ad_w(X_max) and ad_A is expanded through the commutator evaluation of A,
/// which is a Lie homomorphism into derivations.
inline const LieExpr& normalize_multilinear(const LieMonomial& m) {
    return detail::pivot_memo().get_or_compute(m, [&]() -> LieExpr {
        if (m.is_leaf()) return LieExpr::single(m);
        const Letter top = m.max_letter();
        LieMonomial a = m.left();
        LieMonomial b = m.right();
        if (a.contains(top)) return -normalize_multilinear(LieMonomial::bracket(b, a));
        LieExpr out;
        std::vector<Letter> seq;
        for (const auto& [u, cu] : commutator_evaluate(a)) {
            for (const auto& [w, cw] : normalize_multilinear(b)) {
                seq = u.letters;
                auto tail = w.foliage();
                seq.insert(seq.end(), tail.begin(), tail.end());
                out.add(LieMonomial::left_iterated(seq), cu * cw);
            }
        }
        return out;
    });
}

/// Coordinates of a tree in the Lyndon basis.
inline const LyndonCombination& normalize_lyndon(const LieMonomial& m) {
    return detail::lyndon_memo().get_or_compute(m, [&]() -> LyndonCombination {
        if (m.is_leaf()) return LyndonCombination::single(LyndonWord{m.letter()});
        return bracket_lyndon(normalize_lyndon(m.left()), normalize_lyndon(m.right()));
    });
}

/// Element of the free Lie algebra, stored in the canonical basis.
class LiePolynomial {
public:
    using const_iterator = LieExpr::const_iterator;

    LiePolynomial() = default;

    static LiePolynomial generator(Letter x) {
        LiePolynomial p;
        p.terms_.add(LieMonomial::leaf(x), Rational(1));
        return p;
    }
    /// Wraps terms already known to be canonical; throws otherwise.
    static LiePolynomial from_canonical(LieExpr terms) {
        for (const auto& [m, c] : terms)
            if (!is_canonical(m)) throw std::invalid_argument("LiePolynomial: non-canonical monomial");
        LiePolynomial p;
        p.terms_ = std::move(terms);
        return p;
    }

    [[nodiscard]] const LieExpr& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
    [[nodiscard]] const_iterator end() const { return terms_.end(); }
    [[nodiscard]] Rational coeff(const LieMonomial& m) const { return terms_.coeff(m); }

    LiePolynomial& operator+=(const LiePolynomial& o) { terms_ += o.terms_; return *this; }
    LiePolynomial& operator-=(const LiePolynomial& o) { terms_ -= o.terms_; return *this; }
    LiePolynomial& operator*=(const Rational& s) { terms_ *= s; return *this; }
    void add_scaled(const LiePolynomial& o, const Rational& s) { terms_.add_scaled(o.terms_, s); }

    friend LiePolynomial operator+(LiePolynomial a, const LiePolynomial& b) { return a += b; }
    friend LiePolynomial operator-(LiePolynomial a, const LiePolynomial& b) { return a -= b; }
    friend LiePolynomial operator-(LiePolynomial a) { return a *= Rational(-1); }
    friend LiePolynomial operator*(const Rational& s, LiePolynomial a) { return a *= s; }
    friend LiePolynomial operator*(LiePolynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const LiePolynomial&, const LiePolynomial&) = default;

private:
    friend LiePolynomial lie_normalize(const LieExpr& raw);
    LieExpr terms_;
};

/// Rewrites an arbitrary bracket expression into the canonical basis.
inline LiePolynomial lie_normalize(const LieExpr& raw) {
    LiePolynomial out;
    for (const auto& [m, c] : raw) {
        if (m.is_multilinear()) {
            out.terms_.add_scaled(normalize_multilinear(m), c);
        } else {
            for (const auto& [w, cw] : normalize_lyndon(m)) out.terms_.add(standard_bracketing(w), c * cw);
        }
    }
    return out;
}

inline LiePolynomial lie_normalize(const LieMonomial& m) { return lie_normalize(LieExpr::single(m)); }

inline NCPolynomial commutator_evaluate(const LiePolynomial& p) { return commutator_evaluate(p.terms()); }

/// Bracket of two Lie polynomials, normalized.
inline LiePolynomial lie_bracket(const LiePolynomial& a, const LiePolynomial& b) {
    LieExpr raw;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) raw.add(LieMonomial::bracket(ma, mb), ca * cb);
    return lie_normalize(raw);
}

/// [p1, p2, ..., pk]_L = [p1,[p2,...,[p(k-1),pk]...]].
inline LiePolynomial lie_left_iterated(std::span<const LiePolynomial> parts) {
    if (parts.empty()) throw std::invalid_argument("lie_left_iterated: no arguments");
    LiePolynomial acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = lie_bracket(parts[i], acc);
    return acc;
}

/// Replaces X_i by images[i-1] and renormalizes.
inline LiePolynomial substitute(const LiePolynomial& p, std::span<const LiePolynomial> images) {
    auto eval = [&](auto&& self, const LieMonomial& m) -> LiePolynomial {
        if (m.is_leaf()) return images[static_cast<std::size_t>(m.letter() - 1)];
        return lie_bracket(self(self, m.left()), self(self, m.right()));
    };
    LiePolynomial out;
    for (const auto& [m, c] : p) out.add_scaled(eval(eval, m), c);
    return out;
}

/// Renames variables X_i -> X_{images[i-1]} and renormalizes. Cheap when the
/// renaming is increasing on the letters that occur, since the canonical basis
/// is then preserved.
inline LiePolynomial relabel(const LiePolynomial& p, std::span<const Letter> images) {
    LieExpr raw;
    for (const auto& [m, c] : p) raw.add(m.relabeled(images), c);
    bool canonical = true;
    for (const auto& [m, c] : raw)
        if (!is_canonical(m)) {
            canonical = false;
            break;
        }
    if (canonical) return LiePolynomial::from_canonical(std::move(raw));
    return lie_normalize(raw);
}

/// Multidegree-homogeneous components are not tracked separately; this
/// returns the terms of the given total degree.
inline LiePolynomial degree_part(const LiePolynomial& p, std::size_t degree) {
    LieExpr out;
    for (const auto& [m, c] : p)
        if (m.degree() == degree) out.add(m, c);
    return LiePolynomial::from_canonical(std::move(out));
}

}  // namespace dynmag
