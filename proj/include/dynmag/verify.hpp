#pragma once

// Named verification suites over the engines. Every suite is exhaustive at
// its bounds except the co-shuffle sweep, which is seeded.

#include <dynmag/coshuffle.hpp>
#include <dynmag/decomposition.hpp>
#include <dynmag/mu.hpp>
#include <dynmag/pbw.hpp>
#include <dynmag/series.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace dynmag {

struct VerifyConfig {
    int max_n = 6;
    int oracle_max = 5;
    int d = 2;
    int k = 3;
    int degree = 3;
    int assoc_degree = 3;
    int denominators_k = 5;
    int lieperm_count_max = 8;
    int decompose_max = 5;
    int coeff_degree = 10;
    int bch_order = 5;
    int max_p = 4;
    int max_s = 3;
    int cases = 200;
    std::uint64_t seed = 1;
    Construction construction = Construction::dynkin;
};

struct SuiteResult {
    std::string suite;
    std::vector<VerificationReport> reports;
    [[nodiscard]] bool pass() const {
        return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    }
};

inline constexpr std::string_view suite_names[] = {"mu-identities", "cross-construction", "oracle", "coshuffle",
                                                   "pbw",           "associativity",      "denominators"};

namespace checks {

/// mu_n(.., X_{k-1}, X_k, ..) - mu_n(.., X_k, X_{k-1}, ..) = mu_{n-1}(.., [X_{k-1},X_k], ..).
inline VerificationReport substitution_identity(int max_n, Construction c) {
    VerificationReport r{"substitution-identity"};
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 2; k <= n; ++k) {
            std::vector<Letter> swap = detail::iota_range(1, n);
            std::swap(swap[static_cast<std::size_t>(k - 2)], swap[static_cast<std::size_t>(k - 1)]);
            const LiePolynomial lhs = mu(n, c) - relabel(mu(n, c), swap);
            std::vector<LiePolynomial> images;
            for (int i = 1; i <= n; ++i) {
                if (i == k - 1) images.push_back(lie_bracket(LiePolynomial::generator(k - 1), LiePolynomial::generator(k)));
                else if (i != k) images.push_back(LiePolynomial::generator(i));
            }
            const LiePolynomial rhs = substitute(mu(n - 1, c), images);
            r.record(lhs == rhs, [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
        }
    }
    return r;
}

/// sum over all slot permutations of mu_n vanishes for n >= 2.
inline VerificationReport symmetrized_vanishing(int max_n, Construction c) {
    VerificationReport r{"symmetrized-vanishing"};
    for (int n = 2; n <= max_n; ++n) {
        LiePolynomial sum;
        for_each_permutation(n, [&](const Permutation& s) { sum += relabel(mu(n, c), s.images()); });
        r.record(sum.is_zero(), [&] { return "n=" + std::to_string(n); });
    }
    return r;
}

/// Every pivot form and the averaged form give the same polynomial.
inline VerificationReport pivot_independence(int max_n) {
    VerificationReport r{"pivot-independence"};
    for (int n = 1; n <= max_n; ++n) {
        const LiePolynomial averaged = mu_dynkin_averaged(n);
        for (int k = 1; k <= n; ++k)
            r.record(mu_dynkin(n, k) == averaged, [&] { return "n=" + std::to_string(n) + " pivot=" + std::to_string(k); });
    }
    return r;
}

/// sum_{j<=s} beta_j/(s+1-j)! = [s=0], beta-tilde_r = (-1)^r beta_r, and the
/// two alpha generating functions agree.
inline VerificationReport coefficient_identities(int through) {
    VerificationReport r{"coefficient-identities"};
    const auto t = static_cast<std::size_t>(through);
    const auto beta = beta_coefficients(t);
    const auto beta_tilde = beta_tilde_coefficients(t);
    for (std::size_t s = 0; s <= t; ++s) {
        Rational sum;
        for (std::size_t j = 0; j <= s; ++j) sum += beta[j] / factorial(static_cast<unsigned>(s + 1 - j));
        r.record(sum == Rational(s == 0 ? 1 : 0), [&] { return "beta recursion s=" + std::to_string(s); });
        r.record(beta_tilde[s] == (s % 2 == 0 ? beta[s] : -beta[s]), [&] { return "beta-tilde r=" + std::to_string(s); });
    }
    r.record(alpha_series(t) == alpha_series_second_form(t), [&] { return "alpha forms through " + std::to_string(t); });
    return r;
}

inline VerificationReport cross_construction(int max_n) {
    VerificationReport r{"cross-construction"};
    for (int n = 1; n <= max_n; ++n) {
        const LiePolynomial& ref = mu(n, Construction::dynkin);
        for (Construction c : all_constructions)
            r.record(mu(n, c) == ref, [&] { return std::string(construction_name(c)) + " n=" + std::to_string(n); });
    }
    return r;
}

inline VerificationReport lieperm_count(int max_n) {
    VerificationReport r{"lieperm-count"};
    for (int n = 1; n <= max_n; ++n) {
        const auto perms = enumerate_lie_permutations(n);
        bool bijective = true;
        std::vector<Permutation> images;
        for (const auto& ip : perms) images.push_back(ip.to_permutation());
        std::sort(images.begin(), images.end());
        bijective = std::adjacent_find(images.begin(), images.end()) == images.end();
        r.record(Rational(static_cast<long>(perms.size())) == factorial(static_cast<unsigned>(n)) && bijective,
                 [&] { return "n=" + std::to_string(n) + " count=" + std::to_string(perms.size()); });
    }
    return r;
}

/// X1...Xn has a unique expansion over the Lie-permutation products, and the
/// rewriting and the linear solve produce it identically.
inline VerificationReport lieperm_decomposition(int max_n) {
    VerificationReport r{"lieperm-decomposition"};
    for (int n = 1; n <= max_n; ++n) {
        const auto linear = decompose_word_linear(n);
        const auto rewritten = decompose_word_rewriting(n);
        NCPolynomial rebuilt;
        for (const auto& [ip, c] : rewritten) rebuilt.add_scaled(evaluate_lie_permutation(ip), c);
        r.record(linear.unique() && linear.coefficients == rewritten && rebuilt == NCPolynomial::single(Word(detail::iota_range(1, n))),
                 [&] { return "n=" + std::to_string(n); });
    }
    return r;
}

/// mu_ass_dynkin(n) = log-exp coefficient = commutator evaluation of mu_n.
inline VerificationReport associative_oracle(int max_n, Construction c) {
    VerificationReport r{"associative-oracle"};
    for (int n = 1; n <= max_n; ++n) {
        const NCPolynomial ass = mu_ass_dynkin(n);
        r.record(ass == mu_ass_logexp_oracle(n, max_n) && ass == commutator_evaluate(mu(n, c)),
                 [&] { return "n=" + std::to_string(n); });
    }
    return r;
}

inline VerificationReport bch_consistency(int order, Construction c) {
    VerificationReport r{"bch-consistency"};
    const auto series = bch_series(order, c);
    const NCPolynomial log_exp = log_exp_xy(order);
    for (int n = 1; n <= order; ++n)
        r.record(commutator_evaluate(series[static_cast<std::size_t>(n - 1)]) == degree_part(log_exp, static_cast<std::size_t>(n)),
                 [&] { return "degree " + std::to_string(n); });
    return r;
}

/// Random bracket monomial with `degree` leaves drawn from X1..X_letters.
inline LieMonomial random_monomial(std::mt19937_64& rng, int degree, int letters) {
    if (degree == 1) return LieMonomial::leaf(std::uniform_int_distribution<int>(1, letters)(rng));
    const int left = std::uniform_int_distribution<int>(1, degree - 1)(rng);
    return LieMonomial::bracket(random_monomial(rng, left, letters), random_monomial(rng, degree - left, letters));
}

/// F_p(sym(C_1,...,C_s)) = p^s sym(C_1,...,C_s) for random commutator
/// monomials C_i of degree <= 3.
inline VerificationReport coshuffle_eigenvalues(int cases, int max_p, int max_s, std::uint64_t seed) {
    VerificationReport r{"coshuffle-eigenvalues"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const int p = std::uniform_int_distribution<int>(1, max_p)(rng);
        const int s = std::uniform_int_distribution<int>(1, max_s)(rng);
        std::vector<NCPolynomial> factors;
        std::string shape;
        while (static_cast<int>(factors.size()) < s) {
            const LieMonomial m = random_monomial(rng, std::uniform_int_distribution<int>(1, 3)(rng), 4);
            NCPolynomial c = commutator_evaluate(m);
            if (c.is_zero()) continue;
            shape += (shape.empty() ? "" : " ") + std::to_string(m.degree());
            factors.push_back(std::move(c));
        }
        const NCPolynomial sym = symmetrized_product(factors);
        Rational scale(1);
        for (int j = 0; j < s; ++j) scale *= Rational(p);
        r.record(coshuffle(sym, p) == scale * sym,
                 [&] { return "case " + std::to_string(i) + " p=" + std::to_string(p) + " degrees " + shape; });
    }
    return r;
}

/// The first-order co-shuffle projection of X1...Xn is mu_ass_n.
inline VerificationReport coshuffle_projection_check(int max_n) {
    VerificationReport r{"coshuffle-projection"};
    for (int n = 1; n <= max_n; ++n)
        r.record(coshuffle_projection(Word(detail::iota_range(1, n)), n) == mu_ass_dynkin(n),
                 [&] { return "n=p=" + std::to_string(n); });
    return r;
}

inline VerificationReport denominators(int k, Construction c) {
    VerificationReport r{"denominators"};
    const auto audit = denominator_audit(k, c);
    r.checked = audit.coefficients;
    r.pass = audit.pass;
    r.failures = audit.pass ? 0 : 1;
    r.witness = audit.witness;
    return r;
}

}  // namespace checks

inline std::vector<VerificationReport> pbw_suite(int d, int k, int degree, Construction c = Construction::dynkin) {
    PbwEngine engine(NilpotentAlgebra::free_nilpotent(d, k), c);
    const auto deg = static_cast<std::size_t>(degree);
    const std::string tag = " (d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")";
    std::vector<VerificationReport> out{jacobi_check(engine.algebra()), mu_sigma_descent_check(engine, deg),
                                        pbw_roundtrip(engine, deg), product_consistency_check(engine, deg)};
    for (auto& r : out) r.name += tag;
    return out;
}

inline VerificationReport associativity_suite(int d, int k, int degree, Construction c = Construction::dynkin) {
    PbwEngine engine(NilpotentAlgebra::free_nilpotent(d, k), c);
    auto r = associativity_check(engine, static_cast<std::size_t>(degree));
    r.name += " (d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")";
    return r;
}

/// Runs one named suite; std::nullopt for an unknown name.
inline std::optional<SuiteResult> run_suite(std::string_view name, const VerifyConfig& cfg) {
    SuiteResult out{std::string(name), {}};
    auto& r = out.reports;
    const Construction c = cfg.construction;
    if (name == "mu-identities") {
        r.push_back(checks::substitution_identity(cfg.max_n, c));
        r.push_back(checks::symmetrized_vanishing(cfg.max_n, c));
        r.push_back(checks::pivot_independence(cfg.max_n));
        r.push_back(checks::coefficient_identities(cfg.coeff_degree));
    } else if (name == "cross-construction") {
        r.push_back(checks::cross_construction(cfg.max_n));
        r.push_back(checks::lieperm_count(cfg.lieperm_count_max));
        r.push_back(checks::lieperm_decomposition(std::min(cfg.max_n, cfg.decompose_max)));
    } else if (name == "oracle") {
        r.push_back(checks::associative_oracle(std::min(cfg.max_n, cfg.oracle_max), c));
        r.push_back(checks::bch_consistency(cfg.bch_order, c));
    } else if (name == "coshuffle") {
        r.push_back(checks::coshuffle_eigenvalues(cfg.cases, cfg.max_p, cfg.max_s, cfg.seed));
        r.push_back(checks::coshuffle_projection_check(std::min(cfg.max_n, cfg.oracle_max)));
    } else if (name == "pbw") {
        r = pbw_suite(cfg.d, cfg.k, cfg.degree, c);
    } else if (name == "associativity") {
        r.push_back(associativity_suite(cfg.d, cfg.k, cfg.assoc_degree, c));
    } else if (name == "denominators") {
        r.push_back(checks::denominators(cfg.denominators_k, c));
    } else {
        return std::nullopt;
    }
    return out;
}

inline std::vector<SuiteResult> run_all_suites(const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    for (auto name : suite_names) out.push_back(*run_suite(name, cfg));
    return out;
}

}  // namespace dynmag
