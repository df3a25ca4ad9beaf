#pragma once

// Symmetric PBW machinery on a nilpotent Lie algebra g:
//   mu_sigma   tensors over g -> symmetric tensors, built from mu_n,
//   bch_pair   the evaluators bch_{n,m}: Sym^n g (x) Sym^m g -> g,
//   multiply   the direct product rule on Sym(g) realizing U(g),
// and the exhaustive checks that the construction is consistent.

#include <dynmag/combinatorics.hpp>
#include <dynmag/memo.hpp>
#include <dynmag/mu.hpp>
#include <dynmag/nilpotent.hpp>
#include <dynmag/parallel.hpp>
#include <dynmag/symtensor.hpp>

#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dynmag {

using Element = NilpotentAlgebra::Element;
/// Element of U(g) in the symmetric presentation: multisets of basis indices.
using EnvelopingElement = SymTensor<int>;

/// Outcome of an exhaustive check. `witness` describes the first failure.
struct VerificationReport {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::optional<std::string> witness;

    VerificationReport() = default;
    explicit VerificationReport(std::string report_name) : name(std::move(report_name)) {}

    void record(bool ok, const std::function<std::string()>& describe) {
        ++checked;
        if (ok) return;
        ++failures;
        pass = false;
        if (!witness) witness = describe();
    }

    void merge(const VerificationReport& other) {
        checked += other.checked;
        failures += other.failures;
        pass = pass && other.pass;
        if (!witness && other.witness) witness = other.witness;
    }
};

inline std::string describe_indices(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

/// Nilpotent algebra plus the caches needed to evaluate mu_n and bch_{n,m}
/// inside it. mu_n is taken from one of the mu constructions.
class PbwEngine {
public:
    explicit PbwEngine(NilpotentAlgebra algebra, Construction mu_source = Construction::dynkin)
        : algebra_(std::make_shared<const NilpotentAlgebra>(std::move(algebra))),
          mu_source_(mu_source),
          bch_cache_(std::make_shared<Memo<std::pair<std::vector<int>, std::vector<int>>, Element>>()) {}

    [[nodiscard]] const NilpotentAlgebra& algebra() const { return *algebra_; }

    /// mu_n(args) evaluated through the structure constants.
    [[nodiscard]] Element mu_eval(std::span<const Element> args) const {
        if (args.empty()) throw std::invalid_argument("mu_eval: no arguments");
        if (args.size() > static_cast<std::size_t>(algebra_->nilpotency())) return {};
        return algebra_->evaluate(mu(static_cast<int>(args.size()), mu_source_), args);
    }

    /// mu_sigma(x1 (x) ... (x) xn): sum over ordered block partitions with
    /// increasing blocks, weighted 1/s!, of mu(block_1) (x) ... (x) mu(block_s),
    /// read as a symmetric tensor. The s! orderings of one set partition give
    /// the same symmetric tensor, so each set partition is taken once.
    [[nodiscard]] EnvelopingElement mu_sigma(std::span<const Element> tensor) const {
        if (tensor.empty()) return EnvelopingElement::unit();
        std::vector<int> positions(tensor.size());
        std::iota(positions.begin(), positions.end(), 0);
        EnvelopingElement out;
        for_each_set_partition(positions, [&](const std::vector<std::vector<int>>& blocks) {
            std::vector<Element> factors;
            factors.reserve(blocks.size());
            for (const auto& b : blocks) {
                std::vector<Element> args;
                args.reserve(b.size());
                for (int p : b) args.push_back(tensor[static_cast<std::size_t>(p)]);
                Element value = mu_eval(args);
                if (value.is_zero()) return;
                factors.push_back(std::move(value));
            }
            out += sym_product<int>(std::span<const Element>(factors));
        });
        return out;
    }

    /// bch_{n,m}(a_1 . ... . a_n, b_1 . ... . b_m) =
    /// (1/(n! m!)) sum_{sigma, chi} mu_{n+m}(a_sigma, b_chi).
    [[nodiscard]] Element bch_pair(std::span<const Element> a, std::span<const Element> b) const {
        const std::size_t n = a.size();
        const std::size_t m = b.size();
        if (n + m == 0) throw std::invalid_argument("bch_pair: need at least one argument");
        if (n + m > static_cast<std::size_t>(algebra_->nilpotency())) return {};
        std::vector<std::size_t> sa(n), sb(m);
        std::iota(sa.begin(), sa.end(), 0);
        Element out;
        std::vector<Element> args(n + m);
        do {
            std::iota(sb.begin(), sb.end(), 0);
            do {
                for (std::size_t i = 0; i < n; ++i) args[i] = a[sa[i]];
                for (std::size_t j = 0; j < m; ++j) args[n + j] = b[sb[j]];
                out += mu_eval(args);
            } while (std::next_permutation(sb.begin(), sb.end()));
        } while (std::next_permutation(sa.begin(), sa.end()));
        out *= Rational(1) / (factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(m)));
        return out;
    }

    /// bch_pair on basis elements, memoized on the sorted index lists.
    [[nodiscard]] const Element& bch_basis(std::vector<int> a, std::vector<int> b) const {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return bch_cache_->get_or_compute({a, b}, [&]() {
            std::vector<Element> ea, eb;
            for (int i : a) ea.push_back(algebra_->basis_element(i));
            for (int j : b) eb.push_back(algebra_->basis_element(j));
            return bch_pair(ea, eb);
        });
    }

    /// Direct product: for monomials a_1...a_n and b_1...b_m, sum over set
    /// partitions of the n+m slots; each block contributes bch_{p,q} of its
    /// a-part and b-part and the blocks are multiplied symmetrically. Blocks
    /// larger than the nilpotency are never formed since their evaluator is 0.
    [[nodiscard]] EnvelopingElement multiply(const EnvelopingElement& x, const EnvelopingElement& y) const {
        EnvelopingElement out;
        for (const auto& [ka, ca] : x)
            for (const auto& [kb, cb] : y) out.add_scaled(multiply_monomials(ka, kb), ca * cb);
        return out;
    }

    [[nodiscard]] EnvelopingElement multiply_monomials(const std::vector<int>& a, const std::vector<int>& b) const {
        const std::size_t n = a.size();
        const std::size_t total = n + b.size();
        const std::size_t max_block = static_cast<std::size_t>(algebra_->nilpotency());
        std::vector<int> slots(total);
        std::iota(slots.begin(), slots.end(), 0);
        EnvelopingElement out;
        for_each_set_partition(
            slots,
            [&](const std::vector<std::vector<int>>& blocks) {
                std::vector<Element> factors;
                factors.reserve(blocks.size());
                for (const auto& block : blocks) {
                    std::vector<int> pa, pb;
                    for (int s : block) {
                        if (static_cast<std::size_t>(s) < n) pa.push_back(a[static_cast<std::size_t>(s)]);
                        else pb.push_back(b[static_cast<std::size_t>(s) - n]);
                    }
                    const Element& value = bch_basis(pa, pb);
                    if (value.is_zero()) return;
                    factors.push_back(value);
                }
                out += sym_product<int>(std::span<const Element>(factors));
            },
            max_block);
        return out;
    }

    /// m_sigma resolved on a monomial: (1/n!) sum over orderings of the
    /// multiset as ordered tensors.
    [[nodiscard]] std::vector<std::pair<Rational, std::vector<int>>> resolve_symmetric(std::vector<int> atoms) const {
        std::sort(atoms.begin(), atoms.end());
        std::vector<std::pair<Rational, std::vector<int>>> out;
        const Rational w = Rational(1) / factorial(static_cast<unsigned>(atoms.size()));
        std::vector<std::size_t> order(atoms.size());
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<int> t;
            for (std::size_t i : order) t.push_back(atoms[i]);
            out.emplace_back(w, std::move(t));
        } while (std::next_permutation(order.begin(), order.end()));
        return out;
    }

    [[nodiscard]] EnvelopingElement mu_sigma_indices(const std::vector<int>& tensor) const {
        std::vector<Element> e;
        for (int i : tensor) e.push_back(algebra_->basis_element(i));
        return mu_sigma(e);
    }

private:
    std::shared_ptr<const NilpotentAlgebra> algebra_;
    Construction mu_source_;
    std::shared_ptr<Memo<std::pair<std::vector<int>, std::vector<int>>, Element>> bch_cache_;
};

inline EnvelopingElement u_dir_multiply(const EnvelopingElement& x, const EnvelopingElement& y, const NilpotentAlgebra& algebra) {
    return PbwEngine(algebra).multiply(x, y);
}

/// Calls f(tuple) for every tuple of basis indices of the given length.
template <class F>
void for_each_index_tuple(std::size_t dim, std::size_t length, F&& f) {
    std::vector<int> t(length, 0);
    while (true) {
        f(static_cast<const std::vector<int>&>(t));
        std::size_t i = 0;
        while (i < length && static_cast<std::size_t>(++t[i]) == dim) t[i++] = 0;
        if (i == length) break;
    }
}

/// Every nonempty multiset of basis indices of size <= max_degree, by size.
inline std::vector<std::vector<int>> basis_monomials(std::size_t dim, std::size_t max_degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, std::size_t)> rec = [&](int from, std::size_t left) {
        if (!cur.empty()) out.push_back(cur);
        if (left == 0) return;
        for (int i = from; i < static_cast<int>(dim); ++i) {
            cur.push_back(i);
            rec(i, left - 1);
            cur.pop_back();
        }
    };
    rec(0, max_degree);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

namespace detail {

/// Splits a sweep into one chunk per leading basis index, runs the chunks in
/// parallel and merges the partial reports in chunk order.
template <class F>
VerificationReport chunked_sweep(std::string name, std::size_t chunks, F&& chunk) {
    VerificationReport report{std::move(name)};
    for (const auto& part : parallel_map(chunks, [&](std::size_t i) {
             VerificationReport r;
             chunk(i, r);
             return r;
         }))
        report.merge(part);
    return report;
}

}  // namespace detail

/// mu_sigma(... a (x) b ...) - mu_sigma(... b (x) a ...) - mu_sigma(... [a,b] ...)
/// vanishes for every tensor of basis elements of length 2..degree and every
/// adjacent position.
inline VerificationReport mu_sigma_descent_check(const PbwEngine& engine, std::size_t degree) {
    const auto& alg = engine.algebra();
    const std::size_t dim = alg.dim();
    return detail::chunked_sweep("descent", dim, [&](std::size_t first, VerificationReport& report) {
        for (std::size_t len = 2; len <= degree; ++len) {
            for_each_index_tuple(dim, len - 1, [&](const std::vector<int>& tail) {
                std::vector<int> t{static_cast<int>(first)};
                t.insert(t.end(), tail.begin(), tail.end());
                std::vector<Element> base;
                for (int i : t) base.push_back(alg.basis_element(i));
                for (std::size_t pos = 0; pos + 1 < len; ++pos) {
                    std::vector<Element> swapped(base);
                    std::swap(swapped[pos], swapped[pos + 1]);
                    std::vector<Element> merged;
                    for (std::size_t i = 0; i < len; ++i) {
                        if (i == pos) merged.push_back(alg.bracket(base[i], base[i + 1]));
                        else if (i != pos + 1) merged.push_back(base[i]);
                    }
                    EnvelopingElement diff = engine.mu_sigma(base) - engine.mu_sigma(swapped) - engine.mu_sigma(merged);
                    report.record(diff.is_zero(), [&] { return "tensor " + describe_indices(t) + " position " + std::to_string(pos); });
                }
            });
        }
    });
}

inline VerificationReport mu_sigma_descent_check(const NilpotentAlgebra& algebra, std::size_t degree) {
    return mu_sigma_descent_check(PbwEngine(algebra), degree);
}

/// mu_sigma o m_sigma = id on every basis monomial of degree 1..degree.
inline VerificationReport pbw_roundtrip(const PbwEngine& engine, std::size_t degree) {
    const auto monos = basis_monomials(engine.algebra().dim(), degree);
    return detail::chunked_sweep("roundtrip", monos.size(), [&](std::size_t i, VerificationReport& report) {
        const auto& mono = monos[i];
        EnvelopingElement back;
        for (const auto& [w, t] : engine.resolve_symmetric(mono)) back.add_scaled(engine.mu_sigma_indices(t), w);
        report.record(back == EnvelopingElement::monomial(mono), [&] { return "monomial " + describe_indices(mono); });
    });
}

inline VerificationReport pbw_roundtrip(const NilpotentAlgebra& algebra, std::size_t degree) {
    return pbw_roundtrip(PbwEngine(algebra), degree);
}

/// The direct product of degree-1 factors reproduces mu_sigma:
/// x1 . (x2 . (... . xn)) = mu_sigma(x1 (x) ... (x) xn) for all basis tuples.
inline VerificationReport product_consistency_check(const PbwEngine& engine, std::size_t degree) {
    const auto& alg = engine.algebra();
    const std::size_t dim = alg.dim();
    return detail::chunked_sweep("product-consistency", dim, [&](std::size_t first, VerificationReport& report) {
        for (std::size_t len = 1; len <= degree; ++len) {
            for_each_index_tuple(dim, len - 1, [&](const std::vector<int>& tail) {
                std::vector<int> t{static_cast<int>(first)};
                t.insert(t.end(), tail.begin(), tail.end());
                EnvelopingElement acc = EnvelopingElement::unit();
                for (std::size_t i = len; i-- > 0;) acc = engine.multiply(EnvelopingElement::monomial({t[i]}), acc);
                report.record(acc == engine.mu_sigma_indices(t), [&] { return "tensor " + describe_indices(t); });
            });
        }
    });
}

/// (x.y).z = x.(y.z) for all triples of nonunit basis monomials whose degrees
/// sum to at most max_total_degree, plus unit laws on every monomial.
inline VerificationReport associativity_check(const PbwEngine& engine, std::size_t max_total_degree) {
    const auto monos = basis_monomials(engine.algebra().dim(), max_total_degree);
    const auto unit = EnvelopingElement::unit();
    return detail::chunked_sweep("associativity", monos.size(), [&](std::size_t i, VerificationReport& report) {
        const auto& a = monos[i];
        const auto x = EnvelopingElement::monomial(a);
        report.record(engine.multiply(unit, x) == x && engine.multiply(x, unit) == x,
                      [&] { return "unit law on " + describe_indices(a); });
        for (const auto& b : monos) {
            if (a.size() + b.size() + 1 > max_total_degree) break;
            const auto ab = engine.multiply_monomials(a, b);
            for (const auto& c : monos) {
                if (a.size() + b.size() + c.size() > max_total_degree) break;
                const auto left = engine.multiply(ab, EnvelopingElement::monomial(c));
                const auto right = engine.multiply(x, engine.multiply_monomials(b, c));
                report.record(left == right, [&] {
                    return "triple " + describe_indices(a) + " " + describe_indices(b) + " " + describe_indices(c);
                });
            }
        }
    });
}

/// Jacobi identity and antisymmetry of the structure constants on all basis
/// triples.
inline VerificationReport jacobi_check(const NilpotentAlgebra& alg) {
    const std::size_t dim = alg.dim();
    return detail::chunked_sweep("jacobi", dim, [&](std::size_t i, VerificationReport& report) {
        const auto a = alg.basis_element(static_cast<int>(i));
        for (std::size_t j = 0; j < dim; ++j) {
            const auto b = alg.basis_element(static_cast<int>(j));
            report.record((alg.bracket(a, b) + alg.bracket(b, a)).is_zero(),
                          [&] { return "antisymmetry " + describe_indices({static_cast<int>(i), static_cast<int>(j)}); });
            for (std::size_t l = 0; l < dim; ++l) {
                const auto c = alg.basis_element(static_cast<int>(l));
                const auto sum = alg.bracket(a, alg.bracket(b, c)) + alg.bracket(b, alg.bracket(c, a)) + alg.bracket(c, alg.bracket(a, b));
                report.record(sum.is_zero(), [&] {
                    return "jacobi " + describe_indices({static_cast<int>(i), static_cast<int>(j), static_cast<int>(l)});
                });
            }
        }
    });
}

/// bch_{n,m} as a Lie polynomial in a_1..a_n = X1..Xn, b_1..b_m = X(n+1)..X(n+m).
inline LiePolynomial bch_pair_formal(int n, int m, Construction source = Construction::dynkin) {
    if (n + m == 0) throw std::invalid_argument("bch_pair_formal: need at least one argument");
    const LiePolynomial& base = mu(n + m, source);
    std::vector<Letter> sa(static_cast<std::size_t>(n)), sb(static_cast<std::size_t>(m));
    std::iota(sa.begin(), sa.end(), 1);
    LiePolynomial out;
    do {
        std::iota(sb.begin(), sb.end(), n + 1);
        do {
            std::vector<Letter> images(sa);
            images.insert(images.end(), sb.begin(), sb.end());
            out += relabel(base, images);
        } while (std::next_permutation(sb.begin(), sb.end()));
    } while (std::next_permutation(sa.begin(), sa.end()));
    out *= Rational(1) / (factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(m)));
    return out;
}

/// BCH_n(X,Y) = sum_r 1/(r!(n-r)!) mu_n(X,...,X,Y,...,Y) with X = X1, Y = X2,
/// for n = 1..order.
inline std::vector<LiePolynomial> bch_series(int order, Construction source = Construction::dynkin) {
    if (order < 1) throw std::invalid_argument("bch_series: order must be >= 1");
    std::vector<LiePolynomial> out;
    for (int n = 1; n <= order; ++n) {
        LiePolynomial term;
        for (int r = 0; r <= n; ++r) {
            std::vector<Letter> images(static_cast<std::size_t>(n), 2);
            std::fill(images.begin(), images.begin() + r, 1);
            term.add_scaled(relabel(mu(n, source), images),
                            Rational(1) / (factorial(static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(n - r))));
        }
        out.push_back(std::move(term));
    }
    return out;
}

/// log(exp(X1) exp(X2)) as a noncommutative series truncated at `order`.
inline NCPolynomial log_exp_xy(int order) {
    const auto deg = static_cast<std::size_t>(order);
    auto exp_of = [&](Letter x) {
        NCPolynomial e = nc_unit();
        NCPolynomial power = nc_unit();
        for (int j = 1; j <= order; ++j) {
            power = nc_multiply(power, nc_variable(x), deg);
            e.add_scaled(power, Rational(1) / factorial(static_cast<unsigned>(j)));
        }
        return e;
    };
    const NCPolynomial z1 = nc_multiply(exp_of(1), exp_of(2), deg) - nc_unit();
    NCPolynomial out;
    NCPolynomial power = z1;
    for (int k = 1; k <= order; ++k) {
        out.add_scaled(power, Rational(k % 2 == 1 ? 1 : -1, k));
        power = nc_multiply(power, z1, deg);
    }
    return out;
}

struct DenominatorAudit {
    bool pass = true;
    std::size_t coefficients = 0;
    /// Every denominator divides (degree)! exactly, not only a power of it.
    bool divides_factorial = true;
    std::optional<std::string> witness;
    std::optional<std::string> factorial_witness;
};

/// Checks that every coefficient of mu_n (n <= k) and of bch_{n,m}
/// (1 <= n+m <= k) has only prime factors <= its degree in the denominator.
inline DenominatorAudit denominator_audit(int k, Construction source = Construction::dynkin) {
    if (k < 1) throw std::invalid_argument("denominator_audit: k must be >= 1");
    DenominatorAudit audit;
    auto inspect = [&](const LiePolynomial& p, int degree, const std::string& what) {
        const mpz_class fact = factorial_z(static_cast<unsigned>(degree));
        for (const auto& [m, c] : p) {
            ++audit.coefficients;
            const mpz_class den = c.denominator();
            if (largest_prime_factor(den) > static_cast<unsigned long>(degree) || largest_prime_factor(den) == 0) {
                audit.pass = false;
                if (!audit.witness) audit.witness = what + " coefficient " + c.to_string();
            }
            if (mpz_divisible_p(fact.get_mpz_t(), den.get_mpz_t()) == 0) {
                audit.divides_factorial = false;
                if (!audit.factorial_witness) audit.factorial_witness = what + " coefficient " + c.to_string();
            }
        }
    };
    for (int n = 1; n <= k; ++n) inspect(mu(n, source), n, "mu_" + std::to_string(n));
    for (int total = 1; total <= k; ++total)
        for (int n = 0; n <= total; ++n)
            inspect(bch_pair_formal(n, total - n, source), total,
                    "bch_{" + std::to_string(n) + "," + std::to_string(total - n) + "}");
    return audit;
}

}  // namespace dynmag
