#pragma once

// Truncated formal power series over Q and the coefficient tables of the
// Magnus-type recursions:
//   beta(x)      = x / (e^x - 1)
//   beta_tilde   = beta(-x)
//   alpha(x, y)  = (beta(-x-y) - beta(-y)) / x * beta(x)
//                = -(beta(x+y) - beta(x)) / y * beta(-y)

#include <dynmag/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dynmag {

/// Dense univariate series a_0 + a_1 x + ... + a_T x^T.
class Series1 {
public:
    explicit Series1(std::size_t through) : c_(through + 1) {}
    Series1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}  // NOLINT

    [[nodiscard]] std::size_t through() const { return c_.size() - 1; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }

    friend Series1 operator*(const Series1& a, const Series1& b) {
        const std::size_t t = std::min(a.through(), b.through());
        Series1 out(t);
        for (std::size_t i = 0; i <= t; ++i)
            for (std::size_t j = 0; i + j <= t; ++j) out[i + j] += a[i] * b[j];
        return out;
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    [[nodiscard]] Series1 inverse() const {
        if (c_[0].is_zero()) throw std::domain_error("Series1::inverse: zero constant term");
        Series1 out(through());
        out[0] = Rational(1) / c_[0];
        for (std::size_t s = 1; s <= through(); ++s) {
            Rational acc;
            for (std::size_t j = 1; j <= s; ++j) acc += c_[j] * out[s - j];
            out[s] = -acc / c_[0];
        }
        return out;
    }

    /// f(-x)
    [[nodiscard]] Series1 reflected() const {
        Series1 out(*this);
        for (std::size_t i = 1; i < c_.size(); i += 2) out[i] = -out[i];
        return out;
    }

private:
    std::vector<Rational> c_;
};

/// Dense bivariate series sum a_{s,r} x^s y^r truncated at total degree T.
class Series2 {
public:
    explicit Series2(std::size_t through) : t_(through), c_(through + 1, std::vector<Rational>(through + 1)) {}

    [[nodiscard]] std::size_t through() const { return t_; }
    Rational& at(std::size_t s, std::size_t r) { return c_[s][r]; }
    [[nodiscard]] const Rational& at(std::size_t s, std::size_t r) const { return c_[s][r]; }

    friend Series2 operator-(const Series2& a, const Series2& b) {
        Series2 out(std::min(a.t_, b.t_));
        for (std::size_t s = 0; s <= out.t_; ++s)
            for (std::size_t r = 0; s + r <= out.t_; ++r) out.at(s, r) = a.at(s, r) - b.at(s, r);
        return out;
    }
    friend Series2 operator*(const Series2& a, const Series2& b) {
        Series2 out(std::min(a.t_, b.t_));
        const std::size_t t = out.t_;
        for (std::size_t s1 = 0; s1 <= t; ++s1)
            for (std::size_t r1 = 0; s1 + r1 <= t; ++r1) {
                if (a.at(s1, r1).is_zero()) continue;
                for (std::size_t s2 = 0; s1 + r1 + s2 <= t; ++s2)
                    for (std::size_t r2 = 0; s1 + r1 + s2 + r2 <= t; ++r2) out.at(s1 + s2, r1 + r2) += a.at(s1, r1) * b.at(s2, r2);
            }
        return out;
    }
    Series2& operator*=(const Rational& k) {
        for (auto& row : c_)
            for (auto& v : row) v *= k;
        return *this;
    }

    /// f(a x + b y) for a univariate f, a and b in {-1, 0, 1}.
    static Series2 compose_linear(const Series1& f, int a, int b, std::size_t through) {
        Series2 out(through);
        for (std::size_t j = 0; j <= std::min(through, f.through()); ++j) {
            if (f[j].is_zero()) continue;
            // (a x + b y)^j = sum_i C(j,i) a^i b^(j-i) x^i y^(j-i)
            for (std::size_t i = 0; i <= j; ++i) {
                int sign = 1;
                if (i > 0 && a == 0) continue;
                if (j - i > 0 && b == 0) continue;
                if (a < 0 && i % 2 == 1) sign = -sign;
                if (b < 0 && (j - i) % 2 == 1) sign = -sign;
                out.at(i, j - i) += f[j] * binomial(static_cast<unsigned>(j), static_cast<unsigned>(i)) * Rational(sign);
            }
        }
        return out;
    }

    /// Division by x; requires every pure-y coefficient to vanish. The result
    /// is truncated one degree lower.
    [[nodiscard]] Series2 divided_by_x() const {
        if (t_ == 0) throw std::domain_error("Series2::divided_by_x: nothing left after truncation");
        for (std::size_t r = 0; r <= t_; ++r)
            if (!c_[0][r].is_zero()) throw std::domain_error("Series2::divided_by_x: series not divisible by x");
        Series2 out(t_ - 1);
        for (std::size_t s = 0; s < t_; ++s)
            for (std::size_t r = 0; s + r < t_; ++r) out.at(s, r) = at(s + 1, r);
        return out;
    }
    [[nodiscard]] Series2 divided_by_y() const {
        if (t_ == 0) throw std::domain_error("Series2::divided_by_y: nothing left after truncation");
        for (std::size_t s = 0; s <= t_; ++s)
            if (!c_[s][0].is_zero()) throw std::domain_error("Series2::divided_by_y: series not divisible by y");
        Series2 out(t_ - 1);
        for (std::size_t s = 0; s < t_; ++s)
            for (std::size_t r = 0; s + r < t_; ++r) out.at(s, r) = at(s, r + 1);
        return out;
    }

    friend bool operator==(const Series2& a, const Series2& b) { return a.t_ == b.t_ && a.c_ == b.c_; }

private:
    std::size_t t_;
    std::vector<std::vector<Rational>> c_;
};

/// x / (e^x - 1) through x^through.
inline Series1 beta_series(std::size_t through) {
    // (e^x - 1)/x = sum_j x^j / (j+1)!
    Series1 g(through);
    for (std::size_t j = 0; j <= through; ++j) g[j] = Rational(1) / factorial(static_cast<unsigned>(j + 1));
    return g.inverse();
}

enum class CoeffKind { beta, beta_tilde, alpha };

/// Coefficient table. For beta and beta_tilde `values` has one row; for alpha
/// values[s][r] holds alpha_{s,r}.
struct CoeffSeries {
    CoeffKind kind;
    std::vector<std::vector<Rational>> values;
    std::size_t computed_through;

    [[nodiscard]] const Rational& operator[](std::size_t s) const { return values.front()[s]; }
    [[nodiscard]] const Rational& operator()(std::size_t s, std::size_t r) const { return values[s][r]; }
};

inline CoeffSeries beta_coefficients(std::size_t max_s) {
    return {CoeffKind::beta, {beta_series(max_s).coeffs()}, max_s};
}

inline CoeffSeries beta_tilde_coefficients(std::size_t max_r) {
    return {CoeffKind::beta_tilde, {beta_series(max_r).reflected().coeffs()}, max_r};
}

/// (beta(-x-y) - beta(-y)) / x * beta(x), truncated at total degree `through`.
inline Series2 alpha_series(std::size_t through) {
    const Series1 beta = beta_series(through + 1);
    Series2 numerator = Series2::compose_linear(beta, -1, -1, through + 1) - Series2::compose_linear(beta, 0, -1, through + 1);
    return numerator.divided_by_x() * Series2::compose_linear(beta, 1, 0, through);
}

/// -(beta(x+y) - beta(x)) / y * beta(-y), truncated at total degree `through`.
inline Series2 alpha_series_second_form(std::size_t through) {
    const Series1 beta = beta_series(through + 1);
    Series2 numerator = Series2::compose_linear(beta, 1, 1, through + 1) - Series2::compose_linear(beta, 1, 0, through + 1);
    Series2 out = numerator.divided_by_y() * Series2::compose_linear(beta, 0, -1, through);
    out *= Rational(-1);
    return out;
}

inline CoeffSeries alpha_coefficients(std::size_t max_s, std::size_t max_r) {
    const std::size_t t = max_s + max_r;
    const Series2 a = alpha_series(t);
    CoeffSeries out{CoeffKind::alpha, std::vector<std::vector<Rational>>(max_s + 1, std::vector<Rational>(max_r + 1)), t};
    for (std::size_t s = 0; s <= max_s; ++s)
        for (std::size_t r = 0; r <= max_r; ++r) out.values[s][r] = a.at(s, r);
    return out;
}

}  // namespace dynmag
