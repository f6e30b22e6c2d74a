#pragma once
// Dense truncated power series in t.
//
// A TruncatedSeries of order N is known modulo t^N; it stores exactly N
// coefficients. Binary operations truncate to the smaller operand order.
// Coefficients are mpq_class (general) or mpz_class (integer series used by
// the fast enumeration path); for mpz_class every division must be exact.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qkernel {

/// Per-thread counters of the non-linear series operations.
struct SeriesOpCounters {
    std::uint64_t multiplications = 0;
    std::uint64_t reciprocals = 0;
    std::uint64_t square_roots = 0;
    std::uint64_t divisions = 0;
    std::uint64_t total() const { return multiplications + reciprocals + square_roots + divisions; }
};

SeriesOpCounters& series_op_counters();
inline void reset_series_op_counters() { series_op_counters() = {}; }

namespace detail {

inline void exact_div_assign(mpq_class& a, const mpq_class& b) { a /= b; }
inline void exact_div_assign(mpz_class& a, const mpz_class& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::domain_error("inexact integer division in series");
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

/// Product of two integer coefficient vectors, truncated to `order` terms.
std::vector<mpz_class> mul_trunc(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g, std::size_t order);
std::vector<mpq_class> mul_trunc(const std::vector<mpq_class>& f, const std::vector<mpq_class>& g, std::size_t order);

}  // namespace detail

template <class C>
class TruncatedSeries {
public:
    using coeff_type = C;

    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}
    explicit TruncatedSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {}

    static TruncatedSeries constant(const C& c, std::size_t order) {
        TruncatedSeries s(order);
        if (order > 0) s.coeffs_[0] = c;
        return s;
    }
    /// t^k known modulo t^order.
    static TruncatedSeries monomial(std::size_t k, std::size_t order) {
        TruncatedSeries s(order);
        if (k < order) s.coeffs_[k] = 1;
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }
    const C& operator[](std::size_t i) const { return coeffs_[i]; }
    C& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    std::vector<C>& coeffs() { return coeffs_; }

    /// Index of the first nonzero coefficient; order() for the zero series.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return coeffs_.size();
    }

    bool is_zero() const { return valuation() == order(); }

    TruncatedSeries truncated(std::size_t order) const {
        TruncatedSeries r;
        r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + std::min(order, coeffs_.size()));
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<C> coeffs_;
};

using Series = TruncatedSeries<mpq_class>;
using IntSeries = TruncatedSeries<mpz_class>;

template <class C>
TruncatedSeries<C> add(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g) {
    const std::size_t n = std::min(f.order(), g.order());
    TruncatedSeries<C> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = f[i] + g[i];
    return r;
}

template <class C>
TruncatedSeries<C> sub(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g) {
    const std::size_t n = std::min(f.order(), g.order());
    TruncatedSeries<C> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = f[i] - g[i];
    return r;
}

template <class C>
TruncatedSeries<C> scale(const TruncatedSeries<C>& f, const C& c) {
    TruncatedSeries<C> r = f;
    for (auto& a : r.coeffs()) a *= c;
    return r;
}

/// Multiplies by t^k; the result is known to order + k.
template <class C>
TruncatedSeries<C> shift(const TruncatedSeries<C>& f, std::size_t k) {
    std::vector<C> c(f.order() + k);
    std::copy(f.coeffs().begin(), f.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return TruncatedSeries<C>(std::move(c));
}

/// Product truncated to min(order(f), order(g)), or to `order` if smaller.
template <class C>
TruncatedSeries<C> mul(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g,
                       std::size_t order = static_cast<std::size_t>(-1)) {
    ++series_op_counters().multiplications;
    const std::size_t n = std::min({f.order(), g.order(), order});
    return TruncatedSeries<C>(detail::mul_trunc(f.coeffs(), g.coeffs(), n));
}

namespace detail {

template <class C>
std::vector<C> reciprocal_naive(const std::vector<C>& f, std::size_t n) {
    std::vector<C> g(n);
    if (n == 0) return g;
    C acc;
    g[0] = 1;
    exact_div_assign(g[0], f[0]);
    for (std::size_t k = 1; k < n; ++k) {
        acc = 0;
        const std::size_t top = std::min(k, f.size() - 1);
        for (std::size_t j = 1; j <= top; ++j) acc += f[j] * g[k - j];
        acc = -acc;
        exact_div_assign(acc, f[0]);
        g[k] = acc;
    }
    return g;
}

template <class C>
std::vector<C> reciprocal_coeffs(const std::vector<C>& f) {
    if (f.empty() || f[0] == 0) throw std::domain_error("non-invertible series");
    const std::size_t n = f.size();
    constexpr std::size_t kNewtonCutoff = 64;
    if constexpr (std::is_same_v<C, mpz_class>) {
        if (n > kNewtonCutoff) {
            // g <- g + g*(1 - f*g), doubling the known order each pass.
            std::size_t k = kNewtonCutoff;
            std::vector<C> g = reciprocal_naive(f, k);
            while (k < n) {
                const std::size_t k2 = std::min(2 * k, n);
                std::vector<C> fg = mul_trunc(f, g, k2);
                for (auto& c : fg) c = -c;
                fg[0] += 1;
                // fg vanishes below t^k
                std::vector<C> e(fg.begin() + static_cast<std::ptrdiff_t>(k), fg.end());
                std::vector<C> corr = mul_trunc(g, e, k2 - k);
                g.resize(k2);
                for (std::size_t i = 0; i < corr.size(); ++i) g[k + i] += corr[i];
                k = k2;
            }
            return g;
        }
    }
    return reciprocal_naive(f, n);
}

}  // namespace detail

template <class C>
TruncatedSeries<C> reciprocal(const TruncatedSeries<C>& f) {
    ++series_op_counters().reciprocals;
    return TruncatedSeries<C>(detail::reciprocal_coeffs(f.coeffs()));
}

/// Square root of a series with constant term exactly 1, normalised to g(0) = 1.
template <class C>
TruncatedSeries<C> sqrt_one(const TruncatedSeries<C>& f) {
    ++series_op_counters().square_roots;
    if (f.order() == 0 || f[0] != 1) throw std::domain_error("sqrt_one requires constant term 1");
    const std::size_t n = f.order();
    TruncatedSeries<C> g(n);
    g[0] = 1;
    C acc;
    const C two = 2;
    for (std::size_t k = 1; k < n; ++k) {
        acc = f[k];
        for (std::size_t j = 1; j < k; ++j) acc -= g[j] * g[k - j];
        detail::exact_div_assign(acc, two);
        g[k] = acc;
    }
    return g;
}

/// h with g*h = f, known to min(order f, order g) - valuation(g).
template <class C>
TruncatedSeries<C> divide_exact(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g) {
    ++series_op_counters().divisions;
    const std::size_t vg = g.valuation();
    if (vg == g.order()) throw std::domain_error("division by the zero series");
    if (vg > f.valuation()) throw std::domain_error("non-series quotient");
    const std::size_t n = std::min(f.order(), g.order()) - vg;
    const std::vector<C> fs(f.coeffs().begin() + static_cast<std::ptrdiff_t>(vg),
                            f.coeffs().begin() + static_cast<std::ptrdiff_t>(vg + n));
    const std::vector<C> gs(g.coeffs().begin() + static_cast<std::ptrdiff_t>(vg),
                            g.coeffs().begin() + static_cast<std::ptrdiff_t>(vg + n));
    return TruncatedSeries<C>(detail::mul_trunc(fs, detail::reciprocal_coeffs(gs), n));
}

// Operator sugar. Scalars act as constants known to the series' own order.
template <class C>
TruncatedSeries<C> operator+(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g) {
    return add(f, g);
}
template <class C>
TruncatedSeries<C> operator-(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g) {
    return sub(f, g);
}
template <class C>
TruncatedSeries<C> operator*(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g) {
    return mul(f, g);
}
template <class C>
TruncatedSeries<C> operator-(const TruncatedSeries<C>& f) {
    return scale(f, C(-1));
}
template <class C>
TruncatedSeries<C> operator*(const TruncatedSeries<C>& f, int c) {
    return scale(f, C(c));
}
template <class C>
TruncatedSeries<C> operator+(TruncatedSeries<C> f, int c) {
    if (f.order() > 0) f[0] += c;
    return f;
}
template <class C>
TruncatedSeries<C> operator-(TruncatedSeries<C> f, int c) {
    if (f.order() > 0) f[0] -= c;
    return f;
}

template <class C>
std::string to_string(const TruncatedSeries<C>& f) {
    std::string s;
    for (std::size_t i = 0; i < f.order(); ++i) {
        if (i) s += ", ";
        s += f[i].get_str();
    }
    return s;
}

/// Converts a rational series whose coefficients are all integers.
IntSeries to_integer_series(const Series& f);
Series to_rational_series(const IntSeries& f);

}  // namespace qkernel
