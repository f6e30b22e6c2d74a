#pragma once
// Univariate polynomials with arbitrary-precision integer coefficients.

#include "qkernel/bigfloat.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qkernel {

class IntPolynomial {
public:
    IntPolynomial() = default;
    /// Coefficients from the constant term upward; trailing zeros are trimmed.
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(long constant);  // NOLINT: integers promote to constants

    static IntPolynomial monomial(long coeff, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(int k) const;
    const mpz_class& leading() const { return coeffs_.back(); }

    /// Lowest power with a nonzero coefficient; 0 for the zero polynomial.
    int valuation() const;
    /// Coefficient sequence equals its reversal after removing the factor q^valuation.
    bool is_palindromic() const;

    IntPolynomial derivative() const;
    IntPolynomial pow(unsigned e) const;
    /// p(q) -> p(q) / q^valuation.
    IntPolynomial strip_low_powers() const;
    mpz_class content() const;
    /// Divided by the content, with positive leading coefficient.
    IntPolynomial primitive_part() const;

    template <class T>
    T evaluate(const T& x) const {
        T r(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + T(*it);
        return r;
    }
    mpq_class evaluate(const mpq_class& x) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(char var = 'q') const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Quotient of an exact division over Z; throws std::domain_error otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Pseudo-remainder of a by b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Square-free decomposition p = c * prod_i f_i^i; entry (f_i, i) for each
/// non-constant f_i.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

/// Number of distinct real roots in (a, +inf); a must not be a root.
int count_real_roots_above(const IntPolynomial& p, const mpq_class& a);

/// Real and imaginary parts of p(r*i) as polynomials in r.
std::pair<IntPolynomial, IntPolynomial> imaginary_axis_parts(const IntPolynomial& p);

}  // namespace qkernel
