#pragma once
// bigfloat.hpp - RAII wrappers over MPFR for real and complex values with an
// explicit binary precision.
//
// Every value carries its own precision. Binary operations round to the larger
// of the two operand precisions; values built from integers or doubles take the
// thread-local default precision (see PrecisionGuard). Rounding is always
// round-to-nearest (MPFR_RNDN).

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace qkernel {

int default_precision_bits();
void set_default_precision_bits(int bits);

/// Sets the thread-local default precision for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    int saved_;
};

class BigFloat {
public:
    BigFloat();
    BigFloat(long value);  // NOLINT: implicit integer promotion is intended
    BigFloat(int value) : BigFloat(static_cast<long>(value)) {}
    explicit BigFloat(double value);
    explicit BigFloat(const mpz_class& value);
    explicit BigFloat(const mpq_class& value);
    /// Parses a decimal string; throws std::invalid_argument on bad input.
    explicit BigFloat(const std::string& decimal);

    BigFloat(long value, int precision_bits);
    BigFloat(const mpq_class& value, int precision_bits);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }
    /// Rounds in place to a new precision.
    void set_precision(int bits);
    BigFloat with_precision(int bits) const;

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// printf-style %.{digits}Rg rendering.
    std::string to_string(int significant_digits = 17) const;
    /// Fixed-point rendering with the given number of decimals.
    std::string to_fixed(int decimals) const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    long exponent() const;  // binary exponent; LONG_MIN for zero

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator-(const BigFloat& x);
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    static BigFloat pi(int precision_bits);
    /// 2^exp at the given precision.
    static BigFloat pow2(long exp, int precision_bits);

private:
    explicit BigFloat(int precision_bits, std::nullptr_t);
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat acos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

class BigComplex {
public:
    BigComplex() = default;
    BigComplex(long re) : re_(re), im_(0L) {}  // NOLINT
    BigComplex(int re) : BigComplex(static_cast<long>(re)) {}  // NOLINT
    BigComplex(BigFloat re) : re_(std::move(re)), im_(0L, re_.precision()) {}  // NOLINT
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(const mpz_class& re) : BigComplex(BigFloat(re)) {}
    explicit BigComplex(const mpq_class& re) : BigComplex(BigFloat(re)) {}

    static BigComplex polar(const BigFloat& modulus, const BigFloat& angle);

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    BigFloat& real() { return re_; }
    BigFloat& imag() { return im_; }

    int precision() const;
    void set_precision(int bits);
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);
    BigComplex& operator*=(const BigComplex& rhs);
    BigComplex& operator/=(const BigComplex& rhs);

    friend BigComplex operator-(const BigComplex& z) { return {-z.re_, -z.im_}; }
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    BigFloat re_;
    BigFloat im_;
};

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);  // |z|^2
BigFloat arg(const BigComplex& z);
/// Principal square root: branch cut on the negative real axis, Re >= 0.
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

}  // namespace qkernel
