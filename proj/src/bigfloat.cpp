#include "qkernel/bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace qkernel {

namespace {
thread_local int t_default_precision = 128;

int max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

int default_precision_bits() { return t_default_precision; }

void set_default_precision_bits(int bits) {
    if (bits < MPFR_PREC_MIN || bits > 1 << 24) throw std::invalid_argument("precision out of range");
    t_default_precision = bits;
}

PrecisionGuard::PrecisionGuard(int bits) : saved_(t_default_precision) { set_default_precision_bits(bits); }
PrecisionGuard::~PrecisionGuard() { t_default_precision = saved_; }

BigFloat::BigFloat(int precision_bits, std::nullptr_t) { mpfr_init2(value_, precision_bits); }

BigFloat::BigFloat() : BigFloat(t_default_precision, nullptr) { mpfr_set_zero(value_, 1); }

BigFloat::BigFloat(long value) : BigFloat(t_default_precision, nullptr) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(long value, int precision_bits) : BigFloat(precision_bits, nullptr) {
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value) : BigFloat(t_default_precision, nullptr) { mpfr_set_d(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(const mpz_class& value) : BigFloat(t_default_precision, nullptr) {
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value) : BigFloat(t_default_precision, nullptr) {
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, int precision_bits) : BigFloat(precision_bits, nullptr) {
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal) : BigFloat(t_default_precision, nullptr) {
    // the delegated constructor has completed, so the destructor releases value_
    if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: " + decimal);
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(other.precision(), nullptr) {
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other.precision(), nullptr) { mpfr_swap(value_, other.value_); }

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::set_precision(int bits) { mpfr_prec_round(value_, bits, MPFR_RNDN); }

BigFloat BigFloat::with_precision(int bits) const {
    BigFloat r(bits, nullptr);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int significant_digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", significant_digits, value_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

std::string BigFloat::to_fixed(int decimals) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", decimals, value_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

long BigFloat::exponent() const { return is_zero() ? LONG_MIN : mpfr_get_exp(value_); }

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat operator-(const BigFloat& x) {
    BigFloat r(x.precision(), nullptr);
    mpfr_neg(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b), nullptr);
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b), nullptr);
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b), nullptr);
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b), nullptr);
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

BigFloat BigFloat::pi(int precision_bits) {
    BigFloat r(precision_bits, nullptr);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long exp, int precision_bits) {
    BigFloat r(precision_bits, nullptr);
    mpfr_set_ui_2exp(r.value_, 1, exp, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r = x;
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r = x;
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r = x;
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& x) {
    BigFloat r = x;
    mpfr_sin(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat acos(const BigFloat& x) {
    BigFloat r = x;
    mpfr_acos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r = y.precision() >= x.precision() ? y : x;
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r = x;
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, long n) {
    BigFloat r = x;
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(); }

BigComplex BigComplex::polar(const BigFloat& modulus, const BigFloat& angle) {
    return {modulus * cos(angle), modulus * sin(angle)};
}

int BigComplex::precision() const { return std::max(re_.precision(), im_.precision()); }

void BigComplex::set_precision(int bits) {
    re_.set_precision(bits);
    im_.set_precision(bits);
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
    BigFloat re = re_ * rhs.re_ - im_ * rhs.im_;
    BigFloat im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
    if (rhs.im_.is_zero()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    const BigFloat d = norm(rhs);
    BigFloat re = (re_ * rhs.re_ + im_ * rhs.im_) / d;
    BigFloat im = (im_ * rhs.re_ - re_ * rhs.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex conj(const BigComplex& z) { return {z.real(), -z.imag()}; }

BigFloat abs(const BigComplex& z) {
    BigFloat r(0L, z.precision());
    mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
    return r;
}

BigFloat norm(const BigComplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

BigFloat arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }

BigComplex sqrt(const BigComplex& z) {
    if (z.imag().is_zero()) {
        if (z.real().sign() >= 0) return {sqrt(z.real()), BigFloat(0L, z.precision())};
        return {BigFloat(0L, z.precision()), sqrt(-z.real())};
    }
    const BigFloat m = abs(z);
    BigFloat re = sqrt((m + z.real()) / BigFloat(2L));
    BigFloat im = sqrt((m - z.real()) / BigFloat(2L));
    if (z.imag().sign() < 0) im = -im;
    return {std::move(re), std::move(im)};
}

BigComplex pow(const BigComplex& z, long n) {
    if (n < 0) return BigComplex(BigFloat(1L, z.precision())) / pow(z, -n);
    BigComplex result(BigFloat(1L, z.precision()));
    BigComplex base = z;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
    return os << '(' << z.real() << (z.imag().sign() < 0 ? " - " : " + ") << abs(z.imag()) << "i)";
}

}  // namespace qkernel
