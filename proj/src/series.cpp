#include "qkernel/series.hpp"

namespace qkernel {

SeriesOpCounters& series_op_counters() {
    thread_local SeriesOpCounters counters;
    return counters;
}

namespace {

static_assert(GMP_NAIL_BITS == 0, "limb packing assumes no nail bits");

constexpr std::size_t kKroneckerCutoff = 24;

std::vector<mpz_class> mul_schoolbook(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g,
                                      std::size_t n) {
    std::vector<mpz_class> r(n);
    const std::size_t nf = std::min(f.size(), n);
    for (std::size_t i = 0; i < nf; ++i) {
        if (f[i] == 0) continue;
        const std::size_t ng = std::min(g.size(), n - i);
        for (std::size_t j = 0; j < ng; ++j)
            mpz_addmul(r[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
    }
    return r;
}

std::size_t max_bits(const std::vector<mpz_class>& v, std::size_t n) {
    std::size_t b = 0;
    for (std::size_t i = 0; i < n; ++i) b = std::max(b, mpz_sizeinbase(v[i].get_mpz_t(), 2));
    return b;
}

mpz_class from_limbs(const mp_limb_t* limbs, std::size_t count) {
    mpz_t view;
    return mpz_class(mpz_roinit_n(view, limbs, static_cast<mp_size_t>(count)));
}

// sum_i v[i] * 2^(64*L*i), with the coefficients laid out limb-aligned.
mpz_class pack(const std::vector<mpz_class>& v, std::size_t n, std::size_t L) {
    std::vector<mp_limb_t> pos(n * L, 0), neg;
    for (std::size_t i = 0; i < n; ++i) {
        const mpz_srcptr z = v[i].get_mpz_t();
        const int sign = mpz_sgn(z);
        if (sign == 0) continue;
        if (sign < 0 && neg.empty()) neg.assign(n * L, 0);
        const mp_limb_t* d = mpz_limbs_read(z);
        std::copy(d, d + mpz_size(z), (sign > 0 ? pos : neg).begin() + static_cast<std::ptrdiff_t>(i * L));
    }
    mpz_class r = from_limbs(pos.data(), pos.size());
    if (!neg.empty()) r -= from_limbs(neg.data(), neg.size());
    return r;
}

// Inverse of pack for signed digits bounded by 2^(64*L - 1) in magnitude.
std::vector<mpz_class> unpack(const mpz_class& p, std::size_t n, std::size_t L) {
    std::vector<mpz_class> r(n);
    const int sign = sgn(p);
    if (sign == 0) return r;
    const mp_limb_t* d = mpz_limbs_read(p.get_mpz_t());
    const std::size_t size = mpz_size(p.get_mpz_t());
    mpz_class half, full, u;
    mpz_setbit(half.get_mpz_t(), 64 * L - 1);
    mpz_setbit(full.get_mpz_t(), 64 * L);
    unsigned carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i * L;
        if (lo >= size && carry == 0) break;
        u = lo < size ? from_limbs(d + lo, std::min(L, size - lo)) : mpz_class(0);
        u += carry;
        if (u >= half) {
            u -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        r[i] = sign < 0 ? mpz_class(-u) : u;
    }
    return r;
}

std::vector<mpz_class> mul_kronecker(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g,
                                     std::size_t n) {
    const std::size_t nf = std::min(f.size(), n), ng = std::min(g.size(), n);
    const std::size_t terms = std::min(nf, ng);
    std::size_t bits = max_bits(f, nf) + max_bits(g, ng) + 2;
    for (std::size_t m = terms; m > 0; m >>= 1) ++bits;
    const std::size_t L = (bits + 63) / 64;
    const mpz_class pf = pack(f, nf, L);
    const mpz_class pg = pack(g, ng, L);
    const mpz_class prod = pf * pg;
    return unpack(prod, n, L);
}

mpz_class common_denominator(const std::vector<mpq_class>& v, std::size_t n) {
    mpz_class d = 1;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i].get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v[i].get_den_mpz_t());
    return d;
}

std::vector<mpz_class> scaled_numerators(const std::vector<mpq_class>& v, std::size_t n, const mpz_class& d) {
    std::vector<mpz_class> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = v[i].get_num() * (d / v[i].get_den());
    return r;
}

}  // namespace

namespace detail {

std::vector<mpz_class> mul_trunc(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g,
                                 std::size_t order) {
    if (order == 0 || f.empty() || g.empty()) return std::vector<mpz_class>(order);
    if (std::min({f.size(), g.size(), order}) < kKroneckerCutoff) return mul_schoolbook(f, g, order);
    return mul_kronecker(f, g, order);
}

std::vector<mpq_class> mul_trunc(const std::vector<mpq_class>& f, const std::vector<mpq_class>& g,
                                 std::size_t order) {
    const std::size_t nf = std::min(f.size(), order), ng = std::min(g.size(), order);
    const mpz_class df = common_denominator(f, nf), dg = common_denominator(g, ng);
    const std::vector<mpz_class> prod =
        mul_trunc(scaled_numerators(f, nf, df), scaled_numerators(g, ng, dg), order);
    const mpz_class den = df * dg;
    std::vector<mpq_class> r(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (den == 1) {
            r[i] = prod[i];
        } else {
            r[i] = mpq_class(prod[i], den);
            r[i].canonicalize();
        }
    }
    return r;
}

}  // namespace detail

IntSeries to_integer_series(const Series& f) {
    IntSeries r(f.order());
    for (std::size_t i = 0; i < f.order(); ++i) {
        if (f[i].get_den() != 1) throw std::domain_error("series has a non-integer coefficient");
        r[i] = f[i].get_num();
    }
    return r;
}

Series to_rational_series(const IntSeries& f) {
    Series r(f.order());
    for (std::size_t i = 0; i < f.order(); ++i) r[i] = f[i];
    return r;
}

}  // namespace qkernel
