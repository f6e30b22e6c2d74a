#include "qkernel/asymptotics.hpp"

#include "qkernel/fast_enum.hpp"
#include "qkernel/qplane.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qkernel {

namespace {

constexpr int kDefaultPrecision = 128;

// Y_+(x) at a real point t.
BigFloat y_plus_real(const KernelPolys& k, const BigFloat& x, const BigFloat& t) {
    const BigFloat u = BigFloat(1L) - t * eval_quadratic(k.q0(), x);
    const BigFloat disc = u * u - BigFloat(4L) * t * t * eval_quadratic(k.up, x);
    return BigFloat(2L) * t * eval_quadratic(k.q_minus1(), x) / (u + sqrt(disc));
}

}  // namespace

int precision_from_environment() {
    if (const char* env = std::getenv("QKERNEL_PRECISION_BITS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 32 && v <= (1L << 20)) return static_cast<int>(v);
    }
    return kDefaultPrecision;
}

BigFloat subdominant_base(ModelId model, int precision_bits) {
    const InventoryCounts c = inventory_counts(model);
    return BigFloat(static_cast<long>(c.p_0), precision_bits) +
           BigFloat(2L) * sqrt(BigFloat(static_cast<long>(c.p_1) * c.p_minus1, precision_bits));
}

KappaResult kappa_symmetric(ModelId model, int terms, int precision_bits) {
    if (!is_symmetric(model)) throw std::invalid_argument("kappa_symmetric needs model A, B or C");
    if (terms < 2) throw std::invalid_argument("terms must be >= 2");
    PrecisionGuard guard(precision_bits);
    const KernelPolys k = y_kernel_polys(model);
    const int size = cardinality(model);
    const BigFloat t = BigFloat(1L, precision_bits) / BigFloat(static_cast<long>(size), precision_bits);

    std::vector<BigFloat> y{BigFloat(1L, precision_bits)};
    for (int n = 1; n <= terms + 2; ++n) y.push_back(y_plus_real(k, y.back(), t));

    BigFloat sum(0L, precision_bits);
    BigFloat previous_term(0L, precision_bits);
    for (int n = 0; n <= terms + 1; ++n) {
        const BigFloat term = y[n] * y[n + 1];
        if (term.sign() <= 0 || (n > 0 && !(term < previous_term)))
            throw std::runtime_error("alternating bound violated at n = " + std::to_string(n));
        if (n <= terms) sum += (n % 2 == 0) ? term : -term;
        previous_term = term;
    }

    KappaResult r;
    r.model = model;
    r.estimate = BigFloat(1L) - BigFloat(2L) * sum;
    // first omitted term plus a rounding allowance
    r.tail_bound = BigFloat(2L) * y[terms + 1] * y[terms + 2] +
                   BigFloat::pow2(-(precision_bits - 8), precision_bits) * BigFloat(static_cast<long>(terms + 2));
    r.lo = r.estimate - r.tail_bound;
    r.hi = r.estimate + r.tail_bound;
    r.terms_used = terms;
    r.growth_base = size;
    r.subdominant_base = subdominant_base(model, precision_bits);
    r.precision_bits = precision_bits;
    r.rigorous = true;
    return r;
}

KappaResult kappa_symmetric_auto(ModelId model, int digits, int precision_bits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    int prec = precision_bits > 0 ? precision_bits : precision_from_environment();
    prec = std::max(prec, static_cast<int>(std::ceil(digits * 3.3219280948873622)) + 64);
    const BigFloat target = pow(BigFloat(10L, prec), -static_cast<long>(digits + 1));
    for (int attempt = 0; attempt < 5; ++attempt, prec *= 2) {
        try {
            int terms = 4;
            while (true) {
                KappaResult r = kappa_symmetric(model, terms, prec);
                if (r.tail_bound < target) return r;
                terms *= 2;
                if (terms > 1 << 16) throw std::runtime_error("kappa: tail bound did not reach the target");
            }
        } catch (const std::runtime_error& e) {
            if (std::string(e.what()).rfind("alternating bound violated", 0) != 0) throw;
        }
    }
    throw std::runtime_error("alternating bound violated at every attempted precision");
}

Series half_plane_gf(ModelId model, int N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    const InventoryCounts c = inventory_counts(model);
    const std::size_t M = static_cast<std::size_t>(N);
    const Series t = Series::monomial(1, M);
    const Series u = Series::constant(1, M) - t * c.q_0;
    const Series disc = u * u - Series::monomial(2, M) * (4 * c.q_1 * c.q_minus1);
    const Series den = u + sqrt_one(disc);
    return divide_exact(Series::constant(2, M), den);
}

KappaResult kappa_E(int terms, int precision_bits) {
    if (terms < 2) throw std::invalid_argument("terms must be >= 2");
    PrecisionGuard guard(precision_bits);
    const ModelId E = ModelId::E;
    const BigComplex q(BigFloat(2L, precision_bits) - sqrt(BigFloat(3L, precision_bits)));
    auto value = [&](AsymFamily f, long n) {
        return (BigComplex(BigFloat(1L, precision_bits)) / closed_form_asymmetric(E, f, n, q)).real();
    };

    std::vector<BigFloat> partial;
    BigFloat s(1L, precision_bits);
    BigFloat y_prev(0L, precision_bits);
    BigFloat ups = value(AsymFamily::upsilon, 0);
    for (long n = 0; n <= terms; ++n) {
        const BigFloat y = value(AsymFamily::y_of_chi, n);
        const BigFloat ups_next = value(AsymFamily::upsilon, n + 1);
        s -= value(AsymFamily::chi, n) * (y - y_prev);
        s -= value(AsymFamily::x_of_upsilon, n) * (ups - ups_next);
        partial.push_back(s);
        y_prev = y;
        ups = ups_next;
    }

    const BigFloat& last = partial[partial.size() - 1];
    const BigFloat& before = partial[partial.size() - 2];
    const BigFloat gap = abs(last - before);
    KappaResult r;
    r.model = E;
    r.estimate = last;
    r.tail_bound = gap;
    r.lo = min(last, before) - gap;
    r.hi = max(last, before) + gap;
    r.terms_used = terms;
    r.growth_base = cardinality(E);
    r.subdominant_base = subdominant_base(E, precision_bits);
    r.precision_bits = precision_bits;
    r.rigorous = false;
    const BigFloat lower(mpq_class(122, 525), precision_bits), upper(mpq_class(7, 10), precision_bits);
    if (*r.lo < lower || *r.hi > upper) throw std::runtime_error("E-constant check failed");
    return r;
}

KappaDEstimate kappa_D_empirical(int N, int precision_bits) {
    if (N < 8) throw std::invalid_argument("kappa_D_empirical needs N >= 8");
    PrecisionGuard guard(precision_bits);
    const IntSeries counts = fast_series(ModelId::D, N + 1);
    KappaDEstimate out;
    std::vector<BigFloat> a(static_cast<std::size_t>(N) + 1);
    const BigFloat three(3L, precision_bits);
    for (int n = 1; n <= N; ++n) {
        a[n] = BigFloat(counts[n]) * sqrt(BigFloat(static_cast<long>(n), precision_bits)) / pow(three, n);
        out.normalised.push_back(a[n].to_double());
    }
    // a_n = kappa + c/n + O(n^-2): eliminate the 1/n term between N and N/2,
    // using the same parity to avoid any even/odd oscillation.
    const int half = N / 2 - ((N / 2) % 2 != N % 2 ? 1 : 0);
    const BigFloat n1(static_cast<long>(N), precision_bits), n0(static_cast<long>(half), precision_bits);
    out.estimate = (n1 * a[N] - n0 * a[half]) / (n1 - n0);
    return out;
}

BigFloat predict(ModelId model, int n, const KappaResult& kappa) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const int prec = kappa.estimate.precision();
    return kappa.estimate * pow(BigFloat(static_cast<long>(cardinality(model)), prec), n);
}

}  // namespace qkernel
