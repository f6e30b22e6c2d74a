#include "qkernel/singularities.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qkernel {

namespace {

IntPolynomial mono(long c, int k) { return IntPolynomial::monomial(c, k); }

// Polynomial from coefficients listed from the constant term upward.
IntPolynomial poly(std::initializer_list<long> c) {
    std::vector<mpz_class> v;
    for (long x : c) v.emplace_back(x);
    return IntPolynomial(std::move(v));
}

IntPolynomial alpha(int n) { return mono(1, 4 * n) + mono(1, 2 * n + 2) - mono(4, 2 * n) + mono(1, 2 * n - 2) + 1; }

IntPolynomial beta(int n) {
    const IntPolynomial c = poly({1, -2, -2, 1});
    // q times the first factor, which has a q^{n-2} term
    const IntPolynomial f1 = mono(1, 2 * n) + c * mono(1, n - 1) + mono(1, 1);
    const IntPolynomial f2 = mono(1, 2 * n + 1) + c * mono(1, n - 1) + 1;
    return n == 1 ? f1 * f2 : divide_exact(f1, mono(1, 1)) * f2;
}

IntPolynomial gamma(int n) {
    const IntPolynomial q1 = poly({1, 1});
    return mono(1, 2) * poly({1, -1, 1}) * (mono(1, 4 * n) + 1) +
           mono(1, 1) * poly({1, -3, 1}) * q1 * q1 * (mono(1, n) + mono(1, 3 * n)) +
           mono(1, 2 * n) * poly({1, -4, -1, 14, -1, -4, 1});
}

IntPolynomial omega_d(int index, int n) {
    const IntPolynomial base = mono(1, 4 * n + 2) + mono(1, 2 * n + 4) - mono(4, 2 * n + 2) + mono(1, 2 * n) + mono(1, 2);
    const IntPolynomial odd = mono(1, 4 * n + 3) + mono(1, 2 * n + 4) - mono(1, 2 * n + 3) - mono(2, 2 * n + 2) -
                              mono(1, 2 * n + 1) + mono(1, 2 * n) + mono(1, 1);
    switch (index) {
        case 1: return base * base;
        case 2:
            return base *
                   (mono(1, 4 * n + 4) + mono(1, 2 * n + 4) - mono(4, 2 * n + 2) + mono(1, 2 * n) + 1);
        case 3:
            return odd * (mono(1, 4 * n + 1) + mono(1, 2 * n + 4) - mono(1, 2 * n + 3) - mono(2, 2 * n + 2) -
                          mono(1, 2 * n + 1) + mono(1, 2 * n) + mono(1, 3));
        case 4: return odd * odd;
    }
    throw std::invalid_argument("omega index must be 1..4");
}

IntPolynomial omega_e(int index, int n) {
    const IntPolynomial head = poly({1, 0, -1, 0, 1});
    const IntPolynomial q2 = mono(1, 2);
    switch (index) {
        case 1:
            return q2 * head * (mono(1, 8 * n) + 1) + q2 * poly({2, 0, -8, 0, 2}) * (mono(1, 6 * n) + mono(1, 2 * n)) +
                   poly({1, 0, -10, 0, 24, 0, -10, 0, 1}) * mono(1, 4 * n);
        case 2:
            return head * (mono(1, 8 * n + 4) + 1) + poly({1, 0, -3, 0, -3, 0, 1}) * (mono(1, 6 * n + 2) + mono(1, 2 * n)) +
                   poly({1, 0, -9, 0, 22, 0, -9, 0, 1}) * mono(1, 4 * n);
        case 3:
            return q2 * head * (mono(1, 8 * n) + 1) +
                   mono(1, 1) * poly({1, -1, -1, -2, -1, -1, 1}) * (mono(1, 6 * n) + mono(1, 2 * n)) +
                   poly({1, -2, -4, 2, 12, 2, -4, -2, 1}) * mono(1, 4 * n);
        case 4:
            return head * (mono(1, 8 * n + 4) + 1) +
                   mono(2, 1) * poly({1, -1, -2, -1, 1}) * (mono(1, 6 * n + 2) + mono(1, 2 * n)) +
                   poly({1, -2, -5, 2, 14, 2, -5, -2, 1}) * mono(1, 4 * n);
    }
    throw std::invalid_argument("omega index must be 1..4");
}

BigComplex reciprocal_at(ModelId model, int index, long n, const BigComplex& q, Branch b) {
    if (is_symmetric(model)) return closed_form_ybar(model, n, q, b);
    return closed_form_asymmetric(model, omega_family(index), n, q, b);
}

IntPolynomial squarefree_part(const IntPolynomial& p) { return divide_exact(p, gcd(p, p.derivative())); }

PoleVerdict verdict_at(ModelId model, int index, int n, const BigComplex& q, BigFloat& plus, BigFloat& minus) {
    const int prec = q.precision();
    try {
        plus = abs(reciprocal_at(model, index, n, q, Branch::plus));
        minus = abs(reciprocal_at(model, index, n, q, Branch::minus));
    } catch (const std::domain_error&) {
        plus = minus = BigFloat(-1L, prec);
        return PoleVerdict::unresolved;
    }
    const BigFloat tol = BigFloat::pow2(-prec / 4, prec);
    const bool p0 = plus < tol, m0 = minus < tol;
    if (p0 == m0) return PoleVerdict::unresolved;
    return p0 ? PoleVerdict::pole_of_plus_branch : PoleVerdict::pole_of_minus_branch;
}

PoleClassification classify_with(ModelId model, int index, int n, const BigComplex& q_root, const IntPolynomial& sf) {
    PoleClassification pc;
    pc.root = q_root;
    pc.verdict = verdict_at(model, index, n, q_root, pc.plus_residual, pc.minus_residual);
    if (pc.verdict == PoleVerdict::unresolved) return pc;
    BigFloat p2, m2;
    const BigComplex finer = refine_root(sf, q_root, 2 * q_root.precision());
    if (verdict_at(model, index, n, finer, p2, m2) != pc.verdict) pc.verdict = PoleVerdict::unresolved;
    return pc;
}

void require_symmetric(ModelId model) {
    if (!is_symmetric(model)) throw std::invalid_argument("model must be A, B or C");
}

void require_asymmetric(ModelId model) {
    if (is_symmetric(model)) throw std::invalid_argument("model must be D or E");
}

void require_even(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 2");
}

BigFloat e_discriminant_root(const BigFloat& r) {
    const BigFloat r2 = r * r;
    return sqrt(BigFloat(1L) + BigFloat(10L) * r2 + r2 * r2);
}

}  // namespace

IntPolynomial sigma_poly(ModelId model, int n) {
    require_symmetric(model);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    switch (model) {
        case ModelId::A: return alpha(n);
        case ModelId::B: return beta(n);
        default: return gamma(n);
    }
}

IntPolynomial omega_poly(ModelId model, int index, int n) {
    require_asymmetric(model);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return model == ModelId::D ? omega_d(index, n) : omega_e(index, n);
}

AsymFamily omega_family(int index) {
    switch (index) {
        case 1: return AsymFamily::chi;
        case 2: return AsymFamily::y_of_chi;
        case 3: return AsymFamily::upsilon;
        case 4: return AsymFamily::x_of_upsilon;
    }
    throw std::invalid_argument("omega index must be 1..4");
}

std::string family_label(ModelId model, int index) {
    return is_symmetric(model) ? "sigma" : "omega" + std::to_string(index);
}

IntPolynomial singularity_poly(ModelId model, int index, int n) {
    return is_symmetric(model) ? sigma_poly(model, n) : omega_poly(model, index, n);
}

BigFloat unit_circle_phi(ModelId model, int n, const BigFloat& theta) {
    require_symmetric(model);
    const BigFloat X = cos(theta * BigFloat(static_cast<long>(n)));
    const BigFloat c = cos(theta), c2 = c * c, c3 = c2 * c;
    switch (model) {
        case ModelId::A: return X + BigFloat(2L) * c2 - BigFloat(3L);
        case ModelId::B:
            return X * X + (BigFloat(2L) * c2 - c - BigFloat(3L)) * X + BigFloat(2L) * c3 - BigFloat(4L) * c2 - c +
                   BigFloat(4L);
        default:
            return BigFloat(2L) * (BigFloat(2L) * c - BigFloat(1L)) * X * X +
                   (BigFloat(4L) * c2 - BigFloat(2L) * c - BigFloat(6L)) * X + BigFloat(4L) * c3 -
                   BigFloat(8L) * c2 - BigFloat(6L) * c + BigFloat(12L);
    }
}

BigFloat model_b_band(int precision_bits) {
    PrecisionGuard guard(precision_bits);
    return acos(sqrt(BigFloat(2L)) - BigFloat(1L) / BigFloat(2L));
}

const char* verdict_name(PoleVerdict v) {
    switch (v) {
        case PoleVerdict::pole_of_plus_branch: return "pole_of_plus_branch";
        case PoleVerdict::pole_of_minus_branch: return "pole_of_minus_branch";
        case PoleVerdict::unresolved: return "unresolved";
    }
    return "?";
}

PoleClassification classify_pole(ModelId model, int index, int n, const BigComplex& q_root) {
    return classify_with(model, index, n, q_root, squarefree_part(singularity_poly(model, index, n)));
}

std::vector<PoleClassification> classify_roots(ModelId model, int index, int n, int precision_bits) {
    const IntPolynomial p = singularity_poly(model, index, n);
    const IntPolynomial sf = squarefree_part(p);
    std::vector<PoleClassification> out;
    for (const Root& r : find_roots(p, precision_bits).roots) out.push_back(classify_with(model, index, n, r.z, sf));
    return out;
}

UnitCircleReport unit_circle_check(ModelId model, const RootSet& roots, double tol) {
    UnitCircleReport rep;
    const double band = model_b_band(64).to_double();
    std::ostringstream bad;
    for (const Root& r : roots.roots) {
        const double re = r.z.real().to_double(), im = r.z.imag().to_double();
        if (std::abs(std::hypot(re, im) - 1.0) >= tol) continue;
        ++rep.near_circle;
        if (std::hypot(re - 1.0, im) < tol || std::hypot(re + 1.0, im) < tol) {
            ++rep.at_pm1;
            continue;
        }
        const bool allowed = model == ModelId::B && std::abs(std::atan2(im, re)) >= std::numbers::pi - band;
        if (!allowed) {
            rep.ok = false;
            bad << " (" << re << ", " << im << ")";
        }
    }
    if (!rep.ok) rep.detail = "roots on the unit circle:" + bad.str();
    return rep;
}

BigFloat imaginary_axis_form(ModelId model, int n, const BigFloat& r) {
    require_asymmetric(model);
    require_even(n);
    const BigFloat r2 = r * r, r4 = r2 * r2;
    const BigFloat R = pow(r, n), R2 = R * R, R4 = R2 * R2;
    if (model == ModelId::D) return R2 - r2 + BigFloat(4L) * r2 * R2 - r2 * R4 + r4 * R2;
    return BigFloat(4L) * R4 * r2 + BigFloat(4L) * r2 - BigFloat(4L) * R2 * r2 + R4 * r4 + R4 + r4 + BigFloat(1L) +
           (r2 + BigFloat(1L) - R4 - R4 * r2) * e_discriminant_root(r);
}

int descartes_sign_changes(ModelId model, const BigFloat& r) {
    require_asymmetric(model);
    const BigFloat r2 = r * r, r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
    const BigFloat one(1L);
    std::vector<BigFloat> c;
    if (model == ModelId::D) {
        c = {-r2, one + BigFloat(4L) * r2 + r4, -r2};
    } else {
        const BigFloat outer = -r2 * (one + r2 + r4);
        const BigFloat inner = BigFloat(-2L) * r2 * (one + BigFloat(4L) * r2 + r4);
        c = {outer, inner, one + BigFloat(10L) * r2 + BigFloat(24L) * r4 + BigFloat(10L) * r6 + r8, inner, outer};
    }
    int changes = 0, last = 0;
    for (const BigFloat& x : c) {
        const int s = x.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

ImaginaryAxisRoot imaginary_axis_root(ModelId model, int n, int precision_bits) {
    require_asymmetric(model);
    require_even(n);
    PrecisionGuard guard(precision_bits);
    BigFloat lo(1L), hi(2L);
    ImaginaryAxisRoot out{BigFloat(), imaginary_axis_form(model, n, lo), imaginary_axis_form(model, n, hi),
                          BigFloat(), 0};
    const int s_lo = out.value_at_1.sign();
    if (s_lo == 0 || s_lo == out.value_at_2.sign()) throw std::runtime_error("no sign change on (1, 2)");
    for (int i = 0; i < precision_bits; ++i) {
        const BigFloat mid = (lo + hi) / BigFloat(2L);
        const BigFloat v = imaginary_axis_form(model, n, mid);
        if (v.is_zero()) {
            lo = hi = mid;
            break;
        }
        (v.sign() == s_lo ? lo : hi) = mid;
    }
    out.r = (lo + hi) / BigFloat(2L);
    out.residual = abs(imaginary_axis_form(model, n, out.r));
    out.descartes_changes = descartes_sign_changes(model, out.r);
    return out;
}

int imaginary_axis_root_count(ModelId model, int index, int n) {
    auto [re, im] = imaginary_axis_parts(omega_poly(model, index, n));
    IntPolynomial g = im.is_zero() ? re : re.is_zero() ? im : gcd(re, im);
    if (g.degree() < 1) return 0;
    g = squarefree_part(g).strip_low_powers();
    const IntPolynomial r_minus_1 = IntPolynomial::monomial(1, 1) - IntPolynomial(1L);
    while (g.degree() >= 1 && g.evaluate(mpq_class(1)) == 0) g = divide_exact(g, r_minus_1);
    if (g.degree() < 1) return 0;
    return count_real_roots_above(g, mpq_class(1));
}

DistinctnessReport distinctness_check(ModelId model, int n_lo, int n_hi, double tol, int precision_bits) {
    DistinctnessReport rep;
    std::ostringstream msg;
    if (!is_symmetric(model)) {
        rep.min_distance = INFINITY;
        for (int n = std::max(2, n_lo + n_lo % 2); n <= n_hi; n += 2) {
            const int count = imaginary_axis_root_count(model, 1, n);
            if (count != 1) {
                rep.ok = false;
                msg << "n=" << n << " has " << count << " imaginary-axis roots with r > 1; ";
            }
        }
        rep.detail = msg.str();
        return rep;
    }
    std::vector<std::vector<std::complex<double>>> poles;
    for (int n = n_lo; n <= n_hi; ++n) {
        std::vector<std::complex<double>> set;
        for (const auto& pc : classify_roots(model, 0, n, precision_bits)) {
            if (pc.verdict != PoleVerdict::pole_of_plus_branch) continue;
            const std::complex<double> z(pc.root.real().to_double(), pc.root.imag().to_double());
            if (std::abs(std::abs(z) - 1.0) > tol) set.push_back(z);
        }
        poles.push_back(std::move(set));
    }
    rep.min_distance = INFINITY;
    for (int a = n_lo; a <= n_hi; ++a) {
        for (int b = a + 1; b <= n_hi; ++b) {
            if (model == ModelId::B && b - a == 1) continue;
            for (const auto& za : poles[static_cast<std::size_t>(a - n_lo)]) {
                for (const auto& zb : poles[static_cast<std::size_t>(b - n_lo)]) {
                    const double d = std::abs(za - zb);
                    rep.min_distance = std::min(rep.min_distance, d);
                    if (d <= tol) {
                        rep.ok = false;
                        msg << "Y_" << a << " and Y_" << b << " share a pole near " << za << "; ";
                    }
                }
            }
        }
    }
    rep.detail = msg.str();
    return rep;
}

NoncancellationResult noncancellation_check(ModelId model, int n, const BigComplex& q_n, double tol) {
    require_symmetric(model);
    NoncancellationResult res;
    res.expected = -recurrence_epsilon(model);
    const BigComplex next = closed_form_ybar(model, n + 1, q_n, Branch::plus);
    const BigComplex prev = closed_form_ybar(model, n - 1, q_n, Branch::plus);
    res.sum = next + prev;
    res.residual = abs(res.sum - BigComplex(static_cast<long>(res.expected)));
    res.separation = abs(next - prev);
    const BigFloat t(tol);
    res.ok = res.residual < t && res.separation > t;
    return res;
}

}  // namespace qkernel
