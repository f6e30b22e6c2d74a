#include "qkernel/singularities.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qkernel;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
    std::vector<mpz_class> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

BigComplex polar(double r, double theta, int prec) {
    PrecisionGuard g(prec);
    return BigComplex::polar(BigFloat(r), BigFloat(theta));
}

}  // namespace

TEST_CASE("tabulated polynomials at small n") {
    CHECK(sigma_poly(ModelId::A, 2) == P({1, 0, 1, 0, -4, 0, 1, 0, 1}));
    CHECK(sigma_poly(ModelId::A, 1) == P({2, 0, -4, 0, 2}));
    CHECK(sigma_poly(ModelId::B, 1).degree() == 6);
    const IntPolynomial q2m1 = P({-1, 0, 1});
    CHECK(omega_poly(ModelId::D, 1, 1) == IntPolynomial::monomial(4, 4) * q2m1.pow(4));
    // B, n = 2 collapses to its roots at +-1
    CHECK(sigma_poly(ModelId::B, 2) == P({2}) * q2m1.pow(4));
}

TEST_CASE("model E omega^1 at n = 2") {
    const IntPolynomial w = omega_poly(ModelId::E, 1, 2);
    // q^2 (q^4 - q^2 + 1)(q^16 + 1) + 2 q^2 (q^4 - 4q^2 + 1)(q^12 + q^4) + (q^8 - 10q^6 + 24q^4 - 10q^2 + 1) q^8
    IntPolynomial expect = IntPolynomial::monomial(1, 2) * P({1, 0, -1, 0, 1}) * (IntPolynomial::monomial(1, 16) + 1) +
                           IntPolynomial::monomial(2, 2) * P({1, 0, -4, 0, 1}) *
                               (IntPolynomial::monomial(1, 12) + IntPolynomial::monomial(1, 4)) +
                           P({1, 0, -10, 0, 24, 0, -10, 0, 1}) * IntPolynomial::monomial(1, 8);
    CHECK(w == expect);
    CHECK(w.degree() == 22);
}

TEST_CASE("palindromic singularity polynomials") {
    for (int n = 1; n <= 20; ++n) {
        for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) CHECK(sigma_poly(m, n).is_palindromic());
        for (ModelId m : {ModelId::D, ModelId::E})
            for (int i = 1; i <= 4; ++i) CHECK(omega_poly(m, i, n).is_palindromic());
    }
}

TEST_CASE("unit-circle function") {
    PrecisionGuard g(128);
    const BigFloat pi = BigFloat::pi(128);
    CHECK(unit_circle_phi(ModelId::A, 5, BigFloat(0L)).is_zero());
    CHECK(abs(unit_circle_phi(ModelId::A, 2, pi / BigFloat(2L)) + BigFloat(4L)) < BigFloat(1e-30));
    // phi_B has no zero on (0, pi) below the band
    const double band = model_b_band(64).to_double();
    CHECK(band == doctest::Approx(std::acos(std::sqrt(2.0) - 0.5)));
    for (int n = 2; n <= 12; ++n) {
        bool outside_band = false;
        double prev = unit_circle_phi(ModelId::B, n, BigFloat(1e-4)).to_double();
        for (int k = 2; k < 4000; ++k) {
            const double th = k * (std::numbers::pi - band) / 4000;
            const double v = unit_circle_phi(ModelId::B, n, BigFloat(th)).to_double();
            if (v * prev < 0) outside_band = true;
            prev = v;
        }
        CHECK_FALSE(outside_band);
    }
}

TEST_CASE("closed forms") {
    const BigComplex q = polar(1.2, 0.45 * std::numbers::pi, 256);
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        CHECK(abs(closed_form_ybar(m, 0, q) - BigComplex(1L)) < BigFloat(1e-60));
        const BigComplex inv = BigComplex(BigFloat(1L, 256)) / q;
        CHECK(abs(closed_form_ybar(m, 3, q) - closed_form_ybar(m, -3, inv)) < BigFloat(1e-50));
        CHECK(closed_form_ybar(m, 4, conj(q)) == conj(closed_form_ybar(m, 4, q)));
    }
    const BigComplex small = polar(0.7, 1.1, 256);
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        const double r30 = abs(closed_form_ybar(m, 30, small) / closed_form_ybar(m, 32, small)).to_double();
        const double r40 = abs(closed_form_ybar(m, 40, small) / closed_form_ybar(m, 42, small)).to_double();
        CHECK(std::abs(r40 - 0.49) < std::abs(r30 - 0.49) + 1e-12);
        CHECK(r40 == doctest::Approx(0.49).epsilon(1e-3));
    }
    // at index 0 the families start from x = 1 and y = 1
    const BigComplex one(BigFloat(1L, 256));
    for (ModelId m : {ModelId::D, ModelId::E}) {
        CHECK(abs(closed_form_asymmetric(m, AsymFamily::chi, 0, small) - one) < BigFloat(1e-60));
        CHECK(abs(closed_form_asymmetric(m, AsymFamily::upsilon, 0, small) - one) < BigFloat(1e-60));
        CHECK(abs(closed_form_asymmetric(m, AsymFamily::y_of_chi, 0, small) - one / y_root_q(m, one, small, Branch::plus)) <
              BigFloat(1e-60));
        CHECK(abs(closed_form_asymmetric(m, AsymFamily::x_of_upsilon, 0, small) - one / x_root_q(m, one, small, Branch::plus)) <
              BigFloat(1e-60));
    }
    // consecutive chi reciprocals grow by |q|^-2 inside the disc
    const double ratio = abs(closed_form_asymmetric(ModelId::E, AsymFamily::chi, 31, small) /
                             closed_form_asymmetric(ModelId::E, AsymFamily::chi, 30, small))
                             .to_double();
    CHECK(ratio == doctest::Approx(std::pow(0.7, -2)).epsilon(1e-4));
    CHECK_THROWS_AS(closed_form_ybar(ModelId::A, 2, BigComplex(1L)), std::domain_error);
    CHECK_THROWS_AS(closed_form_ybar(ModelId::A, 2, BigComplex(BigFloat(0L), BigFloat(1L))), std::domain_error);
}

TEST_CASE("t-plane map") {
    CHECK(t_plane_map(BigComplex(1L)) == BigComplex(BigFloat(0.5)));
    PrecisionGuard g(256);
    const BigComplex q(BigFloat(2L) - sqrt(BigFloat(3L)));
    CHECK(abs(t_plane_map(q) - BigComplex(BigFloat(0.25))) < BigFloat(1e-70));
    CHECK_THROWS_AS(t_plane_map(BigComplex(BigFloat(0L), BigFloat(-1L))), std::domain_error);
}

TEST_CASE("gamma_2 roots reach the circle |t| = 1/2") {
    const RootSet t = to_t_plane(find_roots(sigma_poly(ModelId::C, 2)));
    int hits = 0;
    for (const Root& r : t.roots) {
        const double re = r.z.real().to_double(), im = r.z.imag().to_double();
        if (std::abs(re + 0.25) < 1e-10 && std::abs(std::abs(im) - std::sqrt(3.0) / 4) < 1e-10) {
            ++hits;
            CHECK(std::abs(abs(r.z).to_double() - 0.5) < 1e-10);
        }
    }
    CHECK(hits >= 2);
}

TEST_CASE("pole classification") {
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        for (int n = 3; n <= 8; ++n) {
            for (const auto& pc : classify_roots(m, 0, n)) {
                const double arg = std::abs(std::atan2(pc.root.imag().to_double(), pc.root.real().to_double()));
                const double mod = abs(pc.root).to_double();
                if (m == ModelId::A && mod > 1 && arg > 3 * std::numbers::pi / 8 && arg < std::numbers::pi / 2)
                    CHECK(pc.verdict == PoleVerdict::pole_of_plus_branch);
                if (pc.root.imag().sign() > 0) {
                    CHECK(classify_pole(m, 0, n, conj(pc.root)).verdict == pc.verdict);
                }
            }
        }
    }
    // +-1 are excluded parameter values
    CHECK(classify_pole(ModelId::A, 0, 2, BigComplex(BigFloat(1L, 256))).verdict == PoleVerdict::unresolved);
}

TEST_CASE("omega polynomials carry the poles of their families") {
    for (ModelId m : {ModelId::D, ModelId::E}) {
        for (int i = 1; i <= 4; ++i) {
            int poles = 0;
            for (const auto& pc : classify_roots(m, i, 3)) poles += pc.verdict != PoleVerdict::unresolved;
            CHECK(poles > 0);
        }
    }
}

TEST_CASE("unit-circle exclusion and convergence to the circle") {
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        double last = 1e9;
        for (int n : {5, 10, 15, 20}) {
            const RootSet rs = find_roots(sigma_poly(m, n));
            CHECK(unit_circle_check(m, rs).ok);
            double worst = 0;
            for (const Root& r : rs.roots) {
                const double a = abs(r.z).to_double();
                if (a > 0) worst = std::max(worst, std::abs(a - 1));
            }
            CHECK(worst <= last);
            if (n == 20) {
                CHECK(worst < 0.25);
            }
            last = worst;
        }
    }
}

TEST_CASE("imaginary-axis roots for even n") {
    const int sizes[] = {2, 4, 6, 8};
    for (int n : sizes) {
        const ImaginaryAxisRoot d = imaginary_axis_root(ModelId::D, n);
        CHECK(d.value_at_1 == BigFloat(4L));
        CHECK(d.value_at_2.sign() < 0);
        CHECK(d.r > BigFloat(1L));
        CHECK(d.r < BigFloat(2L));
        CHECK(d.descartes_changes == 2);
        const ImaginaryAxisRoot e = imaginary_axis_root(ModelId::E, n);
        CHECK(abs(e.value_at_1 - BigFloat(8L)) < BigFloat(1e-60));
        CHECK(e.value_at_2.sign() < 0);
        CHECK(e.descartes_changes == 2);
        PrecisionGuard g(256);
        for (ModelId m : {ModelId::D, ModelId::E}) {
            const BigFloat r = (m == ModelId::D ? d : e).r;
            CHECK(abs(omega_poly(m, 1, n).evaluate(BigComplex(BigFloat(0L), r))) < BigFloat(1e-60));
            CHECK(imaginary_axis_root_count(m, 1, n) == 1);
        }
    }
    const BigFloat two(2L, 128);
    CHECK(imaginary_axis_form(ModelId::D, 2, two) == BigFloat(-500L));
    CHECK_THROWS_AS(imaginary_axis_root(ModelId::D, 3), std::invalid_argument);
    CHECK_THROWS_AS(imaginary_axis_root(ModelId::A, 2), std::invalid_argument);
}

TEST_CASE("omega^3 and omega^4 avoid the imaginary axis beyond i") {
    for (ModelId m : {ModelId::D, ModelId::E})
        for (int i : {3, 4})
            for (int n = 1; n <= 12; ++n) CHECK(imaginary_axis_root_count(m, i, n) == 0);
}

TEST_CASE("distinct poles across indices") {
    for (ModelId m : kAllModels) {
        const DistinctnessReport r = distinctness_check(m, 2, 10);
        CHECK_MESSAGE(r.ok, r.detail);
    }
}

TEST_CASE("non-cancellation at poles") {
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        for (const auto& pc : classify_roots(m, 0, 3)) {
            if (pc.verdict != PoleVerdict::pole_of_plus_branch) continue;
            const NoncancellationResult r = noncancellation_check(m, 3, pc.root, 1e-20);
            CHECK(r.ok);
            CHECK(r.expected == -recurrence_epsilon(m));
        }
    }
}
