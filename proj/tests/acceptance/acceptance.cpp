// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any gating criterion fails.

#include "qkernel/asymptotics.hpp"
#include "qkernel/fast_enum.hpp"
#include "qkernel/kernel_iter.hpp"
#include "qkernel/naive_enum.hpp"
#include "qkernel/singularities.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace qkernel;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<long>& table_row(ModelId m) {
    static const std::vector<long> rows[5] = {
        {1, 1, 3, 7, 21, 55, 165, 457, 1371, 3909, 11727},
        {1, 2, 6, 20, 70, 254, 942, 3550, 13532, 52030, 201386},
        {1, 3, 13, 59, 279, 1341, 6527, 31995, 157659, 779601, 3864985},
        {1, 1, 2, 4, 10, 23, 61, 153, 418, 1100, 3064},
        {1, 2, 7, 24, 91, 339, 1316, 5064, 19876, 77655, 306653},
    };
    return rows[static_cast<int>(m)];
}

std::vector<mpz_class> iterated(ModelId m, int N) {
    const Series s = is_symmetric(m) ? gf_total_symmetric(m, N) : gf_total_asymmetric(m, N);
    return to_integer_series(s).coeffs();
}

Outcome table_exactness() {
    const auto t0 = Clock::now();
    std::ostringstream bad;
    for (ModelId m : kAllModels) {
        const std::vector<mpz_class> ref(table_row(m).begin(), table_row(m).end());
        if (count_all(m, 10) != ref) bad << model_letter(m) << ":naive ";
        if (iterated(m, 11) != ref) bad << model_letter(m) << ":iterated ";
        if (fast_series(m, 11).coeffs() != ref) bad << model_letter(m) << ":fast ";
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << "5 models x 3 methods, 11 terms, " << s << " s";
    if (!bad.str().empty()) d << "; mismatches: " << bad.str();
    return {bad.str().empty() && s < 1.0, d.str()};
}

Outcome cross_method() {
    const auto t0 = Clock::now();
    std::ostringstream d;
    bool ok = true;
    for (ModelId m : kAllModels) {
        const int N = is_symmetric(m) ? 200 : 100;
        const auto f = fast_series(m, N).coeffs();
        const bool agree = f == iterated(m, N) && f == count_all(m, N - 1);
        ok = ok && agree;
        d << model_letter(m) << "@" << N << (agree ? " ok  " : " MISMATCH  ");
    }
    d << "(" << seconds_since(t0) << " s)";
    return {ok, d.str()};
}

Outcome kappa_constants() {
    const char* expect[] = {"0.17317888", "0.15194581", "0.38220125"};
    std::ostringstream d;
    bool ok = true;
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        const KappaResult k = kappa_symmetric_auto(m, 10);
        const std::string digits = k.estimate.to_fixed(12).substr(0, 10);
        const bool good = digits == expect[static_cast<int>(m)] && k.tail_bound < BigFloat(1e-8);
        ok = ok && good;
        d << model_letter(m) << "=" << k.estimate.to_fixed(12) << " (tail " << k.tail_bound.to_string(2) << ") ";
    }
    return {ok, d.str()};
}

Outcome kappa_de() {
    const KappaResult e = kappa_E(40, 256);
    const bool e_ok = std::abs(e.estimate.to_double() - 0.2636) <= 5e-4 && *e.lo >= BigFloat(mpq_class(122, 525)) &&
                      *e.hi <= BigFloat(mpq_class(7, 10));
    const KappaDEstimate d = kappa_D_empirical(500);
    const double dv = d.estimate.to_double();
    const bool d_ok = dv >= 0 && dv <= std::sqrt(3 / M_PI);
    std::ostringstream s;
    s << "kappa_E=" << e.estimate.to_string(10) << " in [" << e.lo->to_string(10) << ", " << e.hi->to_string(10)
      << "]; kappa_D~" << d.estimate.to_string(6) << " (N=500, empirical)";
    return {e_ok && d_ok, s.str()};
}

Outcome subdominant_ratio() {
    std::ostringstream d;
    bool ok = true;
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        const KappaResult k = kappa_symmetric(m, 40, 256);
        const IntSeries s = fast_series(m, 61);
        PrecisionGuard g(256);
        double early = 0, late = 0;
        for (int n = 20; n <= 60; ++n) {
            const double r =
                (abs(BigFloat(s[n]) - predict(m, n, k)) / pow(k.subdominant_base, n)).to_double();
            (n <= 40 ? early : late) = std::max(n <= 40 ? early : late, r);
        }
        const bool good = std::isfinite(late) && late <= 4 * early;
        ok = ok && good;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%c max[20,40]=%.3g max[41,60]=%.3g  ", model_letter(m), early, late);
        d << buf;
    }
    return {ok, d.str()};
}

Outcome singularity_polynomials() {
    bool pal = true;
    for (int n = 1; n <= 20; ++n) {
        for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) pal = pal && sigma_poly(m, n).is_palindromic();
        for (ModelId m : {ModelId::D, ModelId::E})
            for (int i = 1; i <= 4; ++i) pal = pal && omega_poly(m, i, n).is_palindromic();
    }
    int hits = 0;
    for (const Root& r : to_t_plane(find_roots(sigma_poly(ModelId::C, 2))).roots) {
        const double re = r.z.real().to_double(), im = r.z.imag().to_double();
        const bool on_circle = std::abs(abs(r.z).to_double() - 0.5) < 1e-10;
        if (on_circle && std::abs(re + 0.25) < 1e-10 && std::abs(std::abs(im) - std::sqrt(3.0) / 4) < 1e-10) ++hits;
    }
    bool circle = true;
    std::ostringstream bad;
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        for (int n = 1; n <= 20; ++n) {
            const UnitCircleReport rep = unit_circle_check(m, find_roots(sigma_poly(m, n)));
            if (!rep.ok) {
                circle = false;
                bad << model_letter(m) << n << ": " << rep.detail << "; ";
            }
        }
    }
    std::ostringstream d;
    d << "palindromic " << (pal ? "yes" : "NO") << "; gamma_2 roots at -1/4 +- (sqrt3/4)i: " << hits
      << "; unit-circle exclusion n<=20 " << (circle ? "holds" : "VIOLATED " + bad.str());
    return {pal && hits >= 2 && circle, d.str()};
}

Outcome imaginary_axis() {
    std::ostringstream d;
    bool ok = true;
    for (ModelId m : {ModelId::D, ModelId::E}) {
        const BigFloat at_one(m == ModelId::D ? 4L : 8L);
        d << model_letter(m) << ":";
        for (int n : {2, 4, 6, 8}) {
            const ImaginaryAxisRoot r = imaginary_axis_root(m, n);
            const bool good = abs(r.value_at_1 - at_one) < BigFloat(1e-60) && r.value_at_2.sign() < 0 &&
                              r.r > BigFloat(1L) && r.r < BigFloat(2L) && r.descartes_changes <= 2 &&
                              imaginary_axis_root_count(m, 1, n) == 1;
            ok = ok && good;
            d << " r" << n << "=" << r.r.to_string(8);
        }
        d << "  ";
    }
    return {ok, d.str()};
}

Outcome noncancellation() {
    std::ostringstream missing;
    int pairs_ok = 0, literal = 0;
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        for (int n = 2; n <= 8; ++n) {
            bool witnessed = false, literal_witness = false;
            for (const auto& pc : classify_roots(m, 0, n, 256)) {
                if (pc.verdict != PoleVerdict::pole_of_plus_branch) continue;
                const NoncancellationResult r = noncancellation_check(m, n, pc.root, 1e-15);
                witnessed = witnessed || r.ok;
                const BigComplex eps(static_cast<long>(recurrence_epsilon(m)));
                literal_witness = literal_witness || abs(r.sum - eps) < BigFloat(1e-15);
            }
            pairs_ok += witnessed;
            literal += literal_witness;
            if (!witnessed) missing << model_letter(m) << n << ' ';
        }
    }
    std::ostringstream d;
    d << pairs_ok << "/21 (model, n) pairs have a pole with ybar_{n+1}+ybar_{n-1} = -eps";
    if (!missing.str().empty()) d << "; no classified pole for: " << missing.str();
    d << "; with +eps: " << literal << "/21";
    return {pairs_ok == 21, d.str()};
}

Outcome property_suites() {
    std::mt19937_64 rng(2024);
    int failures = 0, checks = 0;
    auto expect = [&](bool b) {
        ++checks;
        failures += !b;
    };
    // series round trips
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 20 + rng() % 120;
        IntSeries g(n);
        g[0] = 1;
        for (std::size_t i = 1; i < n; ++i) g[i] = static_cast<long>(rng() % 2001) - 1000;
        const IntSeries f = mul(g, g);
        expect(sqrt_one(f) == g);
        expect(mul(g, reciprocal(g)) == IntSeries::constant(1, n));
    }
    // kernel annihilation and Vieta at random series points
    for (ModelId m : kAllModels) {
        const std::size_t N = 24;
        Series x = Series::constant(1, N);
        for (std::size_t i = 1; i < N; ++i) x[i] = mpq_class(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
        for (auto& c : x.coeffs()) c.canonicalize();
        const Series t = Series::monomial(1, N);
        const KernelPolys k = y_kernel_polys(m);
        auto poly = [&](const Quadratic& c) { return x * x * c[2] + x * c[1] + c[0]; };
        const Series yp = y_plus(m, x), tym = y_minus_scaled(m, x);
        const auto kc = kernel_coeffs_t(m, x, t);
        expect((kc.a2 * yp * yp + kc.a1 * yp + kc.a0).is_zero());
        expect(yp * tym * poly(k.up) == t * poly(k.down));
        expect((t * yp + tym) * poly(k.up) == x - t * poly(k.level));
        const Series recip = divide_exact(t, yp) + divide_exact(t * t, tym);
        expect(recip * poly(k.down) == (x - t * poly(k.level)).truncated(recip.order()));
    }
    // coefficient domination by the half-plane series
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        const Series h = half_plane_gf(m, 51), a = gf_axis_symmetric(m, 51);
        for (std::size_t i = 0; i < 51; ++i) expect(a[i] <= h[i]);
    }
    // alternating terms strictly decrease (kappa_symmetric throws otherwise)
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        try {
            (void)kappa_symmetric(m, 60, 256);
            expect(true);
        } catch (const std::runtime_error&) {
            expect(false);
        }
    }
    std::ostringstream d;
    d << checks - failures << "/" << checks << " randomized and exact property checks";
    return {failures == 0, d.str()};
}

Outcome performance() {
    const auto rows = benchmark(ModelId::A, {250, 500, 1000, 2000}, 500, 250);
    double fast2000 = -1;
    for (const BenchRow& r : rows)
        if (r.method == "fast" && r.N == 2000) fast2000 = r.seconds;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "informational: fast N=2000 model A in %.1f s; log-log slopes fast %.2f, naive %.2f "
                  "(theory: ~3 vs ~4)",
                  fast2000, loglog_slope(rows, "fast"), loglog_slope(rows, "naive"));
    return {fast2000 >= 0, buf};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"table rows exact on all three methods", table_exactness},
        {"cross-method agreement to N = 200 / 100", cross_method},
        {"kappa_A, kappa_B, kappa_C to 8 decimals", kappa_constants},
        {"kappa_E interval and kappa_D range", kappa_de},
        {"subdominant error ratio bounded", subdominant_ratio},
        {"singularity polynomials and unit circle", singularity_polynomials},
        {"imaginary-axis roots for D and E", imaginary_axis},
        {"non-cancellation witnesses", noncancellation},
        {"property suites", property_suites},
        {"performance report", performance},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
                  << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
