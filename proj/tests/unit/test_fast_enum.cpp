#include "qkernel/fast_enum.hpp"
#include "qkernel/kernel_iter.hpp"
#include "qkernel/naive_enum.hpp"

#include <doctest.h>

using namespace qkernel;

namespace {
bool equals_counts(const IntSeries& s, const std::vector<mpz_class>& v) { return s.coeffs() == v; }
}  // namespace

TEST_CASE("recurrence shape") {
    CHECK(z_recurrence_symmetric(ModelId::A).epsilon == 0);
    CHECK(z_recurrence_symmetric(ModelId::B).epsilon == 1);
    CHECK(z_recurrence_symmetric(ModelId::C).lag_shift == 2);
    const auto za = z_sequence_symmetric(ModelId::A, 2, 20);
    CHECK(za[0] == IntSeries::constant(1, 20));
    CHECK(za[2] == za[1] - shift(za[0], 2).truncated(20));
    const auto zb = z_sequence_symmetric(ModelId::B, 2, 20);
    CHECK(zb[2] == zb[1] - shift(zb[0], 2).truncated(20) - IntSeries::monomial(2, 20));
}

TEST_CASE("Z_n inverts to the iterates") {
    const int N = 30;
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        const auto z = z_sequence_symmetric(m, 20, N);
        const auto fam = iterate_symmetric(m, 20, N);
        for (int n = 0; n <= 20; ++n) {
            CHECK(z[n][0] != 0);
            const IntSeries y = shift(reciprocal(z[n]), n).truncated(N);
            CHECK(to_rational_series(y) == fam.items[n]);
        }
    }
}

TEST_CASE("table rows") {
    CHECK(equals_counts(fast_series(ModelId::A, 11), {1, 1, 3, 7, 21, 55, 165, 457, 1371, 3909, 11727}));
    CHECK(equals_counts(fast_series(ModelId::C, 11), {1, 3, 13, 59, 279, 1341, 6527, 31995, 157659, 779601, 3864985}));
    CHECK(equals_counts(fast_series(ModelId::D, 11), {1, 1, 2, 4, 10, 23, 61, 153, 418, 1100, 3064}));
    CHECK(equals_counts(fast_series(ModelId::E, 11), {1, 2, 7, 24, 91, 339, 1316, 5064, 19876, 77655, 306653}));
}

TEST_CASE("fast path agrees with the other methods") {
    for (ModelId m : kAllModels) {
        const int N = is_symmetric(m) ? 120 : 80;
        const IntSeries f = fast_series(m, N);
        CHECK(equals_counts(f, count_all(m, N - 1)));
        const Series it = is_symmetric(m) ? gf_total_symmetric(m, N) : gf_total_asymmetric(m, N);
        CHECK(to_rational_series(f) == it);
    }
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        const auto r = fast_series_symmetric(m, 60);
        CHECK(to_rational_series(r.axis) == gf_axis_symmetric(m, 60));
        CHECK(r.total == fast_series_asymmetric(m, 60).total);
    }
}

TEST_CASE("recurrence phase performs no series multiplications") {
    for (ModelId m : kAllModels) {
        const FastStats s = is_symmetric(m) ? fast_series_symmetric(m, 80).stats : fast_series_asymmetric(m, 80).stats;
        CHECK(s.recurrence_ops == 0);
        CHECK(s.setup_ops > 0);
        CHECK(s.working_precision >= 80);
    }
}

TEST_CASE("precision 2N loses nothing compared with 3N") {
    for (ModelId m : kAllModels) {
        const int N = 50;
        const IntSeries a = is_symmetric(m) ? fast_series_symmetric(m, N, 2).total : fast_series_asymmetric(m, N, 2).total;
        const IntSeries b = is_symmetric(m) ? fast_series_symmetric(m, N, 3).total : fast_series_asymmetric(m, N, 3).total;
        CHECK(a == b);
    }
}

TEST_CASE("benchmark rows and slope") {
    const auto rows = benchmark(ModelId::A, {20, 40}, 40, 40);
    CHECK(rows.size() == 6);
    for (const auto& r : rows) {
        CHECK(r.model == ModelId::A);
        CHECK(r.seconds >= 0);
    }
    std::vector<BenchRow> synthetic{{ModelId::A, 10, "fast", 1.0, 0}, {ModelId::A, 100, "fast", 1000.0, 0}};
    CHECK(loglog_slope(synthetic, "fast") == doctest::Approx(3.0));
}
