#include "qkernel/asymptotics.hpp"
#include "qkernel/naive_enum.hpp"

#include <doctest.h>

#include <cmath>

using namespace qkernel;

TEST_CASE("symmetric constants to eight decimals") {
    const double expect[] = {0.17317888355, 0.15194581080, 0.38220125855};
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        const KappaResult k = kappa_symmetric(m, 40, 256);
        CHECK(std::abs(k.estimate.to_double() - expect[static_cast<int>(m)]) < 1e-10);
        CHECK(k.tail_bound.to_double() > 0);
        CHECK(k.tail_bound.to_double() < 1e-8);
        CHECK(k.growth_base == cardinality(m));
        CHECK(k.subdominant_base < BigFloat(static_cast<long>(cardinality(m))));
    }
}

TEST_CASE("estimate is stable under more terms and more precision") {
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        const KappaResult a = kappa_symmetric(m, 20, 128);
        const KappaResult b = kappa_symmetric(m, 40, 256);
        CHECK(abs(a.estimate - b.estimate) <= a.tail_bound);
    }
    const KappaResult automatic = kappa_symmetric_auto(ModelId::C, 30);
    CHECK(automatic.tail_bound < BigFloat(1e-30));
}

TEST_CASE("half-plane series") {
    const Series h = half_plane_gf(ModelId::A, 5);
    CHECK(h[0] == 1);
    CHECK(h[1] == 0);
    CHECK(h[2] == 2);
    CHECK(h[3] == 0);
    CHECK(h[4] == 8);
    for (ModelId m : kAllModels) {
        const Series s = half_plane_gf(m, 31);
        const auto oracle = count_half_plane(m, 30);
        for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(s[i] == oracle[i]);
    }
}

TEST_CASE("model E constant") {
    const KappaResult e = kappa_E(30, 256);
    CHECK(std::abs(e.estimate.to_double() - 0.2636) < 5e-4);
    CHECK(*e.lo >= BigFloat(mpq_class(122, 525)));
    CHECK(*e.hi <= BigFloat(mpq_class(7, 10)));
}

TEST_CASE("model D empirical constant") {
    const KappaDEstimate d = kappa_D_empirical(200);
    CHECK_FALSE(d.rigorous);
    CHECK(d.estimate >= BigFloat(0L));
    CHECK(d.estimate.to_double() <= std::sqrt(3 / M_PI));
    for (double v : d.normalised) CHECK(v > 0);
}

TEST_CASE("prediction error decays") {
    const KappaResult a = kappa_symmetric(ModelId::A, 30, 128);
    const auto s = count_all(ModelId::A, 12);
    auto rel = [&](int n) { return std::abs(predict(ModelId::A, n, a).to_double() / s[n].get_d() - 1); };
    CHECK(rel(10) < rel(5));
    CHECK(predict(ModelId::A, 0, a) == a.estimate);
    const KappaResult c = kappa_symmetric(ModelId::C, 30, 128);
    CHECK(std::abs(predict(ModelId::C, 10, c).to_double() / 3864985.0 - 1) < 0.05);
}

TEST_CASE("environment precision") {
    setenv("QKERNEL_PRECISION_BITS", "300", 1);
    CHECK(precision_from_environment() == 300);
    setenv("QKERNEL_PRECISION_BITS", "junk", 1);
    CHECK(precision_from_environment() == 128);
    unsetenv("QKERNEL_PRECISION_BITS");
}
