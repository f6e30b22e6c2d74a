#include "qkernel/bigfloat.hpp"

#include <doctest.h>

using namespace qkernel;

TEST_CASE("arithmetic rounds to the larger precision") {
    BigFloat a(1L, 64), b(3L, 256);
    const BigFloat c = a / b;
    CHECK(c.precision() == 256);
    CHECK(abs(c * BigFloat(3L, 256) - BigFloat(1L, 256)) < BigFloat::pow2(-250, 256));
}

TEST_CASE("precision guard restores the default") {
    const int before = default_precision_bits();
    {
        PrecisionGuard g(300);
        CHECK(BigFloat(1L).precision() == 300);
    }
    CHECK(default_precision_bits() == before);
}

TEST_CASE("decimal parsing") {
    CHECK(BigFloat(std::string("0.25")) == BigFloat(1L) / BigFloat(4L));
    CHECK_THROWS_AS(BigFloat(std::string("abc")), std::invalid_argument);
}

TEST_CASE("principal complex square root") {
    PrecisionGuard g(128);
    const BigComplex m1(-1L);
    const BigComplex r = sqrt(m1);
    CHECK(r.real().is_zero());
    CHECK(r.imag() == BigFloat(1L));
    const BigComplex z(BigFloat(-3L), BigFloat(-4L));
    const BigComplex s = sqrt(z);
    CHECK(s.real() == BigFloat(1L));
    CHECK(s.imag() == BigFloat(-2L));
}

TEST_CASE("integer powers including negative exponents") {
    PrecisionGuard g(128);
    const BigComplex i(BigFloat(0L), BigFloat(1L));
    CHECK(abs(pow(i, 4) - BigComplex(1L)) < BigFloat(1e-30));
    CHECK(abs(pow(BigComplex(2L), -3) - BigComplex(BigFloat(0.125))) < BigFloat(1e-30));
}

TEST_CASE("formatting") {
    CHECK(BigFloat(0.5).to_fixed(3) == "0.500");
    CHECK(BigFloat(1L).to_string(17) == "1");
}
