#include "qkernel/roots.hpp"

#include <doctest.h>

#include <random>

using namespace qkernel;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
    std::vector<mpz_class> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

bool conjugation_closed(const RootSet& rs) {
    for (const Root& r : rs.roots) {
        bool found = false;
        for (const Root& s : rs.roots) found = found || (s.z == conj(r.z) && s.multiplicity == r.multiplicity);
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("quadratic with irrational roots") {
    const RootSet rs = find_roots(P({-2, 0, 1}), 256);
    REQUIRE(rs.roots.size() == 2);
    PrecisionGuard g(256);
    const BigFloat s2 = sqrt(BigFloat(2L));
    CHECK(abs(rs.roots[0].z - BigComplex(-s2)) < BigFloat::pow2(-200, 256));
    CHECK(abs(rs.roots[1].z - BigComplex(s2)) < BigFloat::pow2(-200, 256));
}

TEST_CASE("repeated roots at plus and minus one") {
    const RootSet rs = find_roots(P({2, 0, -4, 0, 2}));
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.total_multiplicity() == 4);
    CHECK(rs.roots[0].z == BigComplex(-1L));
    CHECK(rs.roots[0].multiplicity == 2);
    CHECK(rs.roots[1].z == BigComplex(1L));
    CHECK(rs.expanded().size() == 4);
}

TEST_CASE("random polynomials: residuals, Vieta and conjugation") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        const int d = 3 + trial * 3;
        std::vector<mpz_class> c;
        for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(rng() % 41) - 20);
        if (c.back() == 0) c.back() = 7;
        if (c.front() == 0) c.front() = -3;
        const IntPolynomial p(std::move(c));
        const RootSet rs = find_roots(p, 192);
        CHECK(rs.total_multiplicity() == d);
        CHECK(conjugation_closed(rs));
        PrecisionGuard g(192);
        const BigFloat bound = BigFloat::pow2(-96, 192);
        BigComplex sum(0L), prod(1L);
        for (const BigComplex& z : rs.expanded()) {
            CHECK(abs(p.evaluate(z)) < bound);
            sum += z;
            prod *= z;
        }
        const BigFloat lead(p.leading());
        CHECK(abs(sum + BigComplex(BigFloat(p.coeff(d - 1)) / lead)) < BigFloat(1e-40));
        const BigFloat sign(d % 2 ? -1L : 1L);
        CHECK(abs(prod - BigComplex(sign * BigFloat(p.coeff(0)) / lead)) < BigFloat(1e-30) * max(BigFloat(1L), abs(prod)));
    }
}

TEST_CASE("roots at zero and refinement") {
    const RootSet rs = find_roots(P({0, 0, -3, 1}));
    CHECK(rs.total_multiplicity() == 3);
    const BigComplex z = refine_root(P({-2, 0, 1}), BigComplex(BigFloat(1.4)), 512);
    PrecisionGuard g(512);
    CHECK(abs(z - BigComplex(sqrt(BigFloat(2L)))) < BigFloat::pow2(-500, 512));
    CHECK_THROWS_AS(find_roots(P({5})), std::invalid_argument);
}

TEST_CASE("t-plane images") {
    const RootSet q = find_roots(P({1, -4, 1}));
    const RootSet t = to_t_plane(q);
    CHECK(t.plane == Plane::t);
    for (const Root& r : t.roots) CHECK(abs(r.z - BigComplex(BigFloat(0.25))) < BigFloat(1e-60));
    CHECK(to_t_plane(find_roots(P({1, 0, 1}))).roots.empty());
}
