#pragma once
// Certified complex roots of integer polynomials.
//
// Multiplicities come from an exact square-free decomposition; each square-free
// factor is solved by Aberth-Ehrlich iteration in double precision and then
// polished at the requested binary precision.

#include "qkernel/bigfloat.hpp"
#include "qkernel/int_polynomial.hpp"
#include "qkernel/models.hpp"

#include <string>
#include <vector>

namespace qkernel {

enum class Plane { q, t };

const char* plane_name(Plane p);

struct Root {
    BigComplex z;
    int multiplicity = 1;
    BigFloat residual;  // |p(z)| for the polynomial passed to find_roots
};

struct RootSet {
    ModelId model{};
    std::string family;
    int n = 0;
    Plane plane = Plane::q;
    int precision_bits = 0;
    std::vector<Root> roots;

    /// One entry per root counted with multiplicity.
    std::vector<BigComplex> expanded() const;
    int total_multiplicity() const;
};

/// All complex roots of p. Each root satisfies |p(z)| < 2^(-precision/2).
/// The precision is doubled up to twice on failure, after which
/// std::runtime_error is thrown.
RootSet find_roots(const IntPolynomial& p, int precision_bits = 256);

/// Newton refinement of a simple root of p at a higher precision.
BigComplex refine_root(const IntPolynomial& p, const BigComplex& z, int precision_bits);

/// Images of the roots under t = q/(1+q^2). Roots at q = +-i are dropped.
RootSet to_t_plane(const RootSet& q_roots);

}  // namespace qkernel
