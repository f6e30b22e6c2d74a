#pragma once
// Growth constants at the dominant singularity t = 1/|S|.

#include "qkernel/bigfloat.hpp"
#include "qkernel/models.hpp"
#include "qkernel/series.hpp"

#include <optional>
#include <vector>

namespace qkernel {

struct KappaResult {
    ModelId model{};
    BigFloat estimate;
    BigFloat tail_bound;             // truncation error bound (or interval half-width)
    std::optional<BigFloat> lo, hi;  // enclosing interval when available
    int terms_used = 0;
    int growth_base = 0;             // |S|
    BigFloat subdominant_base;       // p_0 + 2 sqrt(p_1 p_{-1})
    int precision_bits = 0;
    bool rigorous = false;
};

/// QKERNEL_PRECISION_BITS if set and valid, otherwise 128.
int precision_from_environment();

BigFloat subdominant_base(ModelId model, int precision_bits);

/// kappa = 1 - 2 sum_{n=0}^{terms} (-1)^n Y_n(1) Y_{n+1}(1) at t = 1/|S|.
/// Throws std::runtime_error("alternating bound violated") if the terms are
/// not strictly decreasing.
KappaResult kappa_symmetric(ModelId model, int terms, int precision_bits);

/// Chooses terms for the requested number of digits and doubles the
/// precision on an alternating-bound failure.
KappaResult kappa_symmetric_auto(ModelId model, int digits, int precision_bits = 0);

/// Generating function of half-plane walks (y >= 0) that end on y = 0.
Series half_plane_gf(ModelId model, int N);

/// Residue constant of model E from the closed forms at q = 2 - sqrt(3).
/// Throws std::runtime_error("E-constant check failed") when the interval
/// leaves [122/525, 7/10].
KappaResult kappa_E(int terms, int precision_bits);

struct KappaDEstimate {
    BigFloat estimate;
    std::vector<double> normalised;  // D_n sqrt(n) / 3^n for n = 1..N
    bool rigorous = false;
};

/// Extrapolated limit of D_n sqrt(n) / 3^n from exact counts up to N.
KappaDEstimate kappa_D_empirical(int N, int precision_bits = 128);

/// kappa * |S|^n.
BigFloat predict(ModelId model, int n, const KappaResult& kappa);

}  // namespace qkernel
