#pragma once
// Singularity polynomials of the iterates in the q-plane and the numerical
// checks built on their roots.
//
// Symmetric models: the roots of sigma_n are the zeros of ybar_n under one
// of the two kernel branches. Asymmetric models: omega^i_n plays the same
// role for the i-th family (chi, Y(chi), Ups, X(Ups)).

#include "qkernel/bigfloat.hpp"
#include "qkernel/int_polynomial.hpp"
#include "qkernel/models.hpp"
#include "qkernel/qplane.hpp"
#include "qkernel/roots.hpp"

#include <string>
#include <vector>

namespace qkernel {

/// alpha_n, beta_n or gamma_n for models A, B, C; n >= 1.
IntPolynomial sigma_poly(ModelId model, int n);
/// omega^index_n for models D, E; index in 1..4, n >= 1.
IntPolynomial omega_poly(ModelId model, int index, int n);

/// Family attached to omega^index.
AsymFamily omega_family(int index);

/// "sigma" for symmetric models, "omega1".."omega4" otherwise.
std::string family_label(ModelId model, int index);
/// sigma_poly or omega_poly depending on the model.
IntPolynomial singularity_poly(ModelId model, int index, int n);

/// phi(theta) with X = cos(n theta); a root e^{i theta} of sigma_n needs phi = 0.
BigFloat unit_circle_phi(ModelId model, int n, const BigFloat& theta);

/// Half-width of the argument band around pi allowed for model B roots on
/// the unit circle: arccos(sqrt(2) - 1/2).
BigFloat model_b_band(int precision_bits);

enum class PoleVerdict { pole_of_plus_branch, pole_of_minus_branch, unresolved };

const char* verdict_name(PoleVerdict v);

struct PoleClassification {
    BigComplex root;
    PoleVerdict verdict = PoleVerdict::unresolved;
    BigFloat plus_residual;   // |ybar_n| with the plus branch
    BigFloat minus_residual;  // |ybar_n| with the minus branch
};

/// Decides which branch of ybar_n (or of the family reciprocal) vanishes at
/// q_root. The verdict must survive a refinement of the root to twice the
/// precision; otherwise it is unresolved.
PoleClassification classify_pole(ModelId model, int index, int n, const BigComplex& q_root);

/// Classifies every distinct root of the singularity polynomial.
std::vector<PoleClassification> classify_roots(ModelId model, int index, int n, int precision_bits = 256);

struct UnitCircleReport {
    bool ok = true;
    int near_circle = 0;  // roots within tol of |q| = 1
    int at_pm1 = 0;       // of those, roots within tol of +-1
    std::string detail;
};

/// Models A, C: near-circle roots are +-1. Model B: near-circle roots other
/// than +-1 lie in the argument band around pi.
UnitCircleReport unit_circle_check(ModelId model, const RootSet& roots, double tol = 1e-6);

struct ImaginaryAxisRoot {
    BigFloat r;             // root q = r i with 1 < r < 2
    BigFloat value_at_1;    // real form at r = 1
    BigFloat value_at_2;    // real form at r = 2
    BigFloat residual;      // |real form(r)|
    int descartes_changes;  // sign changes of the rationalised form in R = r^n
};

/// Real-valued restriction of the omega^1 factor (model D) or of the chi
/// reciprocal numerator (model E) to q = r i, for even n.
BigFloat imaginary_axis_form(ModelId model, int n, const BigFloat& r);

/// Bisection on (1, 2). Throws std::invalid_argument for odd n or n < 2 and
/// std::runtime_error when the endpoint signs agree.
ImaginaryAxisRoot imaginary_axis_root(ModelId model, int n, int precision_bits = 256);

/// Sign changes of the coefficient sequence in R of the rationalised form.
int descartes_sign_changes(ModelId model, const BigFloat& r);

/// Exact count of distinct roots q = r i with r > 1 of omega^index_n.
int imaginary_axis_root_count(ModelId model, int index, int n);

struct DistinctnessReport {
    bool ok = true;
    double min_distance = 0;  // smallest distance among compared pole pairs
    std::string detail;
};

/// Models A, B, C: off-circle plus-branch poles of Y_n and Y_k are apart by
/// more than tol (model B compares only |k - n| > 1). Models D, E: exactly
/// one imaginary-axis root with r > 1 for each even n in range.
DistinctnessReport distinctness_check(ModelId model, int n_lo, int n_hi, double tol = 1e-6,
                                      int precision_bits = 256);

struct NoncancellationResult {
    bool ok = false;
    BigComplex sum;         // ybar_{n+1} + ybar_{n-1} at the pole
    BigFloat residual;      // |sum - expected|
    BigFloat separation;    // |ybar_{n+1} - ybar_{n-1}|
    int expected = 0;       // -eps
};

/// At a pole q_n of Y_n the recurrence forces ybar_{n+1} + ybar_{n-1} = -eps,
/// so Y_{n+1} and Y_{n-1} cannot both be finite and equal there.
NoncancellationResult noncancellation_check(ModelId model, int n, const BigComplex& q_n, double tol = 1e-15);

}  // namespace qkernel
