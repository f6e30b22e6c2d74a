#pragma once
// Kernel roots and closed forms after the substitution t = q/(1+q^2).
//
// Branch::plus is the root with a minus sign in front of the square root,
// the one that is analytic at q = 0. The principal square root is used
// throughout. Reciprocals are written with a bar: ybar_n = 1/Y_n(1).

#include "qkernel/bigfloat.hpp"
#include "qkernel/models.hpp"

namespace qkernel {

enum class Branch { plus, minus };

const char* branch_name(Branch b);

/// Y_pm(x; q), root of the q-kernel viewed as a quadratic in y.
BigComplex y_root_q(ModelId model, const BigComplex& x, const BigComplex& q, Branch branch);
/// X_pm(y; q), root of the q-kernel viewed as a quadratic in x.
BigComplex x_root_q(ModelId model, const BigComplex& y, const BigComplex& q, Branch branch);

/// Throws std::domain_error for q in {0, 1, -1, i, -i}.
void require_regular_q(const BigComplex& q);

/// ybar_n(q) for the symmetric models; n may be negative.
BigComplex closed_form_ybar(ModelId model, long n, const BigComplex& q, Branch branch = Branch::plus);

enum class AsymFamily { chi, y_of_chi, upsilon, x_of_upsilon };

const char* family_name(AsymFamily f);

/// Reciprocal of chi_n, Y_+(chi_n), Ups_n or X_+(Ups_n) at x = y = 1.
BigComplex closed_form_asymmetric(ModelId model, AsymFamily family, long n, const BigComplex& q,
                                  Branch branch = Branch::plus);

/// t = q/(1+q^2); rejects q = +-i.
BigComplex t_plane_map(const BigComplex& q);

/// Constant eps in ybar_n = (q + 1/q) ybar_{n-1} - ybar_{n-2} - eps.
int recurrence_epsilon(ModelId model);

}  // namespace qkernel
