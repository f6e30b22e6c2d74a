#pragma once
// The five singular small-step models and their kernels.
//
// The kernel K(x,y) = xy - t*xy*S(x,y) is quadratic in y with coefficients
// that are polynomials in x of degree at most 2:
//
//     a2 = -t*up(x),   a1 = x - t*level(x),   a0 = -t*down(x)
//
// where up(x) = x*Q_1(x), level(x) = x*Q_0(x), down(x) = x*Q_{-1}(x). The same
// shape holds with x and y exchanged (P_i in place of Q_i).

#include "qkernel/bigfloat.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qkernel {

enum class ModelId { A, B, C, D, E };

inline constexpr std::array<ModelId, 5> kAllModels{ModelId::A, ModelId::B, ModelId::C, ModelId::D, ModelId::E};

struct Step {
    int dx;
    int dy;
    friend bool operator==(const Step&, const Step&) = default;
};

using StepSet = std::vector<Step>;

StepSet step_set(ModelId model);
bool is_symmetric(ModelId model);
int cardinality(ModelId model);

char model_letter(ModelId model);
std::optional<ModelId> parse_model(std::string_view text);

/// Step counts grouped by x-coordinate (p) and by y-coordinate (q).
struct InventoryCounts {
    int p_minus1 = 0, p_0 = 0, p_1 = 0;
    int q_minus1 = 0, q_0 = 0, q_1 = 0;
};

InventoryCounts inventory_counts(ModelId model);

/// Coefficients of x^0, x^1, x^2.
using Quadratic = std::array<int, 3>;

/// up/level/down polynomials for one orientation of the kernel.
struct KernelPolys {
    Quadratic up{};
    Quadratic level{};
    Quadratic down{};

    /// level(x)/x and down(x)/x; both exist since level(0) = down(0) = 0.
    Quadratic q0() const { return {level[1], level[2], 0}; }
    Quadratic q_minus1() const { return {down[1], down[2], 0}; }
};

/// Kernel viewed as a quadratic in y (coefficients are polynomials in x).
KernelPolys y_kernel_polys(ModelId model);
/// Kernel viewed as a quadratic in x (coefficients are polynomials in y).
KernelPolys x_kernel_polys(ModelId model);

/// Number of N steps (for the y-orientation: number of E steps). This is the
/// constant that appears in the reciprocal recurrences.
int level_shift(ModelId model, bool x_orientation);

template <class T>
T eval_quadratic(const Quadratic& c, const T& x) {
    T r = x * c[2] + c[1];
    return r * x + c[0];
}

template <class T>
struct QuadCoeffs {
    T a2, a1, a0;
};

/// Kernel coefficients in the t variable. `t` is passed in the domain of x.
template <class T>
QuadCoeffs<T> kernel_coeffs_t(const KernelPolys& k, const T& x, const T& t) {
    return {-(t * eval_quadratic(k.up, x)), x - t * eval_quadratic(k.level, x), -(t * eval_quadratic(k.down, x))};
}

template <class T>
QuadCoeffs<T> kernel_coeffs_t(ModelId model, const T& x, const T& t) {
    return kernel_coeffs_t(y_kernel_polys(model), x, t);
}

template <class T>
void check_q_parameter(const T& q) {
    if (q == T(0)) throw std::invalid_argument("q must be nonzero");
    if (T(1) + q * q == T(0)) throw std::invalid_argument("1 + q^2 must be nonzero");
}

/// Kernel coefficients after t = q/(1+q^2) and clearing the (1+q^2) factor.
template <class T>
QuadCoeffs<T> kernel_coeffs_q(const KernelPolys& k, const T& x, const T& q) {
    check_q_parameter(q);
    const T s = T(1) + q * q;
    return {-(q * eval_quadratic(k.up, x)), x * s - q * eval_quadratic(k.level, x), -(q * eval_quadratic(k.down, x))};
}

template <class T>
QuadCoeffs<T> kernel_coeffs_q(ModelId model, const T& x, const T& q) {
    return kernel_coeffs_q(y_kernel_polys(model), x, q);
}

/// Coefficients of x^2, x, 1 in the q-kernel at a fixed y.
template <class T>
QuadCoeffs<T> x_kernel_coeffs_q(ModelId model, const T& y, const T& q) {
    return kernel_coeffs_q(x_kernel_polys(model), y, q);
}

}  // namespace qkernel
