#pragma once
// Iterated kernel method in the t variable with exact rational series.
//
// Y_+(x) is the kernel root that is a power series in t. It is evaluated as
//
//     Y_+(x) = 2t*Q_{-1}(x) / (u + sqrt(u^2 - 4t^2*up(x))),   u = 1 - t*Q_0(x),
//
// whose denominator has constant term 2, so no division by t is needed.

#include "qkernel/models.hpp"
#include "qkernel/series.hpp"

#include <vector>

namespace qkernel {

/// Root of the y-kernel at a series argument x.
Series y_plus(ModelId model, const Series& x);
/// Root of the x-kernel at a series argument y.
Series x_plus(ModelId model, const Series& y);
/// t*Y_-(x), the large root scaled by t, obtained as -t*a1/a2 - t*Y_+.
Series y_minus_scaled(ModelId model, const Series& x);

struct IterateFamily {
    ModelId model{};
    std::vector<Series> items;
};

/// Y_0(1), ..., Y_{n_max}(1), each known modulo t^N.
IterateFamily iterate_symmetric(ModelId model, int n_max, int N);

/// S_{0,1}(t) modulo t^N.
Series gf_axis_symmetric(ModelId model, int N);
/// S(t) modulo t^N for a symmetric model.
Series gf_total_symmetric(ModelId model, int N);

/// The four families evaluated at 1:
///   chi_n = X_+(Y_+(chi_{n-1})),  y_n = Y_+(chi_n),
///   ups_n = Y_+(X_+(ups_{n-1})),  x_n = X_+(ups_n).
struct AsymmetricFamilies {
    ModelId model{};
    std::vector<Series> chi, y_of_chi, upsilon, x_of_upsilon;
};

AsymmetricFamilies iterate_asymmetric(ModelId model, int n_max, int N);

/// L(1) = sum_n chi_n (y_n - y_{n-1}) and R(1) = sum_n x_n (ups_n - ups_{n+1}).
struct AxisSums {
    Series left, right;
};

AxisSums axis_sums_asymmetric(ModelId model, int N);

/// S(t) modulo t^N via (1 - L(1) - R(1)) / (1 - |S| t). Accepts every model.
Series gf_total_asymmetric(ModelId model, int N);

}  // namespace qkernel
