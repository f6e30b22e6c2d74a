#include "qkernel/kernel_iter.hpp"

#include <stdexcept>
#include <string>

namespace qkernel {

namespace {

Series one(std::size_t order) { return Series::constant(1, order); }
Series t_series(std::size_t order) { return Series::monomial(1, order); }

Series small_root(const KernelPolys& k, const Series& x) {
    const std::size_t M = x.order();
    if (M == 0) throw std::invalid_argument("kernel root needs an argument of order >= 1");
    const Series t = t_series(M);
    const Series u = one(M) - t * eval_quadratic(k.q0(), x);
    const Series disc = u * u - shift(eval_quadratic(k.up, x), 2) * 4;
    const Series den = u + sqrt_one(disc.truncated(M));
    const Series num = shift(eval_quadratic(k.q_minus1(), x), 1).truncated(M) * 2;
    return divide_exact(num, den);
}

Series geometric_quotient(const Series& f, int size) {
    const Series den = one(f.order()) - t_series(f.order()) * size;
    return divide_exact(f, den);
}

}  // namespace

Series y_plus(ModelId model, const Series& x) { return small_root(y_kernel_polys(model), x); }

Series x_plus(ModelId model, const Series& y) { return small_root(x_kernel_polys(model), y); }

Series y_minus_scaled(ModelId model, const Series& x) {
    const KernelPolys k = y_kernel_polys(model);
    const std::size_t M = x.order();
    const Series t = t_series(M);
    const Series level_part = x - t * eval_quadratic(k.level, x);
    return divide_exact(level_part, eval_quadratic(k.up, x)) - t * y_plus(model, x);
}

IterateFamily iterate_symmetric(ModelId model, int n_max, int N) {
    if (n_max < 0 || N < 1) throw std::invalid_argument("iterate_symmetric: need n_max >= 0 and N >= 1");
    IterateFamily fam{model, {}};
    fam.items.reserve(static_cast<std::size_t>(n_max) + 1);
    fam.items.push_back(one(static_cast<std::size_t>(N)));
    for (int n = 1; n <= n_max; ++n) fam.items.push_back(y_plus(model, fam.items.back()));
    return fam;
}

Series gf_axis_symmetric(ModelId model, int N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    const std::size_t M = static_cast<std::size_t>(N) + 1;
    Series sum(M);
    Series prev = one(M);
    for (int n = 0;; ++n) {
        // Y_n Y_{n+1} has valuation 2n+1
        if (2 * n + 1 >= static_cast<int>(M)) break;
        Series next = y_plus(model, prev);
        const Series term = prev * next;
        sum = (n % 2 == 0) ? sum + term : sum - term;
        prev = std::move(next);
    }
    return Series(std::vector<mpq_class>(sum.coeffs().begin() + 1, sum.coeffs().end()));
}

Series gf_total_symmetric(ModelId model, int N) {
    const Series s01 = gf_axis_symmetric(model, N);
    const std::size_t M = static_cast<std::size_t>(N);
    const Series numer = one(M) - shift(s01, 1).truncated(M) * 2;
    return geometric_quotient(numer, cardinality(model));
}

AsymmetricFamilies iterate_asymmetric(ModelId model, int n_max, int N) {
    if (n_max < 0 || N < 1) throw std::invalid_argument("iterate_asymmetric: need n_max >= 0 and N >= 1");
    const std::size_t M = static_cast<std::size_t>(N);
    AsymmetricFamilies f{model, {}, {}, {}, {}};
    f.chi.push_back(one(M));
    f.y_of_chi.push_back(y_plus(model, f.chi.back()));
    f.upsilon.push_back(one(M));
    f.x_of_upsilon.push_back(x_plus(model, f.upsilon.back()));
    for (int n = 1; n <= n_max; ++n) {
        f.chi.push_back(x_plus(model, f.y_of_chi.back()));
        f.y_of_chi.push_back(y_plus(model, f.chi.back()));
        f.upsilon.push_back(y_plus(model, f.x_of_upsilon.back()));
        f.x_of_upsilon.push_back(x_plus(model, f.upsilon.back()));
    }
    return f;
}

AxisSums axis_sums_asymmetric(ModelId model, int N) {
    // left terms have valuation 4n-1 (n >= 1), right terms 4n+1
    const int n_max = N / 4 + 1;
    const AsymmetricFamilies f = iterate_asymmetric(model, n_max + 1, N);
    const std::size_t M = static_cast<std::size_t>(N);
    AxisSums s{Series(M), Series(M)};
    for (int n = 0; n <= n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n);
        const Series dl = n == 0 ? f.y_of_chi[0] : f.y_of_chi[i] - f.y_of_chi[i - 1];
        s.left = s.left + f.chi[i] * dl;
        s.right = s.right + f.x_of_upsilon[i] * (f.upsilon[i] - f.upsilon[i + 1]);
    }
    // the first omitted terms must vanish below t^N
    const std::size_t k = static_cast<std::size_t>(n_max) + 1;
    const Series next_left = f.chi[k] * (f.y_of_chi[k] - f.y_of_chi[k - 1]);
    if (!next_left.is_zero())
        throw std::logic_error("truncation unsound at n = " + std::to_string(k));
    return s;
}

Series gf_total_asymmetric(ModelId model, int N) {
    const AxisSums s = axis_sums_asymmetric(model, N);
    const Series numer = one(static_cast<std::size_t>(N)) - s.left - s.right;
    return geometric_quotient(numer, cardinality(model));
}

}  // namespace qkernel
