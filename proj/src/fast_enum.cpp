#include "qkernel/fast_enum.hpp"

#include "qkernel/kernel_iter.hpp"
#include "qkernel/naive_enum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <new>
#include <stdexcept>

namespace qkernel {

namespace {

// Heap accounting through the GMP allocation hooks.
struct GmpHeap {
    long long current = 0;
    long long peak = 0;
    bool installed = false;
};

GmpHeap& heap() {
    static GmpHeap h;
    return h;
}

void* tracked_alloc(std::size_t n) {
    GmpHeap& h = heap();
    h.current += static_cast<long long>(n);
    h.peak = std::max(h.peak, h.current);
    void* p = std::malloc(n);
    if (!p) throw std::bad_alloc();
    return p;
}

void* tracked_realloc(void* p, std::size_t old_size, std::size_t new_size) {
    GmpHeap& h = heap();
    h.current += static_cast<long long>(new_size) - static_cast<long long>(old_size);
    h.peak = std::max(h.peak, h.current);
    void* q = std::realloc(p, new_size);
    if (!q) throw std::bad_alloc();
    return q;
}

void tracked_free(void* p, std::size_t n) {
    heap().current -= static_cast<long long>(n);
    std::free(p);
}

void install_tracking() {
    if (heap().installed) return;
    mp_set_memory_functions(tracked_alloc, tracked_realloc, tracked_free);
    heap().installed = true;
}

// out = a - t^2 b - eps t^k, all of the same order.
void advance(std::vector<mpz_class>& out, const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, int eps,
             std::size_t k) {
    const std::size_t n = a.size();
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 2)
            out[i] = a[i] - b[i - 2];
        else
            out[i] = a[i];
    }
    if (eps != 0 && k < n) out[k] -= eps;
}

IntSeries inverse_to(const std::vector<mpz_class>& z, std::size_t order) {
    return reciprocal(IntSeries(std::vector<mpz_class>(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(order))));
}

// f += t^offset * g, within the order of f.
void add_shifted(IntSeries& f, const IntSeries& g, std::size_t offset, int sign = 1) {
    for (std::size_t i = 0; i < g.order() && offset + i < f.order(); ++i) {
        if (sign > 0)
            f[offset + i] += g[i];
        else
            f[offset + i] -= g[i];
    }
}

// t^2 g - h, both truncated to order.
IntSeries shifted_difference(const IntSeries& g, const IntSeries& h, std::size_t order) {
    IntSeries r(order);
    for (std::size_t i = 0; i < order; ++i) {
        r[i] = (i >= 2 ? g[i - 2] : mpz_class(0)) - h[i];
    }
    return r;
}

// t / root(1), known to order `precision`.
std::vector<mpz_class> normalised_base(ModelId model, bool x_root, std::size_t precision) {
    const Series arg = Series::constant(1, precision + 1);
    const Series r = x_root ? x_plus(model, arg) : y_plus(model, arg);
    return to_integer_series(divide_exact(Series::monomial(1, precision + 1), r)).coeffs();
}

IntSeries divide_geometric(IntSeries f, int size) {
    for (std::size_t i = 1; i < f.order(); ++i) f[i] += size * f[i - 1];
    return f;
}

void require_size(int N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
}

}  // namespace

std::string ZRecurrence::describe() const {
    std::string s = "Z_n = Z_{n-1} - t^" + std::to_string(lag_shift) + " Z_{n-2}";
    if (epsilon != 0) s += " - " + (epsilon == 1 ? std::string() : std::to_string(epsilon) + " ") + "t^n";
    return s;
}

ZRecurrence z_recurrence_symmetric(ModelId model) {
    if (!is_symmetric(model)) throw std::invalid_argument("z recurrence needs a symmetric model");
    return {2, level_shift(model, false)};
}

std::vector<IntSeries> z_sequence_symmetric(ModelId model, int n_max, int precision) {
    const ZRecurrence rec = z_recurrence_symmetric(model);
    const std::size_t P = static_cast<std::size_t>(precision);
    std::vector<IntSeries> z;
    z.push_back(IntSeries::constant(1, P));
    if (n_max >= 1) z.emplace_back(normalised_base(model, false, P));
    for (int n = 2; n <= n_max; ++n) {
        std::vector<mpz_class> next;
        advance(next, z[n - 1].coeffs(), z[n - 2].coeffs(), rec.epsilon, static_cast<std::size_t>(n));
        z.emplace_back(std::move(next));
    }
    return z;
}

FastSymmetricResult fast_series_symmetric(ModelId model, int N, int precision_factor) {
    require_size(N);
    const ZRecurrence rec = z_recurrence_symmetric(model);
    const std::size_t M = static_cast<std::size_t>(N);
    const std::size_t P = static_cast<std::size_t>(precision_factor) * M;
    FastSymmetricResult out;
    out.stats.working_precision = static_cast<int>(P);

    SeriesOpCounters& ops = series_op_counters();
    std::uint64_t mark = ops.total();
    std::vector<mpz_class> z_prev(P), z_cur = normalised_base(model, false, P), z_next;
    z_prev[0] = 1;
    out.stats.setup_ops += ops.total() - mark;

    // S_{0,1} = sum_n (-1)^n t^{2n} W_n W_{n+1},  W_n = 1/Z_n
    IntSeries axis(M);
    IntSeries w_cur = IntSeries::constant(1, M);
    for (int n = 0; 2 * n < N; ++n) {
        const std::size_t ord = M - 2 * static_cast<std::size_t>(n);
        if (n >= 1) {
            mark = ops.total();
            advance(z_next, z_cur, z_prev, rec.epsilon, static_cast<std::size_t>(n + 1));
            std::swap(z_prev, z_cur);
            std::swap(z_cur, z_next);
            out.stats.recurrence_ops += ops.total() - mark;
        }
        mark = ops.total();
        const IntSeries w_next = inverse_to(z_cur, ord);
        const IntSeries term = mul(w_cur.truncated(ord), w_next);
        add_shifted(axis, term, 2 * static_cast<std::size_t>(n), n % 2 == 0 ? 1 : -1);
        w_cur = w_next;
        out.stats.recovery_ops += ops.total() - mark;
        out.stats.iterates = n + 1;
    }

    IntSeries numer(M);
    numer[0] = 1;
    for (std::size_t i = 1; i < M; ++i) numer[i] = -2 * axis[i - 1];
    out.total = divide_geometric(std::move(numer), cardinality(model));
    out.axis = std::move(axis);
    return out;
}

FastAsymmetricResult fast_series_asymmetric(ModelId model, int N, int precision_factor) {
    require_size(N);
    const int eps_x = level_shift(model, true);
    const int eps_y = level_shift(model, false);
    const std::size_t M = static_cast<std::size_t>(N);
    const std::size_t P = static_cast<std::size_t>(precision_factor) * M;
    const long long Nl = N;
    FastAsymmetricResult out;
    out.stats.working_precision = static_cast<int>(P);

    SeriesOpCounters& ops = series_op_counters();
    std::uint64_t mark = ops.total();
    // c = t^{2n}/chi_n, d = t^{2n+1}/Y_+(chi_n), e = t^{2n}/Ups_n, f = t^{2n+1}/X_+(Ups_n)
    std::vector<mpz_class> c(P), d = normalised_base(model, false, P), e(P), f = normalised_base(model, true, P);
    c[0] = 1;
    e[0] = 1;
    std::vector<mpz_class> c2, d2, e2, f2;
    out.stats.setup_ops += ops.total() - mark;

    IntSeries left(M), right(M);
    mark = ops.total();
    IntSeries d_inv_prev, e_inv_prev, f_inv_prev;
    if (M > 1) {
        d_inv_prev = inverse_to(d, M - 1);
        add_shifted(left, d_inv_prev, 1);
        f_inv_prev = inverse_to(f, M - 1);
        e_inv_prev = inverse_to(e, M - 1);
    }
    out.stats.recovery_ops += ops.total() - mark;

    for (long long n = 1;; ++n) {
        const long long ord_left = Nl - 4 * n + 1;
        const long long ord_right = Nl - 4 * (n - 1) - 1;  // right term of index n-1
        if (ord_left <= 0 && ord_right <= 0) break;

        mark = ops.total();
        const std::size_t k = static_cast<std::size_t>(2 * n);
        advance(c2, d, c, eps_x, k);
        advance(d2, c2, d, eps_y, k + 1);
        advance(e2, f, e, eps_y, k);
        advance(f2, e2, f, eps_x, k + 1);
        std::swap(c, c2);
        std::swap(d, d2);
        std::swap(e, e2);
        std::swap(f, f2);
        out.stats.recurrence_ops += ops.total() - mark;

        mark = ops.total();
        if (ord_right > 0) {
            const std::size_t ord = static_cast<std::size_t>(ord_right);
            const IntSeries e_inv = inverse_to(e, ord);
            const IntSeries term = mul(f_inv_prev.truncated(ord), shifted_difference(e_inv, e_inv_prev, ord) * -1);
            add_shifted(right, term, static_cast<std::size_t>(4 * (n - 1) + 1));
            const long long next_ord = Nl - 4 * n - 1;
            if (next_ord > 0) {
                f_inv_prev = inverse_to(f, static_cast<std::size_t>(next_ord));
                e_inv_prev = e_inv.truncated(static_cast<std::size_t>(next_ord));
            }
        }
        if (ord_left > 0) {
            const std::size_t ord = static_cast<std::size_t>(ord_left);
            const IntSeries c_inv = inverse_to(c, ord);
            const IntSeries d_inv = inverse_to(d, ord);
            const IntSeries term = mul(c_inv, shifted_difference(d_inv, d_inv_prev.truncated(ord), ord));
            add_shifted(left, term, static_cast<std::size_t>(4 * n - 1));
            d_inv_prev = d_inv;
        }
        out.stats.recovery_ops += ops.total() - mark;
        out.stats.iterates = static_cast<int>(n);
    }

    IntSeries numer(M);
    numer[0] = 1;
    for (std::size_t i = 0; i < M; ++i) numer[i] -= left[i] + right[i];
    out.total = divide_geometric(std::move(numer), cardinality(model));
    return out;
}

IntSeries fast_series(ModelId model, int N) {
    return is_symmetric(model) ? fast_series_symmetric(model, N).total : fast_series_asymmetric(model, N).total;
}

std::vector<BenchRow> benchmark(ModelId model, const std::vector<int>& sizes, int naive_limit, int iterated_limit) {
    install_tracking();
    std::vector<BenchRow> rows;
    auto measure = [&](int N, const std::string& method, auto&& fn) {
        GmpHeap& h = heap();
        const long long base = h.current;
        h.peak = h.current;
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        rows.push_back({model, N, method, std::chrono::duration<double>(stop - start).count(),
                        static_cast<std::size_t>(std::max(0LL, h.peak - base))});
    };
    for (int N : sizes) {
        if (N <= naive_limit) measure(N, "naive", [&] { (void)count_all(model, N - 1); });
        if (N <= iterated_limit)
            measure(N, "iterated", [&] {
                (void)(is_symmetric(model) ? gf_total_symmetric(model, N) : gf_total_asymmetric(model, N));
            });
        measure(N, "fast", [&] { (void)fast_series(model, N); });
    }
    return rows;
}

double loglog_slope(const std::vector<BenchRow>& rows, const std::string& method, int min_N) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const BenchRow& r : rows) {
        if (r.method != method || r.N < min_N || r.seconds <= 0) continue;
        const double x = std::log(static_cast<double>(r.N)), y = std::log(r.seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) return std::nan("");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qkernel
