#include "qkernel/naive_enum.hpp"

#include <stdexcept>

namespace qkernel {

namespace {

// Layer of counts on a (width x height) grid; x is offset by x0.
struct Layer {
    int width = 0, height = 0;
    std::vector<mpz_class> cells;
    mpz_class& at(int i, int j) { return cells[static_cast<std::size_t>(j) * width + i]; }
};

template <class Visit>
void run_dp(ModelId model, int N, bool quarter, Visit&& visit) {
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    const StepSet steps = step_set(model);
    const int x0 = quarter ? 0 : N;
    Layer cur{x0 + N + 1, N + 1, {}}, next = cur;
    cur.cells.resize(static_cast<std::size_t>(cur.width) * cur.height);
    next.cells.resize(cur.cells.size());
    cur.at(x0, 0) = 1;
    visit(0, cur, x0);
    for (int n = 1; n <= N; ++n) {
        // after n-1 steps the walk lies within distance n-1 of the start
        const int reach = n - 1;
        for (auto& c : next.cells) c = 0;
        for (int j = 0; j <= std::min(reach, cur.height - 1); ++j) {
            for (int i = std::max(0, x0 - reach); i <= std::min(x0 + reach, cur.width - 1); ++i) {
                const mpz_class& c = cur.at(i, j);
                if (c == 0) continue;
                for (const Step& s : steps) {
                    const int ni = i + s.dx, nj = j + s.dy;
                    if (nj < 0 || ni < 0 || ni >= cur.width || nj >= cur.height) continue;
                    next.at(ni, nj) += c;
                }
            }
        }
        std::swap(cur.cells, next.cells);
        visit(n, cur, x0);
    }
}

}  // namespace

std::vector<mpz_class> count_all(ModelId model, int N) {
    std::vector<mpz_class> out;
    run_dp(model, N, true, [&](int, Layer& layer, int) {
        mpz_class s = 0;
        for (const auto& c : layer.cells) s += c;
        out.push_back(s);
    });
    return out;
}

std::vector<mpz_class> count_axis(ModelId model, int N, Axis axis) {
    std::vector<mpz_class> out;
    run_dp(model, N, true, [&](int, Layer& layer, int) {
        mpz_class s = 0;
        switch (axis) {
            case Axis::x_axis:
                for (int i = 0; i < layer.width; ++i) s += layer.at(i, 0);
                break;
            case Axis::y_axis:
                for (int j = 0; j < layer.height; ++j) s += layer.at(0, j);
                break;
            case Axis::origin: s = layer.at(0, 0); break;
        }
        out.push_back(s);
    });
    return out;
}

std::vector<mpz_class> count_half_plane(ModelId model, int N) {
    std::vector<mpz_class> out;
    run_dp(model, N, false, [&](int, Layer& layer, int) {
        mpz_class s = 0;
        for (int i = 0; i < layer.width; ++i) s += layer.at(i, 0);
        out.push_back(s);
    });
    return out;
}

}  // namespace qkernel
