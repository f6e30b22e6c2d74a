#include "qkernel/models.hpp"

#include <algorithm>

namespace qkernel {

namespace {

constexpr Step NW{-1, 1}, N{0, 1}, NE{1, 1}, E{1, 0}, SE{1, -1};

// Coefficients of x^0..x^2 in x * sum_{steps with dy = j} x^dx.
Quadratic inventory_row(const StepSet& steps, int j, bool by_x) {
    Quadratic r{};
    for (const Step& s : steps) {
        const int along = by_x ? s.dy : s.dx;  // exponent of the free variable
        const int across = by_x ? s.dx : s.dy;
        if (across == j) r[along + 1] += 1;
    }
    return r;
}

KernelPolys polys(ModelId model, bool by_x) {
    const StepSet steps = step_set(model);
    return {inventory_row(steps, 1, by_x), inventory_row(steps, 0, by_x), inventory_row(steps, -1, by_x)};
}

}  // namespace

StepSet step_set(ModelId model) {
    switch (model) {
        case ModelId::A: return {NW, NE, SE};
        case ModelId::B: return {NW, N, E, SE};
        case ModelId::C: return {NW, N, NE, E, SE};
        case ModelId::D: return {NW, N, SE};
        case ModelId::E: return {NW, N, NE, SE};
    }
    throw std::invalid_argument("unknown model");
}

bool is_symmetric(ModelId model) { return model == ModelId::A || model == ModelId::B || model == ModelId::C; }

int cardinality(ModelId model) { return static_cast<int>(step_set(model).size()); }

char model_letter(ModelId model) { return static_cast<char>('A' + static_cast<int>(model)); }

std::optional<ModelId> parse_model(std::string_view text) {
    if (text.size() != 1) return std::nullopt;
    const char c = text[0];
    if (c >= 'A' && c <= 'E') return static_cast<ModelId>(c - 'A');
    if (c >= 'a' && c <= 'e') return static_cast<ModelId>(c - 'a');
    return std::nullopt;
}

InventoryCounts inventory_counts(ModelId model) {
    InventoryCounts c;
    for (const Step& s : step_set(model)) {
        (s.dx == -1 ? c.p_minus1 : s.dx == 0 ? c.p_0 : c.p_1) += 1;
        (s.dy == -1 ? c.q_minus1 : s.dy == 0 ? c.q_0 : c.q_1) += 1;
    }
    return c;
}

KernelPolys y_kernel_polys(ModelId model) { return polys(model, false); }
KernelPolys x_kernel_polys(ModelId model) { return polys(model, true); }

int level_shift(ModelId model, bool x_orientation) {
    const StepSet steps = step_set(model);
    const Step target = x_orientation ? N : E;
    return static_cast<int>(std::count(steps.begin(), steps.end(), target));
}

}  // namespace qkernel
