#pragma once
// Fast enumeration through shift-add recurrences on normalised reciprocals.
//
// Symmetric models: Z_n = t^n / Y_n(1) satisfies
//     Z_n = Z_{n-1} - t^2 Z_{n-2} - eps * t^n
// with eps the number of E steps. Asymmetric models use four interleaved
// recurrences on t^{2n}/chi_n, t^{2n+1}/Y_+(chi_n), t^{2n}/Ups_n and
// t^{2n+1}/X_+(Ups_n). Only the base terms need a square root and a
// reciprocal; every later Z is built from shifts and additions.

#include "qkernel/models.hpp"
#include "qkernel/series.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qkernel {

struct ZRecurrence {
    int lag_shift = 2;  // Z_n = Z_{n-1} - t^lag_shift Z_{n-2} - eps t^n
    int epsilon = 0;
    std::string describe() const;
};

ZRecurrence z_recurrence_symmetric(ModelId model);

/// Z_0 .. Z_{n_max}, each to order precision.
std::vector<IntSeries> z_sequence_symmetric(ModelId model, int n_max, int precision);

/// Series-operation counts split by phase. recurrence_ops must stay zero.
struct FastStats {
    std::uint64_t setup_ops = 0;
    std::uint64_t recurrence_ops = 0;
    std::uint64_t recovery_ops = 0;
    int iterates = 0;
    int working_precision = 0;
};

struct FastSymmetricResult {
    IntSeries total;  // S(t) mod t^N
    IntSeries axis;   // S_{0,1}(t) mod t^N
    FastStats stats;
};

FastSymmetricResult fast_series_symmetric(ModelId model, int N, int precision_factor = 2);

struct FastAsymmetricResult {
    IntSeries total;
    FastStats stats;
};

/// Works for every model; for symmetric ones it reproduces the symmetric path.
FastAsymmetricResult fast_series_asymmetric(ModelId model, int N, int precision_factor = 2);

/// S_0..S_{N-1} by the fast path appropriate for the model.
IntSeries fast_series(ModelId model, int N);

struct BenchRow {
    ModelId model{};
    int N = 0;
    std::string method;
    double seconds = 0;
    std::size_t bytes = 0;  // peak GMP heap growth during the run
};

/// Times naive, iterated and fast enumeration. Methods whose cost would be
/// excessive are skipped above the given limits.
std::vector<BenchRow> benchmark(ModelId model, const std::vector<int>& sizes, int naive_limit = 400,
                                int iterated_limit = 400);

/// Least-squares slope of log(seconds) against log(N) for one method.
double loglog_slope(const std::vector<BenchRow>& rows, const std::string& method, int min_N = 0);

}  // namespace qkernel
