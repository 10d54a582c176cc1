#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsvand/poly_systems.hpp"

namespace qsvand {

struct BenchRow {
    std::size_t n = 0;
    double fast_seconds = 0.0;
    // Dense materialize + inverse; only measured up to the oracle size limit.
    std::optional<double> oracle_seconds;
};

struct BenchOptions {
    PolyFamily family = PolyFamily::Quasiseparable;
    std::vector<std::size_t> sizes;
    std::size_t alpha_rank = 1;
    std::size_t reps = 1;
    std::uint64_t seed = 0;
    std::size_t oracle_limit = 512;
    // Each repetition repeats the call until this much time has passed and reports the mean;
    // keeps sub-millisecond sizes above timer and scheduler noise.
    double min_batch_seconds = 0.02;
};

// Median over reps of the per-call wall time of the fast inversion (and the dense oracle) on
// bench_instance. All fast repetitions run back to back, then all oracle repetitions. On glibc
// the first call raises the allocator's mmap threshold for the rest of the process.
std::vector<BenchRow> run_bench(const BenchOptions& options);

double median(std::vector<double> values);
// Least-squares slope of log(y) against log(x); needs at least two distinct x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace qsvand
