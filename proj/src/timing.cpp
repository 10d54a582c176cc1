#include "qsvand/timing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "qsvand/error.hpp"
#include "qsvand/inversion.hpp"
#include "qsvand/oracle.hpp"
#include "qsvand/random.hpp"

namespace qsvand {

namespace {

using Clock = std::chrono::steady_clock;

// Matrices above glibc's mmap threshold come back as fresh zero-filled pages on every call, so
// a timing loop would mostly measure page faults. Keep large blocks in the heap instead.
void keep_large_blocks_on_heap() {
#if defined(__GLIBC__)
    static const bool done = [] {
        mallopt(M_MMAP_THRESHOLD, 1 << 30);
        mallopt(M_TRIM_THRESHOLD, 1 << 30);
        return true;
    }();
    (void)done;
#endif
}

// Seconds per call, averaged over as many back-to-back calls as fit in min_seconds (at least one).
template <class F>
double time_batch(F&& f, double min_seconds) {
    const auto t0 = Clock::now();
    std::size_t calls = 0;
    double elapsed = 0.0;
    do {
        f();
        ++calls;
        elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    } while (elapsed < min_seconds);
    return elapsed / static_cast<double>(calls);
}

template <class F>
double median_time(F&& f, std::size_t reps, double min_seconds) {
    f();  // warm-up
    std::vector<double> t;
    for (std::size_t r = 0; r < reps; ++r) t.push_back(time_batch(f, min_seconds));
    return median(std::move(t));
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    if (options.sizes.empty()) throw DimensionMismatch("bench needs at least one size");
    if (options.reps == 0) throw DimensionMismatch("bench needs at least one repetition");
    keep_large_blocks_on_heap();
    std::vector<BenchRow> rows;
    for (std::size_t n : options.sizes) {
        Rng rng(options.seed);
        const DisplacementInstance inst = bench_instance(options.family, n, options.alpha_rank, rng);
        BenchRow row;
        row.n = n;
        row.fast_seconds = median_time([&] { (void)invert(inst); }, options.reps, options.min_batch_seconds);
        if (n <= options.oracle_limit)
            row.oracle_seconds = median_time([&] { (void)oracle::dense_inverse(materialize(inst)); }, options.reps,
                                             options.min_batch_seconds);
        rows.push_back(row);
    }
    return rows;
}

double median(std::vector<double> values) {
    if (values.empty()) throw DimensionMismatch("median of an empty set");
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size() / 2;
    return values.size() % 2 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw DimensionMismatch("slope fit needs two or more points");
    const std::size_t m = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DimensionMismatch("slope fit needs positive data");
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw DimensionMismatch("slope fit needs two distinct x values");
    return sxy / sxx;
}

}  // namespace qsvand
