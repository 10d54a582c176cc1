#include "qsvand/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsvand/error.hpp"
#include "qsvand/recurrence.hpp"

namespace qsvand {

namespace {

std::vector<double> uniform(std::size_t m, double lo, double hi, Rng& rng) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(m);
    for (double& x : v) x = dist(rng);
    return v;
}

}  // namespace

PolySystem random_system(PolyFamily family, std::size_t n, Rng& rng) {
    if (n == 0) throw InvalidSystem("n must be at least 1");
    const std::size_t m = n - 1;
    const double tau0 = uniform(1, 0.5, 1.5, rng)[0];
    auto alpha = uniform(m, 0.5, 1.5, rng);
    auto beta = uniform(m, -0.5, 0.5, rng);
    auto gamma = uniform(m, -0.5, 0.5, rng);
    auto delta = uniform(m, 0.5, 1.5, rng);
    auto theta = uniform(m, -0.5, 0.5, rng);
    if (family == PolyFamily::WellFree && m > 0) {
        beta[0] = 0.0;
        gamma[0] = 0.0;
    }
    return PolySystem(family, tau0, std::move(alpha), std::move(beta), std::move(gamma), std::move(delta),
                      std::move(theta));
}

NodeSet random_nodes(std::size_t n, Rng& rng) {
    std::uniform_real_distribution<double> dist(0.3, 2.0);
    std::vector<double> x;
    x.reserve(n);
    while (x.size() < n) {
        const double c = dist(rng);
        const bool close = std::any_of(x.begin(), x.end(), [c](double y) { return std::abs(c - y) < 1e-3; });
        if (!close) x.push_back(c);
    }
    return NodeSet(std::move(x));
}

DisplacementInstance random_instance(PolyFamily family, std::size_t n, std::size_t alpha_rank, Rng& rng,
                                     bool canonical) {
    PolySystem sys = random_system(family, n, rng);
    NodeSet nodes = random_nodes(n, rng);
    if (canonical) return canonical_vq_generators(sys, nodes);
    if (alpha_rank == 0) throw DimensionMismatch("displacement rank must be at least 1");
    DenseMatrix G = DenseMatrix::from_rows(n, alpha_rank, uniform(n * alpha_rank, -1.0, 1.0, rng));
    DenseMatrix B = DenseMatrix::from_rows(alpha_rank, n, uniform(alpha_rank * n, -1.0, 1.0, rng));
    return make_instance(std::move(sys), std::move(nodes), std::move(G), std::move(B));
}

std::vector<double> leja_chebyshev_points(std::size_t n) {
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = 2.0 * std::cos((2.0 * static_cast<double>(i) + 1.0) * std::numbers::pi / (2.0 * static_cast<double>(n)));
    // Greedy Leja order: start at the largest magnitude, then maximize the product of distances
    // (tracked as a log-sum to stay finite).
    std::vector<double> out;
    out.reserve(n);
    std::vector<bool> used(n, false);
    std::vector<double> logdist(n, 0.0);
    std::size_t next = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(c[i]) > std::abs(c[next])) next = i;
    while (out.size() < n) {
        used[next] = true;
        out.push_back(c[next]);
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            logdist[i] += std::log(std::abs(c[i] - c[next]));
            if (best == n || logdist[i] > logdist[best]) best = i;
        }
        next = best;
    }
    return out;
}

DisplacementInstance bench_instance(PolyFamily family, std::size_t n, std::size_t alpha_rank, Rng& rng) {
    if (n == 0) throw InvalidSystem("n must be at least 1");
    if (alpha_rank == 0) throw DimensionMismatch("displacement rank must be at least 1");
    const std::vector<double> z = leja_chebyshev_points(n);
    const std::size_t m = n - 1;
    std::vector<double> ones(m, 1.0), zeros(m, 0.0), shift(m);
    for (std::size_t k = 0; k < m; ++k) shift[k] = family == PolyFamily::WellFree ? z[k] : -z[k];
    PolySystem sys = family == PolyFamily::WellFree
                         ? PolySystem(family, 1.0, ones, zeros, zeros, shift, zeros)
                         : PolySystem(family, 1.0, ones, zeros, zeros, ones, shift);
    DisplacementInstance base = canonical_vq_generators(sys, NodeSet(z));
    if (alpha_rank == 1) return base;
    DenseMatrix G(n, alpha_rank), B(alpha_rank, n);
    const auto gx = uniform(n * (alpha_rank - 1), -1e-3, 1e-3, rng);
    const auto bx = uniform(n * (alpha_rank - 1), -1.0, 1.0, rng);
    for (std::size_t i = 0; i < n; ++i) {
        G(i, 0) = base.G(i, 0);
        for (std::size_t t = 1; t < alpha_rank; ++t) G(i, t) = gx[i * (alpha_rank - 1) + t - 1];
    }
    for (std::size_t j = 0; j < n; ++j) {
        B(0, j) = base.B(0, j);
        for (std::size_t t = 1; t < alpha_rank; ++t) B(t, j) = bx[(t - 1) * n + j];
    }
    return make_instance(std::move(sys), base.nodes, std::move(G), std::move(B));
}

}  // namespace qsvand
