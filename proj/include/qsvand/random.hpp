#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qsvand/displacement.hpp"
#include "qsvand/poly_systems.hpp"

namespace qsvand {

using Rng = std::mt19937_64;

// alpha, delta ~ U[0.5, 1.5]; beta, gamma, theta ~ U[-0.5, 0.5]; tau0 ~ U[0.5, 1.5].
// Well-free systems get beta_1 = gamma_1 = 0.
PolySystem random_system(PolyFamily family, std::size_t n, Rng& rng);

// U[0.3, 2.0], redrawn until every pair is at least 1e-3 apart.
NodeSet random_nodes(std::size_t n, Rng& rng);

// Random system and nodes; G, B ~ U[-1, 1], or the rank-one V_Q generators when canonical.
DisplacementInstance random_instance(PolyFamily family, std::size_t n, std::size_t alpha_rank, Rng& rng,
                                     bool canonical = false);

// n Chebyshev points of the first kind on [-2, 2] (capacity one), in Leja order.
std::vector<double> leja_chebyshev_points(std::size_t n);

// Timing instance that stays numerically nonsingular for large n: the Newton basis
// Q_k = prod_{i<k} (x - z_i) over z = leja_chebyshev_points(n), written in the requested
// family and sampled at the same points, so V_Q is lower triangular and well scaled.
// The first generator pair is the rank-one V_Q pair; further ones are U[-1, 1] scaled by 1e-3.
DisplacementInstance bench_instance(PolyFamily family, std::size_t n, std::size_t alpha_rank, Rng& rng);

}  // namespace qsvand
