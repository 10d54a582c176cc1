#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qsvand/basis_transform.hpp"
#include "qsvand/dense.hpp"
#include "qsvand/displacement.hpp"
#include "qsvand/fast_gepp.hpp"
#include "qsvand/poly_systems.hpp"

namespace qsvand {

// d_1..d_n, stored 0-based.
struct SumCoefficients {
    std::vector<double> d;
};

// V_F(1/x)[i][j] = F_j(1/x_i) with F_{n-1} = 0, F_k(y) = y (F_{k+1}(y) + d_{k+2}).
struct VfMatrix {
    DenseMatrix values;
};

VfMatrix build_vf(const NodeSet& nodes, const SumCoefficients& d);

// V_Q(x) * sum_k d_k W_Q^{k-1} in O(n^2), without forming W_Q.
DenseMatrix fast_sum_product(const PolySystem& sys, const NodeSet& nodes, const SumCoefficients& d);
// Same, reusing S_PQ when several coefficient rows share a system.
DenseMatrix fast_sum_product(const PolySystem& sys, const NodeSet& nodes, const SumCoefficients& d,
                             const BasisMatrix& basis);

// How the exchange matrix in front of the inversion sum is realized.
enum class Exchange {
    Reversal,  // anti-identity; the correct convention
    Identity,  // kept only so tests can show it fails
};

// Which Horner route the inversion takes.
enum class HornerRoute {
    FamilyDefault,  // hat_qs / hat_ss / hat_qs(wf_to_qs)
    ThreeTerm,      // hat_wf on the quasiseparable form; needs every beta_k != 0
};

// How the rows of A_i = V_{Q-hat} p_i(W_{Q-hat}) are evaluated. Both are O(alpha n^2).
enum class SumEvaluation {
    // Row j is u_i (I - x_j W-hat)^{-1} with u_i = d_i S_{PQ-hat}: one structured solve per node,
    // no monomial coefficients. Accurate to roughly the dense inverse.
    Resolvent,
    // d_i = u_i S_{PQ-hat}^{-1}, then the V_F sum identity. The monomial coefficients of the
    // Horner system cancel heavily, so accuracy degrades quickly with n.
    MonomialBasis,
};

struct InvertOptions {
    double hat_tau0 = 1.0;
    SumEvaluation evaluation = SumEvaluation::Resolvent;
    Exchange exchange = Exchange::Reversal;
    HornerRoute route = HornerRoute::FamilyDefault;
    // Also fill InverseResult::residuals; needs the dense R, O(n^3).
    bool compute_residuals = false;
};

struct ResidualReport {
    double left = 0.0;   // ||R R^{-1} - I||_inf
    double right = 0.0;  // ||R^{-1} R - I||_inf
};

struct InverseResult {
    DenseMatrix rinv;
    std::optional<ResidualReport> residuals;
};

// c (n x alpha): columns D_x R^{-T} B^T. dmat (alpha x n): G^T R^{-T} I~ S_{PQ-hat}^{-1}.
struct CidikResult {
    DenseMatrix c;
    DenseMatrix dmat;
};

CidikResult cidik(const DisplacementInstance& inst, const PluFactorization& fact, const BasisMatrix& s_hat,
                  Exchange exchange = Exchange::Reversal);

// All entries of R^{-1} in O(alpha n^2).
InverseResult invert(const DisplacementInstance& inst, const InvertOptions& options = {});

ResidualReport residual_report(const DenseMatrix& R, const DenseMatrix& rinv);

}  // namespace qsvand
