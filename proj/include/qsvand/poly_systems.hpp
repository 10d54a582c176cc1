#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qsvand/dense.hpp"

namespace qsvand {

enum class PolyFamily {
    Quasiseparable,  // [G_k; Q_k] = [a b; g  d x + t] [G_{k-1}; Q_{k-1}]
    Semiseparable,   // [G_k; Q_k] = [a b; g 1] [G_{k-1}; (d x + t) Q_{k-1}]
    WellFree,        // Q_k = (a x - d) Q_{k-1} - (b x + g) Q_{k-2}
};

std::string_view to_string(PolyFamily family);
// Accepts "qs"/"ss"/"wf" and the full lower-case names.
PolyFamily parse_family(std::string_view text);

// Recurrence generators of Q_0..Q_{n-1}.
//
// Generator arrays hold indices 1..n-1: alpha(k) reads element k-1 of the
// array passed to the constructor. Family conventions for index 0 and the
// auxiliary start value:
//   Quasiseparable  G_0 = 0.
//   Semiseparable   beta_0 = 1, G_0 = beta_0 * Q_0 = tau0.
//   WellFree        alpha_0 = 1, beta_1 = 0 (Q_{-1} = 0, so beta_1 and gamma_1 are ignored).
class PolySystem {
public:
    PolySystem(PolyFamily family, double tau0, std::vector<double> alpha, std::vector<double> beta,
               std::vector<double> gamma, std::vector<double> delta, std::vector<double> theta);

    PolyFamily family() const noexcept { return family_; }
    std::size_t size() const noexcept { return n_; }
    double tau0() const noexcept { return tau0_; }

    double alpha(std::size_t k) const { return alpha_[k - 1]; }
    double beta(std::size_t k) const { return beta_[k - 1]; }
    double gamma(std::size_t k) const { return gamma_[k - 1]; }
    double delta(std::size_t k) const { return delta_[k - 1]; }
    double theta(std::size_t k) const { return theta_[k - 1]; }

    // Leading-coefficient ratio tau_k of the general recurrence, k = 1..n-1.
    double tau(std::size_t k) const {
        return family_ == PolyFamily::WellFree ? alpha_[k - 1] : delta_[k - 1];
    }

    std::span<const double> alphas() const noexcept { return alpha_; }
    std::span<const double> betas() const noexcept { return beta_; }
    std::span<const double> gammas() const noexcept { return gamma_; }
    std::span<const double> deltas() const noexcept { return delta_; }
    std::span<const double> thetas() const noexcept { return theta_; }

    bool operator==(const PolySystem&) const = default;

private:
    PolyFamily family_;
    std::size_t n_;
    double tau0_;
    std::vector<double> alpha_, beta_, gamma_, delta_, theta_;
};

// Sample nodes x_1..x_n: finite, nonzero, pairwise distinct.
class NodeSet {
public:
    explicit NodeSet(std::vector<double> x);

    // Skips the nonzero/distinct checks. Used to push degenerate inputs through to the
    // numerical layers (singularity detection) on purpose.
    static NodeSet unchecked(std::vector<double> x);

    std::size_t size() const noexcept { return x_.size(); }
    double operator[](std::size_t i) const { return x_[i]; }
    std::span<const double> values() const noexcept { return x_; }

    bool operator==(const NodeSet&) const = default;

private:
    NodeSet() = default;
    std::vector<double> x_;
};

// [Q_0(x), ..., Q_{n-1}(x)].
std::vector<double> evaluate_system(const PolySystem& sys, double x);
void evaluate_system(const PolySystem& sys, double x, std::span<double> out);

// V_Q(x)[i][j] = Q_j(x_i).
DenseMatrix build_vandermonde(const PolySystem& sys, const NodeSet& nodes);

// Q_k = x Q_{k-1}, as a quasiseparable system.
PolySystem monomial_preset(std::size_t n, double tau0 = 1.0);
// Chebyshev T_0..T_{n-1} as a well-free system.
PolySystem chebyshev_preset(std::size_t n);
// Classical Q_k = (alpha_k x - delta_k) Q_{k-1} - gamma_k Q_{k-2}; arrays hold k = 1..n-1.
PolySystem three_term_preset(std::vector<double> alpha, std::vector<double> delta,
                             std::vector<double> gamma);
// Szego polynomials phi^#_0..phi^#_{n-1} from real reflection coefficients rho_1..rho_{n-1}, |rho_k| < 1.
PolySystem szego_preset(std::span<const double> rho);

}  // namespace qsvand
