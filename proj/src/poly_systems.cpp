#include "qsvand/poly_systems.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsvand/error.hpp"

namespace qsvand {

std::string_view to_string(PolyFamily family) {
    switch (family) {
        case PolyFamily::Quasiseparable: return "qs";
        case PolyFamily::Semiseparable: return "ss";
        case PolyFamily::WellFree: return "wf";
    }
    return "?";
}

PolyFamily parse_family(std::string_view text) {
    if (text == "qs" || text == "quasiseparable") return PolyFamily::Quasiseparable;
    if (text == "ss" || text == "semiseparable") return PolyFamily::Semiseparable;
    if (text == "wf" || text == "wellfree" || text == "well-free") return PolyFamily::WellFree;
    throw InvalidSystem("unknown polynomial family '" + std::string(text) + "'");
}

PolySystem::PolySystem(PolyFamily family, double tau0, std::vector<double> alpha, std::vector<double> beta,
                       std::vector<double> gamma, std::vector<double> delta, std::vector<double> theta)
    : family_(family),
      n_(alpha.size() + 1),
      tau0_(tau0),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      delta_(std::move(delta)),
      theta_(std::move(theta)) {
    const std::size_t m = n_ - 1;
    if (beta_.size() != m || gamma_.size() != m || delta_.size() != m || theta_.size() != m)
        throw InvalidSystem("generator arrays must all have n-1 entries");
    if (tau0_ == 0.0 || !std::isfinite(tau0_)) throw InvalidSystem("tau0 must be finite and nonzero");
    for (const auto* arr : {&alpha_, &beta_, &gamma_, &delta_, &theta_})
        for (double v : *arr)
            if (!std::isfinite(v)) throw InvalidSystem("generators must be finite");
    const auto& leading = family_ == PolyFamily::WellFree ? alpha_ : delta_;
    const char* name = family_ == PolyFamily::WellFree ? "alpha" : "delta";
    for (std::size_t k = 0; k < m; ++k)
        if (leading[k] == 0.0)
            throw InvalidSystem(std::string(name) + "_" + std::to_string(k + 1) +
                                " is zero; deg Q_k = k requires it nonzero");
}

NodeSet::NodeSet(std::vector<double> x) : x_(std::move(x)) {
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (!std::isfinite(x_[i])) throw InvalidNodes("node " + std::to_string(i + 1) + " is not finite");
        if (x_[i] == 0.0) throw InvalidNodes("node " + std::to_string(i + 1) + " is zero");
    }
    std::vector<double> sorted = x_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidNodes("nodes must be pairwise distinct");
}

NodeSet NodeSet::unchecked(std::vector<double> x) {
    NodeSet s;
    s.x_ = std::move(x);
    return s;
}

void evaluate_system(const PolySystem& sys, double x, std::span<double> out) {
    const std::size_t n = sys.size();
    if (out.size() != n) throw DimensionMismatch("output length must equal n");
    out[0] = sys.tau0();
    switch (sys.family()) {
        case PolyFamily::Quasiseparable: {
            double g = 0.0;
            for (std::size_t k = 1; k < n; ++k) {
                const double q = out[k - 1];
                out[k] = sys.gamma(k) * g + (sys.delta(k) * x + sys.theta(k)) * q;
                g = sys.alpha(k) * g + sys.beta(k) * q;
            }
            break;
        }
        case PolyFamily::Semiseparable: {
            double g = sys.tau0();
            for (std::size_t k = 1; k < n; ++k) {
                const double p = (sys.delta(k) * x + sys.theta(k)) * out[k - 1];
                out[k] = sys.gamma(k) * g + p;
                g = sys.alpha(k) * g + sys.beta(k) * p;
            }
            break;
        }
        case PolyFamily::WellFree: {
            for (std::size_t k = 1; k < n; ++k) {
                double q = (sys.alpha(k) * x - sys.delta(k)) * out[k - 1];
                if (k >= 2) q -= (sys.beta(k) * x + sys.gamma(k)) * out[k - 2];
                out[k] = q;
            }
            break;
        }
    }
}

std::vector<double> evaluate_system(const PolySystem& sys, double x) {
    std::vector<double> out(sys.size());
    evaluate_system(sys, x, out);
    return out;
}

DenseMatrix build_vandermonde(const PolySystem& sys, const NodeSet& nodes) {
    const std::size_t n = sys.size();
    if (nodes.size() != n) throw DimensionMismatch("node count must equal the number of polynomials");
    DenseMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) evaluate_system(sys, nodes[i], v.row(i));
    return v;
}

PolySystem monomial_preset(std::size_t n, double tau0) {
    if (n == 0) throw InvalidSystem("n must be at least 1");
    const std::size_t m = n - 1;
    return PolySystem(PolyFamily::Quasiseparable, tau0, std::vector<double>(m, 0.0), std::vector<double>(m, 0.0),
                      std::vector<double>(m, 0.0), std::vector<double>(m, 1.0), std::vector<double>(m, 0.0));
}

PolySystem chebyshev_preset(std::size_t n) {
    if (n == 0) throw InvalidSystem("n must be at least 1");
    const std::size_t m = n - 1;
    std::vector<double> alpha(m, 2.0);
    std::vector<double> gamma(m, 1.0);
    if (m > 0) {
        alpha[0] = 1.0;
        gamma[0] = 0.0;  // unused: Q_{-1} = 0
    }
    return PolySystem(PolyFamily::WellFree, 1.0, std::move(alpha), std::vector<double>(m, 0.0), std::move(gamma),
                      std::vector<double>(m, 0.0), std::vector<double>(m, 0.0));
}

PolySystem three_term_preset(std::vector<double> alpha, std::vector<double> delta, std::vector<double> gamma) {
    const std::size_t m = alpha.size();
    if (delta.size() != m || gamma.size() != m) throw InvalidSystem("three-term coefficient arrays differ in length");
    for (double a : alpha)
        if (a == 0.0) throw InvalidSystem("three-term preset needs alpha_k != 0");
    return PolySystem(PolyFamily::WellFree, 1.0, std::move(alpha), std::vector<double>(m, 0.0), std::move(gamma),
                      std::move(delta), std::vector<double>(m, 0.0));
}

PolySystem szego_preset(std::span<const double> rho) {
    const std::size_t m = rho.size();
    std::vector<double> alpha(m), beta(m), gamma(m), delta(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double r = rho[k];
        if (!(std::abs(r) < 1.0)) throw InvalidSystem("Szego reflection coefficients need |rho_k| < 1");
        const double mu = std::sqrt(1.0 - r * r);
        alpha[k] = 1.0 / mu;
        beta[k] = -r;
        gamma[k] = -r / mu;
        delta[k] = 1.0 / mu;
    }
    // rho_0 = -1 gives mu_0 = 1, phi_0 = phi^#_0 = 1.
    return PolySystem(PolyFamily::Semiseparable, 1.0, std::move(alpha), std::move(beta), std::move(gamma),
                      std::move(delta), std::vector<double>(m, 0.0));
}

}  // namespace qsvand
