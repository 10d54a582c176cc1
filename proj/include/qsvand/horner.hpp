#pragma once

#include <cstddef>

#include "qsvand/poly_systems.hpp"

namespace qsvand {

// Generalized associated (Horner) system Q-hat of a source system Q.
struct HornerSystem {
    PolySystem hat;
    std::size_t source_n;
};

// Source generators the hat formulas reach beyond index n-1. Only the first row of
// M_{Q-hat} and Q-hat_0 depend on them, and neither affects W_{Q-hat}.
struct HatBoundary {
    double alpha_n = 1.0;
    double beta_n = 1.0;
    double gamma_n = 0.0;
    double delta_n = 1.0;
    double theta_n = 0.0;
    double alpha_n1 = 1.0;  // alpha_{n+1}
    double beta_n1 = 1.0;   // beta_{n+1}
};

// Q-hat_0. The normalization cancels in the inversion formula, so it is fixed to 1.
double hat_tau0(const PolySystem& sys);

HornerSystem hat_qs(const PolySystem& sys, double tau0_hat = 1.0, const HatBoundary& ext = {});
HornerSystem hat_ss(const PolySystem& sys, double tau0_hat = 1.0, const HatBoundary& ext = {});
// Three-term (well-free) Horner system of a quasiseparable source with all beta_k != 0.
HornerSystem hat_wf(const PolySystem& sys, double tau0_hat = 1.0, const HatBoundary& ext = {});

// Family dispatch used by the inversion: QS -> hat_qs, SS -> hat_ss,
// WF -> hat_qs of the quasiseparable form of the well-free system.
HornerSystem horner_system(const PolySystem& sys, double tau0_hat = 1.0);

// Same polynomials, rewritten as a quasiseparable recurrence.
PolySystem ss_to_qs(const PolySystem& sys);
PolySystem wf_to_qs(const PolySystem& sys);

}  // namespace qsvand
