#pragma once

#include "fpc/counting.hpp"

namespace fpc {

// Snapshot of the count dynamics at the given estimate. All diagnostic
// quantities (L, V, J) share the same points-per-squared-hour convention.
struct DynamicsState {
    double points = 0.0;      // N
    double rate = 0.0;        // dN/dMP
    double lagrangian = 0.0;  // (1/2) N rate^2 - V
    double potential = 0.0;   // V
    double current = 0.0;     // J, the conserved quantity
};

// dN/dMP with MP in the role of time; identical to marginal_points.
double n_dot(const CountContext& ctx, const EstimateTriple& est);

// J = 4 C^i / (P - O + 1)^2. Carries no K: the adjustment enters the
// dynamics only through N and the rate.
double conserved_current(const CountContext& ctx, const EstimateTriple& est);

// V = J - (1/2) N (dN/dMP)^2. Negative values are legal and flag an
// unproductive tool-effort-time combination.
double potential(const CountContext& ctx, const EstimateTriple& est);

DynamicsState lagrangian(const CountContext& ctx, const EstimateTriple& est);

// Numeric and analytic consistency diagnostics of the motion equations,
// evaluated by centered finite differences of step `step_h` over MP.
struct EulerLagrangeDiagnostics {
    double momentum = 0.0;            // dL/d(rate) = N * rate
    double momentum_fd = 0.0;         // centered difference of L over the rate
    double momentum_rate_fd = 0.0;    // d/dMP of the momentum along the trajectory
    double trajectory_gradient = 0.0; // dL/dN along the trajectory, via dL/dMP / rate
    double residual = 0.0;            // momentum_rate_fd - trajectory_gradient
    double fixed_potential_residual = 0.0;  // analytic: -(1/2) rate^2, V held fixed
    double current_drift = 0.0;       // d/dMP of (kinetic + V); zero when J is conserved
};

// Throws DomainError when MP +- step_h leaves [O, P].
EulerLagrangeDiagnostics euler_lagrange_residual(const CountContext& ctx,
                                                 const EstimateTriple& est,
                                                 double step_h);

}  // namespace fpc
