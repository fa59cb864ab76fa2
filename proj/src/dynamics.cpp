#include "fpc/dynamics.hpp"

#include <cmath>

#include "fpc/errors.hpp"
#include "fpc/numfmt.hpp"

namespace fpc {

double n_dot(const CountContext& ctx, const EstimateTriple& est) {
    // MP plays the role of time, so the rate is exactly the marginal count.
    return marginal_points(ctx, est);
}

double conserved_current(const CountContext& ctx, const EstimateTriple& est) {
    ctx.validate();
    const double span =
        (est.pessimistic().hours() - est.optimistic().hours()) + 1.0;
    return 4.0 * std::pow(ctx.effort_factor, ctx.inertia) / (span * span);
}

double potential(const CountContext& ctx, const EstimateTriple& est) {
    const double n = count_points(ctx, est).points;
    const double rate = n_dot(ctx, est);
    return conserved_current(ctx, est) - 0.5 * n * rate * rate;
}

DynamicsState lagrangian(const CountContext& ctx, const EstimateTriple& est) {
    DynamicsState state;
    state.points = count_points(ctx, est).points;
    state.rate = n_dot(ctx, est);
    state.current = conserved_current(ctx, est);
    const double kinetic = 0.5 * state.points * state.rate * state.rate;
    state.potential = state.current - kinetic;
    state.lagrangian = kinetic - state.potential;
    return state;
}

namespace {

EstimateTriple at_most_likely(const EstimateTriple& est, double mp) {
    return EstimateTriple::from_hours(est.optimistic().hours(), mp,
                                      est.pessimistic().hours());
}

}  // namespace

EulerLagrangeDiagnostics euler_lagrange_residual(const CountContext& ctx,
                                                 const EstimateTriple& est,
                                                 double step_h) {
    if (!std::isfinite(step_h) || step_h <= 0.0)
        throw DomainError("finite-difference step must be positive");
    const double o = est.optimistic().hours();
    const double mp = est.most_likely().hours();
    const double p = est.pessimistic().hours();
    if (mp - step_h < o || mp + step_h > p)
        throw DomainError("finite-difference step " + format_shortest(step_h) +
                          " h leaves the [O, P] window around MP");

    const DynamicsState here = lagrangian(ctx, est);
    const DynamicsState fwd = lagrangian(ctx, at_most_likely(est, mp + step_h));
    const DynamicsState bwd = lagrangian(ctx, at_most_likely(est, mp - step_h));

    EulerLagrangeDiagnostics diag;
    diag.momentum = here.points * here.rate;

    // dL/d(rate) at fixed N and V; L is quadratic in the rate, so the
    // centered difference recovers N * rate up to rounding.
    const double delta = std::max(1e-3, std::abs(here.rate) * 1e-3);
    const double l_up = 0.5 * here.points * (here.rate + delta) * (here.rate + delta) -
                        here.potential;
    const double l_dn = 0.5 * here.points * (here.rate - delta) * (here.rate - delta) -
                        here.potential;
    diag.momentum_fd = (l_up - l_dn) / (2.0 * delta);

    diag.momentum_rate_fd =
        (fwd.points * fwd.rate - bwd.points * bwd.rate) / (2.0 * step_h);

    // dL/dN via the trajectory: everything varies with MP through N alone,
    // the rate being constant along it.
    diag.trajectory_gradient =
        ((fwd.lagrangian - bwd.lagrangian) / (2.0 * step_h)) / here.rate;

    diag.residual = diag.momentum_rate_fd - diag.trajectory_gradient;
    diag.fixed_potential_residual = -0.5 * here.rate * here.rate;

    const double kin_fwd = 0.5 * fwd.points * fwd.rate * fwd.rate;
    const double kin_bwd = 0.5 * bwd.points * bwd.rate * bwd.rate;
    diag.current_drift =
        ((kin_fwd + fwd.potential) - (kin_bwd + bwd.potential)) / (2.0 * step_h);
    return diag;
}

}  // namespace fpc
