#include "fpc/counting.hpp"

#include <cmath>

#include "fpc/errors.hpp"
#include "fpc/numfmt.hpp"

namespace fpc {

void CountContext::validate() const {
    if (!std::isfinite(effort_factor) || effort_factor <= 0.0)
        throw ValidationError("effort factor C must be positive, got " +
                              format_shortest(effort_factor));
    if (!std::isfinite(inertia) || inertia < 0.0 || inertia > 1.0)
        throw ValidationError("inertia i must lie in [0, 1], got " +
                              format_shortest(inertia));
    if (!std::isfinite(adjustment) || adjustment <= 0.0)
        throw ValidationError("adjustment K must be positive, got " +
                              format_shortest(adjustment));
}

CountResult count_points(const CountContext& ctx, const EstimateTriple& est) {
    ctx.validate();
    const double o = est.optimistic().hours();
    const double mp = est.most_likely().hours();
    const double p = est.pessimistic().hours();
    // P >= O by construction, so the span never drops below 1.
    const double span = (p - o) + 1.0;
    const double expected = (o + 4.0 * mp + p) / 6.0;
    const double effective = std::pow(ctx.effort_factor, ctx.inertia);
    return {effective / (ctx.adjustment * span) * expected, effective, expected, span};
}

CountResult count_points_sigma(const CountContext& ctx, double optimistic_h,
                               double most_likely_h, double sigma_h) {
    if (!std::isfinite(sigma_h) || sigma_h < 0.0)
        throw DomainError("sigma must be non-negative, got " + format_shortest(sigma_h));
    return count_points(ctx, EstimateTriple::from_hours(
                                 optimistic_h, most_likely_h,
                                 optimistic_h + 6.0 * sigma_h));
}

int quantity_bucket(long long item_count) {
    if (item_count < 1)
        throw DomainError("item count must be at least 1, got " +
                          std::to_string(item_count));
    if (item_count < 10) return 1;
    if (item_count < 60) return 2;
    if (item_count < 100) return 3;
    if (item_count < 500) return 4;
    if (item_count < 1000) return 8;
    return 16;
}

double marginal_points(const CountContext& ctx, const EstimateTriple& est) {
    ctx.validate();
    const double span =
        (est.pessimistic().hours() - est.optimistic().hours()) + 1.0;
    return 2.0 * std::pow(ctx.effort_factor, ctx.inertia) /
           (3.0 * ctx.adjustment * span);
}

double gauge_points(const CountContext& ctx, const EstimateTriple& est,
                    double hours, GaugeDirection direction) {
    ctx.validate();
    if (!std::isfinite(hours) || hours < 0.0)
        throw DomainError("gauge hours must be non-negative, got " +
                          format_shortest(hours));
    const double o = est.optimistic().hours();
    const double mp = est.most_likely().hours();
    const double p = est.pessimistic().hours();
    const double sign = direction == GaugeDirection::add ? 1.0 : -1.0;
    if (direction == GaugeDirection::subtract && hours > mp)
        throw DomainError("gauge exceeds counted work: cannot subtract " +
                          format_shortest(hours) + " h from MP = " +
                          format_shortest(mp) + " h");
    const double span = (p - o) + 1.0;
    const double effective = std::pow(ctx.effort_factor, ctx.inertia);
    const double gauged = effective / (ctx.adjustment * span) *
                          ((o + 4.0 * mp + p + sign * 4.0 * hours) / 6.0);
    if (gauged < 0.0) throw DomainError("gauge exceeds counted work");
    return gauged;
}

}  // namespace fpc
