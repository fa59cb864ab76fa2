#include "fpc/estimation.hpp"

#include <cmath>

#include "fpc/errors.hpp"
#include "fpc/numfmt.hpp"

namespace fpc {

EstimateTriple EstimateTriple::create(Duration optimistic, Duration most_likely,
                                      Duration pessimistic) {
    if (!(optimistic <= most_likely && most_likely <= pessimistic))
        throw ValidationError(
            "estimate triple (" + format_shortest(optimistic.hours()) + ", " +
            format_shortest(most_likely.hours()) + ", " +
            format_shortest(pessimistic.hours()) +
            ") must satisfy optimistic <= most_likely <= pessimistic");
    EstimateTriple est;
    est.optimistic_ = optimistic;
    est.most_likely_ = most_likely;
    est.pessimistic_ = pessimistic;
    return est;
}

EstimateTriple EstimateTriple::from_hours(double optimistic, double most_likely,
                                          double pessimistic) {
    return create(Duration(optimistic), Duration(most_likely), Duration(pessimistic));
}

double pert_time(const EstimateTriple& est) {
    return (est.optimistic().hours() + 4.0 * est.most_likely().hours() +
            est.pessimistic().hours()) /
           6.0;
}

double pert_variance(const EstimateTriple& est) {
    const double sigma = pert_std_dev(est);
    return sigma * sigma;
}

double pert_std_dev(const EstimateTriple& est) {
    return (est.pessimistic().hours() - est.optimistic().hours()) / 6.0;
}

TimeStats time_stats(const EstimateTriple& est) {
    const double sigma = pert_std_dev(est);
    return {pert_time(est), sigma * sigma, sigma};
}

EstimateTriple enforce_min_spread(const EstimateTriple& est, double min_ratio) {
    if (!(min_ratio >= 0.0) || !std::isfinite(min_ratio))
        throw DomainError("minimum spread ratio must be non-negative");
    const double o = est.optimistic().hours();
    const double required = o * (1.0 + min_ratio);
    if (est.pessimistic().hours() >= required) return est;

    EstimateTriple corrected;
    corrected.optimistic_ = est.optimistic();
    corrected.pessimistic_ = Duration(required);
    corrected.most_likely_ = Duration((o + required) / 2.0);
    corrected.corrected_ = true;
    return corrected;
}

}  // namespace fpc
