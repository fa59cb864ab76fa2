#pragma once

#include "fpc/duration.hpp"

namespace fpc {

// A validated three-point estimate with O <= MP <= P. `corrected` records
// whether the minimum-spread rule rewrote the triple.
class EstimateTriple {
  public:
    EstimateTriple() = default;

    // Throws ValidationError unless optimistic <= most_likely <= pessimistic.
    static EstimateTriple create(Duration optimistic, Duration most_likely,
                                 Duration pessimistic);
    static EstimateTriple from_hours(double optimistic, double most_likely,
                                     double pessimistic);

    Duration optimistic() const { return optimistic_; }
    Duration most_likely() const { return most_likely_; }
    Duration pessimistic() const { return pessimistic_; }
    bool corrected() const { return corrected_; }

  private:
    Duration optimistic_;
    Duration most_likely_;
    Duration pessimistic_;
    bool corrected_ = false;

    friend EstimateTriple enforce_min_spread(const EstimateTriple&, double);
};

struct TimeStats {
    double expected = 0.0;  // hours
    double variance = 0.0;  // hours^2
    double std_dev = 0.0;   // hours
};

// Expected completion time (O + 4 MP + P) / 6.
double pert_time(const EstimateTriple& est);

// sigma^2 = ((P - O) / 6)^2
double pert_variance(const EstimateTriple& est);
double pert_std_dev(const EstimateTriple& est);
TimeStats time_stats(const EstimateTriple& est);

// Anti-aberration correction: when the pessimistic estimate does not exceed
// the optimistic by at least `min_ratio`, rewrites the triple to
// P' = O * (1 + min_ratio), MP' = (O + P') / 2 and marks it corrected.
// Idempotent. An all-zero triple passes through unchanged; callers may warn.
EstimateTriple enforce_min_spread(const EstimateTriple& est, double min_ratio = 0.20);

}  // namespace fpc
