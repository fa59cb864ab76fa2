#pragma once

#include "fpc/estimation.hpp"

namespace fpc {

// The three count parameters: intellectual-effort factor C, inertia of
// development i and contractual adjustment K.
struct CountContext {
    double effort_factor = 1.0;  // C > 0
    double inertia = 0.0;        // i in [0, 1]
    double adjustment = 1.0;     // K > 0

    void validate() const;  // throws ValidationError
};

struct CountResult {
    double points = 0.0;            // N
    double effective_effort = 0.0;  // C^i
    double expected_time = 0.0;     // (O + 4 MP + P) / 6, hours
    double span = 0.0;              // P - O + 1, hours
};

// Core count:  N = C^i / (K (P - O + 1)) * (O + 4 MP + P) / 6
CountResult count_points(const CountContext& ctx, const EstimateTriple& est);

// Deviation form of the same count. Equals count_points with the pessimistic
// estimate reconstructed as O + 6 sigma, bit for bit.
CountResult count_points_sigma(const CountContext& ctx, double optimistic_h,
                               double most_likely_h, double sigma_h);

// Volume multiplier for high item counts (pages, images, videos):
// 1-9 -> 1, 10-59 -> 2, 60-99 -> 3, 100-499 -> 4, 500-999 -> 8, >=1000 -> 16.
int quantity_bucket(long long item_count);  // throws DomainError for n < 1

// dN/dMP = 2 C^i / (3 K (P - O + 1)), points per hour.
double marginal_points(const CountContext& ctx, const EstimateTriple& est);

enum class GaugeDirection { add, subtract };

// Post-completion adjustment by H hours of MP:
//   N' = C^i / (K (P - O + 1)) * (O + 4 MP + P +- 4 H) / 6
// equal to count_points +- H * marginal_points.
double gauge_points(const CountContext& ctx, const EstimateTriple& est,
                    double hours, GaugeDirection direction);

}  // namespace fpc
