#include <doctest.h>

#include <cmath>
#include <random>

#include "fpc/dynamics.hpp"
#include "fpc/errors.hpp"

using fpc::CountContext;
using fpc::EstimateTriple;

namespace {

EstimateTriple triple(double o, double mp, double p) {
    return EstimateTriple::from_hours(o, mp, p);
}

}  // namespace

TEST_CASE("rate values") {
    CHECK(fpc::n_dot({5.8, 1, 1}, triple(2, 6, 8)) ==
          doctest::Approx(0.55238).epsilon(1e-5));
    // i = 0 removes the effort factor from the rate.
    CHECK(fpc::n_dot({3.3, 0, 1}, triple(2, 6, 8)) ==
          doctest::Approx(2.0 / 21.0).epsilon(1e-15));
    CHECK(fpc::n_dot({9.9, 0, 1}, triple(2, 6, 8)) ==
          fpc::n_dot({1.1, 0, 1}, triple(2, 6, 8)));
}

TEST_CASE("rate equals the marginal count everywhere") {
    std::mt19937 gen(37);
    std::uniform_real_distribution<double> base(0.0, 60.0);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double o = base(gen);
        const double p = o + base(gen);
        const double mp = o + (p - o) * frac(gen);
        const CountContext ctx{1.0 + 5.0 * frac(gen), frac(gen),
                               0.25 + 2.0 * frac(gen)};
        CHECK(fpc::n_dot(ctx, triple(o, mp, p)) ==
              fpc::marginal_points(ctx, triple(o, mp, p)));
    }
}

TEST_CASE("conserved current") {
    CHECK(fpc::conserved_current({5.8, 1, 1}, triple(2, 6, 8)) ==
          doctest::Approx(0.47347).epsilon(1e-5));
    CHECK(fpc::conserved_current({1.8, 1, 1}, triple(38, 39, 40)) ==
          doctest::Approx(0.8).epsilon(1e-12));
    CHECK(fpc::conserved_current({7.7, 0, 1}, triple(2, 6, 8)) ==
          doctest::Approx(4.0 / 49.0).epsilon(1e-15));
    // K never enters J.
    CHECK(fpc::conserved_current({5.8, 1, 5}, triple(2, 6, 8)) ==
          fpc::conserved_current({5.8, 1, 1}, triple(2, 6, 8)));
}

TEST_CASE("potential values") {
    CHECK(fpc::potential({5.8, 1, 1}, triple(2, 6, 8)) ==
          doctest::Approx(-0.2429).epsilon(2e-4));
    CHECK(fpc::potential({5.8, 1, 5}, triple(2, 6, 8)) ==
          doctest::Approx(0.4678).epsilon(2e-4));
}

TEST_CASE("defining identity holds exactly") {
    std::mt19937 gen(41);
    std::uniform_real_distribution<double> base(0.0, 60.0);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double o = base(gen);
        const double p = o + base(gen);
        const double mp = o + (p - o) * frac(gen);
        const CountContext ctx{1.0 + 5.0 * frac(gen), frac(gen),
                               0.25 + 2.0 * frac(gen)};
        const EstimateTriple est = triple(o, mp, p);

        const double n = fpc::count_points(ctx, est).points;
        const double rate = fpc::n_dot(ctx, est);
        const double v = fpc::potential(ctx, est);
        const double j = fpc::conserved_current(ctx, est);
        CHECK(0.5 * n * rate * rate + v ==
              doctest::Approx(j).epsilon(1e-12));
    }
}

TEST_CASE("full state at the worked example") {
    const auto state = fpc::lagrangian({5.8, 1, 1}, triple(2, 6, 8));
    CHECK(state.points == doctest::Approx(4.6952).epsilon(1e-5));
    CHECK(state.rate == doctest::Approx(0.55238).epsilon(1e-5));
    CHECK(state.current == doctest::Approx(0.47347).epsilon(1e-5));
    CHECK(state.potential == doctest::Approx(-0.242847).epsilon(1e-5));
    CHECK(state.lagrangian == doctest::Approx(0.959164).epsilon(1e-5));
    CHECK(state.lagrangian ==
          0.5 * state.points * state.rate * state.rate - state.potential);
    CHECK(0.5 * state.points * state.rate * state.rate + state.potential ==
          doctest::Approx(state.current).epsilon(1e-12));
}

TEST_CASE("degenerate spread state in closed form") {
    // (8,8,8) with i = 0: span 1, N = 8, rate 2/3, J = 4.
    const auto state = fpc::lagrangian({3.7, 0, 1}, triple(8, 8, 8));
    CHECK(state.points == 8.0);
    CHECK(state.rate == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(state.current == 4.0);
    CHECK(state.potential == doctest::Approx(4.0 - 16.0 / 9.0).epsilon(1e-15));
    CHECK(state.lagrangian == doctest::Approx(16.0 / 9.0 - state.potential).epsilon(1e-15));
}

TEST_CASE("motion diagnostics at the worked example") {
    const CountContext ctx{5.8, 1, 1};
    const EstimateTriple est = triple(2, 6, 8);
    const auto diag = fpc::euler_lagrange_residual(ctx, est, 0.5);

    const auto state = fpc::lagrangian(ctx, est);
    CHECK(diag.momentum == state.points * state.rate);
    CHECK(diag.momentum_fd == doctest::Approx(diag.momentum).epsilon(1e-9));
    // The trajectory satisfies the motion equation.
    CHECK(std::abs(diag.residual) < 1e-10);
    // Holding the potential fixed leaves the analytic -(1/2) rate^2.
    CHECK(diag.fixed_potential_residual == -0.5 * state.rate * state.rate);
    CHECK(std::abs(diag.current_drift) < 1e-10);
}

TEST_CASE("current is flat across MP") {
    const CountContext ctx{5.8, 1, 1};
    CHECK(fpc::conserved_current(ctx, triple(2, 6, 8)) ==
          fpc::conserved_current(ctx, triple(2, 6.5, 8)));
}

TEST_CASE("motion diagnostics over random inputs") {
    std::mt19937 gen(43);
    std::uniform_real_distribution<double> base(0.0, 40.0);
    std::uniform_real_distribution<double> frac(0.2, 0.8);
    for (int trial = 0; trial < 200; ++trial) {
        const double o = base(gen);
        const double p = o + 2.0 + base(gen);
        const double mp = o + (p - o) * frac(gen);
        const CountContext ctx{1.0 + 5.0 * frac(gen), frac(gen),
                               0.25 + 2.0 * frac(gen)};
        const double h = std::min(mp - o, p - mp) * 0.9;
        const auto diag =
            fpc::euler_lagrange_residual(ctx, triple(o, mp, p), h);
        CHECK(std::abs(diag.residual) < 1e-10);
        CHECK(std::abs(diag.current_drift) < 1e-10);
        // N is affine in MP, so the forward difference equals the rate.
        const double n_here = fpc::count_points(ctx, triple(o, mp, p)).points;
        const double n_up = fpc::count_points(ctx, triple(o, mp + h, p)).points;
        CHECK((n_up - n_here) / h ==
              doctest::Approx(fpc::n_dot(ctx, triple(o, mp, p))).epsilon(1e-10));
    }
}

TEST_CASE("step leaving the window is rejected") {
    CHECK_THROWS_AS(fpc::euler_lagrange_residual({5.8, 1, 1}, triple(2, 6, 8), 3.0),
                    fpc::DomainError);
    CHECK_THROWS_AS(fpc::euler_lagrange_residual({5.8, 1, 1}, triple(2, 6, 8), 0.0),
                    fpc::DomainError);
    CHECK_NOTHROW(fpc::euler_lagrange_residual({5.8, 1, 1}, triple(2, 6, 8), 2.0));
}
