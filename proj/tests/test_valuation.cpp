#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "fpc/builtin_data.hpp"
#include "fpc/numfmt.hpp"
#include "fpc/sheet.hpp"
#include "fpc/valuation.hpp"

using fpc::CountLine;
using fpc::value_line;
using fpc::value_points;
using fpc::ValuedLine;

namespace {

std::string read_data_file(const std::string& name) {
    std::ifstream in(std::string(FPC_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fpc::FactorTables builtin() {
    return fpc::load_factor_tables(fpc::builtin_factors_json());
}

CountLine make_line(double c, double i, double o, double mp, double p,
                    long long amount = 1, const std::string& price_class =
                                              "new_implementation",
                    double deflation = 1.0) {
    CountLine line;
    line.id = "t";
    line.ctx = {c, i, 1.0};
    line.est = fpc::EstimateTriple::from_hours(o, mp, p);
    line.amount = amount;
    line.price_class = price_class;
    line.deflation = deflation;
    return line;
}

}  // namespace

TEST_CASE("value_points rounds half-up at two decimals") {
    CHECK(value_points(4.6952, 480.00) == 2253.70);
    CHECK(value_points(23.40, 480.00) == 11232.00);
    CHECK(value_points(0.0, 480.00) == 0.00);
    CHECK(value_points(0.005, 1.0) == 0.01);
}

TEST_CASE("contract sheet reproduces the reference counting") {
    const auto tables = builtin();
    const auto lines = fpc::load_count_sheet(read_data_file("sheets/contract.csv"));
    REQUIRE(lines.size() == 6);
    const auto valued = fpc::value_sheet_serial(lines, tables.prices);

    const double expected_ppu[] = {2.4895, 4.0553, 4.1243, 4.1243, 3.9207, 4.7691};
    const double expected_points[] = {248.95, 608.30, 123.73, 123.73, 705.73, 763.06};
    const double expected_value[] = {133687.25, 326657.86, 59390.41,
                                     59390.41,  378977.34, 366266.45};
    const double expected_deflated[] = {66843.63,  163328.93, 59390.41,
                                        59390.41,  189488.67, 366266.45};
    for (std::size_t r = 0; r < 6; ++r) {
        CAPTURE(r);
        CHECK(fpc::round_half_up(valued[r].points_per_unit, 4) == expected_ppu[r]);
        CHECK(fpc::round_half_up(valued[r].total_points, 2) == expected_points[r]);
        CHECK(std::abs(valued[r].total_value - expected_value[r]) <
              1e-4 * expected_value[r]);
        CHECK(std::abs(valued[r].deflated_value - expected_deflated[r]) <
              1e-4 * expected_deflated[r]);
        // The sheet applies the spread rule, but these rows already satisfy it.
        CHECK_FALSE(valued[r].effective.corrected());
    }

    const auto totals = fpc::total_report(valued);
    CHECK(fpc::round_half_up(totals.points, 2) == 2573.50);
    CHECK(std::abs(totals.value - 1324369.73) < 1e-4 * 1324369.73);
    CHECK(std::abs(totals.deflated - 904708.50) < 1e-4 * 904708.50);
}

TEST_CASE("bulletin sheet recomputes its per-step points and total") {
    const auto tables = builtin();
    const auto lines = fpc::load_count_sheet(read_data_file("sheets/bulletin.csv"));
    REQUIRE(lines.size() == 4);
    const auto valued = fpc::value_sheet_serial(lines, tables.prices);

    const double expected[] = {5.13, 3.85, 6.57, 4.81};
    for (std::size_t r = 0; r < 4; ++r) {
        CAPTURE(r);
        CHECK(std::abs(valued[r].points_per_unit - expected[r]) <= 0.005);
    }
    const auto totals = fpc::total_report(valued);
    // The recomputed sum; the historically printed 20.41 only appears when
    // the second step's 3.85 is transcribed as 3.9.
    CHECK(std::abs(totals.points - 20.36) <= 0.01);
    CHECK(5.13 + 3.9 + 6.57 + 4.81 == doctest::Approx(20.41).epsilon(1e-12));
}

TEST_CASE("deflation divides currency and never touches points") {
    const auto tables = builtin();
    auto line = make_line(3.5, 0.52, 1.83, 1.88, 2.33, 100, "adequation", 2.0);
    const auto deflated = value_line(line, tables.prices);
    line.deflation = 1.0;
    const auto plain = value_line(line, tables.prices);
    CHECK(deflated.total_points == plain.total_points);
    CHECK(deflated.total_value == plain.total_value);
    CHECK(deflated.deflated_value == deflated.total_value / 2.0);
    CHECK(deflated.deflated_value <= deflated.total_value);
}

TEST_CASE("amount one and deflation one leave unit values") {
    const auto tables = builtin();
    const auto valued = value_line(make_line(5.8, 1, 2, 6, 8), tables.prices);
    CHECK(valued.total_points == valued.points_per_unit);
    CHECK(valued.total_value == valued.deflated_value);
    CHECK(value_points(valued.points_per_unit, valued.unit_price) ==
          doctest::Approx(2253.71).epsilon(1e-9));
}

TEST_CASE("volume flag buckets the raw item count") {
    const auto tables = builtin();
    auto line = make_line(1.8, 1, 1, 2, 3, 7);
    line.flags.volume = 150;  // bucket 4 beats the amount column
    const auto valued = value_line(line, tables.prices);
    CHECK(valued.effective_amount == 4);
    CHECK(valued.total_points == valued.points_per_unit * 4.0);

    line.flags.volume = 9;
    CHECK(value_line(line, tables.prices).effective_amount == 1);
    line.flags.volume = 1000;
    CHECK(value_line(line, tables.prices).effective_amount == 16);
}

TEST_CASE("min-spread flag rewrites the aberration count") {
    const auto tables = builtin();
    auto line = make_line(1.8, 1, 8, 8, 8);
    line.flags.min_spread = true;
    const auto corrected = value_line(line, tables.prices);
    CHECK(corrected.effective.corrected());
    CHECK(corrected.points_per_unit == doctest::Approx(6.0923).epsilon(1e-4));
    CHECK(value_points(corrected.points_per_unit, 480.0) ==
          doctest::Approx(2924.31).epsilon(1e-9));

    line.flags.min_spread = false;
    const auto raw = value_line(line, tables.prices);
    CHECK(raw.points_per_unit == 14.4);
}

TEST_CASE("zero triple with the spread flag only warns") {
    const auto tables = builtin();
    auto line = make_line(1.8, 1, 0, 0, 0);
    line.flags.min_spread = true;
    const auto valued = value_line(line, tables.prices);
    CHECK(valued.zero_spread_warning);
    CHECK(valued.points_per_unit == 0.0);
}

TEST_CASE("unknown price class fails the lookup") {
    const auto tables = builtin();
    CHECK_THROWS_WITH_AS(
        value_line(make_line(1.8, 1, 1, 2, 3, 1, "premium"), tables.prices),
        doctest::Contains("premium"), fpc::LookupError);
}

TEST_CASE("line terms are validated") {
    const auto tables = builtin();
    auto line = make_line(1.8, 1, 1, 2, 3);
    line.amount = 0;
    CHECK_THROWS_AS(value_line(line, tables.prices), fpc::ValidationError);
    line.amount = 1;
    line.deflation = 0.5;
    CHECK_THROWS_AS(value_line(line, tables.prices), fpc::ValidationError);
}

TEST_CASE("empty report is a domain error") {
    CHECK_THROWS_WITH_AS(fpc::total_report({}), doctest::Contains("no counting lines"),
                         fpc::DomainError);
}

TEST_CASE("single line totals equal that line") {
    const auto tables = builtin();
    const std::vector<ValuedLine> valued = {
        value_line(make_line(5.8, 1, 2, 6, 8), tables.prices)};
    const auto totals = fpc::total_report(valued);
    CHECK(totals.points == valued[0].total_points);
    CHECK(totals.value == valued[0].total_value);
    CHECK(totals.deflated == valued[0].deflated_value);
}

TEST_CASE("grand totals are permutation invariant at display precision") {
    const auto tables = builtin();
    auto lines = fpc::load_count_sheet(read_data_file("sheets/contract.csv"));
    auto valued = fpc::value_sheet_serial(lines, tables.prices);
    const auto straight = fpc::total_report(valued);

    std::mt19937 gen(47);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(valued.begin(), valued.end(), gen);
        const auto shuffled = fpc::total_report(valued);
        CHECK(shuffled.points == doctest::Approx(straight.points).epsilon(1e-12));
        CHECK(shuffled.value == doctest::Approx(straight.value).epsilon(1e-12));
        CHECK(shuffled.deflated ==
              doctest::Approx(straight.deflated).epsilon(1e-12));
        CHECK(fpc::round_half_up(shuffled.points, 2) == 2573.50);
    }
}
