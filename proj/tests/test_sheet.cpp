#include <doctest.h>

#include "fpc/builtin_data.hpp"
#include "fpc/sheet.hpp"

namespace {

constexpr const char* kHeader =
    "id,description,C,i,K,O,MP,P,amount,price_class,deflation,flags\n";

}

TEST_CASE("loads a well-formed sheet with mixed duration syntax") {
    const std::string csv = std::string(kHeader) +
        "a,HTML form,5.8,1,1,2:00:00,6,8:00:00,1,new_implementation,1,\n"
        "b,Survey,3.2,0,1,24,32:00:00,36,2,new_implementation,1.5,min_spread\n";
    const auto lines = fpc::load_count_sheet(csv);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].est.optimistic().hours() == 2.0);
    CHECK(lines[0].est.most_likely().hours() == 6.0);
    CHECK(lines[0].est.pessimistic().hours() == 8.0);
    CHECK(lines[0].source_row == 2);
    CHECK_FALSE(lines[0].flags.min_spread);
    CHECK(lines[1].flags.min_spread);
    CHECK(lines[1].deflation == 1.5);
    CHECK(lines[1].amount == 2);
}

TEST_CASE("comma decimals normalize on ingest") {
    const std::string csv = std::string(kHeader) +
        "a,Step,\"3,2\",\"0,7\",1,20,25,30,1,new_implementation,\"1,5\",\n";
    const auto lines = fpc::load_count_sheet(csv);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].ctx.effort_factor == 3.2);
    CHECK(lines[0].ctx.inertia == 0.7);
    CHECK(lines[0].deflation == 1.5);
}

TEST_CASE("flags parse") {
    const std::string csv = std::string(kHeader) +
        "a,Pages,1.8,1,1,1,2,3,5,new_implementation,1,"
        "\"min_spread;volume=150;task=Survey with the client:standard\"\n";
    const auto lines = fpc::load_count_sheet(csv);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].flags.min_spread);
    REQUIRE(lines[0].flags.volume.has_value());
    CHECK(*lines[0].flags.volume == 150);
    REQUIRE(lines[0].flags.task_ref.has_value());
    CHECK(lines[0].flags.task_ref->first == "Survey with the client");
    CHECK(lines[0].flags.task_ref->second == fpc::ComplexityLevel::standard);
}

TEST_CASE("every bad row is listed with its line number") {
    const std::string csv = std::string(kHeader) +
        "a,Fine,5.8,1,1,2,6,8,1,new_implementation,1,\n"
        "b,Bad order,5.8,1,1,8,6,2,1,new_implementation,1,\n"
        "c,Bad duration,5.8,1,1,2,6,0:99:00,1,new_implementation,1,\n"
        "d,Bad inertia,5.8,1.7,1,2,6,8,1,new_implementation,1,\n"
        "e,Bad flag,5.8,1,1,2,6,8,1,new_implementation,1,frob\n"
        "a,Duplicate id,5.8,1,1,2,6,8,1,new_implementation,1,\n";
    const auto result = fpc::load_count_sheet_collecting(csv);
    CHECK(result.lines.size() == 1);
    REQUIRE(result.issues.size() == 5);
    CHECK(result.issues[0].row == 3);
    CHECK(result.issues[1].row == 4);
    CHECK(result.issues[2].row == 5);
    CHECK(result.issues[3].row == 6);
    CHECK(result.issues[4].row == 7);
    CHECK_THROWS_AS(fpc::load_count_sheet(csv), fpc::Error);
}

TEST_CASE("header and field-count problems are parse issues") {
    CHECK_THROWS_AS(fpc::load_count_sheet("id,description\n"), fpc::ParseError);
    CHECK_THROWS_AS(fpc::load_count_sheet(""), fpc::ParseError);
    const std::string csv = std::string(kHeader) + "a,Too short,5.8,1\n";
    const auto result = fpc::load_count_sheet_collecting(csv);
    REQUIRE(result.issues.size() == 1);
    CHECK(result.issues[0].kind == fpc::IssueKind::parse);
    CHECK(result.issues[0].message.find("12 fields") != std::string::npos);
}

TEST_CASE("header-only sheet loads zero lines cleanly") {
    const auto result = fpc::load_count_sheet_collecting(kHeader);
    CHECK(result.ok());
    CHECK(result.lines.empty());
}

TEST_CASE("reference checks") {
    const auto tables = fpc::load_factor_tables(fpc::builtin_factors_json());
    const auto catalog = fpc::TaskCatalog::load(fpc::builtin_task_catalog_csv());

    const std::string csv = std::string(kHeader) +
        "a,Known task,5.8,1,1,2,6,8,1,new_implementation,1,"
        "task=Form creation:average\n"
        "b,Unknown class,5.8,1,1,2,6,8,1,premium,1,\n"
        "c,Unknown task,5.8,1,1,2,6,8,1,new_implementation,1,"
        "task=Quantum flange:low\n";
    const auto lines = fpc::load_count_sheet(csv);
    const auto issues = fpc::check_sheet_references(lines, tables.prices, &catalog);
    REQUIRE(issues.size() == 2);
    CHECK(issues[0].row == 3);
    CHECK(issues[0].message.find("premium") != std::string::npos);
    CHECK(issues[1].row == 4);
    CHECK(issues[1].message.find("Quantum flange") != std::string::npos);

    // Without a catalog only price classes are checked.
    CHECK(fpc::check_sheet_references(lines, tables.prices, nullptr).size() == 1);
}
