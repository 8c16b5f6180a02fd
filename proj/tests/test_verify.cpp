#include "daubnorm/verify.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <stdexcept>

using namespace daubnorm;

TEST_CASE("check names round-trip") {
    for (auto kind : {CheckKind::Theorem1, CheckKind::Theorem2, CheckKind::Corollary1, CheckKind::Corollary2,
                      CheckKind::Corollary3, CheckKind::Bernstein}) {
        CHECK(parse_check_kind(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_check_kind("lemma4"), std::invalid_argument);
}

TEST_CASE("empty grid gives an empty report") {
    SweepGrid grid = default_grid(CheckKind::Theorem1);
    grid.ms.clear();
    const SweepReport r = verify_sweep(grid);
    CHECK(r.rows.empty());
    CHECK(r.summary.pass + r.summary.fail + r.summary.vacuous + r.summary.error == 0);
    CHECK(report_exit_code(r) == 0);
}

TEST_CASE("small theorem 1 sweep: deterministic CSV and a parsable JSON mirror") {
    SweepGrid grid = default_grid(CheckKind::Theorem1);
    grid.ms = {2, 3};
    grid.ps = {2.0};
    const SweepReport a = verify_sweep(grid);
    const SweepReport b = verify_sweep(grid);
    CHECK(a.rows.size() == 3);
    CHECK(report_csv(a) == report_csv(b));
    CHECK(report_json(a) == report_json(b));
    const auto doc = nlohmann::json::parse(report_json(a));
    CHECK(doc["schema_version"] == "v1");
    CHECK(doc["rows"].size() == 3);
    for (const auto& row : a.rows) {
        CHECK(row.status == RowStatus::Pass);
        CHECK(row.upper_bound.has_value());
        CHECK(row.lower_vacuous);
        CHECK(row.margin >= 0);
    }
    CHECK(report_exit_code(a) == 0);
}

TEST_CASE("rows that fail are kept as data with a negative margin") {
    SweepGrid grid = default_grid(CheckKind::Theorem2);
    grid.ms = {2};
    grid.ps = {2.0};
    grid.g_slack = 100.0;  // pushes the lower bound above the value
    const SweepReport r = verify_sweep(grid);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].status == RowStatus::Fail);
    CHECK(r.rows[0].margin < 0);
    CHECK(report_exit_code(r) == 1);
}

TEST_CASE("case errors are recorded in the row, not thrown") {
    SweepGrid grid = default_grid(CheckKind::Corollary1);
    grid.ms = {2, 40};
    grid.ps = {2.0};
    const SweepReport r = verify_sweep(grid);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].status == RowStatus::Pass);
    CHECK(r.rows[1].status == RowStatus::Error);
    CHECK(!r.rows[1].message.empty());
    CHECK(r.summary.error == 1);
    CHECK(report_exit_code(r) == 1);
}

TEST_CASE("bernstein rows carry j and nu") {
    SweepGrid grid = default_grid(CheckKind::Bernstein);
    grid.j_lo = 0;
    grid.j_hi = 1;
    grid.nu_lo = -1;
    grid.nu_hi = 1;
    const SweepReport r = verify_sweep(grid);
    REQUIRE(r.rows.size() == 6);
    CHECK(r.rows[0].j == 0);
    CHECK(r.rows[0].nu == -1);
    CHECK(r.rows[5].j == 1);
    CHECK(r.rows[5].nu == 1);
    for (const auto& row : r.rows) CHECK(row.status == RowStatus::Pass);
}

TEST_CASE("theorem grids only contain admissible cases") {
    SweepGrid grid = default_grid(CheckKind::Theorem2);
    grid.ms = {3};
    grid.ps = {1.5, 2.0, 3.0};
    const SweepReport r = verify_sweep(grid);
    // m p even: 3 * 2 = 6 only
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].p == 2.0);
    CHECK(r.rows[0].k == 3);
}
