#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "uavbs/error.hpp"
#include "uavbs/sweeps.hpp"

using namespace uavbs;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

RunConfig small_x1_sweep(std::uint64_t trials) {
  RunConfig c = parse_config("[Sweep]\nlo = 0\nhi = 300\nsteps = 4\n");
  c.mc.trials = trials;
  return c;
}

}  // namespace

TEST_CASE("outage sweep CSV layout") {
  const RunConfig c = small_x1_sweep(0);
  const auto rows = outage_sweep(c, 2);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].x1 == 100.0);
  CHECK_FALSE(rows[0].mc.has_value());
  const auto lines = lines_of(outage_sweep_csv(c, rows));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0].front() == '#');
  CHECK(lines[1] == "x1,p_in_system,p_in_tag_1,p_in_tag_2,p_in_tag_3,p_e_tag_1,p_e_tag_2,p_e_tag_3");
  CHECK(lines[2].rfind("0,", 0) == 0);
  CHECK(lines[5].rfind("300,", 0) == 0);

  const RunConfig with_mc = small_x1_sweep(2000);
  const auto mc_lines = lines_of(outage_sweep_csv(with_mc, outage_sweep(with_mc)));
  CHECK(mc_lines[1].ends_with(",mc_p_in_system,mc_ci95"));
}

TEST_CASE("two-step sweep yields a header and two rows") {
  RunConfig c = parse_config("[Sweep]\nsteps = 2\n");
  c.mc.trials = 0;
  const auto lines = lines_of(outage_sweep_csv(c, outage_sweep(c)));
  CHECK(lines.size() == 4);  // units comment, header, two rows
}

TEST_CASE("sweeps are independent of the thread count") {
  const RunConfig c = small_x1_sweep(20'000);
  const std::string one = outage_sweep_csv(c, outage_sweep(c, 1));
  CHECK(outage_sweep_csv(c, outage_sweep(c, 3)) == one);
  CHECK(outage_sweep_csv(c, outage_sweep(c, 8)) == one);
}

TEST_CASE("outage sweep rejects a power sweep config") {
  const RunConfig c = parse_config("[Sweep]\nvariable = P_v\nlo = 1\nhi = 10\nsteps = 3\n");
  CHECK_THROWS_AS(outage_sweep(c), ConfigError);
  CHECK_THROWS_AS(power_sweep(small_x1_sweep(0)), ConfigError);
}

TEST_CASE("power sweep marks infeasible budgets") {
  const RunConfig c = parse_config(
      "[SystemParams]\nE_total = 30\n[Sweep]\nvariable = P_v\nlo = 5\nhi = 20\nsteps = 4\n");
  const auto rows = power_sweep(c, 2);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].result.has_value());   // 5 W: 10 J of transmission
  CHECK(rows[1].result.has_value());   // 10 W: 20 J
  CHECK(rows[2].result.has_value());   // 15 W: exactly 30 J, no flight
  CHECK(rows[2].result->x1_star == 300.0);
  CHECK_FALSE(rows[3].result.has_value());
  const auto lines = lines_of(power_sweep_csv(rows));
  REQUIRE(lines.size() == 6);
  CHECK(lines[1] == "p_v,x1_star,eta_en_star,status");
  CHECK(lines[2].ends_with(",ok"));
  CHECK(lines[5] == "20,,,infeasible");
}

TEST_CASE("single-point power sweep equals optimize") {
  const RunConfig c =
      parse_config("[Sweep]\nvariable = P_v\nlo = 10\nhi = 10\nsteps = 1\n");
  const auto rows = power_sweep(c);
  REQUIRE(rows.size() == 1);
  const OptResult direct = run_optimize(c);
  CHECK(rows[0].result->x1_star == direct.x1_star);
  CHECK(rows[0].result->eta_en_star == direct.eta_en_star);
}

TEST_CASE("optimize report and trace") {
  const RunConfig c = parse_config("");
  const OptResult r = run_optimize(c);
  const std::string report = optimize_report(r);
  CHECK(report.find("x1_star = ") == 0);
  const auto lines = lines_of(optimize_trace_csv(r));
  CHECK(lines[1] == "x1,eta_en");
  CHECK(lines.size() == r.trace.size() + 2);
}

TEST_CASE("mc_validate passes on the reference configuration and is deterministic") {
  RunConfig c = small_x1_sweep(100'000);
  const ValidationReport a = mc_validate(c);
  CHECK(a.checks.size() == 2 * 3 + 1 + 4);
  for (const auto& check : a.checks) {
    CAPTURE(check.name);
    CHECK(check.passed);
  }
  CHECK(a.all_passed());
  CHECK(format_validation(mc_validate(c, 1)) == format_validation(a));

  c.mc.trials = 0;
  CHECK_THROWS_AS(mc_validate(c), ConfigError);
}
