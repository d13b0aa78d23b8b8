#include "incidence/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace incidence;

namespace {

ExperimentConfig st_config(std::vector<std::size_t> sizes) {
  ExperimentConfig c;
  c.generator.name = "st_grid";
  c.sizes = std::move(sizes);
  c.bounds = {bounds::Kind::planar};
  return c;
}

}  // namespace

TEST(Config, Validation) {
  auto c = st_config({2, 2});
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = st_config({2, 3});
  c.params.eps = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = st_config({2, 3});
  c.kkk_budget = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(RunSweep, StGridEdges) {
  const auto res = run_sweep(st_config({2, 3, 4, 5, 6, 7, 8}));
  ASSERT_EQ(res.rows.size(), 7u);
  for (const auto& row : res.rows) {
    EXPECT_EQ(row.edges, row.size * row.size * row.size * row.size);
    EXPECT_EQ(row.hypothesis, Outcome::yes);
  }
  ASSERT_TRUE(res.fit);
  EXPECT_NEAR(res.fit->slope, 4.0 / 3.0, 1e-9);
  EXPECT_FALSE(res.partial);
}

TEST(RunSweep, EmptyAndShort) {
  const auto empty = run_sweep(st_config({}));
  EXPECT_TRUE(empty.rows.empty());
  EXPECT_FALSE(empty.fit);
  EXPECT_FALSE(run_sweep(st_config({2, 3, 4})).fit);
}

TEST(RunSweep, FailureIsPartial) {
  auto c = st_config({2, 3, 4});
  c.pair_cap = 200;
  const auto res = run_sweep(c);
  EXPECT_TRUE(res.partial);
  ASSERT_EQ(res.rows.size(), 2u);
  EXPECT_FALSE(res.rows.back().error.empty());
}

TEST(RunSweep, Deterministic) {
  auto c = st_config({2, 3, 4, 5});
  c.generator.name = "point_line";
  c.sizes = {10, 20, 30, 40};
  c.bounds = bounds::all_kinds();
  const auto a = sweep_to_json(run_sweep(c)).dump();
  const auto b = sweep_to_json(run_sweep(c)).dump();
  EXPECT_EQ(a, b);
  std::ostringstream ca, cb;
  write_csv(run_sweep(c), ca);
  write_csv(run_sweep(c), cb);
  EXPECT_EQ(ca.str(), cb.str());
}

TEST(FitExponent, ExactPowerLaw) {
  std::vector<std::pair<double, double>> rows;
  for (double s : {2.0, 4.0, 8.0, 16.0, 32.0}) rows.emplace_back(s, std::pow(s, 4.0 / 3.0));
  const auto f = fit_exponent(rows);
  EXPECT_NEAR(f.slope, 4.0 / 3.0, 1e-9);
  EXPECT_NEAR(f.stderr_slope, 0.0, 1e-9);
}

TEST(FitExponent, ConstantRows) {
  EXPECT_NEAR(fit_exponent({{1, 5}, {2, 5}, {3, 5}}).slope, 0.0, 1e-12);
}

TEST(FitExponent, Errors) {
  EXPECT_THROW(fit_exponent({{1, 1}}), std::invalid_argument);
  EXPECT_THROW(fit_exponent({{2, 2}, {2, 3}}), std::invalid_argument);
  try {
    fit_exponent({{1, 1}, {2, 0}, {3, 3}});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
  }
}

TEST(VerifyBounds, StGridPlanarWithConstantTwo) {
  const auto res = run_sweep(st_config({2, 3, 4, 5, 6}));
  const auto report = verify_bounds(res, 2.0);
  EXPECT_TRUE(report.passed);
  ASSERT_EQ(report.bounds.size(), 1u);
  for (auto v : report.bounds[0].verdicts) EXPECT_EQ(v, Verdict::pass);
  EXPECT_LE(report.bounds[0].smallest_constant, 2.0);
  EXPECT_GT(report.bounds[0].smallest_constant, 0.0);
}

TEST(VerifyBounds, TooSmallConstantFails) {
  const auto res = run_sweep(st_config({2, 3, 4, 5}));
  const auto report = verify_bounds(res, 0.01);
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.bounds[0].failures, 4u);
}

TEST(VerifyBounds, PlantedBicliqueIsHypothesisFailure) {
  ExperimentConfig c;
  c.generator.name = "unit_r4";
  c.sizes = {4, 8, 16};
  c.bounds = {bounds::Kind::unit_r4};
  const auto res = run_sweep(c);
  const auto report = verify_bounds(res, 1e-6);
  EXPECT_TRUE(report.passed);
  for (auto v : report.bounds[0].verdicts) EXPECT_EQ(v, Verdict::hypothesis_failed);
  EXPECT_EQ(report.bounds[0].failures, 0u);
}

TEST(VerifyBounds, LopsidedUnitDistancesWithFittedConstant) {
  ExperimentConfig c;
  c.generator.name = "unit_r4_lopsided";
  c.generator.k = 4;
  c.k = 4;
  c.sizes = {8, 12, 16, 20, 24};
  c.bounds = {bounds::Kind::unit_r4};
  const auto res = run_sweep(c);
  for (const auto& row : res.rows) EXPECT_EQ(row.hypothesis, Outcome::yes);
  const double fitted = verify_bounds(res, 1.0).bounds[0].smallest_constant;
  EXPECT_GT(fitted, 0.0);
  const auto report = verify_bounds(res, fitted);
  EXPECT_TRUE(report.passed);
  for (auto v : report.bounds[0].verdicts) EXPECT_EQ(v, Verdict::pass);
}

TEST(VerifyBounds, UndecidedIsNeverABoundFailure) {
  auto c = st_config({2, 3, 4});
  c.kkk_budget = 1;
  const auto res = run_sweep(c);
  const auto report = verify_bounds(res, 1e-6);
  EXPECT_TRUE(report.passed);
  for (auto v : report.bounds[0].verdicts) EXPECT_EQ(v, Verdict::skipped);
}

TEST(Reports, JsonRoundTrip) {
  auto c = st_config({2, 3, 4, 5});
  c.bounds = {bounds::Kind::planar, bounds::Kind::kst};
  const auto res = run_sweep(c);
  const auto j = sweep_to_json(res);
  EXPECT_EQ(sweep_to_json(sweep_from_json(j)).dump(), j.dump());
  EXPECT_THROW(sweep_from_json(Json{{"format", "other"}}), std::invalid_argument);
}

TEST(Reports, CsvColumns) {
  auto c = st_config({2, 3});
  c.bounds = {bounds::Kind::planar, bounds::Kind::kst};
  std::ostringstream out;
  write_csv(run_sweep(c), out);
  const auto text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "size,m,n,edges,hypothesis,planar,kst");
  EXPECT_NE(text.find("\n2,16,8,16,yes,"), std::string::npos);
}

TEST(Sizes, Parse) {
  EXPECT_EQ(parse_sizes("2,3,5"), (std::vector<std::size_t>{2, 3, 5}));
  EXPECT_EQ(parse_sizes("2..5"), (std::vector<std::size_t>{2, 3, 4, 5}));
  EXPECT_THROW(parse_sizes("2,x"), std::invalid_argument);
}
