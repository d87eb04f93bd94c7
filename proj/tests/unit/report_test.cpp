#include <fstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/report.hpp"

namespace sylowlab {
namespace {

using nlohmann::json;

CheckOptions with_group(const std::string& group, const std::string& sub = "") {
  CheckOptions options;
  options.group = group;
  options.subgroup = sub;
  return options;
}

TEST(Report, SylowRatioJson) {
  auto options = with_group("A5", "<(1 2 3),(2 3 4)>");
  options.primes = {3};
  const auto report = run_check("theorem-c", options);
  EXPECT_TRUE(report.all_hold());
  const auto doc = json::parse(to_json(report));
  EXPECT_EQ(doc["schema"], "sylowlab.report/1");
  EXPECT_EQ(doc["check"], "theorem-c");
  EXPECT_EQ(doc["group"]["order"], "60");
  EXPECT_EQ(doc["subgroup"]["degree"], 5);
  EXPECT_EQ(doc["primes"], json::array({3}));
  EXPECT_TRUE(doc["all_hold"].get<bool>());
  ASSERT_FALSE(doc["items"].empty());
  bool found = false;
  for (const auto& item : doc["items"]) {
    for (const auto& [key, value] : item["values"].items()) {
      if (value["num"] == "2" && value["den"] == "5") found = true;
    }
  }
  EXPECT_TRUE(found) << doc.dump(2);
  EXPECT_TRUE(doc["runtime_ms"].is_number_unsigned());
}

TEST(Report, ItemErrorsAreRecorded) {
  auto options = with_group("S4", "<(1 2 3),(1 2)(3 4)>");
  options.primes = {3};
  const auto report = run_check("theorem-c", options);
  EXPECT_FALSE(report.all_hold());
  ASSERT_EQ(report.items.size(), 1u);
  EXPECT_EQ(report.items[0].error_code, "PreconditionFailed");
  const auto doc = json::parse(to_json(report));
  EXPECT_EQ(doc["items"][0]["error"]["code"], "PreconditionFailed");
}

TEST(Report, InputErrorsThrow) {
  EXPECT_THROW((void)run_check("no-such-check", with_group("A5")), Error);
  EXPECT_THROW((void)run_check("theorem-c", with_group("A5 x")), Error);
  EXPECT_THROW((void)run_check("conjecture-d", with_group("A5")), Error);
  EXPECT_THROW((void)run_compute("no-such-quantity", with_group("A5")), Error);
}

TEST(Report, CheckIdsAreListed) {
  const auto& ids = verify_check_ids();
  for (const char* id : {"theorem-c", "theorem-f", "turan", "conjecture-d", "c-pi"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
}

TEST(Report, ComputeQueries) {
  auto options = with_group("A5");
  options.primes = {5};
  const auto sigma = run_compute("sigma", options);
  ASSERT_EQ(sigma.items.size(), 1u);
  EXPECT_EQ(sigma.items[0].values.front().second, ExactRatio(6));
  const auto text = to_text(sigma);
  EXPECT_NE(text.find("sigma"), std::string::npos);
}

TEST(Report, ThresholdScanViolationsFailTheReport) {
  auto options = with_group("SL(2,8)");
  options.primes = {2};
  const auto report = run_check("conjecture-d", options);
  ASSERT_FALSE(report.violations.empty());
  EXPECT_FALSE(report.all_hold());
  const auto doc = json::parse(to_json(report));
  EXPECT_EQ(doc["violations"][0]["ratio_num"], "7");
  EXPECT_EQ(doc["violations"][0]["ratio_den"], "9");
}

TEST(Report, GeneratorListArgument) {
  const std::string path = ::testing::TempDir() + "sylowlab_gens.txt";
  {
    std::ofstream out(path);
    out << "# A4\n(1 2 3)\n(2 3 4)\n";
  }
  const auto expr = resolve_group_argument("@" + path);
  EXPECT_EQ(expr.kind, GroupExpr::Kind::kLiteral);
  EXPECT_EQ(expr.generators.size(), 2u);
  EXPECT_THROW((void)resolve_group_argument("@/nonexistent/file"), Error);
}

}  // namespace
}  // namespace sylowlab
