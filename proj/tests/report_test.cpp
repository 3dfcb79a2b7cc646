#include <gtest/gtest.h>

#include "endocert/named_groups.hpp"
#include "endocert/report.hpp"
#include "json.hpp"

using namespace endocert;

namespace {

Report psl27_report() {
  PolynomialAnalysis pa = analyze_polynomial(IntPoly::parse("x^7 - 7*x + 3"), 0, 120);
  return Report{"analyze", {{"polynomial", "x^7 - 7*x + 3"}}, pa.verdict, pa.census, pa.hypotheses, pa.chosen, {}};
}

}  // namespace

TEST(Report, MachineRenderingFollowsTheSchema) {
  auto j = nlohmann::json::parse(render_machine(psl27_report()));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["census"]["primes_sampled"], 120);
  EXPECT_EQ(j["chosen_hypothesis"], "PSL2(7)");
  const auto& v = j["verdict"];
  EXPECT_EQ(v["outcome"], "END_IS_Z");
  EXPECT_EQ(v["mode"], "conditional (group identified heuristically)");
  ASSERT_TRUE(v["checklist"].is_array());
  for (const auto& e : v["checklist"]) {
    EXPECT_TRUE(e.contains("hypothesis"));
    EXPECT_TRUE(e.contains("status"));
    EXPECT_FALSE(e["citation"].get<std::string>().empty());
    EXPECT_TRUE(e.contains("evidence"));
  }
}

TEST(Report, RenderingsAgreeAndAreStable) {
  Report r = psl27_report();
  std::string m1 = render_machine(r), m2 = render_machine(psl27_report());
  EXPECT_EQ(m1, m2);
  std::string text = render_text(r);
  EXPECT_NE(text.find("Verdict: END_IS_Z"), std::string::npos);
  EXPECT_NE(text.find("conditional (group identified heuristically)"), std::string::npos);
  for (const auto& e : r.verdict->checklist) EXPECT_NE(text.find(e.hypothesis), std::string::npos);
}

TEST(Report, OutcomeLabels) {
  Verdict v = analyze_jacobian({groups::alternating(5), 3});
  EXPECT_EQ(outcome_label(v), "SUPERSINGULAR_POSSIBLE({3})");
  EXPECT_EQ(mode_string(true), "proved (group supplied)");
  Report r{"group-check", {}, v, {}, {}, {}, {{"extra", "body\n"}}};
  auto j = nlohmann::json::parse(render_machine(r));
  EXPECT_EQ(j["verdict"]["characteristics"], nlohmann::json::array({3}));
  EXPECT_EQ(j["attachments"][0]["title"], "extra");
  EXPECT_FALSE(j.contains("census"));
}
