#include <gtest/gtest.h>

#include "slab/commands.hpp"
#include "slab/error.hpp"

namespace slab {
namespace {

const Record* find(const Report& rep, std::string_view name) {
  for (const Record& r : rep.records()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

TEST(Explore, Z6WithPowersOfTwo) {
  const Report rep = cmd_explore("Z6", "2", {});
  EXPECT_TRUE(rep.all_pass());
  const Record* dom = find(rep, "s-integral-domain");
  ASSERT_NE(dom, nullptr);
  EXPECT_TRUE(dom->verdict);
  EXPECT_EQ(dom->witness["s"]["index"], 2);
  EXPECT_TRUE(find(rep, "s-field")->verdict);
  const Json json = rep.to_json(false);
  std::size_t proper = 0;
  for (const Json& entry : json["data"]["ideals"]) proper += entry["ideal"]["size"] != 6 ? 1 : 0;
  EXPECT_EQ(proper, 3U);
  EXPECT_EQ(json["data"]["mult_set"]["members"].size(), 3U);
}

TEST(Explore, Z12WithPowersOfTwo) {
  const Report rep = cmd_explore("Z12", "2", {});
  EXPECT_TRUE(rep.all_pass());
  const Json json = rep.to_json(false);
  std::vector<std::vector<std::size_t>> s_primes;
  for (const Json& entry : json["data"]["ideals"]) {
    if (entry.contains("s_prime") && entry["s_prime"]["verdict"] == true) {
      s_primes.push_back(entry["ideal"]["members"].get<std::vector<std::size_t>>());
    }
  }
  EXPECT_EQ(s_primes, (std::vector<std::vector<std::size_t>>{{0}, {0, 6}, {0, 3, 6, 9}}));
  EXPECT_EQ(json["data"]["localization"]["order"], 3);
}

TEST(Explore, FieldIsTrivial) {
  const Report rep = cmd_explore("Z5", "", {});
  EXPECT_TRUE(rep.all_pass());
  for (const Record& r : rep.records()) EXPECT_TRUE(r.verdict) << r.name;
  EXPECT_EQ(rep.to_json(false)["data"]["ring"]["field"], true);
}

TEST(Explore, StrictMultSet) {
  CommandOptions strict;
  strict.strict_mult_set = true;
  EXPECT_THROW((void)cmd_explore("Z6", "0", strict), Error);
  const Report loose = cmd_explore("Z6", "0", {});
  EXPECT_TRUE(loose.all_pass());
}

TEST(Explore, ParseErrorsPropagate) {
  EXPECT_THROW((void)cmd_explore("Z6x", "", {}), SyntaxError);
  EXPECT_THROW((void)cmd_explore("Z64", "", {}), Error);
  EXPECT_THROW((void)cmd_explore("Z6", "7", {}), Error);
}

TEST(VerifyPaper, PassesAndIsDeterministic) {
  const Report a = cmd_verify_paper({});
  EXPECT_TRUE(a.all_pass());
  EXPECT_GE(a.records().size(), 8U);
  EXPECT_EQ(a.exit_code(), 0);
  const Report b = cmd_verify_paper({});
  EXPECT_EQ(a.to_json(false).dump(2), b.to_json(false).dump(2));
  EXPECT_TRUE(a.to_json(true).contains("generated_at"));
  EXPECT_FALSE(a.to_json(false).contains("elapsed_ms"));
}

TEST(VerifyPaper, FaultInjectionFails) {
  const Report rep = cmd_verify_paper({}, true);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_EQ(rep.exit_code(), 1);
  EXPECT_FALSE(find(rep, "Z12 tables satisfy the ring axioms")->pass);
}

TEST(CorruptedZ12, ViolatesAxioms) {
  const FiniteRing bad = corrupted_z12();
  EXPECT_EQ(bad.mul(Element{4}, Element{3}), Element{4});
  EXPECT_EQ(bad.mul(Element{3}, Element{4}), Element{0});
  EXPECT_TRUE(find_axiom_violation(bad.tables()).has_value());
}

TEST(Localize, Z6) {
  const Report rep = cmd_localize("Z6", "2", {});
  EXPECT_TRUE(rep.all_pass());
  const Json json = rep.to_json(false);
  EXPECT_EQ(json["data"]["localization"]["order"], 3);
  EXPECT_EQ(json["data"]["localization"]["kernel"]["members"], Json::parse("[0,3]"));
}

TEST(Krull, Z12) {
  const Report rep = cmd_krull("Z12", "3", "2", {});
  EXPECT_TRUE(rep.all_pass());
  const Json json = rep.to_json(false);
  EXPECT_EQ(json["data"]["power_chain"]["stabilization_index"], 2);
  EXPECT_THROW((void)cmd_krull("Z12", "3", "3", {}), Error);
}

TEST(Survey, SmallSweepClean) {
  SurveyOptions o;
  o.up_to = 12;
  o.composite_up_to = 8;
  o.properties = {"s-domain⟺cancellation", "s-domain⟺local-domain", "boolean: s-prime⇒s-maximal"};
  const Report rep = cmd_survey(o, {});
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.records().size(), 4U);
  EXPECT_THROW((void)cmd_survey(SurveyOptions{.properties = {"nonsense"}}, {}), Error);
}

TEST(Report, SchemaFields) {
  const Json json = cmd_explore("Z4", "", {}).to_json(false);
  std::vector<std::string> keys;
  for (const auto& [k, v] : json.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "tool", "tool_version", "command",
                                            "inputs", "records", "data", "summary"}));
  EXPECT_EQ(json["schema_version"], kSchemaVersion);
  EXPECT_EQ(json["data"]["elements"][2]["name"], "2 mod 4");
}

}  // namespace
}  // namespace slab
