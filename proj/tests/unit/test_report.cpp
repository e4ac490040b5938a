#include <gtest/gtest.h>

#include "bch/census.hpp"
#include "bch/report.hpp"
#include "bch/verify.hpp"

using namespace bch;

TEST(Report, TermsJsonRoundTripsExactly) {
  const auto terms = series_terms(preset(Variant::standard), 5);
  const std::string text = report::dump(report::terms_json(Variant::standard, terms));
  EXPECT_EQ(report::dump(report::Json::parse(text)), text);

  // Rebuild the polynomials from the JSON and compare.
  const report::Json j = report::Json::parse(text);
  ASSERT_EQ(j["terms"].size(), 5U);
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Term> rebuilt;
    for (const auto& w : j["terms"][i]["words"])
      rebuilt.push_back({Word::parse(w["word"].get<std::string>()),
                         Rational::parse(w["num"].get<std::string>() + "/" + w["den"].get<std::string>())});
    EXPECT_EQ(FreePoly::from_terms(rebuilt), terms[i].body);
  }
}

TEST(Report, CensusCsv) {
  const auto rows = census_table(2, 4, preset(Variant::standard));
  EXPECT_EQ(report::census_csv(rows),
            "n,count,bound,ratio_num,ratio_den,variant\n"
            "2,2,2,1,1,standard\n"
            "3,6,6,1,1,standard\n"
            "4,4,14,2,7,standard\n");
}

TEST(Report, TermsText) {
  const auto terms = series_terms(preset(Variant::symmetric), 3);
  const std::string text = report::terms_text(Variant::symmetric, terms, false);
  EXPECT_NE(text.find("s2 = 0"), std::string::npos) << text;
  EXPECT_NE(text.find("s1 = X + Y"), std::string::npos) << text;
}

TEST(Report, PropertyJsonShape) {
  const report::Json j = report::property_json(property_suite(4));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["checks"].size(), property_names().size());
  EXPECT_TRUE(j["checks"]["interchange"]["pass"].get<bool>());
}

TEST(Verify, SuitesPass) {
  EXPECT_TRUE(run_suite(Suite::properties, 6).passed());
  EXPECT_TRUE(run_suite(Suite::bounds, 9).passed());
  EXPECT_TRUE(run_suite(Suite::dynkin, 6).passed());
  EXPECT_TRUE(run_suite(Suite::oracle, 6).passed());
  EXPECT_TRUE(run_suite(Suite::commutator_forms, 6).passed());
}

TEST(Verify, SuiteNames) {
  EXPECT_EQ(parse_suite("commutator-forms"), Suite::commutator_forms);
  EXPECT_EQ(suite_name(Suite::oracle), "oracle");
  EXPECT_ANY_THROW(parse_suite("other"));
}

TEST(Verify, TextHasOneLinePerCheck) {
  const SuiteResult r = run_suite(Suite::oracle, 4);
  const std::string text = r.to_text();
  EXPECT_EQ(text.rfind("PASS", 0), 0U);
  EXPECT_EQ(r.to_json()["pass"], true);
}
