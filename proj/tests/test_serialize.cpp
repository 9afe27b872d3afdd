#include <gtest/gtest.h>

#include <fstream>

#include "qpart/tables.hpp"

using namespace qpart;

TEST(Render, Forms) {
  EXPECT_EQ(render({3, 2}, FieldId(2)), "3+2√2");
  EXPECT_EQ(render({4, 3}, FieldId(13)), "(11+3√13)/2");
  EXPECT_EQ(render({4, 2}, FieldId(5)), "5+√5");
  EXPECT_EQ(render({3, -1}, FieldId(2)), "3-√2");
  EXPECT_EQ(render({0, 1}, FieldId(2)), "√2");
  EXPECT_EQ(render({7, 0}, FieldId(2)), "7");
  EXPECT_EQ(render({0, 0}, FieldId(2)), "0");
  EXPECT_EQ(render({4, 3}, FieldId(13), SurdStyle::tex), "\\frac{11+3\\sqrt{13}}{2}");
  EXPECT_EQ(render({11, 6}, FieldId(17), SurdStyle::tex), "14+3\\sqrt{17}");
  EXPECT_EQ(render({14, 3}, FieldId(17), SurdStyle::tex), "\\frac{31+3\\sqrt{17}}{2}");
}

TEST(Json, IntegersSwitchToStringsWhenLarge) {
  EXPECT_TRUE(integer_to_json(Integer(123)).is_number_integer());
  const Integer big("123456789012345678901234567890");
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_THROW(integer_from_json(json(1.5)), InvalidArgument);
}

TEST(Json, ElementRoundTrip) {
  const FieldId f(13);
  const json j = element_to_json({4, 3}, f);
  EXPECT_EQ(j.at("text"), "(11+3√13)/2");
  EXPECT_EQ(element_from_json(j), (QElement{4, 3}));
}

TEST(Json, GridRoundTrip) {
  for (std::int64_t D : {2, 5, 17}) {
    PartitionGrid g(FieldId(D), 80);
    const json j = grid_to_json(g);
    const PartitionGrid h = grid_from_json(j);
    EXPECT_EQ(grid_to_json(h).dump(), j.dump());
    for (std::int64_t x = 0; x <= 80; ++x) { EXPECT_EQ(h.column(x), g.column(x)); }
  }
}

TEST(Json, GridRejectsGaps) {
  PartitionGrid g(FieldId(2), 5);
  json j = grid_to_json(g);
  j["columns"].erase(2);
  EXPECT_THROW(grid_from_json(j), InvalidArgument);
}

TEST(Json, ReportRoundTrip) {
  for (std::int64_t D : {3, 13, 17}) {
    const SearchReport r = search_m(FieldId(D), 11);
    const json j = report_to_json(r);
    const SearchReport s = report_from_json(j);
    EXPECT_EQ(report_to_json(s).dump(), j.dump());
    EXPECT_EQ(s.slice, r.slice);
    EXPECT_EQ(s.representatives, r.representatives);
  }
}

TEST(Fixtures, VerifyCleanDocument) {
  std::ifstream in(QPART_FIXTURES);
  const json doc = json::parse(in);
  const VerifyResult res = verify_fixtures(doc);
  EXPECT_TRUE(res.ok());
  EXPECT_EQ(res.fixtures, 12u);
  for (const auto& m : res.mismatches) ADD_FAILURE() << m;
}

TEST(Fixtures, CorruptedCellIsReported) {
  std::ifstream in(QPART_FIXTURES);
  json doc = json::parse(in);
  for (json& fx : doc["fixtures"])
    if (fx["id"] == "ky-D17") fx["rows"][18][6] = 26202;
  const VerifyResult res = verify_fixtures(doc);
  ASSERT_EQ(res.mismatches.size(), 1u);
  EXPECT_EQ(res.mismatches[0], "(D=17, y=18, k=6, expected=26202, got=26201)");
}

TEST(Fixtures, WrongRepresentativeIsReported) {
  std::ifstream in(QPART_FIXTURES);
  json doc = json::parse(in);
  for (json& fx : doc["fixtures"])
    if (fx["id"] == "reps-mod4-1") fx["fields"][0]["rows"]["3"].push_back(json{{"a", 3}, {"b", 0}});
  const VerifyResult res = verify_fixtures(doc);
  ASSERT_EQ(res.mismatches.size(), 1u);
  EXPECT_NE(res.mismatches[0].find("D=5, m=3"), std::string::npos);
}

TEST(Fixtures, UnknownKindRejected) {
  const json doc{{"fixtures", json::array({json{{"kind", "mystery"}}})}};
  EXPECT_THROW(verify_fixtures(doc), InvalidArgument);
}
