#include <gtest/gtest.h>

#include "pqdist/errors.hpp"
#include "pqdist/report.hpp"
#include "pqdist/spherical.hpp"

using namespace pqdist;

namespace {

std::string classify_json(int p, int q, int workers) {
  ClassifyOptions o;
  o.workers = workers;
  RunStamp stamp{utc_now(), 0.0};
  return classify_report_json(classify(p, q, o), stamp);
}

}  // namespace

TEST(Report, DeterministicAcrossWorkerCounts) {
  std::string one = classify_json(2, 2, 1);
  std::string eight = classify_json(2, 2, 8);
  EXPECT_EQ(strip_timestamp(one), strip_timestamp(eight));
  EXPECT_NE(one.find("\"schema\": 1"), std::string::npos);
}

TEST(Report, StripTimestampRemovesOnlyTimestamp) {
  std::string a = classify_report_json(classify(1, 1), {"2024-01-01T00:00:00Z", 1.0});
  std::string b = classify_report_json(classify(1, 1), {"2025-06-30T12:00:00Z", 9.5});
  EXPECT_NE(a, b);
  EXPECT_EQ(strip_timestamp(a), strip_timestamp(b));
  EXPECT_EQ(strip_timestamp(a).find("2024-01-01"), std::string::npos);
}

TEST(Report, ClassifyFields) {
  std::string r = classify_json(3, 1, 1);
  for (const char* key : {"\"kind\"", "\"cell\"", "\"max_order\"", "\"winners\"", "\"graph6\"",
                          "\"lambda\"", "\"embedding_dimension\"", "\"type\"", "\"witness\"", "\"timestamp\""})
    EXPECT_NE(r.find(key), std::string::npos) << key;
  EXPECT_NE(r.find("\"label\": \"7_3\""), std::string::npos);
}

TEST(Report, SphericalReport) {
  std::string r = spherical_report_json(classify_spherical(2, 2), {utc_now(), 0.0});
  EXPECT_NE(r.find("\"schema\": 1"), std::string::npos);
  EXPECT_NE(r.find("\"contributions\""), std::string::npos);
  EXPECT_NE(r.find("\"label\": \"7_1\""), std::string::npos);
}

TEST(Report, CheckGraph) {
  std::string r = check_graph_json(Graph::cycle(5), 2, 0, {1, -1});
  EXPECT_NE(r.find("\"candidates\""), std::string::npos);
  EXPECT_THROW(check_graph_json(Graph::complete(5), 2, 1, {1, -1}), DegenerateRelationError);
}

TEST(Report, Labels) {
  EXPECT_EQ(cell_label(3, true, 0), "3_∞");
  EXPECT_EQ(cell_label(9, false, 14), "9_14");
}

TEST(Report, SetExports) {
  CellResult c = classify(2, 1);
  std::string g6 = sets_graph6(c.winners);
  EXPECT_EQ(static_cast<std::size_t>(std::count(g6.begin(), g6.end(), '\n')), 8u);
  EXPECT_NE(sets_dot(c.winners, "c21").find("graph"), std::string::npos);
  EXPECT_FALSE(sets_csv(c.winners).empty());
}
