#include <gtest/gtest.h>

#include <sstream>

#include "cohstab/degeneration.hpp"
#include "cohstab/serialize.hpp"

using namespace cohstab;

TEST(ParseClassVector, AcceptedForms) {
  EXPECT_EQ(parse_class_vector("-1,-2,-1"), (ClassVector{-1, -2, -1}));
  EXPECT_EQ(parse_class_vector("(1, 3, 2)"), kTrigonalClass);
  EXPECT_EQ(parse_class_vector("[0,+1,5]"), (ClassVector{0, 1, 5}));
}

TEST(ParseClassVector, Rejects) {
  for (const char* bad : {"1,3", "1,3,2,4", "", "a,b,c", "1,,2", "1.5,2,3", "(1,2,3", "99999999999999999999,0,0"}) {
    EXPECT_THROW(parse_class_vector(bad), std::invalid_argument) << bad;
  }
}

TEST(Json, BasicShapes) {
  EXPECT_EQ(to_json(ClassVector{-1, -2, -1}).dump(), "[-1,-2,-1]");
  EXPECT_EQ(to_json(QuotientClass{1, 1}).dump(), "[1,1]");
  EXPECT_EQ(to_json(ChargeValue{Rational(-1), Rational(1, 2)}).dump(), R"({"re":"-1","im":"1/2"})");
  EXPECT_EQ(partition_to_json(sequiv_classes({{-1, -2, -1}, {0, 1, 1}})).dump(), "[[[0,1,1],[-1,-2,-1]]]");
}

TEST(Json, ChamberScanReport) {
  const ChamberScan scan = chamber_scan({-1, -2, -1}, Rational(3), QuadFormParams::genus4(), {});
  const Json j = to_json(scan);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> want{"class", "b", "walls", "phase1_families", "bounds", "gap",
                                      "candidates_examined", "status"};
  EXPECT_EQ(keys, want);
  ASSERT_FALSE(j["walls"].empty());
  EXPECT_EQ(j["walls"][0]["w"], "2");
  EXPECT_EQ(j["walls"][0]["destabilizer"].dump(), "[0,1,1]");
  EXPECT_EQ(j["walls"][0]["kind"], "finite_wall");
  for (const auto& f : j["phase1_families"]) EXPECT_TRUE(f["w"].is_null());
  EXPECT_EQ(to_json(scan).dump(), j.dump());
}

TEST(Json, QuadFormCertificate) {
  const Json j = to_json(QuadFormParams::genus4());
  EXPECT_EQ(j["w0_minus_t"], "19/10");
  EXPECT_TRUE(j["certificate"]["dominates"].get<bool>());
  EXPECT_EQ(j["certificate"]["gaps"].size(),
            genus4_bound().pieces().size() + genus4_bound().overrides().size());
}

TEST(PlotCsv, ExactAndLossyColumns) {
  const auto rows = emit_plot_data(genus4_bound(), Rational(3), Rational(7, 2), Rational(1, 2),
                                   Parabola{Rational(1), Rational(3), Rational(19, 10)});
  std::ostringstream exact, lossy;
  write_plot_csv(exact, rows, false);
  write_plot_csv(lossy, rows, true);
  EXPECT_EQ(exact.str(), "x,bound,overlay\n3,2,19/10\n7/2,2,43/20\n");
  EXPECT_EQ(lossy.str(),
            "x,bound,overlay,x_lossy,bound_lossy,overlay_lossy\n3,2,19/10,3,2,1.9\n7/2,2,43/20,3.5,2,2.15\n");
}

TEST(PlotJson, Records) {
  const auto rows = emit_plot_data(genus4_bound(), Rational(0), Rational(0), Rational(1));
  EXPECT_EQ(plot_to_json(rows, false).dump(), R"([{"x":"0","bound":"1","overlay":null}])");
  EXPECT_EQ(plot_to_json(rows, true)[0]["lossy"]["bound"].get<double>(), 1.0);
}
