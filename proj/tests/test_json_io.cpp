#include <gtest/gtest.h>

#include "shapelift/json_io.hpp"
#include "support.hpp"

using namespace shapelift;
using namespace testing_support;
using shapelift::io::Json;

TEST(JsonIo, DomainRoundTrip) {
  std::vector<ToricDomain> domains{ToricDomain::ball(3), ToricDomain::ellipsoid(Q("1/2"), Q("7/3")),
                                   ToricDomain::polydisk(2, 5),
                                   ToricDomain::toric_pl({P("0", "24"), P("2", "17"), P("19", "0")})};
  for (const ToricDomain& X : domains) {
    Json j = io::to_json(X);
    EXPECT_EQ(io::to_json(io::domain_from_json(io::parse_text(io::dump(j), "mem"))), j);
  }
}

TEST(JsonIo, DomainErrorsNameTheLocation) {
  try {
    io::domain_from_json(io::parse_text(R"({"type":"toric_pl","profile":[["0","4"],["x","0"]]})", "mem"));
    FAIL();
  } catch (const io::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/profile/1/0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::domain_from_json(Json{{"type", "ball"}}), io::InputError);
  EXPECT_THROW(io::domain_from_json(Json{{"type", "cube"}}), io::InputError);
  EXPECT_THROW(io::domain_from_json(Json{{"type", "ball"}, {"R", "-1"}}), io::InputError);
}

TEST(JsonIo, ParseErrorsCarryLineAndColumn) {
  try {
    io::parse_text("{\n  \"type\": ball\n}", "input.json");
    FAIL();
  } catch (const io::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(JsonIo, PathForms) {
  PolyPath p = path_of({{"1/2", "1"}, {"1/2", "3"}});
  EXPECT_EQ(io::path_from_json(io::to_json(p)).vertices(), p.vertices());
  EXPECT_EQ(io::path_from_json(Json{{"path", io::to_json(p)}}).vertices(), p.vertices());
  EXPECT_THROW(io::path_from_json(Json::array({Json::array({"1", "2"})})), io::InputError);
}

TEST(JsonIo, VerdictRoundTrip) {
  ToricDomain X = ToricDomain::ball(3);
  for (const PolyPath& path : {path_of({{"9/10", "1"}, {"9/10", "3"}}), path_of({{"1/5", "1/5"}, {"1/5", "4"}})}) {
    LiftVerdict v = classify(X, path);
    Json j = io::to_json(v);
    EXPECT_EQ(io::to_json(io::verdict_from_json(j)), j);
  }
}

TEST(JsonIo, WitnessRoundTrip) {
  Witness w{16, 16, path_of({{"7", "8"}, {"5/2", "16"}, {"1/2", "22"}})};
  Witness back = io::witness_from_json(io::to_json(w));
  EXPECT_EQ(back.e_r, w.e_r);
  EXPECT_EQ(back.path.vertices(), w.path.vertices());
}

TEST(JsonIo, PointText) {
  EXPECT_EQ(io::point_from_text("1/2,3"), P("1/2", "3"));
  EXPECT_THROW(io::point_from_text("1/2"), io::InputError);
  EXPECT_THROW(io::point_from_text("a,3"), io::InputError);
}

TEST(JsonIo, ReportIsStable) {
  Json j = io::report(Json{{"z", 1}, {"a", 2}}, Json{{"command", "x"}});
  std::string text = io::dump(j);
  EXPECT_EQ(text, io::dump(io::parse_text(text, "mem")));
  EXPECT_LT(text.find("\"a\""), text.find("\"z\""));
  EXPECT_EQ(text.back(), '\n');
}
