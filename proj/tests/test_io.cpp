#include <gtest/gtest.h>

#include "zpalg/errors.hpp"
#include "zpalg/io.hpp"

using namespace zpalg;
using io::json;

TEST(IoModule, RoundTrip) {
  const zpmod::GradedModule m(zpmod::RingSpec(3, 2), {{4, {2, 1, 1}}, {-1, {2}}});
  const json j = io::to_json(m);
  EXPECT_EQ(j.dump(), R"({"p":3,"s":2,"components":{"-1":[2],"4":[2,1,1]}})");
  EXPECT_EQ(io::graded_module_from_json(j), m);
}

TEST(IoModule, RejectsBadInput) {
  const auto parse = [](const char* text) { return io::graded_module_from_json(json::parse(text)); };
  EXPECT_THROW(parse(R"({"p":3,"s":2,"components":{"4":[0]}})"), InvalidInput);
  EXPECT_THROW(parse(R"({"p":3,"s":2,"components":{"4":[3]}})"), InvalidInput);
  EXPECT_THROW(parse(R"({"p":4,"s":1,"components":{}})"), InvalidInput);
  EXPECT_THROW(parse(R"({"p":3,"components":{}})"), InvalidInput);
  EXPECT_THROW(parse(R"({"p":3,"s":1,"components":{"x":[1]}})"), InvalidInput);
  EXPECT_THROW(parse(R"({"p":3,"s":1,"components":{"2":[1.5]}})"), InvalidInput);
  EXPECT_NO_THROW(parse(R"({"p":3,"s":1,"components":{}})"));
}

TEST(IoNumbers, BigAndRational) {
  EXPECT_EQ(io::big(BigInt(42)).dump(), "42");
  const BigInt huge = BigInt(1) << 80;
  EXPECT_EQ(io::big(huge).dump(), "\"1208925819614629174706176\"");
  EXPECT_EQ(io::rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(io::rational(Rational(-4, 2)), "-2");
  EXPECT_TRUE(io::real(-std::numeric_limits<double>::infinity()).is_null());
}

TEST(IoGrowth, SequenceRoundTripAndNullInfinity) {
  growth::GrowthSequence s({{1, 0}, {2, 5}, {3, BigInt(1) << 70}});
  EXPECT_EQ(io::growth_sequence_from_json(io::to_json(s)).points(), s.points());
  EXPECT_THROW(io::growth_sequence_from_json(json::parse(R"([[1,"abc"]])")), InvalidInput);
  const auto rep = growth::analyze(s);
  const json j = io::to_json(rep);
  EXPECT_TRUE(j["ratios"][0][1].is_null());
  EXPECT_EQ(j["verdict"], growth::to_string(rep.verdict));
}

TEST(IoMoore, WedgeAndCsv) {
  const moore::MooreWedge w({{moore::MooreSummand{3, 2, 2}, 1}, {moore::MooreSummand{3, 3, 1}, 2}});
  EXPECT_EQ(io::to_json(w).dump(),
            R"([{"dim":3,"p":2,"r":2,"mult":1},{"dim":3,"p":3,"r":1,"mult":2}])");
  EXPECT_EQ(io::wedge_csv(w), "dim,p,r,mult\n3,2,2,1\n3,3,1,2\n");
}
