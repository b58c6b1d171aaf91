#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace degen;
using namespace degen::bundle;

namespace {

std::vector<InstanceBundle> examples() {
  return {example_ngon(3, 5), example_ngon(2, 2), example_smooth_ec(1, 5), example_smooth_ec(-4, 4),
          example_zeta_fqt(4)};
}

json as_json(const InstanceBundle& b) { return json::parse(serialize_bundle(b)); }

std::string parse_error(const json& j, bool strict = true) {
  try {
    parse_bundle(j.dump(), strict);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(RoundTrip, Examples) {
  for (const auto& b : examples()) {
    const std::string text = serialize_bundle(b);
    const auto back = parse_bundle(text);
    EXPECT_TRUE(back.warnings.empty());
    EXPECT_EQ(back.bundle, b);
    EXPECT_EQ(serialize_bundle(back.bundle), text);
  }
}

TEST(RoundTrip, RandomizedFibres) {
  oracle::Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    InstanceBundle b;
    b.fibres["w"] = oracle::randomize_fibre(oracle::random_generator_fibre(rng), rng, trial % 2);
    EXPECT_EQ(parse_bundle(serialize_bundle(b)).bundle, b);
  }
}

TEST(Parse, EmptyObjectIsAnEmptyBundle) {
  const auto r = parse_bundle("{}");
  EXPECT_EQ(r.bundle, InstanceBundle{});
}

TEST(Parse, UnknownKeys) {
  json j = as_json(example_ngon(3, 5));
  j["fibres"]["v"]["colour"] = "red";
  EXPECT_EQ(parse_error(j), "fibres.v: unknown key \"colour\"");
  const auto lenient = parse_bundle(j.dump(), false);
  ASSERT_EQ(lenient.warnings.size(), 1u);
  EXPECT_EQ(lenient.warnings[0], "fibres.v: ignoring unknown key \"colour\"");
  EXPECT_EQ(lenient.bundle, example_ngon(3, 5));
  json top = json::object();
  top["extra"] = 1;
  EXPECT_EQ(parse_error(top), "<root>: unknown key \"extra\"");
}

TEST(Parse, MalformedInput) {
  EXPECT_THROW(parse_bundle("{"), ParseError);
  EXPECT_THROW(parse_bundle("[]"), ParseError);
  json j = as_json(example_ngon(3, 5));
  j["places"]["v"]["frob"][0][0] = "0.5";
  EXPECT_EQ(parse_error(j), "places.v.frob[0][0]: \"0.5\" is not a rational number");
  j["places"]["v"]["frob"][0][0] = 5;
  EXPECT_NE(parse_error(j).find("expected a rational as a string"), std::string::npos);
  j["places"]["v"]["frob"][0][0] = "1/0";
  EXPECT_NE(parse_error(j).find("is not a rational number"), std::string::npos);
  j = as_json(example_smooth_ec(1, 5));
  j["places"]["v"]["frob"][1] = json::array({"1"});
  EXPECT_NE(parse_error(j).find("ragged matrix"), std::string::npos);
}

TEST(Parse, RationalStringsAreReduced) {
  json j = as_json(example_ngon(3, 5));
  j["places"]["v"]["frob"][0][0] = "10/2";
  const auto b = parse_bundle(j.dump()).bundle;
  EXPECT_EQ(b.places.at("v").frob(0, 0), 5);
  EXPECT_EQ(b.places.at("v").frob(0, 0).get_str(), "5");
}

TEST(Parse, CrossChecks) {
  json j = as_json(example_ngon(3, 5));
  j["fibres"]["v"]["q_v"] = 6;
  EXPECT_EQ(parse_error(j), "fibres.v.q_v: not a prime power");

  j = as_json(example_ngon(3, 5));
  j["places"]["w"] = j["places"]["v"];
  EXPECT_EQ(parse_error(j), "places.w: no fibre named \"w\"");

  j = as_json(example_ngon(3, 5));
  j["places"]["v"]["deg"] = 2;
  EXPECT_EQ(parse_error(j), "places.v.deg: q_v = 5 is not 5^2");

  j = as_json(example_ngon(3, 5));
  j["motivic"]["fibres"]["v"].erase("tau");
  EXPECT_EQ(parse_error(j), "motivic.fibres.v: xi and tau must be given together");

  j = as_json(example_zeta_fqt(4));
  j.erase("params");
  EXPECT_EQ(parse_error(j), "global: needs params.field_q");

  j = as_json(example_zeta_fqt(4));
  j["integral"]["matrix"] = json::array({json::array({"1", "0"})});
  EXPECT_EQ(parse_error(j),
            "integral.matrix: does not carry source relations into target relations");

  j = as_json(example_ngon(3, 5));
  j["fibres"]["v"]["strata"].push_back(json::array({1, 2}));
  EXPECT_NE(parse_error(j).find("duplicate stratum"), std::string::npos);

  j = as_json(example_ngon(3, 5));
  j["fibres"]["v"]["pullback"][0]["position"] = 3;
  EXPECT_NE(parse_error(j).find("out of range"), std::string::npos);
}

TEST(Parse, IntegralStructureOnChow) {
  json j = as_json(example_ngon(3, 5));
  j["fibres"]["v"]["chow"][0]["integral"] = {{"generators", 1},
                                              {"relations", json::array({json::array()})}};
  const auto b = parse_bundle(j.dump()).bundle;
  EXPECT_EQ(b.fibres.at("v").chow_integral.size(), 1u);
  j["fibres"]["v"]["chow"][0]["integral"]["generators"] = 2;
  EXPECT_NE(parse_error(j).find("integral"), std::string::npos);
}

TEST(Examples, Shapes) {
  const auto ng = example_ngon(4, 3);
  EXPECT_EQ(ng.params->q_cohomological, 3);
  EXPECT_EQ(ng.params->a, 1);
  EXPECT_EQ(ng.fibres.at("v").components, 4);
  EXPECT_EQ(ng.integral->matrix.rows(), 4u);
  EXPECT_THROW(example_smooth_ec(5, 5), ContractError);  // 25 > 20
  const auto z = example_zeta_fqt(7);
  EXPECT_EQ(z.completed().field_q, 7);
  EXPECT_EQ(z.global->weight, 1);
}
