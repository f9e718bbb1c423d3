#include <gtest/gtest.h>

#include "grecip/errors.hpp"
#include "grecip/fixtures.hpp"
#include "grecip/json_io.hpp"

using namespace grecip;

namespace {

template <class Parse, class Write>
void expect_byte_exact(const std::string& text, Parse parse, Write write) {
  auto value = parse(Json::parse(text));
  EXPECT_EQ(dump(write(value)), text);
}

}  // namespace

TEST(JsonIo, QuasipolynomialRoundTrip) {
  Quasipolynomial q(2, {Polynomial({0, 1}), Polynomial({make_rational(-1, 2), 1})});
  auto text = dump(to_json(q));
  EXPECT_EQ(quasipolynomial_from_json(Json::parse(text)), q);
  expect_byte_exact(text, quasipolynomial_from_json, [](const Quasipolynomial& v) { return to_json(v); });
  EXPECT_EQ(to_json(Quasipolynomial())["constituents"][0], Json::array({"0"}));
}

TEST(JsonIo, VerticesRoundTrip) {
  std::vector<RationalPoint> vs{{0, 1}, {make_rational(1, 2), make_rational(1, 2)}, {1, 0}};
  auto j = vertices_to_json(2, vs);
  EXPECT_EQ(vertices_from_json(j), vs);
  expect_byte_exact(dump(j), vertices_from_json,
                    [](const std::vector<RationalPoint>& v) { return vertices_to_json(2, v); });
}

TEST(JsonIo, OrientationsRoundTrip) {
  std::vector<GolombOrientation> os{GolombOrientation(3, {0, 1, 3, 2, 4}), GolombOrientation(3, {2, 1, 4, 0, 3})};
  auto j = orientations_to_json(3, os);
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(orientations_from_json(j), os);
  j["count"] = 3;
  EXPECT_THROW(orientations_from_json(j), ParseError);
}

TEST(JsonIo, MixedGraphRoundTrip) {
  auto g = fixtures::triangle();
  auto text = dump(to_json(g));
  EXPECT_EQ(mixed_graph_from_json(Json::parse(text)), g);
  expect_byte_exact(text, mixed_graph_from_json, [](const MixedGraph& v) { return to_json(v); });
}

TEST(JsonIo, MixedGraphErrors) {
  EXPECT_THROW(mixed_graph_from_json(Json::parse(R"({"n": 2, "edges": [[1, 1]], "arcs": []})")), ValidationError);
  EXPECT_THROW(mixed_graph_from_json(Json::parse(R"({"n": 2, "edges": [[1, 2]], "arcs": [[2, 1]]})")), ValidationError);
  EXPECT_THROW(mixed_graph_from_json(Json::parse(R"({"edges": []})")), ParseError);
  EXPECT_THROW(mixed_graph_from_json(Json::parse(R"({"n": 2, "edges": [[1]], "arcs": []})")), ParseError);
}

TEST(JsonIo, PolynomialRoundTrip) {
  Polynomial p({0, 1, make_rational(-3, 2), make_rational(1, 2)});
  EXPECT_EQ(to_json(p), Json::parse(R"(["0","1","-3/2","1/2"])"));
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
}
