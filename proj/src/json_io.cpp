#include "grecip/json_io.hpp"

#include <fstream>
#include <sstream>

#include "grecip/errors.hpp"

namespace grecip {
namespace {

Json rationals(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

std::vector<Rational> parse_rationals(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rational strings");
  std::vector<Rational> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("rationals must be JSON strings such as \"1/2\"");
    out.push_back(parse_rational(e.get<std::string>()));
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<MixedGraph::Pair> pairs(const Json& j, const char* key) {
  std::vector<MixedGraph::Pair> out;
  if (!j.contains(key)) return out;
  const auto& a = j.at(key);
  if (!a.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array of pairs");
  for (const auto& p : a) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw ParseError(std::string("entries of \"") + key + "\" must be [u, v] integer pairs");
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Polynomial& p) {
  auto coeffs = p.coefficients();
  if (coeffs.empty()) coeffs.emplace_back(0);
  return rationals(coeffs);
}

Polynomial polynomial_from_json(const Json& j) { return Polynomial(parse_rationals(j)); }

Json to_json(const Quasipolynomial& q) {
  Json constituents = Json::array();
  for (const auto& p : q.constituents()) constituents.push_back(to_json(p));
  return Json{{"period", q.period()}, {"constituents", constituents}};
}

Quasipolynomial quasipolynomial_from_json(const Json& j) {
  int period = int_field(j, "period");
  const auto& cs = field(j, "constituents");
  if (!cs.is_array()) throw ParseError("\"constituents\" must be an array");
  std::vector<Polynomial> constituents;
  for (const auto& c : cs) constituents.push_back(polynomial_from_json(c));
  try {
    return Quasipolynomial(period, std::move(constituents));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json vertices_to_json(int m, std::span<const RationalPoint> vertices) {
  Json vs = Json::array();
  for (const auto& p : vertices) vs.push_back(rationals(p));
  return Json{{"m", m}, {"vertices", vs}};
}

std::vector<RationalPoint> vertices_from_json(const Json& j) {
  int m = int_field(j, "m");
  std::vector<RationalPoint> out;
  for (const auto& v : field(j, "vertices")) {
    out.push_back(parse_rationals(v));
    if (static_cast<int>(out.back().size()) != m) throw ParseError("vertex has the wrong dimension");
  }
  return out;
}

Json orientations_to_json(int m, std::span<const GolombOrientation> orientations) {
  Json list = Json::array();
  for (const auto& o : orientations) list.push_back(o.labels());
  return Json{{"m", m}, {"count", orientations.size()}, {"orientations", list}};
}

std::vector<GolombOrientation> orientations_from_json(const Json& j) {
  int m = int_field(j, "m");
  auto subsets = consecutive_subsets(m);
  std::vector<GolombOrientation> out;
  for (const auto& labels : field(j, "orientations")) {
    std::vector<int> order;
    for (const auto& l : labels) {
      if (!l.is_string()) throw ParseError("orientation entries must be subset labels");
      auto s = parse_subset_label(l.get<std::string>());
      auto it = std::find(subsets.begin(), subsets.end(), s);
      if (it == subsets.end()) throw ParseError("label " + l.get<std::string>() + " is not a proper subset");
      order.push_back(static_cast<int>(it - subsets.begin()));
    }
    try {
      out.emplace_back(m, std::move(order));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (int_field(j, "count") != static_cast<int>(out.size()))
    throw ParseError("\"count\" does not match the number of orientations");
  return out;
}

Json to_json(const MixedGraph& g) {
  Json edges = Json::array(), arcs = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
  return Json{{"n", g.n()}, {"edges", edges}, {"arcs", arcs}};
}

MixedGraph mixed_graph_from_json(const Json& j) {
  int n = int_field(j, "n");
  return MixedGraph(n, pairs(j, "edges"), pairs(j, "arcs"));
}

MixedGraph read_mixed_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return mixed_graph_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace grecip
