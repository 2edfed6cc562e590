// SPDX-License-Identifier: Apache-2.0
#include "chlat/pointfile.hpp"

#include <json.hpp>
#include <set>

#include "chlat/errors.hpp"

namespace chlat {

using nlohmann::json;

namespace {

Rational coordinate(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("coordinates must be strings or integers, got " + v.dump());
}

}  // namespace

Configuration parse_point_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points")) {
    throw ParseError("point file needs the keys \"dim\" and \"points\"");
  }
  if (!doc["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
  const long dim = doc["dim"].get<long>();
  if (dim < 1 || dim > 3) throw ParseError("\"dim\" must be 1, 2 or 3");
  if (!doc["points"].is_array()) throw ParseError("\"points\" must be an array");

  std::vector<Point> pts;
  std::set<Point> seen;
  for (const json& row : doc["points"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw ParseError("point " + std::to_string(pts.size()) + " does not have " +
                       std::to_string(dim) + " coordinates");
    }
    std::vector<Rational> c;
    for (const json& v : row) c.push_back(coordinate(v));
    Point p(std::move(c));
    if (!seen.insert(p).second) throw ParseError("repeated point " + to_string(p));
    pts.push_back(std::move(p));
  }
  return Configuration(static_cast<std::size_t>(dim), std::move(pts));
}

std::string write_point_file(const Configuration& X) {
  std::string out = "{\n  \"dim\": " + std::to_string(X.dim()) + ",\n  \"points\": [";
  for (std::size_t i = 0; i < X.size(); ++i) {
    out += i ? ",\n    [" : "\n    [";
    for (std::size_t k = 0; k < X.dim(); ++k) {
      out += (k ? ", " : "") + json(to_string(X[i][k])).dump();
    }
    out += "]";
  }
  out += X.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace chlat
