#include "minkval/io.hpp"

#include <fstream>
#include <sstream>

#include "minkval/errors.hpp"

namespace minkval {

namespace {

Rational coordinate(const nlohmann::json& v, bool allow_float) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number() && allow_float) {
    Rational r(v.get<double>());
    return r;
  }
  throw Error(ErrorCode::kParseError,
              "coordinate " + v.dump() + " must be a rational string (numbers need \"mode\": \"float\")");
}

}  // namespace

Polytope polytope_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "polytope must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw Error(ErrorCode::kParseError, "polytope needs integer 'n'");
  const long n = j["n"].get<long>();
  if (n < 1 || n > static_cast<long>(kMaxAmbientDim)) {
    throw Error(ErrorCode::kDimensionOutOfRange, "n must be in 1.." + std::to_string(kMaxAmbientDim));
  }
  bool allow_float = false;
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw Error(ErrorCode::kParseError, "'mode' must be a string");
    const auto m = j["mode"].get<std::string>();
    if (m != "float" && m != "exact") throw Error(ErrorCode::kParseError, "unknown polytope mode '" + m + "'");
    allow_float = m == "float";
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorCode::kParseError, "polytope needs a 'vertices' array");
  }
  std::vector<Vector> pts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || static_cast<long>(row.size()) != n) {
      throw Error(ErrorCode::kParseError, "vertex " + row.dump() + " does not have n coordinates");
    }
    Vector v(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) v[i] = coordinate(row[i], allow_float);
    pts.push_back(std::move(v));
  }
  return Polytope::hull(pts);
}

nlohmann::json polytope_to_json(const Polytope& p) {
  nlohmann::json j;
  j["n"] = p.ambient_dim();
  j["dim"] = p.dim();
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(vector_to_json(v));
  return j;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
  out << text;
}

Vector parse_vector(const std::string& text) {
  std::vector<Rational> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::kParseError, "empty coordinate in '" + text + "'");
    xs.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (xs.empty()) throw Error(ErrorCode::kParseError, "empty vector");
  Vector v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = xs[i];
  return v;
}

nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : v.coords()) a.push_back(c.get_str());
  return a;
}

}  // namespace minkval
