#include "incidence/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace incidence {

Json point_to_json(const Point& x) {
  Json out = Json::array();
  for (Eigen::Index j = 0; j < x.size(); ++j) out.push_back(to_string(x[j]));
  return out;
}

Point point_from_json(const Json& json) {
  if (!json.is_array()) throw std::invalid_argument("point must be a JSON array");
  Point x(static_cast<Eigen::Index>(json.size()));
  for (std::size_t j = 0; j < json.size(); ++j) {
    const Json& v = json[j];
    if (v.is_string()) {
      x[static_cast<Eigen::Index>(j)] = parse_rational(v.get<std::string>());
    } else if (v.is_number_integer()) {
      x[static_cast<Eigen::Index>(j)] = Rational(v.get<long long>());
    } else {
      throw std::invalid_argument("coordinates must be rational strings or integers");
    }
  }
  return x;
}

Json instance_to_json(const BipartiteInstance& instance) {
  const auto& pred = instance.predicate;
  Json out;
  out["format"] = kInstanceFormat;
  out["version"] = kInstanceVersion;
  out["d1"] = pred.d1();
  out["d2"] = pred.d2();
  out["complexity"] = pred.complexity();
  Json polys = Json::array();
  for (const auto& f : pred.polynomials()) polys.push_back(to_string(f));
  out["polynomials"] = std::move(polys);
  out["formula"] = to_string(pred.formula());
  Json P = Json::array();
  for (const auto& p : instance.P) P.push_back(point_to_json(p));
  Json Q = Json::array();
  for (const auto& q : instance.Q) Q.push_back(point_to_json(q));
  out["P"] = std::move(P);
  out["Q"] = std::move(Q);
  return out;
}

BipartiteInstance instance_from_json(const Json& json) {
  try {
    if (json.value("format", std::string()) != kInstanceFormat) {
      throw std::invalid_argument(std::string("expected format '") + kInstanceFormat + "'");
    }
    if (json.value("version", 0) != kInstanceVersion) {
      throw std::invalid_argument("unsupported instance version " + json.at("version").dump());
    }
    const auto d1 = json.at("d1").get<std::size_t>();
    const auto d2 = json.at("d2").get<std::size_t>();
    std::vector<Polynomial> polys;
    for (const auto& f : json.at("polynomials")) polys.push_back(parse_polynomial(f.get<std::string>(), d1 + d2));
    std::optional<std::size_t> complexity;
    if (json.contains("complexity")) complexity = json.at("complexity").get<std::size_t>();
    EdgePredicate pred(d1, d2, std::move(polys), Formula::parse(json.at("formula").get<std::string>()), complexity);
    PointSet P;
    PointSet Q;
    for (const auto& p : json.at("P")) P.push_back(point_from_json(p));
    for (const auto& q : json.at("Q")) Q.push_back(point_from_json(q));
    BipartiteInstance inst{std::move(P), std::move(Q), std::move(pred)};
    inst.validate();
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BipartiteInstance read_instance_file(const std::filesystem::path& path) {
  Json json;
  try {
    json = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return instance_from_json(json);
}

void write_instance_file(const BipartiteInstance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << instance_to_json(instance).dump(1) << '\n';
}

PointSet parse_points(std::istream& in) {
  PointSet out;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<Rational> coords;
    for (std::string tok; ls >> tok;) {
      try {
        coords.push_back(parse_rational(tok));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("points line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (coords.empty()) continue;
    if (!out.empty() && static_cast<std::size_t>(out.front().size()) != coords.size()) {
      throw std::invalid_argument("points line " + std::to_string(lineno) + ": dimension differs from the first point");
    }
    Point x(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t j = 0; j < coords.size(); ++j) x[static_cast<Eigen::Index>(j)] = coords[j];
    out.push_back(std::move(x));
  }
  return out;
}

PointSet read_points_file(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  return parse_points(in);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

}  // namespace incidence
