#pragma once

#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "equicover/covers.hpp"
#include "equicover/verify.hpp"

namespace equicover {

using json = nlohmann::json;

inline json mass_to_json(const Mass& mass) {
  json parts = json::array();
  for (const WeightedPolygon& part : mass.parts) {
    json vertices = json::array();
    for (const Point2& v : part.vertices) vertices.push_back({v.x, v.y});
    parts.push_back({{"vertices", std::move(vertices)}, {"weight", part.weight}});
  }
  return {{"parts", std::move(parts)}};
}

inline Mass mass_from_json(const json& j) {
  Mass mass;
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array()) {
    throw std::invalid_argument("mass json: expected object with a \"parts\" array");
  }
  for (const json& jp : j["parts"]) {
    WeightedPolygon part;
    part.weight = jp.at("weight").get<double>();
    for (const json& jv : jp.at("vertices")) {
      part.vertices.push_back({jv.at(0).get<double>(), jv.at(1).get<double>()});
    }
    mass.parts.push_back(std::move(part));
  }
  validate(mass);
  return mass;
}

using CoverFile = std::variant<SpiralCover, GeneralCover>;

inline json cover_to_json(const SpiralCover& cover) {
  json pieces = json::array();
  for (const Wedge& w : cover.pieces) {
    pieces.push_back({{"start", w.start}, {"sweep", w.sweep}});
  }
  return {{"apex", {cover.apex.x, cover.apex.y}},
          {"p", cover.params.p},
          {"q", cover.params.q},
          {"rays", cover.fan_rays},
          {"pieces", std::move(pieces)}};
}

inline json cover_to_json(const GeneralCover& cover) {
  json pieces = json::array();
  for (const Wedge& w : cover.pieces) {
    pieces.push_back(
        {{"apex", {w.apex.x, w.apex.y}}, {"start", w.start}, {"sweep", w.sweep}});
  }
  return {{"p", cover.target.p}, {"q", cover.target.q}, {"pieces", std::move(pieces)}};
}

inline json cover_to_json(const CoverFile& cover) {
  return std::visit([](const auto& c) { return cover_to_json(c); }, cover);
}

inline CoverFile cover_from_json(const json& j) {
  const int p = j.at("p").get<int>();
  const int q = j.at("q").get<int>();
  require_reduced(p, q);
  const json& jp = j.at("pieces");
  if (!jp.is_array() || static_cast<int>(jp.size()) != q) {
    throw std::invalid_argument("cover json: expected q pieces");
  }
  const auto read_wedge = [](const json& jw, Point2 apex) {
    Wedge w{apex, jw.at("start").get<double>(), jw.at("sweep").get<double>()};
    if (!std::isfinite(w.start) || !(w.sweep > 0.0)) {
      throw std::invalid_argument("cover json: piece needs finite start and positive sweep");
    }
    return w;
  };
  if (j.contains("apex")) {
    SpiralCover cover;
    cover.params = {p, q};
    cover.apex = {j["apex"].at(0).get<double>(), j["apex"].at(1).get<double>()};
    if (j.contains("rays")) {
      cover.fan_rays = j["rays"].get<std::vector<double>>();
    }
    for (const json& jw : jp) cover.pieces.push_back(read_wedge(jw, cover.apex));
    return cover;
  }
  GeneralCover cover;
  cover.target = {p, q};
  cover.target_multiplicity = p;
  for (const json& jw : jp) {
    const json& ja = jw.at("apex");
    cover.pieces.push_back(
        read_wedge(jw, {ja.at(0).get<double>(), ja.at(1).get<double>()}));
  }
  return cover;
}

inline json report_to_json(const VerifyReport& report) {
  json failures = json::array();
  for (const Finding& f : report.failures) {
    failures.push_back(
        {{"kind", f.kind}, {"index", f.index}, {"value", f.value}, {"detail", f.detail}});
  }
  return {{"per_piece_measure_error", report.per_piece_measure_error},
          {"max_sweep", report.max_sweep},
          {"multiplicity_ok", report.multiplicity_ok},
          {"multiplicity_method", to_string(report.multiplicity_method)},
          {"samples_tested", report.samples_tested},
          {"samples_discarded", report.samples_discarded},
          {"failures", std::move(failures)},
          {"warnings", report.warnings},
          {"passed", report.passed()}};
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

inline void save_json(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

inline json load_json(const std::string& path) { return json::parse(read_text_file(path)); }

inline Mass load_mass(const std::string& path) { return mass_from_json(load_json(path)); }

inline CoverFile load_cover(const std::string& path) {
  return cover_from_json(load_json(path));
}

}  // namespace equicover
