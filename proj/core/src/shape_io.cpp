// Copyright 2026 The Verba Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "verba/shape_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "verba/error.hpp"

namespace verba {

using nlohmann::json;

double round_coordinate(double v) {
  const double r = std::round(v * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;  // no negative zero on disk
}

namespace {

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("expected a point [x, y], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(Point p) { return json::array({round_coordinate(p.x), round_coordinate(p.y)}); }

}  // namespace

Shape shape_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("shape document must be a JSON object");
  std::vector<Segment> segs;
  std::vector<LabelledPoint> labels;
  try {
    if (doc.contains("segments")) {
      for (const auto& s : doc.at("segments")) {
        if (!s.is_array() || s.size() != 2) throw FormatError("segment must be [[x1, y1], [x2, y2]]");
        segs.emplace_back(point_from_json(s[0]), point_from_json(s[1]));
      }
    }
    if (doc.contains("labels")) {
      for (const auto& l : doc.at("labels")) {
        if (!l.is_object() || !l.contains("point") || !l.contains("label") || !l.at("label").is_string()) {
          throw FormatError("label must be {\"point\": [x, y], \"label\": \"...\"}");
        }
        labels.emplace_back(point_from_json(l.at("point")), l.at("label").get<std::string>());
      }
    }
  } catch (const GeometryError& e) {
    throw FormatError(std::string("invalid shape: ") + e.what());
  }
  return Shape::canonicalize(segs, labels);
}

json shape_to_json(const Shape& s) {
  json segs = json::array();
  for (const auto& seg : s.segments()) segs.push_back(json::array({point_to_json(seg.p()), point_to_json(seg.q())}));
  json labels = json::array();
  for (const auto& l : s.labels()) labels.push_back({{"label", l.label}, {"point", point_to_json(l.at)}});
  return {{"labels", labels}, {"segments", segs}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

Shape load_shape(const std::filesystem::path& path) { return shape_from_json(read_json_file(path)); }

void save_shape(const Shape& s, const std::filesystem::path& path) {
  write_text_file(path, shape_to_json(s).dump(2) + "\n");
}

json transform_to_json(const Transform& t) {
  json out = json::array();
  for (double c : t.coefficients()) out.push_back(round_coordinate(c));
  return out;
}

Transform transform_from_json(const json& doc) {
  if (!doc.is_array() || doc.size() != 6) throw FormatError("transform must be an array of 6 numbers");
  std::array<double, 6> c{};
  for (std::size_t i = 0; i < 6; ++i) {
    if (!doc[i].is_number()) throw FormatError("transform coefficient is not a number");
    c[i] = doc[i].get<double>();
  }
  try {
    return {c[0], c[1], c[2], c[3], c[4], c[5]};
  } catch (const GeometryError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace verba
