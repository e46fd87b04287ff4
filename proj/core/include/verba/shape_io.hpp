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

#ifndef VERBA_SHAPE_IO_HPP_
#define VERBA_SHAPE_IO_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "verba/shape.hpp"
#include "verba/transform.hpp"

namespace verba {

// Shape documents:
//   {"segments": [[[x1, y1], [x2, y2]], ...],
//    "labels": [{"point": [x, y], "label": "dot"}, ...]}
// Loading canonicalizes. Saving emits the canonical form with coordinates
// rounded to 9 decimals, so equal shapes serialize to identical bytes.
Shape shape_from_json(const nlohmann::json& doc);
nlohmann::json shape_to_json(const Shape& s);

Shape load_shape(const std::filesystem::path& path);
void save_shape(const Shape& s, const std::filesystem::path& path);

// Six numbers: 2x2 linear part row-major, then translation.
nlohmann::json transform_to_json(const Transform& t);
Transform transform_from_json(const nlohmann::json& doc);

// Coordinate as written to disk.
double round_coordinate(double v);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace verba

#endif  // VERBA_SHAPE_IO_HPP_
