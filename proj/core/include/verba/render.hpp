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

#ifndef VERBA_RENDER_HPP_
#define VERBA_RENDER_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "verba/geometry.hpp"
#include "verba/rules.hpp"
#include "verba/shape.hpp"

namespace verba {

struct Viewport {
  Point min;
  Point max;
};

// Smallest box around every endpoint and label, grown by 5% of its larger
// side on each edge. Degenerate and empty inputs get a unit-sized box.
Viewport fit_viewport(std::span<const Shape> shapes);

struct RenderSpec {
  std::optional<Viewport> viewport;  // auto-fit when absent
  double stroke_width = 0.0;         // 0.5% of the viewport when zero
  Shape highlight;                   // drawn on top in a second colour
  double pixel_width = 400.0;
};

// SVG 1.1 document: one <path> per segment, one filled circle per label
// with radius 2% of the viewport. Output bytes depend only on the inputs.
std::string render_svg(const Shape& s, const RenderSpec& spec = {});

// Two panels side by side sharing one viewport.
std::string render_step_svg(const Shape& before, const Shape& after, const RenderSpec& spec = {});

// Writes step_NNN.svg, step_NNN_shape1.svg, step_NNN_shape2.svg per step,
// initial.svg and index.html into `dir`. Description references <shapeN>
// become inline images of that step's bound shapes.
void write_report(const Derivation& d, const std::filesystem::path& dir);

}  // namespace verba

#endif  // VERBA_RENDER_HPP_
