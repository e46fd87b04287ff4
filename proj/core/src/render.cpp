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

#include "verba/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "verba/shape_io.hpp"

namespace verba {

namespace {

// Fixed six-decimal text with trailing zeros trimmed.
std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

struct Frame {
  Viewport vp;
  double scale;   // pixels per unit
  double height;  // pixels
  double width;

  double x(double v) const { return (v - vp.min.x) * scale; }
  double y(double v) const { return (vp.max.y - v) * scale; }  // y up
};

Frame make_frame(const Viewport& vp, double pixel_width) {
  const double w = vp.max.x - vp.min.x;
  const double h = vp.max.y - vp.min.y;
  Frame f{vp, pixel_width / w, 0.0, pixel_width};
  f.height = h * f.scale;
  return f;
}

std::string drawing(const Shape& s, const RenderSpec& spec, const Frame& f) {
  const double extent = std::max(f.vp.max.x - f.vp.min.x, f.vp.max.y - f.vp.min.y);
  const double stroke = (spec.stroke_width > 0.0 ? spec.stroke_width : 0.005 * extent) * f.scale;
  const double radius = 0.02 * extent * f.scale;
  std::string out;
  auto group = [&](const Shape& shape, const char* cls, const char* colour) {
    out += "  <g class=\"" + std::string(cls) + "\" stroke=\"" + colour + "\" stroke-width=\"" + num(stroke) +
           "\" fill=\"none\" stroke-linecap=\"round\">\n";
    for (const auto& seg : shape.segments()) {
      out += "    <path d=\"M " + num(f.x(seg.p().x)) + " " + num(f.y(seg.p().y)) + " L " + num(f.x(seg.q().x)) + " " +
             num(f.y(seg.q().y)) + "\"/>\n";
    }
    out += "  </g>\n";
    out += "  <g class=\"" + std::string(cls) + "-labels\" fill=\"" + colour + "\">\n";
    for (const auto& l : shape.labels()) {
      out += "    <circle cx=\"" + num(f.x(l.at.x)) + "\" cy=\"" + num(f.y(l.at.y)) + "\" r=\"" + num(radius) + "\"/>\n";
    }
    out += "  </g>\n";
  };
  group(s, "shape", "#000000");
  if (!spec.highlight.empty()) group(spec.highlight, "highlight", "#d62728");
  return out;
}

std::string header(double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
}

std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string step_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "step_%03zu", i);
  return buf;
}

// Description text with <shapeN> swapped for the step's images.
std::string picture_text(const std::string& sentence, const std::string& stem) {
  std::string out;
  std::size_t pos = 0;
  while (pos < sentence.size()) {
    const std::size_t open = sentence.find("<shape", pos);
    if (open == std::string::npos) break;
    const std::size_t close = sentence.find('>', open);
    if (close == std::string::npos) break;
    out += html_escape(sentence.substr(pos, open - pos));
    const std::string ref = sentence.substr(open + 1, close - open - 1);
    out += "<img class=\"ref\" src=\"" + stem + "_" + ref + ".svg\" alt=\"" + ref + "\">";
    pos = close + 1;
  }
  return out + html_escape(sentence.substr(pos));
}

}  // namespace

Viewport fit_viewport(std::span<const Shape> shapes) {
  bool any = false;
  Point lo{0, 0}, hi{0, 0};
  auto add = [&](Point p) {
    if (!any) {
      lo = hi = p;
      any = true;
    }
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  };
  for (const auto& s : shapes) {
    for (const auto& seg : s.segments()) {
      add(seg.p());
      add(seg.q());
    }
    for (const auto& l : s.labels()) add(l.at);
  }
  double extent = std::max(hi.x - lo.x, hi.y - lo.y);
  if (extent <= 0.0) {
    // Nothing or a single point: centre a unit box.
    lo = lo - Point{0.5, 0.5};
    hi = hi + Point{0.5, 0.5};
    extent = 1.0;
  }
  const double m = 0.05 * extent;
  return {lo - Point{m, m}, hi + Point{m, m}};
}

std::string render_svg(const Shape& s, const RenderSpec& spec) {
  const Shape both[] = {s, spec.highlight};
  const Viewport vp = spec.viewport ? *spec.viewport : fit_viewport(both);
  const Frame f = make_frame(vp, spec.pixel_width);
  return header(f.width, f.height) + "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n" +
         drawing(s, spec, f) + "</svg>\n";
}

std::string render_step_svg(const Shape& before, const Shape& after, const RenderSpec& spec) {
  const Shape both[] = {before, after, spec.highlight};
  const Viewport vp = spec.viewport ? *spec.viewport : fit_viewport(both);
  const Frame f = make_frame(vp, spec.pixel_width);
  const double gap = 0.05 * f.width;
  std::string out = header(2 * f.width + gap, f.height);
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += "  <g class=\"before\">\n" + drawing(before, spec, f) + "  </g>\n";
  out += "  <g class=\"after\" transform=\"translate(" + num(f.width + gap) + " 0)\">\n" + drawing(after, spec, f) +
         "  </g>\n";
  return out + "</svg>\n";
}

void write_report(const Derivation& d, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_text_file(dir / "initial.svg", render_svg(d.initial));

  std::string html =
      "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>Derivation</title>\n"
      "<style>img.ref{height:2em;vertical-align:middle;border:1px solid #ccc}</style>\n"
      "</head>\n<body>\n<h1>Derivation</h1>\n<p><img src=\"initial.svg\" alt=\"initial shape\" width=\"200\"></p>\n";
  for (const auto& st : d.steps) {
    const std::string stem = step_name(st.index);
    RenderSpec spec;
    spec.highlight = st.binding.shape2;
    write_text_file(dir / (stem + ".svg"), render_step_svg(st.before, st.after, spec));
    const Shape frame[] = {st.after};
    RenderSpec bound;
    bound.viewport = fit_viewport(frame);
    write_text_file(dir / (stem + "_shape1.svg"), render_svg(st.binding.shape1, bound));
    write_text_file(dir / (stem + "_shape2.svg"), render_svg(st.binding.shape2, bound));

    html += "<h2>Step " + std::to_string(st.index) + ": " + html_escape(st.rule) + "</h2>\n";
    html += "<p><img src=\"" + stem + ".svg\" alt=\"before and after\" width=\"420\"></p>\n<ul>\n";
    for (std::size_t i = 0; i < st.descriptions.size(); ++i) {
      html += "<li>" + picture_text(st.descriptions[i], stem);
      if (i < st.verification.size()) {
        const auto& v = st.verification[i];
        html += " <small>[" + std::string(to_string(v.status));
        if (v.relation) html += ", " + std::string(to_string(*v.relation));
        if (v.coarse) html += ", coarse";
        html += "]</small>";
      }
      html += "</li>\n";
    }
    html += "</ul>\n";
  }
  html += "<p>Termination: " + std::string(to_string(d.termination)) + "</p>\n</body>\n</html>\n";
  write_text_file(dir / "index.html", html);
}

}  // namespace verba
