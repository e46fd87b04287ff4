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

// verba: parse, interpret and convert descriptions; run and verify
// derivations; render shapes.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "verba/error.hpp"
#include "verba/grammar.hpp"
#include "verba/render.hpp"
#include "verba/rules.hpp"
#include "verba/rules_io.hpp"
#include "verba/semantics.hpp"
#include "verba/shape_io.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kFailedCheck = 1,
  kLanguage = 2,
  kSemantic = 3,
  kRefuted = 4,
  kIo = 5,
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("VERBA_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw verba::FormatError(std::string("VERBA_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

int cmd_parse(const std::string& sentence) {
  std::cout << verba::render_tree(verba::parse_first(sentence)) << "\n";
  return kOk;
}

int cmd_interpret(const std::string& sentence, bool positional, bool as_json) {
  const verba::SemStructure s = verba::interpret_sentence(sentence);
  if (as_json) {
    std::cout << verba::to_json(s).dump(2) << "\n";
  } else if (positional) {
    std::cout << verba::serialize_positional(s) << "\n";
  } else {
    std::cout << verba::serialize(s) << "\n";
  }
  return kOk;
}

int cmd_convert(const std::string& sentence, const std::string& to) {
  const auto style = verba::style_from_string(to);
  if (!style) throw verba::FormatError("unknown style " + to + " (constructive or from-above)");
  std::cout << verba::convert_style(sentence, *style) << "\n";
  return kOk;
}

struct DeriveArgs {
  std::string rules, init, strategy = "first", out, script;
  std::size_t steps = 10;
  std::optional<std::uint64_t> seed;
};

int cmd_derive(const DeriveArgs& a) {
  const auto rules = verba::load_rules(a.rules);
  const verba::Shape initial = verba::load_shape(a.init);
  verba::Strategy strategy;
  if (a.strategy == "first") {
    strategy = verba::Strategy::first();
  } else if (a.strategy == "random") {
    strategy = verba::Strategy::random(resolve_seed(a.seed));
  } else if (a.strategy == "script" || a.strategy == "interactive-script") {
    if (a.script.empty()) throw verba::FormatError("--strategy script needs --script FILE");
    strategy = verba::Strategy::scripted(verba::load_script(a.script));
  } else {
    throw verba::FormatError("unknown strategy " + a.strategy);
  }

  const verba::Derivation d = verba::derive(rules, initial, strategy, a.steps);
  const std::filesystem::path out(a.out);
  std::filesystem::create_directories(out);
  verba::write_text_file(out / "trace.json", verba::trace_text(d));
  verba::write_report(d, out);

  int status = kOk;
  for (const auto& st : d.steps) {
    const auto it = std::find_if(rules.begin(), rules.end(),
                                 [&](const verba::RulePair& p) { return p.shape_rule.name == st.rule; });
    if (!verba::check_step(*it, st)) {
      std::cerr << "step " << st.index << ": rewrite invariant failed\n";
      status = kFailedCheck;
    }
  }
  std::cout << d.steps.size() << " step(s), termination: " << verba::to_string(d.termination) << "\n";
  for (const auto& st : d.steps) {
    for (const auto& v : st.verification) {
      std::cout << "  [" << st.index << "] " << v.sentence << "  " << verba::to_string(v.status);
      if (v.relation) std::cout << " " << verba::to_string(*v.relation);
      if (v.coarse) std::cout << " (coarse)";
      std::cout << "\n";
    }
  }
  return status;
}

int cmd_verify(const std::string& sentence, const std::string& shape1, const std::string& shape2) {
  const verba::Binding b{verba::load_shape(shape1), verba::load_shape(shape2)};
  const verba::Verification v = verba::verify_sentence(sentence, b);
  std::cout << verba::to_string(v.status);
  if (v.relation) std::cout << " " << verba::to_string(*v.relation);
  if (v.coarse) std::cout << " (coarse)";
  if (!v.note.empty()) std::cout << " (" << v.note << ")";
  std::cout << "\n";
  return v.status == verba::VerificationStatus::kRefuted ? kRefuted : kOk;
}

int cmd_render(const std::string& shape, const std::string& out) {
  verba::write_text_file(out, verba::render_svg(verba::load_shape(shape)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shape descriptions: parsing, interpretation, derivation and verification"};
  app.require_subcommand(1);

  std::string sentence, to, shape1, shape2, shape, out;
  bool positional = false, as_json = false;
  DeriveArgs derive;

  auto* parse = app.add_subcommand("parse", "Print the parse tree of a sentence");
  parse->add_option("sentence", sentence, "Sentence")->required();

  auto* interpret = app.add_subcommand("interpret", "Print the semantic structure of a sentence");
  interpret->add_option("sentence", sentence, "Sentence")->required();
  interpret->add_flag("--positional,--paper-style", positional, "Positional bracket-list form");
  interpret->add_flag("--json", as_json, "JSON form");

  auto* convert = app.add_subcommand("convert", "Rewrite a sentence in another description style");
  convert->add_option("sentence", sentence, "Sentence")->required();
  convert->add_option("--to", to, "constructive or from-above")->required();

  auto* der = app.add_subcommand("derive", "Run a derivation and write its trace and report");
  der->add_option("--rules", derive.rules, "Rule file")->required();
  der->add_option("--init", derive.init, "Initial shape file")->required();
  der->add_option("--steps", derive.steps, "Maximum number of steps")->capture_default_str();
  der->add_option("--strategy", derive.strategy, "first, random or script")->capture_default_str();
  der->add_option("--seed", derive.seed, "Seed for the random strategy (default: $VERBA_SEED or 0)");
  der->add_option("--script", derive.script, "Choice file for the script strategy");
  der->add_option("--out", derive.out, "Output directory")->required();

  auto* verify = app.add_subcommand("verify", "Check a spatial claim against two shapes");
  verify->add_option("--sentence", sentence, "Sentence")->required();
  verify->add_option("--shape1", shape1, "Shape bound to shape1")->required();
  verify->add_option("--shape2", shape2, "Shape bound to shape2")->required();

  auto* render = app.add_subcommand("render", "Render a shape to SVG");
  render->add_option("--shape", shape, "Shape file")->required();
  render->add_option("--out", out, "SVG file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse) return cmd_parse(sentence);
    if (*interpret) return cmd_interpret(sentence, positional, as_json);
    if (*convert) return cmd_convert(sentence, to);
    if (*der) return cmd_derive(derive);
    if (*verify) return cmd_verify(sentence, shape1, shape2);
    if (*render) return cmd_render(shape, out);
  } catch (const verba::LexicalError& e) {
    std::cerr << e.what() << "\n";
    return kLanguage;
  } catch (const verba::SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return kLanguage;
  } catch (const verba::CompositionError& e) {
    std::cerr << "semantic error: " << e.what() << "\n";
    return kSemantic;
  } catch (const verba::RealizationError& e) {
    std::cerr << "semantic error: " << e.what() << "\n";
    return kSemantic;
  } catch (const verba::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}
