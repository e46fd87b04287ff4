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

#ifndef VERBA_ERROR_HPP_
#define VERBA_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace verba {

// Root of every error raised by the library. Each subclass maps onto one
// CLI exit status (see tools/verba_main.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid geometric value: zero-length segment, non-finite coordinate,
// degenerate transform.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// The left-hand shape of a match does not pin down a finite set of
// similarities.
class UnderdeterminedMatchError : public Error {
 public:
  using Error::Error;
};

class LexicalError : public Error {
 public:
  LexicalError(std::string word, std::size_t position)
      : Error("lexical error: unknown word '" + word + "' at position " +
              std::to_string(position)),
        word_(std::move(word)),
        position_(position) {}

  const std::string& word() const { return word_; }
  // 1-based token position.
  std::size_t position() const { return position_; }

 private:
  std::string word_;
  std::size_t position_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  // 1-based position of the first token the parser could not consume;
  // token count + 1 when the input ended early.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class GrammarError : public Error {
 public:
  using Error::Error;
};

// Semantic composition failed or a structure violates its slot invariants.
class CompositionError : public Error {
 public:
  using Error::Error;
};

class RealizationError : public Error {
 public:
  using Error::Error;
};

// Bad rule definition, stale transform or invalid derivation script.
class RuleError : public Error {
 public:
  using Error::Error;
};

// Malformed input document or failed file access.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace verba

#endif  // VERBA_ERROR_HPP_
