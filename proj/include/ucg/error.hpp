// Copyright 2026 The ucg Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ucg {

// Invalid generator parameters (e.g. P(m,k) with k >= m/2).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a structural precondition: not cubic, improper coloring,
// trivial cut, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A search was asked to run past its size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input. `offset` is the byte offset of the first bad
// byte within the parsed line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  // Prefixes context (e.g. a line number) to an existing error.
  ParseError(const std::string& context, const ParseError& inner)
      : std::runtime_error(context + inner.what()), offset_(inner.offset_) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ucg
