// Copyright 2026 The multidom Authors
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

#ifndef MULTIDOM_ERRORS_H_
#define MULTIDOM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multidom {

// Malformed graph input: out-of-range endpoint, self-loop, empty vertex set.
class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VertexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Multiplicity outside the range where the requested variant is defined.
class KOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact search refused because the graph exceeds the configured size cap.
class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A caller broke a documented precondition (e.g. W not inside N[v]).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solution trace does not replay against the graph it claims to belong to.
class TraceMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace multidom

#endif  // MULTIDOM_ERRORS_H_
