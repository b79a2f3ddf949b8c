// Copyright 2026 The negsssp Authors
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

#ifndef NEGSSSP_ERRORS_HPP_
#define NEGSSSP_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace negsssp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad vertex ids, malformed edge lists.
class GraphError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A potential would turn a non-frozen edge negative.
class PotentialError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Header edge count disagrees with the number of edge lines.
class CountError : public Error {
 public:
  using Error::Error;
};

// Something that should be unreachable happened. `detail` carries a
// serialized run trace when one is available.
class InternalError : public Error {
 public:
  InternalError(const std::string& what, std::string detail = {})
      : Error(what), detail_(std::move(detail)) {}
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

}  // namespace negsssp

#endif  // NEGSSSP_ERRORS_HPP_
