// Copyright 2026 The ivfg Authors
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

#ifndef IVFG_ERRORS_HPP
#define IVFG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivfg {

enum class ViolationKind {
  kVertexRange,     // vertex interval outside 0 <= mu <= nu <= 1
  kEdgeRange,       // edge interval outside 0 <= mu <= nu <= 1
  kEdgeBound,       // edge exceeds the min of its endpoint intervals
  kZeroEdge,        // stored edge with nu == 0
  kSelfLoop,
  kUnknownEndpoint,
  // Vertex-map checks.
  kMapDomain,       // map does not cover exactly the source vertices
  kMapCodomain,     // image outside the target vertices
  kNotBijective,
  kVertexMembership,
  kEdgeMembership,
};

struct Violation {
  ViolationKind kind;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty iff the checked object is valid.
using ValidationReport = std::vector<Violation>;

/// Base of every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
 public:
  explicit InvalidGraph(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class NotAPath : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t vertices, std::size_t cap);
  std::size_t vertices() const { return vertices_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t vertices_;
  std::size_t cap_;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

/// Eccentricity-family queries need at least one pair of distinct vertices.
class TooFewVertices : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

// Document parsing.

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateVertex : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateEdge : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownEndpoint : public ParseError {
 public:
  using ParseError::ParseError;
};

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace ivfg

#endif  // IVFG_ERRORS_HPP
