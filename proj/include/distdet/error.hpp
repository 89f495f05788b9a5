// Copyright 2026 The distdet Authors
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
#include <optional>
#include <stdexcept>
#include <string>

namespace distdet {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected graph input: bad syntax, loops, duplicate edges, out-of-range ids.
class GraphError : public Error {
 public:
  enum class Reason { kMalformed, kLoop, kDuplicateEdge, kVertexRange };

  GraphError(Reason reason, const std::string& what,
             std::optional<std::size_t> line = std::nullopt)
      : Error(line ? "line " + std::to_string(*line) + ": " + what : what),
        reason_(reason),
        line_(line) {}

  Reason reason() const noexcept { return reason_; }
  /// 1-based line number when the error came from the edge-list parser.
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  Reason reason_;
  std::optional<std::size_t> line_;
};

class ConnectivityError : public Error {
 public:
  ConnectivityError() : Error("graph is not connected") {}
};

/// A parameter outside the documented domain (theta triple, path length, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("matrix is singular") {}
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace distdet
