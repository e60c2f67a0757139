// Copyright 2026 The lpgraph Authors
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

#ifndef LPGRAPH_ERRORS_H_
#define LPGRAPH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lpgraph {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: sizes that do not line up, indices out of range, invalid
// instances or partitions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The simplex method hit its pivot budget without reaching a verdict.
class SolverStall : public Error {
 public:
  using Error::Error;
};

// The minimum-norm refiner failed to converge.
class QpNonConvergence : public Error {
 public:
  using Error::Error;
};

// An operation was called on an LP whose outcome does not support it, e.g.
// asking for the optimal face of an infeasible LP.
class NotOptimal : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lpgraph

#endif  // LPGRAPH_ERRORS_H_
