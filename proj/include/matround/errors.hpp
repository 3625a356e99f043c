// Copyright 2026 The matround Authors
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

#ifndef MATROUND_ERRORS_HPP_
#define MATROUND_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace matround {

/// Malformed input text (CSV cells, decimal literals). CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a documented precondition (negative entry, value outside
/// [0,1), missing seed, ...). CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A certified error bound did not hold. On a correct build this cannot
/// happen for the guaranteed bounds; it maps to CLI exit code 2.
class BoundViolation : public std::runtime_error {
 public:
  explicit BoundViolation(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed (odd cycle in the pairing graph, corner
/// formula mismatch). Always a bug, never silently repaired. Exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace matround

#endif  // MATROUND_ERRORS_HPP_
