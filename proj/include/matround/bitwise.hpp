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

#ifndef MATROUND_BITWISE_HPP_
#define MATROUND_BITWISE_HPP_

#include <cstdint>

#include "matround/fixedpoint.hpp"
#include "matround/halfint.hpp"

namespace matround {

/// Digit-by-digit reduction: rounds an l-bit matrix in [0,1)^{m x n} by l
/// half-integral roundings, least significant bit first.
///
/// Iterative schedule (equivalent to the recursion x = x' + y''/2, unrolled
/// to avoid l-deep call stacks): start from y = 0 and, for level d = l down
/// to 1, round the layer bit_d(x)/2 + y/2 over {0,1/2,1}. Each level at most
/// halves the previous error and adds 1/2, so every initial-interval error
/// of the result is at most 1 - 2^-l, strictly below one.
///
/// With a randomized policy the levels consume the bit stream in order
/// d = l..1 and, inside a level, components in ascending anchor order; one
/// seed therefore fully determines the output.
class BitwisePlan {
 public:
  BitwisePlan(int rows, int cols, int levels);

  /// Requires x.unit_range() and x.scale_bits() == levels.
  Matrix<std::uint8_t> round(const DyadicMatrix& x, const ColorPolicy& policy);

  int levels() const { return levels_; }

 private:
  int levels_;
  HalfLayer layer_;  // per-level work buffer, reused across levels
};

/// Convenience wrapper building a one-shot plan.
Matrix<std::uint8_t> round_bitwise(const DyadicMatrix& x, const ColorPolicy& policy);

}  // namespace matround

#endif  // MATROUND_BITWISE_HPP_
