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

#ifndef MATROUND_FIXEDPOINT_HPP_
#define MATROUND_FIXEDPOINT_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "matround/matrix.hpp"
#include "matround/numeric.hpp"
#include "matround/random.hpp"

namespace matround {

enum class QuantizeMode { truncate, unbiased };

/// Non-negative dyadic rational numerator / 2^scale_bits.
struct Dyadic {
  BigInt numerator;
  int scale_bits = 0;

  Rational value() const { return Rational(numerator, pow2(scale_bits)); }
  std::string to_decimal() const { return dyadic_to_decimal(numerator, scale_bits); }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

/// m x n matrix of dyadic rationals sharing one scale. With `unit_range`
/// every entry lies in [0, 1); without it entries are only required to be
/// non-negative. Both properties are checked on construction.
class DyadicMatrix {
 public:
  DyadicMatrix(Matrix<BigInt> numerators, int scale_bits, bool unit_range = true);

  int rows() const { return num_.rows(); }
  int cols() const { return num_.cols(); }
  int scale_bits() const { return scale_bits_; }
  bool unit_range() const { return unit_range_; }
  BigInt denominator() const { return pow2(scale_bits_); }

  const BigInt& num(int i, int j) const { return num_.at(i, j); }
  const Matrix<BigInt>& numerators() const { return num_; }
  Rational value(int i, int j) const { return Rational(num_.at(i, j), denominator()); }

  friend bool operator==(const DyadicMatrix&, const DyadicMatrix&) = default;

 private:
  Matrix<BigInt> num_;
  int scale_bits_;
  bool unit_range_;
};

/// Parses a non-negative decimal literal ("0.25", "12", "3.50") into the
/// exact rational it denotes. No binary-float round trip.
/// Throws ParseError for malformed text and DomainError for negative values.
Rational parse_decimal(std::string_view text);

/// True when `value` is k / 2^l for some l; reports the smallest such l.
bool is_dyadic(const Rational& value, int* bits_out = nullptr);

/// Rounds `value` in [0,1) to an l-bit dyadic.
///   truncate: floor(value * 2^l) / 2^l.
///   unbiased: the truncation, plus one ulp with probability equal to the
///             truncated residual scaled by 2^l, so the expectation equals
///             `value` exactly. Requires an entropy source.
Dyadic quantize(const Rational& value, int scale_bits, QuantizeMode mode,
                BitStream* rng = nullptr);

struct SplitMatrix {
  Matrix<BigInt> integer;     // floor part
  Matrix<Rational> fraction;  // in [0,1), entrywise integer + fraction = input
};

/// Splits a non-negative rational matrix into integer and fractional parts.
SplitMatrix split_integer_fraction(const Matrix<Rational>& m);

}  // namespace matround

#endif  // MATROUND_FIXEDPOINT_HPP_
