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

#ifndef MATROUND_NUMERIC_HPP_
#define MATROUND_NUMERIC_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace matround {

// All arithmetic that feeds a strict "< 1" verdict is integer arithmetic on
// these types. There is no floating point anywhere in the core.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(int bits) {
  BigInt one = 1;
  return one << bits;
}

/// floor(n / d) for d > 0; exact for negative n as well.
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if (n % d != 0 && ((n < 0) != (d < 0))) --q;
  return q;
}

inline BigInt ceil_div(const BigInt& n, const BigInt& d) {
  return -floor_div(-n, d);
}

inline BigInt floor_rational(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

inline BigInt ceil_rational(const Rational& r) {
  return ceil_div(numerator(r), denominator(r));
}

/// Exact decimal rendering of num / 2^scale_bits. A dyadic rational always
/// has a finite decimal expansion, so nothing is lost here.
std::string dyadic_to_decimal(const BigInt& num, int scale_bits);

/// Exact decimal rendering of a rational whose denominator divides some
/// 10^k (throws DomainError otherwise).
std::string decimal_string(const Rational& value);

}  // namespace matround

#endif  // MATROUND_NUMERIC_HPP_
