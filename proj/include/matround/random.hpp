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

#ifndef MATROUND_RANDOM_HPP_
#define MATROUND_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "matround/numeric.hpp"

namespace matround {

/// splitmix64 finalizer. Used to spread user-supplied seeds before they
/// reach the engine and to derive independent per-trial streams.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Fixed splitting rule for Monte-Carlo trials: stream k of a master seed.
/// Documented in the README so results are portable across implementations.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Deterministic fair-bit source. Bits are taken from std::mt19937_64
/// outputs most-significant first, so a seed fully determines the stream on
/// every platform.
class BitStream {
 public:
  explicit BitStream(std::uint64_t seed) : engine_(seed) {}

  bool next_bit() {
    if (bits_left_ == 0) {
      buffer_ = engine_();
      bits_left_ = 64;
    }
    const bool bit = (buffer_ >> 63) & 1u;
    buffer_ <<= 1;
    --bits_left_;
    return bit;
  }

  /// Exact Bernoulli draw: returns true with probability num/den.
  /// Compares the random bit stream against the binary expansion of the
  /// probability, so no precision is lost for denominators like 10.
  bool bernoulli(BigInt num, const BigInt& den) {
    if (num <= 0) return false;
    if (num >= den) return true;
    for (;;) {
      num <<= 1;
      const bool p_bit = num >= den;
      if (p_bit) num -= den;
      const bool r_bit = next_bit();
      if (r_bit != p_bit) {
        // First differing position decides: r < p exactly when the random
        // bit is 0 where the probability bit is 1.
        return p_bit && !r_bit;
      }
      if (num == 0) return false;  // remaining expansion of p is all zeros
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  int bits_left_ = 0;
};

}  // namespace matround

#endif  // MATROUND_RANDOM_HPP_
