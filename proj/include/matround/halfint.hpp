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

#ifndef MATROUND_HALFINT_HPP_
#define MATROUND_HALFINT_HPP_

#include <cstdint>
#include <vector>

#include "matround/matrix.hpp"
#include "matround/random.hpp"

namespace matround {

/// Matrix over {0, 1/2, 1}, stored in half units {0, 1, 2}. The integral
/// entries are fixed points of rounding; only the 1/2 entries move.
class HalfLayer {
 public:
  HalfLayer(int rows, int cols) : units_(rows, cols, 0) {}
  explicit HalfLayer(Matrix<std::uint8_t> half_units);

  int rows() const { return units_.rows(); }
  int cols() const { return units_.cols(); }

  std::uint8_t& half_units(int i, int j) { return units_.at(i, j); }
  std::uint8_t half_units(int i, int j) const { return units_.at(i, j); }
  Matrix<std::uint8_t>& units() { return units_; }
  const Matrix<std::uint8_t>& units() const { return units_; }

 private:
  Matrix<std::uint8_t> units_;
};

/// Pairing graph on the 1/2 entries: the (2k-1)-th and (2k)-th 1/2 of each
/// row are joined by a row edge, likewise per column. Every vertex has at
/// most one row edge and at most one column edge, so components are simple
/// paths or even cycles. An odd trailing 1/2 in a line simply lacks that
/// edge, which is what turns a cycle into a path.
struct AuxGraph {
  struct Vertex {
    int row;
    int col;
  };
  struct Component {
    std::int32_t anchor;  // smallest vertex index, row-major
    std::int32_t size;
    bool is_cycle;
  };

  std::vector<Vertex> vertices;            // row-major discovery order
  std::vector<std::int32_t> row_neighbor;  // -1 when the 1/2 is unpaired in its row
  std::vector<std::int32_t> col_neighbor;
  std::vector<Component> components;       // ascending anchor order

  int degree(std::int32_t v) const {
    return (row_neighbor[v] >= 0 ? 1 : 0) + (col_neighbor[v] >= 0 ? 1 : 0);
  }
};

enum class ColorKind { canonical, randomized };

/// Decides which of the two alternating 0-1 assignments each component gets.
/// canonical: the component anchor always rounds down (reproducible without
/// randomness). randomized: one fair bit per component, drawn in ascending
/// anchor order.
struct ColorPolicy {
  ColorKind kind = ColorKind::canonical;
  BitStream* rng = nullptr;
};

/// Single pass over the matrix; O(mn) time, O(m + n + #vertices) space.
AuxGraph build_aux_graph(const HalfLayer& h);

constexpr std::uint8_t kColorDown = 0;
constexpr std::uint8_t kColorUp = 1;

/// Proper 2-coloring of every component. Adjacent vertices always receive
/// different colors; an odd cycle would mean the pairing construction is
/// broken and raises InternalError.
std::vector<std::uint8_t> color_components(const AuxGraph& g, const ColorPolicy& policy);

/// Rounds a {0,1/2,1} matrix to a binary one. Every initial row and column
/// interval has error at most 1/2 exactly: paired halves cancel, and an
/// initial interval can cut at most one pair per line.
Matrix<std::uint8_t> round_half_layer(const HalfLayer& h, const ColorPolicy& policy);

}  // namespace matround

#endif  // MATROUND_HALFINT_HPP_
