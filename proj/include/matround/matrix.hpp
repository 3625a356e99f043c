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

#ifndef MATROUND_MATRIX_HPP_
#define MATROUND_MATRIX_HPP_

#include <cassert>
#include <utility>
#include <vector>

#include "matround/errors.hpp"

namespace matround {

/// Dense row-major matrix. Indices are 0-based; user-facing messages
/// translate to 1-based coordinates at the CLI boundary.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(int rows, int cols, const T& init = T())
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, init) {
    if (rows < 1 || cols < 1) {
      throw DomainError("matrix dimensions must be at least 1x1");
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }

  T& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  const T& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  T& operator[](size_t idx) { return data_[idx]; }
  const T& operator[](size_t idx) const { return data_[idx]; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

}  // namespace matround

#endif  // MATROUND_MATRIX_HPP_
