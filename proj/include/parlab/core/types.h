// Copyright 2026 The Parlab Authors
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

#ifndef PARLAB_CORE_TYPES_H_
#define PARLAB_CORE_TYPES_H_

#include <cstddef>
#include <span>
#include <vector>

namespace parlab {

using Vec = std::vector<double>;
using VecView = std::span<const double>;
using MutVecView = std::span<double>;

// Dense row-major matrix. Rows are contiguous.
class RowMatrix {
 public:
  RowMatrix() = default;
  RowMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  VecView row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  MutVecView row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }

  void append_row(VecView r);
  void resize_rows(std::size_t rows) {
    rows_ = rows;
    data_.resize(rows * cols_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace parlab

#endif  // PARLAB_CORE_TYPES_H_
