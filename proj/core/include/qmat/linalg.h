// Copyright 2026 The qmat Authors.
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

#ifndef QMAT_LINALG_H_
#define QMAT_LINALG_H_

#include <cstddef>
#include <vector>

#include "qmat/field.h"

namespace qmat {

// Dense row-major matrix over a Field.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr field, std::size_t rows, std::size_t cols);
  Mat(FieldPtr field, std::size_t rows, std::size_t cols,
      std::vector<Elem> entries);

  static Mat identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Elem>& entries() const { return a_; }

  Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::vector<Elem> row(std::size_t i) const;

  bool operator==(const Mat& other) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> a_;
};

struct RrefResult {
  Mat reduced;                      // same shape, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
Mat multiply(const Mat& a, const Mat& b);  // throws kFieldMismatch
Mat transpose(const Mat& m);

}  // namespace qmat

#endif  // QMAT_LINALG_H_
