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

#include "qmat/linalg.h"

#include <utility>

#include "qmat/error.h"

namespace qmat {

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols,
         std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) {
    throw Error(Errc::kInvalidArgument, "matrix entry count does not match shape");
  }
  for (Elem e : a_) {
    if (e >= field_->order()) {
      throw Error(Errc::kInvalidArgument, "matrix entry outside " + field_->name());
    }
  }
}

Mat Mat::identity(FieldPtr field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Elem> Mat::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool Mat::operator==(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || a_ != other.a_) return false;
  if (field_ == other.field_) return true;
  return field_ && other.field_ && *field_ == *other.field_;
}

RrefResult rref(const Mat& m) {
  RrefResult out;
  out.reduced = m;
  Mat& r = out.reduced;
  const Field& f = *m.field();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < r.rows() && r.at(piv, c) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    }
    const Elem inv = f.inv(r.at(lead, c));
    for (std::size_t j = c; j < r.cols(); ++j) r.at(lead, j) = f.mul(r.at(lead, j), inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, c) == 0) continue;
      const Elem factor = r.at(i, c);
      for (std::size_t j = c; j < r.cols(); ++j) {
        r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, r.at(lead, j)));
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  return out;
}

std::size_t rank(const Mat& m) {
  // Forward elimination only.
  std::vector<Elem> a = m.entries();
  const Field& f = *m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[lead * cols + j]);
    }
    const Elem inv = f.inv(a[lead * cols + c]);
    for (std::size_t i = lead + 1; i < rows; ++i) {
      const Elem x = a[i * cols + c];
      if (x == 0) continue;
      const Elem factor = f.mul(x, inv);
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[lead * cols + j]));
      }
    }
    ++lead;
  }
  return lead;
}

Mat multiply(const Mat& a, const Mat& b) {
  if (!(*a.field() == *b.field())) {
    throw Error(Errc::kFieldMismatch, a.field()->name() + " vs " + b.field()->name());
  }
  if (a.cols() != b.rows()) throw Error(Errc::kInvalidArgument, "shape mismatch");
  const Field& f = *a.field();
  Mat c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
      }
    }
  }
  return c;
}

Mat transpose(const Mat& m) {
  Mat t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  }
  return t;
}

}  // namespace qmat
