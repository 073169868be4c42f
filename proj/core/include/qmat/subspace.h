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

#ifndef QMAT_SUBSPACE_H_
#define QMAT_SUBSPACE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qmat/field.h"
#include "qmat/linalg.h"

namespace qmat {

// A vector of F_q^n packed as base-q digits, coordinate 0 least significant.
// The string "1000" (coordinates left to right) is e_1 = 1.
using Vec = std::uint32_t;

// Enumeration limits shared by every exhaustive routine.
struct Caps {
  std::uint64_t max_vectors = std::uint64_t{1} << 16;
  std::uint64_t max_subspaces = 10'000'000;
};
Caps caps();
void set_caps(const Caps& c);

// Coordinate arithmetic on F_q^n. Instances are cached and shared.
class GroundSpace {
 public:
  static const GroundSpace& get(std::uint32_t q, std::uint32_t n);

  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t size() const { return size_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  std::uint32_t digit(Vec v, std::uint32_t i) const {
    return q_ == 2 ? (v >> i) & 1u : (v / pow_[i]) % q_;
  }
  Vec with_digit(Vec v, std::uint32_t i, std::uint32_t d) const;
  std::vector<std::uint32_t> digits(Vec v) const;
  Vec from_digits(std::span<const std::uint32_t> d) const;
  Vec unit(std::uint32_t i) const { return pow_[i]; }

  Vec add(Vec a, Vec b) const;
  Vec sub(Vec a, Vec b) const { return add(a, neg(b)); }
  Vec neg(Vec a) const { return q_ == 2 ? a : scale(field_->neg(1), a); }
  Vec scale(Elem c, Vec v) const;
  // y + c x
  Vec axpy(Vec y, Elem c, Vec x) const { return add(y, scale(c, x)); }
  Elem dot(Vec a, Vec b) const;

  // First nonzero coordinate, or n for the zero vector.
  std::uint32_t pivot(Vec v) const;
  // The representative of <v> whose pivot entry is 1.
  Vec normalize(Vec v) const;

  std::string to_string(Vec v) const;
  // Accepts "1000" style strings, or dot-separated digits for q > 9.
  Vec parse(std::string_view s) const;

 private:
  GroundSpace(std::uint32_t q, std::uint32_t n);

  std::uint32_t q_;
  std::uint32_t n_;
  std::uint64_t size_;
  FieldPtr field_;
  std::vector<Vec> pow_;
};

// A subspace of F_q^n in reduced row echelon form. Rows are sorted by
// pivot, each pivot entry is 1, and pivot columns vanish in the other rows, so
// equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::uint32_t q, std::uint32_t n);
  static Subspace full(std::uint32_t q, std::uint32_t n);
  static Subspace span(std::uint32_t q, std::uint32_t n,
                       std::span<const Vec> vectors);
  // Row space of a matrix over F_q (m = 1); n = m.cols().
  static Subspace row_space(const Mat& m);
  // "1000,0100" style; the empty string is the zero space.
  static Subspace parse(std::uint32_t q, std::uint32_t n, std::string_view s);
  // Trusted constructor: rows must already be in canonical form.
  static Subspace from_rref_rows(std::uint32_t q, std::uint32_t n,
                                 std::vector<Vec> rows);

  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  std::vector<std::uint32_t> pivots() const;
  std::uint64_t pivot_mask() const;
  const GroundSpace& ground() const { return GroundSpace::get(q_, n_); }

  bool contains(Vec v) const { return reduce(v) == 0; }
  // V <= *this. Throws kAmbientMismatch.
  bool contains(const Subspace& v) const;
  // v minus its component in this space; zero at every pivot column.
  Vec reduce(Vec v) const;
  // Coefficients of v (assumed contained) in the RREF basis.
  std::vector<std::uint32_t> coordinates(Vec v) const;
  // Combination of the basis rows with the given coefficients.
  Vec combine(std::span<const std::uint32_t> coeffs) const;
  // All q^dim vectors; index i holds the combination whose coefficients are
  // the base-q digits of i.
  std::vector<Vec> vectors() const;
  Mat basis_matrix() const;

  std::string to_string() const;
  std::size_t hash() const;

  bool operator==(const Subspace& o) const {
    return q_ == o.q_ && n_ == o.n_ && rows_ == o.rows_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  // The canonical enumeration order: dimension, then pivot set (ascending
  // bitmask), then row-major entries with coordinate 0 most significant.
  bool operator<(const Subspace& o) const;

 private:
  std::uint32_t q_ = 2;
  std::uint32_t n_ = 0;
  std::vector<Vec> rows_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

void check_same_ambient(const Subspace& a, const Subspace& b);

Subspace join(const Subspace& a, const Subspace& b);
Subspace meet(const Subspace& a, const Subspace& b);
// Orthogonal complement under the standard dot product.
Subspace perp(const Subspace& a);

// Number of d-dimensional subspaces of F_q^n; saturates at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint32_t q, std::uint32_t n, std::uint32_t d);
std::uint64_t subspace_count(std::uint32_t q, std::uint32_t n);

// In canonical order. Throws kEnumerationCapExceeded.
std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::uint32_t n,
                                          std::optional<std::uint32_t> d = {});
// Subspaces of V, sorted in the ambient canonical order.
std::vector<Subspace> subspaces_of(const Subspace& v,
                                   std::optional<std::uint32_t> d = {});
std::vector<Subspace> one_spaces(const Subspace& v);

// n x (n - dim X) matrix P over F_q with v -> v P the projection onto the
// non-pivot coordinates of v reduced modulo X. Its kernel is exactly X.
Mat quotient_matrix(const Subspace& x);

// All subspaces of F_q^n with O(1) lookup of an index. Shared per (q, n).
class Lattice {
 public:
  static std::shared_ptr<const Lattice> get(std::uint32_t q, std::uint32_t n);

  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  std::size_t size() const { return all_.size(); }
  const Subspace& at(std::size_t i) const { return all_[i]; }
  const std::vector<Subspace>& all() const { return all_; }
  // Throws kInvalidArgument if s is not a subspace of this ambient.
  std::size_t index(const Subspace& s) const;
  std::size_t dim_begin(std::uint32_t d) const { return offsets_[d]; }
  std::size_t dim_end(std::uint32_t d) const { return offsets_[d + 1]; }

 private:
  Lattice(std::uint32_t q, std::uint32_t n);

  std::uint32_t q_;
  std::uint32_t n_;
  std::vector<Subspace> all_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<Subspace, std::size_t, SubspaceHash> index_;
};

}  // namespace qmat

#endif  // QMAT_SUBSPACE_H_
