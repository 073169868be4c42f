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

#ifndef QMAT_LMAP_H_
#define QMAT_LMAP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qmat/error.h"
#include "qmat/linalg.h"
#include "qmat/subspace.h"

namespace qmat {

class NotAnLMapError : public Error {
 public:
  NotAnLMapError(const Subspace& witness, const std::string& what)
      : Error(Errc::kNotAnLMap, what), witness_(witness) {}
  const Subspace& witness() const { return witness_; }

 private:
  Subspace witness_;
};

// A total map F_q^n1 -> F_q^n2 stored densely by vector code.
class LMap {
 public:
  LMap() = default;

  std::uint32_t q() const { return q_; }
  std::uint32_t domain_dim() const { return n1_; }
  std::uint32_t codomain_dim() const { return n2_; }
  const std::vector<Vec>& table() const { return table_; }
  Vec operator()(Vec v) const { return table_[v]; }

  // Present iff the map is F_q-linear; v -> v A.
  const std::optional<Mat>& linear_matrix() const { return linear_; }
  bool is_linear() const { return linear_.has_value(); }
  // For a semilinear map v -> sigma^j(v) A that is not linear: j >= 1.
  const std::optional<std::uint32_t>& automorphism() const { return frobenius_; }
  const std::optional<Mat>& semilinear_matrix() const { return semilinear_; }
  bool verified() const { return verified_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return n1_ == n2_ && is_injective(); }

  bool operator==(const LMap& o) const {
    return q_ == o.q_ && n1_ == o.n1_ && n2_ == o.n2_ && table_ == o.table_;
  }

 private:
  friend LMap lmap_trusted(std::uint32_t q, std::uint32_t n1, std::uint32_t n2,
                           std::vector<Vec> table, bool verified);
  std::uint32_t q_ = 2;
  std::uint32_t n1_ = 0;
  std::uint32_t n2_ = 0;
  std::vector<Vec> table_ = {0};
  std::optional<Mat> linear_;
  std::optional<std::uint32_t> frobenius_;
  std::optional<Mat> semilinear_;
  bool verified_ = false;
};

enum class LMapCheck {
  kLowDim,      // subspaces of dimension <= 2; equivalent to the full check
  kExhaustive,  // every subspace of the domain
};

// Verifies the subspace-image property and detects (semi)linearity.
// Throws Errc::kZeroNotFixed or NotAnLMapError.
LMap lmap_from_table(std::uint32_t q, std::uint32_t n1, std::uint32_t n2,
                     std::vector<Vec> table, LMapCheck mode = LMapCheck::kLowDim);
// No subspace check; `verified` states whether the caller knows the table is
// an L-map (e.g. a composition of verified maps). Structure is still detected.
LMap lmap_trusted(std::uint32_t q, std::uint32_t n1, std::uint32_t n2,
                  std::vector<Vec> table, bool verified);
// v -> sigma^j(v) A with A an n1 x n2 matrix over F_q and sigma the Frobenius
// a -> a^p. No enumeration needed.
LMap lmap_from_matrix(const Mat& a, std::uint32_t frobenius_power = 0);
LMap identity_map(std::uint32_t q, std::uint32_t n);
LMap zero_map(std::uint32_t q, std::uint32_t n1, std::uint32_t n2);

// For a verified map this is a subspace.
Subspace image_subspace(const LMap& phi, const Subspace& v);

struct Preimage {
  std::vector<Vec> vectors;  // ascending codes
  bool is_subspace = false;
  std::optional<Subspace> subspace;
};
Preimage preimage(const LMap& phi, const Subspace& w);

// Agreement of the induced maps on all 1-spaces.
bool l_equivalent(const LMap& phi, const LMap& psi);
// lambda with phi = lambda psi, for linear maps.
std::optional<Elem> scalar_relation(const LMap& phi, const LMap& psi);

// phi equal to psi off <w> and phi(mu w) = psi(mu w^) on it, where
// w^ = psi^{-1}(tau psi(w)). Throws Errc::kNotBijective.
LMap tweak_equivalent(const LMap& psi, Vec w, Elem tau);

// phi after psi. Throws kAmbientMismatch.
LMap compose(const LMap& phi, const LMap& psi);
// Throws kNotBijective.
LMap inverse(const LMap& phi);

struct ImageRestriction {
  LMap map;     // into F_q^dim(image), in the RREF coordinates of the image
  Subspace image;
};
ImageRestriction restrict_to_image(const LMap& phi);

// Linear projection F_q^n -> F_q^(n - dim X) with kernel X.
struct QuotientMap {
  LMap map;
  std::uint32_t dim = 0;
};
QuotientMap quotient_map(const Subspace& x);
// F_q^dim X -> F_q^n sending e_i to the i-th RREF basis row of X.
LMap embedding_map(const Subspace& x);

// Equivalence class of an L-map; classes compare by their induced lattice maps.
class LClass {
 public:
  explicit LClass(LMap representative);
  const LMap& representative() const { return rep_; }
  // Normalized image of every vector; equal keys iff equal classes.
  const std::vector<Vec>& key() const { return key_; }
  bool operator==(const LClass& o) const { return key_ == o.key_; }
  bool operator!=(const LClass& o) const { return !(*this == o); }

 private:
  LMap rep_;
  std::vector<Vec> key_;
};

}  // namespace qmat

#endif  // QMAT_LMAP_H_
