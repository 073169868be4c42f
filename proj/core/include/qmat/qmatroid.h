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

#ifndef QMAT_QMATROID_H_
#define QMAT_QMATROID_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmat/error.h"
#include "qmat/linalg.h"
#include "qmat/lmap.h"
#include "qmat/subspace.h"

namespace qmat {

// A single failed instance of a rank or flat axiom.
struct Violation {
  std::string axiom;               // "R1".."R3", "F1".."F3", "semimodular"
  std::vector<Subspace> witnesses;
  std::optional<Vec> vector;       // the vector v for F3
  std::string detail;
};

struct AxiomReport {
  std::vector<Violation> violations;  // first `limit` in canonical order
  std::uint64_t total_violations = 0;
  std::uint64_t checked = 0;          // instances examined
  bool ok() const { return total_violations == 0; }
};

class AxiomViolationError : public Error {
 public:
  AxiomViolationError(Errc code, AxiomReport report, const std::string& what)
      : Error(code, what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

// A family of subspaces with its cover relation and heights. Heights are
// lengths of longest chains from the minimal member; on a family that passes
// F1-F3 every maximal chain has that length.
class FlatFamily {
 public:
  FlatFamily() = default;
  // Sorts into canonical order and drops duplicates; no validation.
  static FlatFamily make(std::uint32_t q, std::uint32_t n, std::vector<Subspace> members);

  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Subspace>& members() const { return members_; }
  const Subspace& at(std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> find(const Subspace& s) const;
  bool contains(const Subspace& s) const { return find(s).has_value(); }

  // Indices of the members covering member i, ascending.
  const std::vector<std::size_t>& covers(std::size_t i) const { return up_covers_[i]; }
  std::uint32_t height(std::size_t i) const { return height_[i]; }
  // Intersection of all members containing v (E if none do).
  Subspace closure(const Subspace& v) const;

  bool operator==(const FlatFamily& o) const {
    return q_ == o.q_ && n_ == o.n_ && members_ == o.members_;
  }

 private:
  std::uint32_t q_ = 2;
  std::uint32_t n_ = 0;
  std::vector<Subspace> members_;
  std::map<Subspace, std::size_t> index_;
  std::vector<std::vector<std::size_t>> up_covers_;
  std::vector<std::uint32_t> height_;
};

// A q-matroid on F_q^n given by a total rank oracle. Copies share the
// backend and its memo, which is safe under concurrent use.
class QMatroid {
 public:
  enum class Backend { kUniform, kTable, kRepresentable, kFlats, kFunctional };
  using RankFn = std::function<std::uint32_t(const Subspace&)>;

  QMatroid() = default;

  // Throws kBadRankBound.
  static QMatroid uniform(std::uint32_t q, std::uint32_t n, std::uint32_t k);
  // G is k x n over GF(q^m), full row rank. Throws kRankDeficientG.
  static QMatroid from_matrix(const Mat& g);
  // Throws kIncompleteTable or AxiomViolationError (kAxiomViolation).
  static QMatroid from_rank_table(std::uint32_t q, std::uint32_t n,
                                  const std::map<Subspace, std::uint32_t>& table);
  // Same, with ranks listed in Lattice order.
  static QMatroid from_rank_vector(std::uint32_t q, std::uint32_t n,
                                   const std::vector<std::uint32_t>& ranks);
  // Throws AxiomViolationError (kFlatAxiomViolation).
  static QMatroid from_flats(const FlatFamily& f);
  // No validation; callers check axioms if needed.
  static QMatroid functional(std::uint32_t q, std::uint32_t n, RankFn fn,
                             std::string label = "functional");

  std::uint32_t q() const;
  std::uint32_t n() const;
  Backend backend() const;
  const std::string& label() const;
  // Representing matrix for the representable backend.
  const std::optional<Mat>& matrix() const;
  std::optional<std::uint32_t> uniform_rank() const;

  // Throws kAmbientMismatch.
  std::uint32_t rank(const Subspace& v) const;
  std::uint32_t rank_of_matroid() const;
  // Ranks of all subspaces in Lattice order (materialized once).
  const std::vector<std::uint32_t>& rank_table() const;

 private:
  struct Impl;
  explicit QMatroid(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

bool same_rank_function(const QMatroid& a, const QMatroid& b);

// R1 over all V; R2 and R3 over all ordered pairs.
AxiomReport check_rank_axioms(const QMatroid& m, std::size_t limit = 10);

Subspace closure(const QMatroid& m, const Subspace& v);
bool is_flat(const QMatroid& m, const Subspace& v);
FlatFamily flats(const QMatroid& m);

// F1; F2 over member pairs; F3 over (member, vector) pairs with vectors taken
// up to scalars (v and cv have the same covers).
AxiomReport check_flat_axioms(const FlatFamily& f, std::size_t limit = 10);
// Members covering member i that contain v.
std::vector<std::size_t> covers_containing(const FlatFamily& f, std::size_t i, Vec v);
// Whenever F1 covers F1 meet F2, F1 join F2 covers F2.
AxiomReport check_semimodular(const FlatFamily& f, std::size_t limit = 10);

bool is_independent(const QMatroid& m, const Subspace& v);
std::vector<Subspace> circuits(const QMatroid& m);
std::vector<Subspace> loops(const QMatroid& m);

struct Minor {
  QMatroid matroid;
  LMap map;      // embedding X -> E, or projection E -> E/X
  Subspace base;  // the X it was built from
};
// M|X on F_q^dim X via the RREF basis of X.
Minor restriction(const QMatroid& m, const Subspace& x);
// M/X on the quotient coordinates of quotient_map(X).
Minor contraction(const QMatroid& m, const Subspace& x);

enum class IsoMode { kLinear, kSemilinear };

struct IsoOptions {
  IsoMode mode = IsoMode::kLinear;
  bool prune = true;                    // rank checks on partial bases
  bool stop_at_first = true;
  std::uint64_t max_candidates = 100'000'000;
};

struct IsoResult {
  std::optional<LMap> witness;
  std::uint64_t leaves = 0;           // complete matrices examined
  std::uint64_t nodes = 0;            // partial assignments visited
  std::uint64_t search_space = 0;     // |GL(n,q)| times automorphisms tried
};

std::uint64_t gl_order(std::uint32_t q, std::uint32_t n);
// Searches invertible (semi)linear maps preserving rank. Throws
// kSearchBoundExceeded.
IsoResult is_isomorphic(const QMatroid& a, const QMatroid& b, const IsoOptions& opt = {});

}  // namespace qmat

#endif  // QMAT_QMATROID_H_
