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

#ifndef QMAT_REPRO_H_
#define QMAT_REPRO_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmat/dirsum.h"
#include "qmat/linalg.h"
#include "qmat/lmap.h"
#include "qmat/qmatroid.h"
#include "qmat/report.h"
#include "qmat/subspace.h"

namespace qmat {

struct ReproReport {
  std::string id;
  CheckReport checks;
  double seconds = 0;  // wall time; not part of serialized output

  bool ok() const { return checks.ok(); }
};

// The rank-1 2-spaces of the F_2^4 example built from a partial spread.
const std::vector<Subspace>& spread_members();

// rho = 1 on the spread members and min(2, dim) elsewhere.
QMatroid example_nonrepresentable();

// T1 = <e1, e2> and T2 = <e3, e4> in F_q^4.
Subspace block_t1(std::uint32_t q);
Subspace block_t2(std::uint32_t q);

// The matroid of [[1, w, 0, 0], [0, 0, 1, w^i]] over GF(q^m), w the primitive
// element of the default modulus. Throws kIndexNotInOmega.
QMatroid blockdiag_matroid(std::uint32_t q, std::uint32_t m, std::int64_t i);

// Dependency f over F_q among 1, w, w^i, w^(i+1) (f_0 + f_1 w + f_2 w^i +
// f_3 w^(i+1) = 0), if any. The first one in code order is returned.
std::optional<std::vector<Elem>> blockdiag_dependency(std::uint32_t q, std::uint32_t m,
                                                      std::int64_t i);

ReproReport verify_blockdiag(std::uint32_t q, std::uint32_t m, std::int64_t i);

struct FPrime {
  std::vector<Subspace> brute;        // union of the flats over all i
  std::vector<Subspace> closed_form;  // 0, E, T1, T2 and dim <= 2 spaces missing T1, T2
  ReproReport report;
};

// Throws kExtensionTooSmall when m < 4.
FPrime fprime(std::uint32_t q, std::uint32_t m);

ReproReport verify_thm_linear_noncoproduct(std::uint32_t q = 2, std::uint32_t m = 4);

// Backtracking search for L-maps F_q^n1 -> F_q^n2 with prescribed values on
// some vectors. Free vectors are branched on in increasing code order (or
// decreasing when `reverse`), values likewise with 0 first. Every 1- and
// 2-space is tested as soon as all of its vectors are assigned.
struct ExtensionSearch {
  std::uint32_t q = 2;
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;
  std::vector<std::optional<Vec>> fixed;  // indexed by domain code
  bool reverse = false;
  std::uint64_t max_nodes = std::uint64_t{1} << 34;
  std::size_t keep = 8;                   // solutions stored
};

struct ExtensionResult {
  std::vector<LMap> solutions;  // the first `keep` in branching order
  std::uint64_t solution_count = 0;
  std::uint64_t nodes = 0;      // partial assignments that passed pruning
  std::uint64_t pruned = 0;     // value choices rejected
  std::uint32_t free_vectors = 0;
};

// Throws kSearchBoundExceeded when max_nodes is reached.
ExtensionResult search_lmap_extensions(const ExtensionSearch& s);

// alpha(v) = lambda_v e_target with lambda_v the first nonzero coordinate.
LMap leading_entry_map(std::uint32_t q, std::uint32_t n1, std::uint32_t n2,
                       std::uint32_t target);

// q = 2 only; throws kSearchBoundExceeded otherwise.
ReproReport verify_thm_nonlinear_noncoproduct(std::uint32_t q = 2);

// q in {2, 3}; throws kInvalidArgument otherwise.
ReproReport verify_lclass_theorem(std::uint32_t q);

// G1, G2 over the same field. Throws kRankDeficientG.
ReproReport verify_blockdiag_embeddings(const Mat& g1, const Mat& g2);

ReproReport verify_ex_uniform_dirsum(std::uint32_t q = 2, std::uint32_t m = 4);

struct ReproItem {
  std::string id;
  std::string summary;
  std::function<ReproReport()> run;
};

const std::vector<ReproItem>& repro_items();
// Runs and times one item. Throws kInvalidArgument for unknown ids.
ReproReport run_repro(std::string_view id);

}  // namespace qmat

#endif  // QMAT_REPRO_H_
