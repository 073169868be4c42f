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

#ifndef QMAT_DIRSUM_H_
#define QMAT_DIRSUM_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qmat/lmap.h"
#include "qmat/maps.h"
#include "qmat/qmatroid.h"
#include "qmat/report.h"

namespace qmat {

// r(V) = min over X <= V of tau(X) + dim V - dim X. With validate set, tau is
// checked first: tau(0) = 0, monotone, submodular (AxiomViolationError with
// kTauNotNormalized, kTauNotMonotone or kTauNotSubmodular). The result is
// materialized as a rank table.
QMatroid submodular_completion(std::uint32_t q, std::uint32_t n, const QMatroid::RankFn& tau,
                               bool validate = true);

// M1 + M2 on F_q^(n1+n2): E1 sits on the first n1 coordinates, E2 on the rest.
struct DirectSum {
  QMatroid m1;
  QMatroid m2;
  QMatroid total;
  QMatroid pushed1;  // rho1(pi1(V))
  QMatroid pushed2;  // rho2(pi2(V))
  LMap iota1;
  LMap iota2;
  LMap pi1;
  LMap pi2;
};

// Throws kAmbientMismatch if the fields differ.
DirectSum direct_sum(const QMatroid& m1, const QMatroid& m2);

// Circuits from the characterization: minimal C with
// rho'1(C) + rho'2(C) <= dim C - 1.
std::vector<Subspace> dirsum_circuits(const DirectSum& d);

// rho(iota_i(V)) = rho_i(V) = rho'_i(iota_i(V)) and rho'_j(iota_i(V)) = 0.
CheckReport verify_embeddings(const DirectSum& d);

// rho(V1 + V2) = rho1(V1) + rho2(V2) for all Vi <= Ei, and the contractions
// by E1 and E2 are isomorphic to M2 and M1.
CheckReport additivity_check(const DirectSum& d);

struct CoproductTarget {
  std::string label;
  QMatroid n;
  LMap alpha1;
  LMap alpha2;
};

// For each target builds eps(v1 + v2) = alpha1(v1) + alpha2(v2) and checks
// that it factors both alphas and is weak (brute force and circuit criterion).
// Uniqueness is structural: a linear map on E1 + E2 is fixed by its values on
// the unit vectors, which the factoring conditions prescribe. With exhaustive
// set, the first target also has every linear map into it tried. Throws
// kAlphaNotLinear or kAlphaNotWeak.
CheckReport verify_coproduct_lw(const QMatroid& m1, const QMatroid& m2,
                                const std::vector<CoproductTarget>& targets,
                                bool exhaustive = false);

// Partial maximality check: the sum lies in the set of rank functions bounded
// by rho_i on the summands, and every candidate in that set is pointwise
// below it. Throws kAmbientMismatch.
CheckReport dirsum_is_max(const QMatroid& m1, const QMatroid& m2,
                          const std::vector<QMatroid>& candidates);

// Linear eps' with eps' = lambda1 eps on the first n1 coordinates and
// lambda2 eps on the rest. Throws kAlphaNotLinear or kInvalidArgument.
LMap lclass_scaling_family(const LMap& eps, std::uint32_t n1, Elem lambda1, Elem lambda2);

}  // namespace qmat

#endif  // QMAT_DIRSUM_H_
