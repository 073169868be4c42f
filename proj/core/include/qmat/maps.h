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

#ifndef QMAT_MAPS_H_
#define QMAT_MAPS_H_

#include <cstdint>
#include <optional>

#include "qmat/lmap.h"
#include "qmat/qmatroid.h"

namespace qmat {

// Weak, strong and rank-preserving verdicts for an L-map M1 -> M2. Each
// failing property carries its lowest witness in canonical order.
struct MapTypeReport {
  bool is_weak = true;
  bool is_strong = true;
  bool is_rank_preserving = true;
  std::optional<Subspace> weak_witness;    // V with rho2(phi(V)) > rho1(V)
  std::optional<Subspace> rank_witness;    // V with rho2(phi(V)) != rho1(V)
  std::optional<Subspace> strong_witness;  // flat of M2 with a non-flat preimage
  bool strong_witness_not_subspace = false;
  std::uint64_t subspaces_checked = 0;
  std::uint64_t flats_checked = 0;
};

// Exhaustive over L(E1) and the flats of M2. Throws kAmbientMismatch.
MapTypeReport classify_map(const LMap& phi, const QMatroid& m1, const QMatroid& m2);

// Only the weak verdict; skips the flats of M2.
bool is_weak_map(const LMap& phi, const QMatroid& m1, const QMatroid& m2);

// Weakness of a linear map through circuits alone: fails iff some circuit of
// M1 maps injectively onto an independent space of M2. Throws
// kAlphaNotLinear for nonlinear maps.
bool is_weak_linear_via_circuits(const LMap& phi, const QMatroid& m1, const QMatroid& m2);

}  // namespace qmat

#endif  // QMAT_MAPS_H_
