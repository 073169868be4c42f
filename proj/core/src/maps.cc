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

#include "qmat/maps.h"

#include <string>

namespace qmat {

namespace {

void CheckMatroids(const LMap& phi, const QMatroid& m1, const QMatroid& m2) {
  if (phi.q() != m1.q() || phi.q() != m2.q() || phi.domain_dim() != m1.n() ||
      phi.codomain_dim() != m2.n()) {
    throw Error(Errc::kAmbientMismatch,
                "map F_" + std::to_string(phi.q()) + "^" + std::to_string(phi.domain_dim()) +
                    " -> F_" + std::to_string(phi.q()) + "^" +
                    std::to_string(phi.codomain_dim()) + " does not fit the matroids");
  }
}

}  // namespace

MapTypeReport classify_map(const LMap& phi, const QMatroid& m1, const QMatroid& m2) {
  CheckMatroids(phi, m1, m2);
  MapTypeReport rep;
  for (const Subspace& v : Lattice::get(m1.q(), m1.n())->all()) {
    ++rep.subspaces_checked;
    const std::uint32_t r1 = m1.rank(v);
    const std::uint32_t r2 = m2.rank(image_subspace(phi, v));
    if (r2 > r1 && rep.is_weak) {
      rep.is_weak = false;
      rep.weak_witness = v;
    }
    if (r2 != r1 && rep.is_rank_preserving) {
      rep.is_rank_preserving = false;
      rep.rank_witness = v;
    }
  }
  const FlatFamily f2 = flats(m2);
  for (const Subspace& f : f2.members()) {
    ++rep.flats_checked;
    Preimage p = preimage(phi, f);
    const bool ok = p.is_subspace && is_flat(m1, *p.subspace);
    if (!ok) {
      rep.is_strong = false;
      rep.strong_witness = f;
      rep.strong_witness_not_subspace = !p.is_subspace;
      break;
    }
  }
  return rep;
}

bool is_weak_map(const LMap& phi, const QMatroid& m1, const QMatroid& m2) {
  CheckMatroids(phi, m1, m2);
  for (const Subspace& v : Lattice::get(m1.q(), m1.n())->all()) {
    if (m2.rank(image_subspace(phi, v)) > m1.rank(v)) return false;
  }
  return true;
}

bool is_weak_linear_via_circuits(const LMap& phi, const QMatroid& m1, const QMatroid& m2) {
  CheckMatroids(phi, m1, m2);
  if (!phi.is_linear()) throw Error(Errc::kAlphaNotLinear, "circuit criterion needs a linear map");
  for (const Subspace& c : circuits(m1)) {
    const Subspace img = image_subspace(phi, c);
    if (img.dim() == c.dim() && is_independent(m2, img)) return false;
  }
  return true;
}

}  // namespace qmat
