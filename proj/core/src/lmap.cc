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

#include "qmat/lmap.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace qmat {
namespace {

void CheckDims(std::uint32_t q, std::uint32_t n, std::size_t table_size) {
  if (table_size != GroundSpace::get(q, n).size()) {
    throw Error(Errc::kInvalidArgument, "map table must list every domain vector");
  }
}

// sigma^j(v) A, where rows[i] is row i of A.
Vec ApplyRows(const GroundSpace& from, const GroundSpace& to,
              const std::vector<Vec>& rows, std::uint32_t j, Vec v) {
  if (from.q() == 2) {
    Vec out = 0;
    while (v != 0) {
      out ^= rows[std::countr_zero(v)];
      v &= v - 1;
    }
    return out;
  }
  const Field& f = from.field();
  Vec out = 0;
  for (std::uint32_t i = 0; i < from.n(); ++i) {
    std::uint32_t c = from.digit(v, i);
    if (c == 0) continue;
    if (j != 0) c = f.frobenius(c, j);
    out = to.axpy(out, c, rows[i]);
  }
  return out;
}

Mat MatrixOfRows(const std::vector<Vec>& rows, const GroundSpace& to) {
  Mat a(to.field_ptr(), rows.size(), to.n());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::uint32_t c = 0; c < to.n(); ++c) a.at(i, c) = to.digit(rows[i], c);
  }
  return a;
}

// The subspace formed by a set of vectors, if it is one.
std::optional<Subspace> AsSubspace(std::uint32_t q, std::uint32_t n, std::vector<Vec> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.empty() || vs.front() != 0) return std::nullopt;
  Subspace s = Subspace::span(q, n, vs);
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < s.dim(); ++i) size *= q;
  if (size != vs.size()) return std::nullopt;
  return s;
}

}  // namespace

LMap lmap_trusted(std::uint32_t q, std::uint32_t n1, std::uint32_t n2,
                  std::vector<Vec> table, bool verified) {
  CheckDims(q, n1, table.size());
  LMap m;
  m.q_ = q;
  m.n1_ = n1;
  m.n2_ = n2;
  m.table_ = std::move(table);
  m.verified_ = verified;
  // phi is sigma^j-semilinear iff it agrees with v -> sigma^j(v) A where A
  // has rows phi(e_i).
  const GroundSpace& from = GroundSpace::get(q, n1);
  const GroundSpace& to = GroundSpace::get(q, n2);
  std::vector<Vec> rows(n1);
  for (std::uint32_t i = 0; i < n1; ++i) rows[i] = m.table_[from.unit(i)];
  const std::uint32_t k = from.field().base_degree();
  for (std::uint32_t j = 0; j < k; ++j) {
    bool ok = true;
    for (Vec v = 0; v < from.size() && ok; ++v) {
      ok = ApplyRows(from, to, rows, j, v) == m.table_[v];
    }
    if (!ok) continue;
    if (j == 0) {
      m.linear_ = MatrixOfRows(rows, to);
    } else {
      m.frobenius_ = j;
      m.semilinear_ = MatrixOfRows(rows, to);
    }
    // Semilinear maps are L-maps.
    m.verified_ = true;
    break;
  }
  return m;
}

bool LMap::is_injective() const {
  std::vector<Vec> s = table_;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool LMap::is_surjective() const {
  std::vector<Vec> s = table_;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s.size() == GroundSpace::get(q_, n2_).size();
}

LMap lmap_from_table(std::uint32_t q, std::uint32_t n1, std::uint32_t n2,
                     std::vector<Vec> table, LMapCheck mode) {
  CheckDims(q, n1, table.size());
  const GroundSpace& to = GroundSpace::get(q, n2);
  for (Vec v : table) {
    if (v >= to.size()) throw Error(Errc::kInvalidArgument, "image outside codomain");
  }
  if (table[0] != 0) throw Error(Errc::kZeroNotFixed, "phi(0) != 0");
  auto check = [&](const Subspace& s) {
    std::vector<Vec> img;
    for (Vec v : s.vectors()) img.push_back(table[v]);
    if (!AsSubspace(q, n2, std::move(img))) {
      throw NotAnLMapError(s, "image of " + s.to_string() + " is not a subspace");
    }
  };
  // phi(v) and phi(w) both lie in phi(<v, w>), so if every space of dimension
  // <= 2 has a subspace image then images are closed under + and scaling.
  if (mode == LMapCheck::kLowDim) {
    for (std::uint32_t d = 1; d <= std::min<std::uint32_t>(2, n1); ++d) {
      for (const Subspace& s : enumerate_subspaces(q, n1, d)) check(s);
    }
  } else {
    for (const Subspace& s : enumerate_subspaces(q, n1)) check(s);
  }
  return lmap_trusted(q, n1, n2, std::move(table), true);
}

LMap lmap_from_matrix(const Mat& a, std::uint32_t frobenius_power) {
  const Field& f = *a.field();
  if (f.ext_degree() != 1) {
    throw Error(Errc::kInvalidArgument, "map matrices must be over F_q");
  }
  const std::uint32_t q = f.q();
  const std::uint32_t n1 = static_cast<std::uint32_t>(a.rows());
  const std::uint32_t n2 = static_cast<std::uint32_t>(a.cols());
  const GroundSpace& from = GroundSpace::get(q, n1);
  const GroundSpace& to = GroundSpace::get(q, n2);
  std::vector<Vec> rows(n1);
  for (std::uint32_t i = 0; i < n1; ++i) rows[i] = to.from_digits(a.row(i));
  const std::uint32_t j = frobenius_power % f.base_degree();
  std::vector<Vec> table(from.size());
  for (Vec v = 0; v < from.size(); ++v) table[v] = ApplyRows(from, to, rows, j, v);
  return lmap_trusted(q, n1, n2, std::move(table), true);
}

LMap identity_map(std::uint32_t q, std::uint32_t n) {
  return lmap_from_matrix(Mat::identity(Field::base_field(q), n));
}

LMap zero_map(std::uint32_t q, std::uint32_t n1, std::uint32_t n2) {
  return lmap_from_matrix(Mat(Field::base_field(q), n1, n2));
}

Subspace image_subspace(const LMap& phi, const Subspace& v) {
  if (v.q() != phi.q() || v.n() != phi.domain_dim()) {
    throw Error(Errc::kAmbientMismatch, "subspace is not in the domain");
  }
  std::vector<Vec> img;
  if (phi.is_linear() || phi.automorphism()) {
    for (Vec b : v.basis()) img.push_back(phi(b));
  } else {
    for (Vec x : v.vectors()) img.push_back(phi(x));
  }
  return Subspace::span(phi.q(), phi.codomain_dim(), img);
}

Preimage preimage(const LMap& phi, const Subspace& w) {
  if (w.q() != phi.q() || w.n() != phi.codomain_dim()) {
    throw Error(Errc::kAmbientMismatch, "subspace is not in the codomain");
  }
  Preimage out;
  for (Vec v = 0; v < phi.table().size(); ++v) {
    if (w.contains(phi(v))) out.vectors.push_back(v);
  }
  out.subspace = AsSubspace(phi.q(), phi.domain_dim(), out.vectors);
  out.is_subspace = out.subspace.has_value();
  return out;
}

namespace {
void CheckSameShape(const LMap& a, const LMap& b) {
  if (a.q() != b.q() || a.domain_dim() != b.domain_dim() ||
      a.codomain_dim() != b.codomain_dim()) {
    throw Error(Errc::kAmbientMismatch, "maps have different domains or codomains");
  }
}
}  // namespace

std::optional<Elem> scalar_relation(const LMap& phi, const LMap& psi) {
  CheckSameShape(phi, psi);
  const GroundSpace& to = GroundSpace::get(phi.q(), phi.codomain_dim());
  for (Elem lambda = 1; lambda < phi.q(); ++lambda) {
    bool ok = true;
    for (Vec v = 0; v < phi.table().size() && ok; ++v) {
      ok = phi(v) == to.scale(lambda, psi(v));
    }
    if (ok) return lambda;
  }
  return std::nullopt;
}

bool l_equivalent(const LMap& phi, const LMap& psi) {
  CheckSameShape(phi, psi);
  const GroundSpace& to = GroundSpace::get(phi.q(), phi.codomain_dim());
  bool same = true;
  for (Vec v = 1; v < phi.table().size() && same; ++v) {
    same = to.normalize(phi(v)) == to.normalize(psi(v));
  }
  if (phi.is_linear() && psi.is_linear() && same != scalar_relation(phi, psi).has_value()) {
    throw std::logic_error("L-equivalence disagrees with the scalar criterion");
  }
  return same;
}

LMap tweak_equivalent(const LMap& psi, Vec w, Elem tau) {
  if (!psi.verified() || !psi.is_bijective()) {
    throw Error(Errc::kNotBijective, "tweak needs a verified L-isomorphism");
  }
  const GroundSpace& g = GroundSpace::get(psi.q(), psi.domain_dim());
  if (w == 0 || w >= g.size()) throw Error(Errc::kInvalidArgument, "w must be nonzero");
  if (tau == 0 || tau >= psi.q()) throw Error(Errc::kInvalidArgument, "tau must be nonzero");
  std::vector<Vec> inv(psi.table().size());
  for (Vec v = 0; v < inv.size(); ++v) inv[psi(v)] = v;
  const Vec w_hat = inv[g.scale(tau, psi(w))];
  std::vector<Vec> table = psi.table();
  for (Elem mu = 0; mu < psi.q(); ++mu) table[g.scale(mu, w)] = psi(g.scale(mu, w_hat));
  return lmap_from_table(psi.q(), psi.domain_dim(), psi.codomain_dim(), std::move(table));
}

LMap compose(const LMap& phi, const LMap& psi) {
  if (phi.q() != psi.q() || psi.codomain_dim() != phi.domain_dim()) {
    throw Error(Errc::kAmbientMismatch, "codomain of psi is not the domain of phi");
  }
  std::vector<Vec> table(psi.table().size());
  for (Vec v = 0; v < table.size(); ++v) table[v] = phi(psi(v));
  return lmap_trusted(phi.q(), psi.domain_dim(), phi.codomain_dim(), std::move(table),
                      phi.verified() && psi.verified());
}

LMap inverse(const LMap& phi) {
  if (!phi.is_bijective()) throw Error(Errc::kNotBijective, "map is not bijective");
  std::vector<Vec> table(phi.table().size());
  for (Vec v = 0; v < table.size(); ++v) table[phi(v)] = v;
  return lmap_trusted(phi.q(), phi.codomain_dim(), phi.domain_dim(), std::move(table),
                      phi.verified());
}

ImageRestriction restrict_to_image(const LMap& phi) {
  const Subspace image = image_subspace(phi, Subspace::full(phi.q(), phi.domain_dim()));
  const GroundSpace& to = GroundSpace::get(phi.q(), image.dim());
  std::vector<Vec> table(phi.table().size());
  for (Vec v = 0; v < table.size(); ++v) table[v] = to.from_digits(image.coordinates(phi(v)));
  return {lmap_trusted(phi.q(), phi.domain_dim(), image.dim(), std::move(table),
                       phi.verified()),
          image};
}

QuotientMap quotient_map(const Subspace& x) {
  return {lmap_from_matrix(quotient_matrix(x)), x.n() - x.dim()};
}

LMap embedding_map(const Subspace& x) { return lmap_from_matrix(x.basis_matrix()); }

LClass::LClass(LMap representative) : rep_(std::move(representative)) {
  const GroundSpace& to = GroundSpace::get(rep_.q(), rep_.codomain_dim());
  key_.reserve(rep_.table().size());
  for (Vec img : rep_.table()) key_.push_back(to.normalize(img));
}

}  // namespace qmat
