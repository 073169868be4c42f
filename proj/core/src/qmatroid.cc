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

#include "qmat/qmatroid.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace qmat {

struct QMatroid::Impl {
  std::uint32_t q = 2;
  std::uint32_t n = 0;
  Backend backend = Backend::kFunctional;
  std::string label;
  std::optional<Mat> g;
  std::optional<std::uint32_t> uniform_k;
  RankFn compute;

  mutable std::shared_mutex mu;
  mutable std::unordered_map<Subspace, std::uint32_t, SubspaceHash> memo;
  mutable std::once_flag table_once;
  mutable std::vector<std::uint32_t> table;
  mutable std::atomic<bool> table_ready{false};
  mutable std::shared_ptr<const Lattice> lattice;
};

namespace {

std::uint32_t RankOfRows(const Field& f, std::vector<Elem>& a, std::size_t rows,
                         std::size_t cols) {
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
  return static_cast<std::uint32_t>(lead);
}

void CheckAmbient(std::uint32_t q, std::uint32_t n, const Subspace& v) {
  if (v.q() != q || v.n() != n) {
    throw Error(Errc::kAmbientMismatch, "subspace " + v.to_string() + " of F_" +
                                            std::to_string(v.q()) + "^" + std::to_string(v.n()) +
                                            " used with F_" + std::to_string(q) + "^" +
                                            std::to_string(n));
  }
}

// 1-spaces of F_q^n, enumerated once per ambient.
const std::vector<Subspace>& Points(std::uint32_t q, std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Subspace>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({q, n});
  if (it == cache.end()) it = cache.emplace(std::pair{q, n}, enumerate_subspaces(q, n, 1)).first;
  return it->second;
}

void Record(AxiomReport& r, std::size_t limit, Violation v) {
  ++r.total_violations;
  if (r.violations.size() < limit) r.violations.push_back(std::move(v));
}

}  // namespace

QMatroid QMatroid::uniform(std::uint32_t q, std::uint32_t n, std::uint32_t k) {
  if (k > n) {
    throw Error(Errc::kBadRankBound, "uniform rank " + std::to_string(k) + " exceeds n = " +
                                         std::to_string(n));
  }
  auto impl = std::make_shared<Impl>();
  impl->q = q;
  impl->n = n;
  impl->backend = Backend::kUniform;
  impl->label = "U_" + std::to_string(k) + "(F_" + std::to_string(q) + "^" + std::to_string(n) + ")";
  impl->uniform_k = k;
  impl->compute = [k](const Subspace& v) { return std::min(k, v.dim()); };
  return QMatroid(impl);
}

QMatroid QMatroid::from_matrix(const Mat& g) {
  const FieldPtr field = g.field();
  const std::size_t k = g.rows();
  if (qmat::rank(g) != k) {
    throw Error(Errc::kRankDeficientG, "G has rank " + std::to_string(qmat::rank(g)) +
                                           " < " + std::to_string(k) + " rows");
  }
  const std::uint32_t q = field->q();
  const std::uint32_t n = static_cast<std::uint32_t>(g.cols());
  const GroundSpace& ground = GroundSpace::get(q, n);
  // The column G y^T for every vector y.
  auto cols = std::make_shared<std::vector<Elem>>(ground.size() * k, 0);
  for (Vec y = 0; y < ground.size(); ++y) {
    for (std::size_t r = 0; r < k; ++r) {
      Elem s = 0;
      for (std::uint32_t j = 0; j < n; ++j) {
        const std::uint32_t c = ground.digit(y, j);
        if (c != 0) s = field->add(s, field->mul(g.at(r, j), c));
      }
      (*cols)[y * k + r] = s;
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->q = q;
  impl->n = n;
  impl->backend = Backend::kRepresentable;
  impl->label = "M_G over " + field->name();
  impl->g = g;
  impl->compute = [field, cols, k](const Subspace& v) {
    const std::size_t d = v.dim();
    std::vector<Elem> a(d * k);
    for (std::size_t i = 0; i < d; ++i) {
      const Vec y = v.basis()[i];
      for (std::size_t r = 0; r < k; ++r) a[i * k + r] = (*cols)[y * k + r];
    }
    return RankOfRows(*field, a, d, k);
  };
  return QMatroid(impl);
}

QMatroid QMatroid::from_rank_vector(std::uint32_t q, std::uint32_t n,
                                    const std::vector<std::uint32_t>& ranks) {
  auto lattice = Lattice::get(q, n);
  if (ranks.size() != lattice->size()) {
    throw Error(Errc::kIncompleteTable, "rank table has " + std::to_string(ranks.size()) +
                                            " entries, lattice has " +
                                            std::to_string(lattice->size()));
  }
  auto impl = std::make_shared<Impl>();
  impl->q = q;
  impl->n = n;
  impl->backend = Backend::kTable;
  impl->label = "rank table";
  auto shared = std::make_shared<std::vector<std::uint32_t>>(ranks);
  impl->compute = [lattice, shared](const Subspace& v) { return (*shared)[lattice->index(v)]; };
  QMatroid m(impl);
  AxiomReport report = check_rank_axioms(m);
  if (!report.ok()) {
    const Violation& first = report.violations.front();
    std::string what = first.axiom + " fails at";
    for (const Subspace& w : first.witnesses) what += " " + w.to_string();
    throw AxiomViolationError(Errc::kAxiomViolation, std::move(report), what);
  }
  return m;
}

QMatroid QMatroid::from_rank_table(std::uint32_t q, std::uint32_t n,
                                   const std::map<Subspace, std::uint32_t>& table) {
  auto lattice = Lattice::get(q, n);
  for (const auto& [s, r] : table) CheckAmbient(q, n, s);
  std::vector<std::uint32_t> ranks(lattice->size());
  for (std::size_t i = 0; i < lattice->size(); ++i) {
    auto it = table.find(lattice->at(i));
    if (it == table.end()) {
      throw Error(Errc::kIncompleteTable, "no rank for " + lattice->at(i).to_string());
    }
    ranks[i] = it->second;
  }
  return from_rank_vector(q, n, ranks);
}

QMatroid QMatroid::from_flats(const FlatFamily& f) {
  AxiomReport report = check_flat_axioms(f);
  if (!report.ok()) {
    const Violation& first = report.violations.front();
    std::string what = first.axiom + " fails at";
    for (const Subspace& w : first.witnesses) what += " " + w.to_string();
    throw AxiomViolationError(Errc::kFlatAxiomViolation, std::move(report), what);
  }
  auto family = std::make_shared<FlatFamily>(f);
  auto impl = std::make_shared<Impl>();
  impl->q = f.q();
  impl->n = f.n();
  impl->backend = Backend::kFlats;
  impl->label = "flats";
  impl->compute = [family](const Subspace& v) {
    return family->height(*family->find(family->closure(v)));
  };
  return QMatroid(impl);
}

QMatroid QMatroid::functional(std::uint32_t q, std::uint32_t n, RankFn fn, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->q = q;
  impl->n = n;
  impl->backend = Backend::kFunctional;
  impl->label = std::move(label);
  impl->compute = std::move(fn);
  return QMatroid(impl);
}

std::uint32_t QMatroid::q() const { return impl_ ? impl_->q : 2; }
std::uint32_t QMatroid::n() const { return impl_ ? impl_->n : 0; }
QMatroid::Backend QMatroid::backend() const { return impl_->backend; }
const std::string& QMatroid::label() const { return impl_->label; }
const std::optional<Mat>& QMatroid::matrix() const { return impl_->g; }
std::optional<std::uint32_t> QMatroid::uniform_rank() const { return impl_->uniform_k; }

std::uint32_t QMatroid::rank(const Subspace& v) const {
  if (!impl_) throw Error(Errc::kInvalidArgument, "empty matroid handle");
  CheckAmbient(impl_->q, impl_->n, v);
  if (impl_->uniform_k) return std::min(*impl_->uniform_k, v.dim());
  if (impl_->table_ready.load(std::memory_order_acquire)) {
    return impl_->table[impl_->lattice->index(v)];
  }
  {
    std::shared_lock lock(impl_->mu);
    auto it = impl_->memo.find(v);
    if (it != impl_->memo.end()) return it->second;
  }
  const std::uint32_t r = impl_->compute(v);
  std::unique_lock lock(impl_->mu);
  impl_->memo.emplace(v, r);
  return r;
}

std::uint32_t QMatroid::rank_of_matroid() const { return rank(Subspace::full(q(), n())); }

const std::vector<std::uint32_t>& QMatroid::rank_table() const {
  std::call_once(impl_->table_once, [this] {
    auto lattice = Lattice::get(impl_->q, impl_->n);
    std::vector<std::uint32_t> t(lattice->size());
    for (std::size_t i = 0; i < lattice->size(); ++i) t[i] = rank(lattice->at(i));
    impl_->lattice = lattice;
    impl_->table = std::move(t);
    impl_->table_ready.store(true, std::memory_order_release);
  });
  return impl_->table;
}

bool same_rank_function(const QMatroid& a, const QMatroid& b) {
  return a.q() == b.q() && a.n() == b.n() && a.rank_table() == b.rank_table();
}

AxiomReport check_rank_axioms(const QMatroid& m, std::size_t limit) {
  auto lattice = Lattice::get(m.q(), m.n());
  const auto& r = m.rank_table();
  AxiomReport rep;
  const std::size_t size = lattice->size();
  for (std::size_t i = 0; i < size; ++i) {
    ++rep.checked;
    if (r[i] > lattice->at(i).dim()) {
      Record(rep, limit, {"R1", {lattice->at(i)}, std::nullopt,
                          "rank " + std::to_string(r[i]) + " exceeds dimension"});
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    const Subspace& v = lattice->at(i);
    for (std::size_t j = 0; j < size; ++j) {
      const Subspace& w = lattice->at(j);
      ++rep.checked;
      if (v.dim() <= w.dim() && r[i] > r[j] && w.contains(v)) {
        Record(rep, limit, {"R2", {v, w}, std::nullopt,
                            std::to_string(r[i]) + " > " + std::to_string(r[j])});
      }
      if (j < i) continue;
      const std::size_t jn = lattice->index(join(v, w));
      const std::size_t mt = lattice->index(meet(v, w));
      if (r[jn] + r[mt] > r[i] + r[j]) {
        Record(rep, limit, {"R3", {v, w}, std::nullopt,
                            "rho(V+W)+rho(V^W) = " + std::to_string(r[jn] + r[mt]) +
                                " > " + std::to_string(r[i] + r[j])});
      }
    }
  }
  return rep;
}

Subspace closure(const QMatroid& m, const Subspace& v) {
  CheckAmbient(m.q(), m.n(), v);
  const std::uint32_t rv = m.rank(v);
  std::vector<Vec> gens = v.basis();
  for (const Subspace& x : Points(m.q(), m.n())) {
    const Vec x0 = x.basis()[0];
    if (v.contains(x0)) continue;
    if (m.rank(join(v, x)) == rv) gens.push_back(x0);
  }
  return Subspace::span(m.q(), m.n(), gens);
}

bool is_flat(const QMatroid& m, const Subspace& v) {
  CheckAmbient(m.q(), m.n(), v);
  const std::uint32_t rv = m.rank(v);
  for (const Subspace& x : Points(m.q(), m.n())) {
    if (v.contains(x.basis()[0])) continue;
    if (m.rank(join(v, x)) == rv) return false;
  }
  return true;
}

FlatFamily flats(const QMatroid& m) {
  auto lattice = Lattice::get(m.q(), m.n());
  m.rank_table();
  std::vector<Subspace> out;
  for (const Subspace& v : lattice->all()) {
    if (is_flat(m, v)) out.push_back(v);
  }
  return FlatFamily::make(m.q(), m.n(), std::move(out));
}

FlatFamily FlatFamily::make(std::uint32_t q, std::uint32_t n, std::vector<Subspace> members) {
  FlatFamily f;
  f.q_ = q;
  f.n_ = n;
  for (const Subspace& s : members) CheckAmbient(q, n, s);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  f.members_ = std::move(members);
  const std::size_t size = f.members_.size();
  for (std::size_t i = 0; i < size; ++i) f.index_.emplace(f.members_[i], i);
  // Strict containment as bit rows; members are sorted by dimension, so
  // every strict superset of member i has a larger index.
  const std::size_t words = (size + 63) / 64;
  std::vector<std::uint64_t> up(size * words, 0), down(size * words, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      const Subspace& a = f.members_[i];
      const Subspace& b = f.members_[j];
      if (a.dim() < b.dim() && b.contains(a)) {
        up[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        down[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  f.up_covers_.assign(size, {});
  f.height_.assign(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (!((up[i * words + j / 64] >> (j % 64)) & 1u)) continue;
      bool between = false;
      for (std::size_t w = 0; w < words && !between; ++w) {
        between = (up[i * words + w] & down[j * words + w]) != 0;
      }
      if (!between) f.up_covers_[i].push_back(j);
    }
  }
  // Longest chain from a minimal member.
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j : f.up_covers_[i]) {
      f.height_[j] = std::max(f.height_[j], f.height_[i] + 1);
    }
  }
  return f;
}

std::optional<std::size_t> FlatFamily::find(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subspace FlatFamily::closure(const Subspace& v) const {
  CheckAmbient(q_, n_, v);
  Subspace out = Subspace::full(q_, n_);
  for (const Subspace& f : members_) {
    if (f.dim() >= v.dim() && f.contains(v)) out = meet(out, f);
  }
  return out;
}

std::vector<std::size_t> covers_containing(const FlatFamily& f, std::size_t i, Vec v) {
  std::vector<std::size_t> out;
  for (std::size_t j : f.covers(i)) {
    if (f.at(j).contains(v)) out.push_back(j);
  }
  return out;
}

AxiomReport check_flat_axioms(const FlatFamily& f, std::size_t limit) {
  AxiomReport rep;
  const Subspace e = Subspace::full(f.q(), f.n());
  ++rep.checked;
  if (!f.contains(e)) Record(rep, limit, {"F1", {e}, std::nullopt, "E is not a member"});
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      ++rep.checked;
      const Subspace m = meet(f.at(i), f.at(j));
      if (!f.contains(m)) {
        Record(rep, limit, {"F2", {f.at(i), f.at(j)}, std::nullopt,
                            "meet " + m.to_string() + " is not a member"});
      }
    }
  }
  const auto& points = Points(f.q(), f.n());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const Subspace& p : points) {
      const Vec v = p.basis()[0];
      if (f.at(i).contains(v)) continue;
      ++rep.checked;
      const auto c = covers_containing(f, i, v);
      if (c.size() != 1) {
        Violation viol{"F3", {f.at(i)}, v,
                       std::to_string(c.size()) + " covers contain " +
                           f.at(i).ground().to_string(v)};
        for (std::size_t j : c) viol.witnesses.push_back(f.at(j));
        Record(rep, limit, std::move(viol));
      }
    }
  }
  return rep;
}

AxiomReport check_semimodular(const FlatFamily& f, std::size_t limit) {
  AxiomReport rep;
  auto covers = [&](std::size_t upper, std::size_t lower) {
    const auto& c = f.covers(lower);
    return std::binary_search(c.begin(), c.end(), upper);
  };
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < f.size(); ++b) {
      if (a == b) continue;
      const auto m = f.find(meet(f.at(a), f.at(b)));
      if (!m || !covers(a, *m)) continue;
      ++rep.checked;
      const auto j = f.find(f.closure(join(f.at(a), f.at(b))));
      if (!j || !covers(*j, b)) {
        Record(rep, limit, {"semimodular", {f.at(a), f.at(b)}, std::nullopt,
                            "join does not cover the second flat"});
      }
    }
  }
  return rep;
}

bool is_independent(const QMatroid& m, const Subspace& v) { return m.rank(v) == v.dim(); }

std::vector<Subspace> circuits(const QMatroid& m) {
  auto lattice = Lattice::get(m.q(), m.n());
  m.rank_table();
  std::vector<Subspace> out;
  for (const Subspace& v : lattice->all()) {
    if (v.dim() == 0 || is_independent(m, v)) continue;
    // Subspaces of independent spaces are independent, so minimality only
    // needs the hyperplanes of v.
    bool minimal = true;
    for (const Subspace& h : subspaces_of(v, v.dim() - 1)) {
      if (!is_independent(m, h)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  return out;
}

std::vector<Subspace> loops(const QMatroid& m) {
  std::vector<Subspace> out;
  for (const Subspace& x : Points(m.q(), m.n())) {
    if (m.rank(x) == 0) out.push_back(x);
  }
  return out;
}

Minor restriction(const QMatroid& m, const Subspace& x) {
  CheckAmbient(m.q(), m.n(), x);
  LMap iota = embedding_map(x);
  QMatroid base = m;
  QMatroid r = QMatroid::functional(
      m.q(), x.dim(),
      [base, iota](const Subspace& u) { return base.rank(image_subspace(iota, u)); },
      m.label() + " | " + x.to_string());
  return {r, iota, x};
}

Minor contraction(const QMatroid& m, const Subspace& x) {
  CheckAmbient(m.q(), m.n(), x);
  QuotientMap pi = quotient_map(x);
  std::vector<std::uint32_t> rest;
  const auto piv = x.pivots();
  for (std::uint32_t j = 0; j < x.n(); ++j) {
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) rest.push_back(j);
  }
  QMatroid base = m;
  const std::uint32_t rx = m.rank(x);
  QMatroid c = QMatroid::functional(
      m.q(), pi.dim,
      [base, x, rest, rx](const Subspace& u) {
        // Lift each basis vector by placing its digits on the non-pivot
        // coordinates; pi of the lift is the vector itself.
        const GroundSpace& g = x.ground();
        const GroundSpace& h = u.ground();
        std::vector<Vec> gens = x.basis();
        for (Vec b : u.basis()) {
          Vec lift = 0;
          for (std::size_t c = 0; c < rest.size(); ++c) {
            lift += h.digit(b, static_cast<std::uint32_t>(c)) * g.unit(rest[c]);
          }
          gens.push_back(lift);
        }
        return base.rank(Subspace::span(x.q(), x.n(), gens)) - rx;
      },
      m.label() + " / " + x.to_string());
  return {c, pi.map, x};
}

std::uint64_t gl_order(std::uint32_t q, std::uint32_t n) {
  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t out = 1, qi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint64_t f = qn - qi;
    out = (f != 0 && out > UINT64_MAX / f) ? UINT64_MAX : out * f;
    qi *= q;
  }
  return out;
}

namespace {

struct IsoSearch {
  const QMatroid& a;
  const QMatroid& b;
  const IsoOptions& opt;
  const GroundSpace& g;
  std::uint32_t frob = 0;
  // groups[j]: subspaces inside <e_0..e_j> but not <e_0..e_{j-1}>, with the
  // automorphism already applied to their bases, and their ranks in a.
  std::vector<std::vector<std::pair<std::vector<Vec>, std::uint32_t>>> groups;
  std::vector<Vec> images;
  IsoResult result;
  bool found = false;

  Vec Apply(Vec v) const {
    Vec out = 0;
    for (std::uint32_t i = 0; i < g.n(); ++i) {
      const std::uint32_t c = g.digit(v, i);
      if (c != 0) out = g.axpy(out, c, images[i]);
    }
    return out;
  }

  bool Check(std::size_t j) const {
    for (const auto& [basis, r] : groups[j]) {
      std::vector<Vec> img;
      img.reserve(basis.size());
      for (Vec v : basis) img.push_back(Apply(v));
      if (b.rank(Subspace::span(g.q(), g.n(), img)) != r) return false;
    }
    return true;
  }

  void Recurse(std::uint32_t j, const Subspace& chosen) {
    if (found && opt.stop_at_first) return;
    ++result.nodes;
    if (j == g.n()) {
      ++result.leaves;
      bool ok = true;
      if (!opt.prune) {
        for (std::size_t k = 0; k < groups.size() && ok; ++k) ok = Check(k);
      }
      if (ok && !found) {
        found = true;
        const FieldPtr f = g.field_ptr();
        Mat m(f, g.n(), g.n());
        for (std::uint32_t i = 0; i < g.n(); ++i) {
          for (std::uint32_t c = 0; c < g.n(); ++c) m.at(i, c) = g.digit(images[i], c);
        }
        result.witness = lmap_from_matrix(m, frob);
      }
      return;
    }
    for (Vec cand = 1; cand < g.size(); ++cand) {
      if (chosen.contains(cand)) continue;
      images[j] = cand;
      if (opt.prune && !Check(j)) continue;
      std::vector<Vec> next = chosen.basis();
      next.push_back(cand);
      Recurse(j + 1, Subspace::span(g.q(), g.n(), next));
      if (found && opt.stop_at_first) return;
    }
  }
};

}  // namespace

IsoResult is_isomorphic(const QMatroid& a, const QMatroid& b, const IsoOptions& opt) {
  if (a.q() != b.q()) throw Error(Errc::kAmbientMismatch, "matroids over different fields");
  IsoResult total;
  if (a.n() != b.n()) return total;
  const GroundSpace& g = GroundSpace::get(a.q(), a.n());
  const std::uint32_t autos =
      opt.mode == IsoMode::kSemilinear ? g.field().base_degree() : 1;
  const std::uint64_t gl = gl_order(a.q(), a.n());
  total.search_space = gl > UINT64_MAX / autos ? UINT64_MAX : gl * autos;
  if (total.search_space > opt.max_candidates) {
    throw Error(Errc::kSearchBoundExceeded,
                "search space " + std::to_string(total.search_space) + " exceeds bound");
  }
  auto lattice = Lattice::get(a.q(), a.n());
  a.rank_table();
  b.rank_table();
  for (std::uint32_t frob = 0; frob < autos; ++frob) {
    IsoSearch s{a, b, opt, g, 0, {}, {}, {}, false};
    s.frob = frob;
    s.groups.assign(a.n(), {});
    for (const Subspace& v : lattice->all()) {
      if (v.dim() == 0) continue;
      std::uint32_t top = 0;
      std::vector<Vec> basis;
      for (Vec r : v.basis()) {
        std::vector<std::uint32_t> d = g.digits(r);
        for (std::uint32_t i = 0; i < d.size(); ++i) {
          if (d[i] != 0) {
            top = std::max(top, i);
            if (frob != 0) d[i] = g.field().frobenius(d[i], frob);
          }
        }
        basis.push_back(g.from_digits(d));
      }
      s.groups[top].emplace_back(std::move(basis), a.rank(v));
    }
    s.images.assign(a.n(), 0);
    s.Recurse(0, Subspace::zero(a.q(), a.n()));
    total.leaves += s.result.leaves;
    total.nodes += s.result.nodes;
    if (s.result.witness && !total.witness) total.witness = s.result.witness;
    if (total.witness && opt.stop_at_first) break;
  }
  return total;
}

}  // namespace qmat
