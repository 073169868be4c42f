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

#include "qmat/dirsum.h"

#include <stdexcept>

namespace qmat {

namespace {

std::string Dims(std::uint32_t q, std::uint32_t n) {
  return "F_" + std::to_string(q) + "^" + std::to_string(n);
}

// Block matrices for the coordinate embeddings and projections.
LMap Embedding(std::uint32_t q, std::uint32_t ni, std::uint32_t offset, std::uint32_t n) {
  Mat a(Field::base_field(q), ni, n);
  for (std::uint32_t j = 0; j < ni; ++j) a.at(j, offset + j) = 1;
  return lmap_from_matrix(a);
}

LMap Projection(std::uint32_t q, std::uint32_t ni, std::uint32_t offset, std::uint32_t n) {
  Mat a(Field::base_field(q), n, ni);
  for (std::uint32_t j = 0; j < ni; ++j) a.at(offset + j, j) = 1;
  return lmap_from_matrix(a);
}

void Throw(Errc code, AxiomReport rep) {
  const Violation& v = rep.violations.front();
  std::string what = v.axiom + " fails for tau at";
  for (const Subspace& w : v.witnesses) what += " " + w.to_string();
  throw AxiomViolationError(code, std::move(rep), what);
}

}  // namespace

QMatroid submodular_completion(std::uint32_t q, std::uint32_t n, const QMatroid::RankFn& tau,
                               bool validate) {
  auto lattice = Lattice::get(q, n);
  const std::size_t size = lattice->size();
  std::vector<std::uint32_t> t(size);
  for (std::size_t i = 0; i < size; ++i) t[i] = tau(lattice->at(i));
  // Hyperplanes of each space by lattice index.
  std::vector<std::vector<std::size_t>> hyper(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Subspace& v = lattice->at(i);
    if (v.dim() == 0) continue;
    for (const Subspace& h : subspaces_of(v, v.dim() - 1)) hyper[i].push_back(lattice->index(h));
  }
  if (validate) {
    if (t[0] != 0) {
      AxiomReport rep;
      rep.violations.push_back({"normalized", {lattice->at(0)}, std::nullopt,
                                "tau(0) = " + std::to_string(t[0])});
      rep.total_violations = 1;
      Throw(Errc::kTauNotNormalized, std::move(rep));
    }
    AxiomReport mono;
    for (std::size_t i = 0; i < size && mono.violations.empty(); ++i) {
      for (std::size_t h : hyper[i]) {
        if (t[h] > t[i]) {
          mono.violations.push_back({"R2", {lattice->at(h), lattice->at(i)}, std::nullopt,
                                     std::to_string(t[h]) + " > " + std::to_string(t[i])});
          mono.total_violations = 1;
          break;
        }
      }
    }
    if (!mono.ok()) Throw(Errc::kTauNotMonotone, std::move(mono));
    AxiomReport sub;
    for (std::size_t i = 0; i < size && sub.violations.empty(); ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        const Subspace& v = lattice->at(i);
        const Subspace& w = lattice->at(j);
        const std::size_t a = lattice->index(join(v, w));
        const std::size_t b = lattice->index(meet(v, w));
        if (t[a] + t[b] > t[i] + t[j]) {
          sub.violations.push_back({"R3", {v, w}, std::nullopt, "tau is not submodular"});
          sub.total_violations = 1;
          break;
        }
      }
    }
    if (!sub.ok()) Throw(Errc::kTauNotSubmodular, std::move(sub));
  }
  // The minimum over X <= V either takes X = V or is attained below some
  // hyperplane H, where it equals r(H) + 1.
  auto r = std::make_shared<std::vector<std::uint32_t>>(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::uint32_t best = t[i];
    for (std::size_t h : hyper[i]) best = std::min(best, (*r)[h] + 1);
    (*r)[i] = best;
  }
  QMatroid m = QMatroid::functional(
      q, n, [lattice, r](const Subspace& v) { return (*r)[lattice->index(v)]; }, "r_tau");
  m.rank_table();
  return m;
}

DirectSum direct_sum(const QMatroid& m1, const QMatroid& m2) {
  if (m1.q() != m2.q()) throw Error(Errc::kAmbientMismatch, "summands over different fields");
  const std::uint32_t q = m1.q(), n1 = m1.n(), n2 = m2.n(), n = n1 + n2;
  DirectSum d;
  d.m1 = m1;
  d.m2 = m2;
  d.iota1 = Embedding(q, n1, 0, n);
  d.iota2 = Embedding(q, n2, n1, n);
  d.pi1 = Projection(q, n1, 0, n);
  d.pi2 = Projection(q, n2, n1, n);
  const LMap p1 = d.pi1, p2 = d.pi2;
  d.pushed1 = QMatroid::functional(
      q, n, [m1, p1](const Subspace& v) { return m1.rank(image_subspace(p1, v)); },
      m1.label() + " pushed");
  d.pushed2 = QMatroid::functional(
      q, n, [m2, p2](const Subspace& v) { return m2.rank(image_subspace(p2, v)); },
      m2.label() + " pushed");
  const QMatroid a = d.pushed1, b = d.pushed2;
  d.total = submodular_completion(
      q, n, [a, b](const Subspace& v) { return a.rank(v) + b.rank(v); }, false);
  CheckReport rep = verify_embeddings(d);
  if (!rep.ok()) throw std::logic_error("direct sum embeddings are not rank-preserving");
  return d;
}

std::vector<Subspace> dirsum_circuits(const DirectSum& d) {
  auto lattice = Lattice::get(d.total.q(), d.total.n());
  auto cond = [&](const Subspace& v) {
    return d.pushed1.rank(v) + d.pushed2.rank(v) + 1 <= v.dim();
  };
  std::vector<Subspace> out;
  for (const Subspace& v : lattice->all()) {
    if (v.dim() == 0 || !cond(v)) continue;
    bool minimal = true;
    for (const Subspace& w : subspaces_of(v)) {
      if (w.dim() < v.dim() && cond(w)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  return out;
}

CheckReport verify_embeddings(const DirectSum& d) {
  CheckReport rep;
  const QMatroid* ms[2] = {&d.m1, &d.m2};
  const QMatroid* pushed[2] = {&d.pushed1, &d.pushed2};
  const LMap* iotas[2] = {&d.iota1, &d.iota2};
  for (int i = 0; i < 2; ++i) {
    const std::string tag = "E" + std::to_string(i + 1);
    Check& total = rep.add("rank of embedded " + tag + " equals summand rank", true);
    Check& own = rep.add("pushed rank on embedded " + tag + " equals summand rank", true);
    Check& other = rep.add("other pushed rank vanishes on " + tag, true);
    for (const Subspace& v : Lattice::get(ms[i]->q(), ms[i]->n())->all()) {
      const Subspace e = image_subspace(*iotas[i], v);
      const std::uint32_t r = ms[i]->rank(v);
      ++total.count;
      ++own.count;
      ++other.count;
      if (d.total.rank(e) != r && total.pass) {
        total.pass = false;
        total.witnesses.push_back(v);
      }
      if (pushed[i]->rank(e) != r && own.pass) {
        own.pass = false;
        own.witnesses.push_back(v);
      }
      if (pushed[1 - i]->rank(e) != 0 && other.pass) {
        other.pass = false;
        other.witnesses.push_back(v);
      }
    }
  }
  return rep;
}

CheckReport additivity_check(const DirectSum& d) {
  CheckReport rep;
  Check& add = rep.add("rank(V1 + V2) = rank1(V1) + rank2(V2)", true);
  const auto l1 = enumerate_subspaces(d.m1.q(), d.m1.n());
  const auto l2 = enumerate_subspaces(d.m2.q(), d.m2.n());
  for (const Subspace& v1 : l1) {
    const Subspace e1 = image_subspace(d.iota1, v1);
    for (const Subspace& v2 : l2) {
      ++add.count;
      const Subspace s = join(e1, image_subspace(d.iota2, v2));
      if (d.total.rank(s) != d.m1.rank(v1) + d.m2.rank(v2) && add.pass) {
        add.pass = false;
        add.witnesses = {v1, v2};
      }
    }
  }
  const QMatroid* others[2] = {&d.m2, &d.m1};
  const LMap* iotas[2] = {&d.iota1, &d.iota2};
  for (int i = 0; i < 2; ++i) {
    const Subspace ei = image_subspace(*iotas[i], Subspace::full(d.total.q(), i == 0 ? d.m1.n()
                                                                                      : d.m2.n()));
    Minor c = contraction(d.total, ei);
    const std::string name = "contraction by E" + std::to_string(i + 1) + " isomorphic to M" +
                             std::to_string(2 - i);
    try {
      IsoResult r = is_isomorphic(c.matroid, *others[i]);
      Check& ch = rep.add(name, r.witness.has_value(), {}, r.nodes);
      if (!r.witness) ch.detail = "no isomorphism found";
    } catch (const Error& e) {
      rep.add(name, false, e.what());
    }
  }
  return rep;
}

CheckReport verify_coproduct_lw(const QMatroid& m1, const QMatroid& m2,
                                const std::vector<CoproductTarget>& targets, bool exhaustive) {
  const DirectSum d = direct_sum(m1, m2);
  const std::uint32_t q = m1.q(), n1 = m1.n(), n = m1.n() + m2.n();
  CheckReport rep;
  bool first = true;
  for (const CoproductTarget& t : targets) {
    const std::uint32_t nt = t.n.n();
    const QMatroid* ms[2] = {&m1, &m2};
    const LMap* alphas[2] = {&t.alpha1, &t.alpha2};
    for (int i = 0; i < 2; ++i) {
      const LMap& a = *alphas[i];
      if (a.q() != q || a.domain_dim() != ms[i]->n() || a.codomain_dim() != nt) {
        throw Error(Errc::kAmbientMismatch, t.label + ": alpha" + std::to_string(i + 1) +
                                                " does not map " + Dims(q, ms[i]->n()) +
                                                " to " + Dims(q, nt));
      }
      if (!a.is_linear()) {
        throw Error(Errc::kAlphaNotLinear, t.label + ": alpha" + std::to_string(i + 1));
      }
      if (!is_weak_map(a, *ms[i], t.n)) {
        throw Error(Errc::kAlphaNotWeak, t.label + ": alpha" + std::to_string(i + 1));
      }
    }
    const std::string p = t.label + ": ";
    Mat e(Field::base_field(q), n, nt);
    for (std::uint32_t j = 0; j < n; ++j) {
      const Mat& src = j < n1 ? *t.alpha1.linear_matrix() : *t.alpha2.linear_matrix();
      const std::uint32_t row = j < n1 ? j : j - n1;
      for (std::uint32_t c = 0; c < nt; ++c) e.at(j, c) = src.at(row, c);
    }
    const LMap eps = lmap_from_matrix(e);
    rep.add(p + "eps o iota1 = alpha1", compose(eps, d.iota1) == t.alpha1);
    rep.add(p + "eps o iota2 = alpha2", compose(eps, d.iota2) == t.alpha2);
    const MapTypeReport cls = classify_map(eps, d.total, t.n);
    Check& weak = rep.add(p + "eps weak (brute force)", cls.is_weak, {}, cls.subspaces_checked);
    if (cls.weak_witness) weak.witnesses.push_back(*cls.weak_witness);
    const bool via = is_weak_linear_via_circuits(eps, d.total, t.n);
    rep.add(p + "eps weak (circuit criterion)", via);
    rep.add(p + "criteria agree", via == cls.is_weak);
    // Every unit vector of E1 + E2 is iota1(e_j) or iota2(e_j), so a linear
    // map that factors the alphas has its matrix rows prescribed.
    bool forced = true;
    const GroundSpace& g = GroundSpace::get(q, n);
    for (std::uint32_t j = 0; j < n; ++j) {
      const Vec want = j < n1 ? t.alpha1(GroundSpace::get(q, n1).unit(j))
                              : t.alpha2(GroundSpace::get(q, n - n1).unit(j - n1));
      forced = forced && eps(g.unit(j)) == want;
    }
    rep.add(p + "eps is the only linear factorization (structural)", forced, {}, n);
    if (exhaustive && first) {
      std::uint64_t total = 1;
      for (std::uint32_t k = 0; k < n * nt; ++k) total *= q;
      if (total > (std::uint64_t{1} << 20)) {
        rep.add(p + "exhaustive uniqueness", false,
                "skipped: " + std::to_string(total) + " linear maps");
      } else {
        std::uint64_t factoring = 0, weak_factoring = 0, weak_maps = 0;
        std::vector<Elem> digits(n * nt, 0);
        for (std::uint64_t code = 0; code < total; ++code) {
          std::uint64_t c = code;
          for (auto& x : digits) {
            x = static_cast<Elem>(c % q);
            c /= q;
          }
          LMap cand = lmap_from_matrix(Mat(Field::base_field(q), n, nt, digits));
          const bool w = is_weak_map(cand, d.total, t.n);
          weak_maps += w;
          if (compose(cand, d.iota1) == t.alpha1 && compose(cand, d.iota2) == t.alpha2) {
            ++factoring;
            weak_factoring += w;
          }
        }
        rep.add(p + "exhaustive uniqueness", factoring == 1 && weak_factoring == 1,
                std::to_string(total) + " linear maps, " + std::to_string(weak_maps) +
                    " weak, " + std::to_string(factoring) + " factoring",
                total);
      }
    }
    first = false;
  }
  return rep;
}

CheckReport dirsum_is_max(const QMatroid& m1, const QMatroid& m2,
                          const std::vector<QMatroid>& candidates) {
  const DirectSum d = direct_sum(m1, m2);
  CheckReport rep = verify_embeddings(d);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const QMatroid& c = candidates[k];
    if (c.q() != d.total.q() || c.n() != d.total.n()) {
      throw Error(Errc::kAmbientMismatch, "candidate " + std::to_string(k) + " not on " +
                                              Dims(d.total.q(), d.total.n()));
    }
    const std::string p = "candidate " + std::to_string(k) + " (" + c.label() + "): ";
    rep.add(p + "rank axioms", check_rank_axioms(c).ok());
    bool bounded = true;
    const QMatroid* ms[2] = {&m1, &m2};
    const LMap* iotas[2] = {&d.iota1, &d.iota2};
    for (int i = 0; i < 2 && bounded; ++i) {
      for (const Subspace& v : Lattice::get(ms[i]->q(), ms[i]->n())->all()) {
        if (c.rank(image_subspace(*iotas[i], v)) > ms[i]->rank(v)) {
          bounded = false;
          break;
        }
      }
    }
    if (!bounded) {
      rep.add(p + "outside the bounded set", true, "not compared");
      continue;
    }
    Check& below = rep.add(p + "pointwise below the sum", true);
    for (const Subspace& v : Lattice::get(c.q(), c.n())->all()) {
      ++below.count;
      if (c.rank(v) > d.total.rank(v)) {
        below.pass = false;
        below.witnesses.push_back(v);
        break;
      }
    }
  }
  return rep;
}

LMap lclass_scaling_family(const LMap& eps, std::uint32_t n1, Elem lambda1, Elem lambda2) {
  if (!eps.is_linear()) throw Error(Errc::kAlphaNotLinear, "scaling family needs a linear map");
  if (lambda1 == 0 || lambda2 == 0 || lambda1 >= eps.q() || lambda2 >= eps.q()) {
    throw Error(Errc::kInvalidArgument, "scalars must be nonzero elements of F_q");
  }
  if (n1 > eps.domain_dim()) throw Error(Errc::kInvalidArgument, "split exceeds domain");
  Mat a = *eps.linear_matrix();
  const Field& f = *a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Elem s = i < n1 ? lambda1 : lambda2;
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = f.mul(s, a.at(i, j));
  }
  return lmap_from_matrix(a);
}

}  // namespace qmat
