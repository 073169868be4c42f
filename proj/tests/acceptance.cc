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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion with its
// wall time and limit; exits nonzero if any criterion fails or runs over.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qmat/dirsum.h"
#include "qmat/maps.h"
#include "qmat/repro.h"

namespace qmat {
namespace {

Subspace S(std::uint32_t q, std::uint32_t n, const char* s) { return Subspace::parse(q, n, s); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// First failing check of a report, or empty.
std::string FirstFailure(const CheckReport& r) {
  for (const Check& c : r.checks) {
    if (!c.pass) return c.name + ": " + c.detail;
  }
  return {};
}

void RequireReport(Outcome& o, const CheckReport& r, const std::string& what) {
  o.require(r.ok(), what + ": " + FirstFailure(r));
}
void RequireReport(Outcome& o, const ReproReport& r, const std::string& what) {
  RequireReport(o, r.checks, what);
}

const Check* FindCheck(const CheckReport& r, const std::string& prefix) {
  for (const Check& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

std::vector<std::int64_t> Omega24() { return omega_index_set(*Field::make(2, 1, 4)); }

QMatroid UniformSum() {
  const QMatroid u = QMatroid::uniform(2, 2, 1);
  return direct_sum(u, u).total;
}

// Spread example, N(1), N(2), U_k for k = 0..4 and the uniform sum.
std::vector<QMatroid> ReproMatroids() {
  std::vector<QMatroid> z = {example_nonrepresentable(), blockdiag_matroid(2, 4, 1),
                             blockdiag_matroid(2, 4, 2)};
  for (std::uint32_t k = 0; k <= 4; ++k) z.push_back(QMatroid::uniform(2, 4, k));
  z.push_back(UniformSum());
  return z;
}

std::vector<LMap> AllLinear(std::uint32_t q, std::uint32_t n1, std::uint32_t n2) {
  auto f = Field::base_field(q);
  std::vector<LMap> out;
  std::uint64_t total = 1;
  for (std::uint32_t k = 0; k < n1 * n2; ++k) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat a(f, n1, n2);
    std::uint64_t c = code;
    for (std::uint32_t k = 0; k < n1 * n2; ++k, c /= q) a.at(k / n2, k % n2) = static_cast<Elem>(c % q);
    out.push_back(lmap_from_matrix(a));
  }
  return out;
}

QMatroid OneLoop(std::uint32_t q, std::uint32_t n, const Subspace& loop) {
  return QMatroid::functional(q, n, [loop](const Subspace& v) {
    return v.dim() == 0 || (v.dim() == 1 && v == loop) ? 0u : 1u;
  });
}

// F_2-rank of a set of GF(q^m) elements through their coefficient vectors.
std::uint32_t CoefficientRank(const Field& f, const std::vector<Elem>& xs) {
  std::vector<std::uint32_t> rows;
  for (Elem x : xs) {
    std::uint32_t bits = 0;
    const auto c = f.coefficients(x);
    for (std::size_t j = 0; j < c.size(); ++j) bits |= (c[j] & 1u) << j;
    rows.push_back(bits);
  }
  std::uint32_t rank = 0;
  for (std::uint32_t bit = 0; bit < 32; ++bit) {
    auto it = std::find_if(rows.begin(), rows.end(), [bit](std::uint32_t r) { return (r >> bit) & 1u; });
    if (it == rows.end()) continue;
    const std::uint32_t p = *it;
    rows.erase(it);
    for (std::uint32_t& r : rows) {
      if ((r >> bit) & 1u) r ^= p;
    }
    ++rank;
  }
  return rank;
}

Outcome Criterion1() {
  Outcome o;
  auto f = Field::make(2, 1, 4);
  const auto omega = Omega24();
  o.require(omega.size() == 14 && omega.front() == 1 && omega.back() == 14, "index set is not 1..14");
  const Subspace t1 = S(2, 4, "1000,0100"), t2 = S(2, 4, "0010,0001");
  const Subspace e = Subspace::full(2, 4);
  std::uint64_t spaces = 0;
  for (std::int64_t i : omega) {
    const auto ui = static_cast<std::uint32_t>(i);
    const QMatroid m = blockdiag_matroid(2, 4, i);
    const std::string tag = "i=" + std::to_string(i);
    o.require(m.rank(t1) == 1 && m.rank(t2) == 1 && m.rank(e) == 2, tag + ": block ranks");
    for (const Subspace& v : enumerate_subspaces(2, 4, 1)) o.require(m.rank(v) == 1, tag + ": 1-space");
    for (const Subspace& v : enumerate_subspaces(2, 4, 3)) o.require(m.rank(v) == 2, tag + ": 3-space");
    const bool independent =
        CoefficientRank(*f, {1, f->omega(), f->primitive_power(ui), f->primitive_power(ui + 1)}) == 4;
    std::uint64_t rank2 = 0, others = 0;
    for (const Subspace& v : enumerate_subspaces(2, 4, 2)) {
      if (v == t1 || v == t2) continue;
      ++others;
      rank2 += m.rank(v) == 2;
    }
    o.require(others == 33, tag + ": expected 33 other 2-spaces");
    o.require((rank2 == others) == independent, tag + ": dichotomy disagrees with independence");
    spaces += others;
    RequireReport(o, verify_blockdiag(2, 4, i), tag);
  }
  if (o.ok) o.detail = std::to_string(omega.size()) + " indices, " + std::to_string(spaces) + " 2-spaces";
  return o;
}

Outcome Criterion2() {
  Outcome o;
  const FPrime fp = fprime(2, 4);
  o.require(fp.brute == fp.closed_form, "brute-force union differs from closed form");
  RequireReport(o, fp.report, "fprime");
  if (o.ok) o.detail = std::to_string(fp.brute.size()) + " members";
  return o;
}

Outcome Criterion3() {
  Outcome o;
  IsoOptions opt;
  opt.prune = false;
  const IsoResult r = is_isomorphic(blockdiag_matroid(2, 4, 1), blockdiag_matroid(2, 4, 2), opt);
  o.require(!r.witness, "found an isomorphism");
  o.require(r.leaves == 20160, "examined " + std::to_string(r.leaves) + " candidates");
  o.require(gl_order(2, 4) == 20160, "GL(4,2) order");
  if (o.ok) o.detail = std::to_string(r.leaves) + " candidates, none rank-preserving";
  return o;
}

Outcome Criterion4() {
  Outcome o;
  const CheckReport r = verify_thm_nonlinear_noncoproduct(2).checks;
  RequireReport(o, r, "search");
  const Check* no = FindCheck(r, "no L-map eps");
  const Check* rev = FindCheck(r, "reversed branching order");
  const Check* sanity = FindCheck(r, "sanity: with alpha_i = iota_i");
  o.require(no && rev && sanity, "missing search checks");
  if (o.ok) o.detail = no->detail;
  return o;
}

Outcome Criterion5() {
  Outcome o;
  const CheckReport r = verify_thm_linear_noncoproduct(2, 4).checks;
  RequireReport(o, r, "skeleton");
  for (const char* name : {"covers within F' follow the case formula", "<1110> lies in F'",
                           "no cover of <1110> in F' contains e1", "flat axiom check rejects F'",
                           "E does not cover <1110>"}) {
    o.require(FindCheck(r, name) != nullptr, std::string("missing check ") + name);
  }
  // The failing flat axiom is the unique-cover one, at <1110> and e1.
  const FPrime fp = fprime(2, 4);
  const FlatFamily f = FlatFamily::make(2, 4, {fp.brute.begin(), fp.brute.end()});
  const AxiomReport ax = check_flat_axioms(f, 1000);
  const Subspace x = S(2, 4, "1110");
  bool witness = false;
  for (const Violation& v : ax.violations) {
    const bool at_x = std::find(v.witnesses.begin(), v.witnesses.end(), x) != v.witnesses.end();
    witness = witness || (v.axiom == "F3" && v.vector == Vec{1} && at_x);
  }
  o.require(!ax.ok() && witness, "no F3 violation at <1110>");
  if (o.ok) o.detail = std::to_string(fp.brute.size()) + " members, F3 fails at (<1110>, e1)";
  return o;
}

Outcome Criterion6() {
  Outcome o;
  const QMatroid u = QMatroid::uniform(2, 2, 1);
  const DirectSum d = direct_sum(u, u);
  const QMatroid n2 = blockdiag_matroid(2, 4, 2);
  std::uint64_t agree = 0;
  for (const Subspace& v : enumerate_subspaces(2, 4)) agree += d.total.rank(v) == n2.rank(v);
  o.require(agree == 67, std::to_string(agree) + " of 67 ranks agree");
  RequireReport(o, additivity_check(d), "additivity");
  RequireReport(o, verify_embeddings(d), "embeddings");
  const auto a = dirsum_circuits(d);
  const auto b = circuits(d.total);
  o.require(std::set<Subspace>(a.begin(), a.end()) == std::set<Subspace>(b.begin(), b.end()),
            "circuit characterization differs from rank circuits");
  RequireReport(o, verify_ex_uniform_dirsum(2, 4), "uniform sum");
  if (o.ok) o.detail = "67 ranks, " + std::to_string(b.size()) + " circuits";
  return o;
}

Outcome Criterion7() {
  Outcome o;
  const auto zoo = ReproMatroids();
  for (const QMatroid& m : zoo) {
    const FlatFamily f = flats(m);
    const QMatroid back = QMatroid::from_flats(f);
    o.require(back.rank_table() == m.rank_table(), m.label() + ": rank table");
    o.require(flats(back) == f, m.label() + ": flats");
  }
  if (o.ok) o.detail = std::to_string(zoo.size()) + " matroids";
  return o;
}

Outcome Criterion8() {
  Outcome o;
  std::vector<QMatroid> all = ReproMatroids();
  for (std::int64_t i : Omega24()) all.push_back(blockdiag_matroid(2, 4, i));
  all.push_back(QMatroid::uniform(3, 2, 1));
  all.push_back(blockdiag_matroid(3, 4, 1));
  std::uint64_t instances = 0;
  for (const QMatroid& m : all) {
    const AxiomReport r = check_rank_axioms(m);
    o.require(r.ok(), m.label() + ": rank axioms");
    instances += r.checked;
    const FlatFamily f = flats(m);
    const AxiomReport fa = check_flat_axioms(f);
    o.require(fa.ok(), m.label() + ": flat axioms");
    const AxiomReport sm = check_semimodular(f);
    o.require(sm.ok(), m.label() + ": semimodularity");
    instances += fa.checked + sm.checked;
  }
  if (o.ok) o.detail = std::to_string(all.size()) + " matroids, " + std::to_string(instances) + " instances";
  return o;
}

Outcome Criterion9() {
  Outcome o;
  std::uint64_t cases = 0;
  // Minors as maps, for every X of each repro matroid.
  for (const QMatroid& m : ReproMatroids()) {
    for (const Subspace& x : enumerate_subspaces(2, 4)) {
      const Minor r = restriction(m, x);
      const MapTypeReport e = classify_map(r.map, r.matroid, m);
      o.require(e.is_strong && e.is_rank_preserving, m.label() + ": embedding of " + x.to_string());
      const Minor c = contraction(m, x);
      const MapTypeReport p = classify_map(c.map, m, c.matroid);
      o.require(p.is_strong && p.is_weak, m.label() + ": projection by " + x.to_string());
      cases += 2;
    }
  }
  // Isomorphism equivalences over GL(2,2) and GL(3,2).
  const QMatroid n2r = restriction(blockdiag_matroid(2, 4, 2), S(2, 4, "1000,0100,0010")).matroid;
  const std::vector<std::pair<std::uint32_t, std::vector<std::pair<QMatroid, QMatroid>>>> iso_pairs = {
      {2,
       {{OneLoop(2, 2, S(2, 2, "01")), OneLoop(2, 2, S(2, 2, "11"))},
        {QMatroid::uniform(2, 2, 1), QMatroid::uniform(2, 2, 1)},
        {QMatroid::uniform(2, 2, 2), QMatroid::uniform(2, 2, 1)}}},
      {3,
       {{OneLoop(2, 3, S(2, 3, "100")), OneLoop(2, 3, S(2, 3, "011"))},
        {QMatroid::uniform(2, 3, 2), QMatroid::uniform(2, 3, 2)},
        {n2r, n2r},
        {QMatroid::uniform(2, 3, 1), QMatroid::uniform(2, 3, 2)}}}};
  for (const auto& [n, pairs] : iso_pairs) {
    std::uint64_t group = 0;
    for (const LMap& phi : AllLinear(2, n, n)) {
      if (!phi.is_bijective()) continue;
      ++group;
      const LMap inv = inverse(phi);
      for (const auto& [a, b] : pairs) {
        const MapTypeReport f = classify_map(phi, a, b), g = classify_map(inv, b, a);
        o.require((f.is_weak && g.is_weak) == f.is_rank_preserving &&
                      (f.is_strong && g.is_strong) == f.is_rank_preserving,
                  "isomorphism equivalence at n=" + std::to_string(n));
        ++cases;
      }
    }
    o.require(group == gl_order(2, n), "group size");
  }
  // Circuit criterion for weakness against brute force.
  auto sample = [](std::uint32_t n) {
    std::vector<QMatroid> out;
    for (std::uint32_t k = 0; k <= n; ++k) out.push_back(QMatroid::uniform(2, n, k));
    out.push_back(OneLoop(2, n, enumerate_subspaces(2, n, 1).back()));
    if (n == 3) out.push_back(restriction(blockdiag_matroid(2, 4, 1), S(2, 4, "1000,0100,0011")).matroid);
    return out;
  };
  for (auto [n1, n2] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto s1 = sample(n1), s2 = sample(n2);
    for (const LMap& phi : AllLinear(2, n1, n2)) {
      for (const QMatroid& a : s1) {
        for (const QMatroid& b : s2) {
          o.require(is_weak_linear_via_circuits(phi, a, b) == classify_map(phi, a, b).is_weak,
                    "circuit criterion disagrees");
          ++cases;
        }
      }
    }
  }
  // Equivalence facts and the tweak construction at q = 2, 3.
  for (std::uint32_t q : {2u, 3u}) {
    const auto maps = AllLinear(q, 2, 2);
    const auto subs = enumerate_subspaces(q, 2);
    for (const LMap& phi : maps) {
      for (const LMap& psi : maps) {
        const bool eq = l_equivalent(phi, psi);
        o.require(eq == scalar_relation(phi, psi).has_value(), "scalar criterion");
        if (!eq) continue;
        for (Vec v = 1; v < q * q; ++v) {
          // phi(v) is a nonzero multiple of psi(v) (or both vanish).
          bool mult = phi(v) == psi(v);
          const std::vector<Vec> gen = {psi(v)};
          for (Vec w : Subspace::span(q, 2, gen).vectors()) mult = mult || (w != 0 && w == phi(v));
          o.require(mult, "pointwise scalar");
        }
        for (const Subspace& w : subs) {
          o.require(preimage(phi, w).vectors == preimage(psi, w).vectors, "preimages differ");
        }
        ++cases;
      }
      if (!phi.is_bijective()) continue;
      for (Vec w = 1; w < q * q; ++w) {
        for (Elem tau = 1; tau < q; ++tau) {
          const LMap t = tweak_equivalent(phi, w, tau);
          o.require(t.is_bijective() && l_equivalent(t, phi), "tweak not equivalent");
          if (tau == 1) o.require(t == phi, "tweak with tau=1");
          for (const Subspace& s : subs) {
            o.require(image_subspace(t, s) == image_subspace(phi, s), "tweak images");
          }
          ++cases;
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome Criterion10() {
  Outcome o;
  const QMatroid u = QMatroid::uniform(2, 2, 1);
  const DirectSum d = direct_sum(u, u);
  std::vector<CoproductTarget> targets;
  for (std::int64_t j : Omega24()) {
    targets.push_back({"N" + std::to_string(j), blockdiag_matroid(2, 4, j), d.iota1, d.iota2});
  }
  targets.push_back({"sum", d.total, d.iota1, d.iota2});
  targets.push_back({"trivial", QMatroid::uniform(2, 2, 0), zero_map(2, 2, 2), zero_map(2, 2, 2)});
  const CheckReport r = verify_coproduct_lw(u, u, targets);
  RequireReport(o, r, "targets");
  const CheckReport ex = verify_coproduct_lw(u, u, {{"N2", blockdiag_matroid(2, 4, 2), d.iota1, d.iota2}}, true);
  RequireReport(o, ex, "exhaustive");
  o.require(ex.checks.back().count == 65536, "exhaustive mode did not enumerate all 4x4 maps");
  if (o.ok) o.detail = std::to_string(targets.size()) + " targets, exhaustive over 65536 maps";
  return o;
}

Outcome Criterion11() {
  Outcome o;
  RequireReport(o, verify_lclass_theorem(2), "q=2");
  RequireReport(o, verify_lclass_theorem(3), "q=3");
  // Straight from the definitions at q = 2: 16 linear maps on F_2^2.
  const auto maps = AllLinear(2, 2, 2);
  std::uint64_t pairs = 0;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = a + 1; b < maps.size(); ++b, ++pairs) {
      o.require(!l_equivalent(maps[a], maps[b]), "distinct binary maps are equivalent");
    }
  }
  const LMap id3 = identity_map(3, 2);
  const LMap e = lclass_scaling_family(id3, 1, 1, 2);
  o.require(!l_equivalent(e, id3), "scaling family collapses");
  if (o.ok) o.detail = std::to_string(pairs) + " binary pairs, two ternary classes";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace qmat

int main() {
  using namespace qmat;
  const std::vector<Criterion> criteria = {
      {1, "block-diagonal family ranks and dichotomy", 1.0, Criterion1},
      {2, "union of flats equals closed form", 5.0, Criterion2},
      {3, "N(1) and N(2) not isomorphic", 5.0, Criterion3},
      {4, "no nonlinear extension (exhaustive search)", 300.0, Criterion4},
      {5, "linear non-coproduct skeleton", 5.0, Criterion5},
      {6, "uniform direct sum equals N(2)", 5.0, Criterion6},
      {7, "flats roundtrips", 10.0, Criterion7},
      {8, "axiom suites", 30.0, Criterion8},
      {9, "map-theory properties", 120.0, Criterion9},
      {10, "coproduct verification harness", 120.0, Criterion10},
      {11, "L-class phenomena", 60.0, Criterion11},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!in_time && o.ok) o.detail += " (over time limit)";
    failed += !pass;
    std::printf("criterion %2d %s  %-45s %8.3fs (limit %gs)  %s\n", c.id, pass ? "PASS" : "FAIL",
                c.name, secs, c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
