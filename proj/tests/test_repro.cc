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

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "oracle.h"
#include "qmat/repro.h"

namespace qmat {
namespace {

Subspace S(std::uint32_t q, std::uint32_t n, const char* s) { return Subspace::parse(q, n, s); }

template <typename F>
Errc CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kInvalidArgument;
}

void ExpectAllPass(const ReproReport& r) {
  EXPECT_FALSE(r.checks.checks.empty());
  for (const Check& c : r.checks.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

const Check* Find(const ReproReport& r, const std::string& prefix) {
  for (const Check& c : r.checks.checks) {
    if (c.name.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

oracle::VSet ToSet(const Subspace& v) {
  auto vs = v.vectors();
  return oracle::VSet(vs.begin(), vs.end());
}

TEST(Spread, Example) {
  QMatroid m = example_nonrepresentable();
  EXPECT_EQ(m.rank(S(2, 4, "1011,0110")), 1u);
  EXPECT_EQ(m.rank(S(2, 4, "1000,0010")), 2u);
  EXPECT_EQ(m.rank(Subspace::full(2, 4)), 2u);
  for (const Subspace& v : enumerate_subspaces(2, 4, 1)) EXPECT_EQ(m.rank(v), 1u);
  oracle::Space sp{2, 4};
  const auto& spread = spread_members();
  for (std::size_t a = 0; a < spread.size(); ++a) {
    for (std::size_t b = a + 1; b < spread.size(); ++b) {
      EXPECT_EQ(oracle::Space::meet(ToSet(spread[a]), ToSet(spread[b])).size(), 1u);
    }
  }
  EXPECT_TRUE(check_rank_axioms(m).ok());
}

TEST(BlockDiag, Examples) {
  QMatroid n2 = blockdiag_matroid(2, 4, 2);
  EXPECT_EQ(n2.rank(block_t1(2)), 1u);
  EXPECT_EQ(n2.rank(block_t2(2)), 1u);
  int l2 = 0, rank_one = 0;
  for (const Subspace& v : enumerate_subspaces(2, 4, 2)) {
    if (v == block_t1(2) || v == block_t2(2)) continue;
    ++l2;
    rank_one += n2.rank(v) == 1;
  }
  EXPECT_EQ(l2, 33);
  EXPECT_EQ(rank_one, 0);
  QMatroid n1 = blockdiag_matroid(2, 4, 1);
  int found = 0;
  for (const Subspace& v : enumerate_subspaces(2, 4, 2)) {
    if (v != block_t1(2) && v != block_t2(2) && n1.rank(v) == 1) ++found;
  }
  EXPECT_GT(found, 0);
}

TEST(BlockDiag, Errors) {
  EXPECT_EQ(CodeOf([] { blockdiag_matroid(2, 4, 0); }), Errc::kIndexNotInOmega);
  EXPECT_EQ(CodeOf([] { blockdiag_matroid(2, 4, 15); }), Errc::kIndexNotInOmega);
  EXPECT_EQ(CodeOf([] { blockdiag_matroid(3, 4, 40); }), Errc::kIndexNotInOmega);
  EXPECT_EQ(CodeOf([] { blockdiag_matroid(2, 1, 1); }), Errc::kIndexNotInOmega);
}

// Independence of 1, w, w^i, w^(i+1) over F_2 from the coefficient vectors,
// by elimination on bitmasks.
bool IndependentOverF2(std::int64_t i) {
  auto f = Field::make(2, 1, 4);
  std::vector<std::uint32_t> rows = {1, f->omega(), f->primitive_power(i), f->primitive_power(i + 1)};
  std::uint32_t r = 0;
  for (std::uint32_t bit = 0; bit < 4; ++bit) {
    auto it = std::find_if(rows.begin() + r, rows.end(), [&](std::uint32_t x) { return x >> bit & 1; });
    if (it == rows.end()) continue;
    std::swap(rows[r], *it);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != r && (rows[k] >> bit & 1)) rows[k] ^= rows[r];
    }
    ++r;
  }
  return r == 4;
}

TEST(BlockDiag, DependencyAgreesWithElimination) {
  int independent = 0;
  for (std::int64_t i = 1; i <= 14; ++i) {
    const auto dep = blockdiag_dependency(2, 4, i);
    EXPECT_EQ(!dep.has_value(), IndependentOverF2(i)) << i;
    independent += !dep.has_value();
    if (dep) {
      auto f = Field::make(2, 1, 4);
      const Elem b[4] = {1, f->omega(), f->primitive_power(i), f->primitive_power(i + 1)};
      Elem s = 0;
      for (int j = 0; j < 4; ++j) s ^= f->mul((*dep)[j], b[j]);
      EXPECT_EQ(s, 0u);
    }
  }
  EXPECT_GT(independent, 0);
  EXPECT_LT(independent, 14);
}

TEST(BlockDiag, VerifyAllIndicesBinary) {
  for (std::int64_t i = 1; i <= 14; ++i) {
    ReproReport r = verify_blockdiag(2, 4, i);
    ExpectAllPass(r);
    const bool dependent = blockdiag_dependency(2, 4, i).has_value();
    const Check* w = Find(r, "dependency gives");
    EXPECT_EQ(w != nullptr, dependent);
    if (w) {
      ASSERT_EQ(w->witnesses.size(), 1u);
      EXPECT_EQ(blockdiag_matroid(2, 4, i).rank(w->witnesses[0]), 1u);
    }
  }
  EXPECT_NE(Find(verify_blockdiag(2, 4, 1), "dependency gives"), nullptr);
}

TEST(BlockDiag, VerifyTernarySweep) {
  const auto omega = omega_index_set(*Field::make(3, 1, 4));
  EXPECT_EQ(omega.size(), 78u);
  for (std::int64_t i : omega) ExpectAllPass(verify_blockdiag(3, 4, i));
}

// 0, E, T1, T2 and the dim <= 2 spaces meeting T1 and T2 trivially, by sets.
std::set<oracle::VSet> ClosedFormOracle(std::uint32_t q) {
  oracle::Space sp{q, 4};
  const oracle::VSet t1 = sp.span({1, q}), t2 = sp.span({q * q, q * q * q});
  std::set<oracle::VSet> out;
  for (const oracle::VSet& v : sp.all()) {
    const std::uint32_t d = sp.dim(v);
    if (d == 4 || v == t1 || v == t2 ||
        (d <= 2 && oracle::Space::meet(v, t1).size() == 1 && oracle::Space::meet(v, t2).size() == 1)) {
      out.insert(v);
    }
  }
  return out;
}

TEST(FPrime, BinaryMatchesOracle) {
  FPrime fp = fprime(2, 4);
  ExpectAllPass(fp.report);
  std::set<oracle::VSet> got;
  for (const Subspace& v : fp.brute) got.insert(ToSet(v));
  EXPECT_EQ(got, ClosedFormOracle(2));
  EXPECT_EQ(fp.brute.size(), 19u);
  auto has = [&](const Subspace& v) {
    return std::find(fp.brute.begin(), fp.brute.end(), v) != fp.brute.end();
  };
  EXPECT_TRUE(has(S(2, 4, "1110")));
  EXPECT_FALSE(has(S(2, 4, "1000")));
  EXPECT_TRUE(has(block_t1(2)));
  EXPECT_TRUE(has(block_t2(2)));
}

TEST(FPrime, OtherParameters) {
  FPrime t = fprime(3, 4);
  ExpectAllPass(t.report);
  std::set<oracle::VSet> got;
  for (const Subspace& v : t.brute) got.insert(ToSet(v));
  EXPECT_EQ(got, ClosedFormOracle(3));
  ExpectAllPass(fprime(2, 5).report);
  EXPECT_EQ(CodeOf([] { fprime(2, 3); }), Errc::kExtensionTooSmall);
}

TEST(LinearNonCoproduct, Skeleton) {
  const auto start = std::chrono::steady_clock::now();
  ReproReport r = verify_thm_linear_noncoproduct(2, 4);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
  ExpectAllPass(r);
  const Check* cov = Find(r, "covers within F'");
  ASSERT_NE(cov, nullptr);
  EXPECT_EQ(cov->count, 19u);
  const Check* w = Find(r, "E does not cover");
  ASSERT_NE(w, nullptr);
  ASSERT_EQ(w->witnesses.size(), 2u);
  EXPECT_EQ(w->witnesses[0], S(2, 4, "1110"));
  EXPECT_TRUE(w->witnesses[1].contains(S(2, 4, "1110")));
  EXPECT_EQ(w->witnesses[1].dim(), 2u);
  EXPECT_EQ(meet(w->witnesses[1], block_t1(2)).dim(), 0u);
  EXPECT_EQ(meet(w->witnesses[1], block_t2(2)).dim(), 0u);
  const Check* iso = Find(r, "no rank-preserving");
  ASSERT_NE(iso, nullptr);
  EXPECT_EQ(iso->count, 20160u);
  ASSERT_NE(Find(r, "no cover of <1110>"), nullptr);
}

// Brute force over every table with 0 -> 0, filtered by the oracle's
// subspace test on all subspaces of the domain.
std::uint64_t CountLMapsOracle(std::uint32_t n1, std::uint32_t n2) {
  oracle::Space a{2, n1}, b{2, n2};
  const auto subs = a.all();
  std::uint64_t count = 0, total = 1;
  for (std::uint32_t i = 1; i < a.size(); ++i) total *= b.size();
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<std::uint32_t> table(a.size(), 0);
    std::uint64_t x = t;
    for (std::uint32_t i = 1; i < a.size(); ++i) {
      table[i] = static_cast<std::uint32_t>(x % b.size());
      x /= b.size();
    }
    bool ok = true;
    for (const auto& v : subs) {
      oracle::VSet img;
      for (auto e : v) img.insert(table[e]);
      std::vector<std::uint32_t> g(img.begin(), img.end());
      if (b.span(g) != img) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

TEST(ExtensionSearch, CountsAgreeWithOracle) {
  for (auto [n1, n2] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 3u}}) {
    ExtensionSearch s;
    s.n1 = n1;
    s.n2 = n2;
    s.fixed.assign(GroundSpace::get(2, n1).size(), std::nullopt);
    s.keep = 1u << 20;
    ExtensionResult fwd = search_lmap_extensions(s);
    s.reverse = true;
    ExtensionResult rev = search_lmap_extensions(s);
    const std::uint64_t want = CountLMapsOracle(n1, n2);
    EXPECT_EQ(fwd.solution_count, want) << n1 << " " << n2;
    EXPECT_EQ(rev.solution_count, want);
    EXPECT_EQ(fwd.solutions.size(), want);
    for (const LMap& m : fwd.solutions) EXPECT_TRUE(m.verified());
  }
}

TEST(ExtensionSearch, FixedValuesAndErrors) {
  ExtensionSearch s;
  s.n1 = 2;
  s.n2 = 2;
  s.fixed = {0, 1, 2, std::nullopt};  // e1 -> e1, e2 -> e2
  ExtensionResult r = search_lmap_extensions(s);
  EXPECT_EQ(r.free_vectors, 1u);
  ASSERT_EQ(r.solution_count, 1u);
  EXPECT_EQ(r.solutions[0], identity_map(2, 2));
  s.fixed = {1, std::nullopt, std::nullopt, std::nullopt};
  EXPECT_EQ(CodeOf([&] { search_lmap_extensions(s); }), Errc::kZeroNotFixed);
  s.fixed = {0, 1};
  EXPECT_EQ(CodeOf([&] { search_lmap_extensions(s); }), Errc::kInvalidArgument);
  s.fixed.assign(16, std::nullopt);
  s.n1 = 4;
  s.n2 = 4;
  s.max_nodes = 100;
  EXPECT_EQ(CodeOf([&] { search_lmap_extensions(s); }), Errc::kSearchBoundExceeded);
}

TEST(LeadingEntry, Values) {
  LMap a = leading_entry_map(2, 2, 3, 0);
  for (Vec v = 1; v < 4; ++v) EXPECT_EQ(a(v), 1u);
  EXPECT_EQ(a(0), 0u);
  LMap b = leading_entry_map(3, 2, 3, 1);
  const GroundSpace& g = GroundSpace::get(3, 2);
  EXPECT_EQ(b(g.parse("21")), GroundSpace::get(3, 3).parse("020"));
  EXPECT_EQ(b(g.parse("02")), GroundSpace::get(3, 3).parse("020"));
  EXPECT_EQ(b(g.parse("12")), GroundSpace::get(3, 3).parse("010"));
  EXPECT_FALSE(b.is_linear());
}

TEST(NonlinearNonCoproduct, Search) {
  const auto start = std::chrono::steady_clock::now();
  ReproReport r = verify_thm_nonlinear_noncoproduct(2);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 300.0);
  ExpectAllPass(r);
  const Check* none = Find(r, "no L-map eps");
  ASSERT_NE(none, nullptr);
  EXPECT_GT(none->count, 0u);
  EXPECT_NE(none->detail.find("9 free vectors"), std::string::npos) << none->detail;
  ASSERT_NE(Find(r, "sanity: with"), nullptr);
  ASSERT_NE(Find(r, "alpha1 strong"), nullptr);
  EXPECT_EQ(CodeOf([] { verify_thm_nonlinear_noncoproduct(3); }), Errc::kSearchBoundExceeded);
}

TEST(LClass, BothFields) {
  ExpectAllPass(verify_lclass_theorem(2));
  ReproReport t = verify_lclass_theorem(3);
  ExpectAllPass(t);
  EXPECT_NE(Find(t, "[diag(1,1)] != [diag(1,2)]"), nullptr);
  EXPECT_EQ(CodeOf([] { verify_lclass_theorem(5); }), Errc::kInvalidArgument);
}

TEST(Embeddings, BlockDiagonal) {
  auto f = Field::make(2, 1, 4);
  Mat row(f, 1, 2, {1, f->omega()});
  ExpectAllPass(verify_blockdiag_embeddings(row, row));
  ExpectAllPass(verify_blockdiag_embeddings(Mat::identity(f, 2), row));
  Mat bad(f, 2, 2, {1, f->omega(), 0, 0});
  EXPECT_EQ(CodeOf([&] { verify_blockdiag_embeddings(bad, row); }), Errc::kRankDeficientG);
  auto g9 = Field::make(3, 1, 2);
  Mat other(g9, 1, 2, {1, g9->omega()});
  EXPECT_EQ(CodeOf([&] { verify_blockdiag_embeddings(row, other); }), Errc::kFieldMismatch);
}

TEST(UniformDirsum, EqualsBlockDiag) {
  ReproReport r = verify_ex_uniform_dirsum(2, 4);
  ExpectAllPass(r);
  const Check* eq = Find(r, "sum and N(2) agree");
  ASSERT_NE(eq, nullptr);
  EXPECT_EQ(eq->count, 67u);
  ASSERT_NE(Find(r, "sum: rho(T2) = 1"), nullptr);
}

TEST(Registry, Items) {
  std::vector<std::string> ids;
  for (const ReproItem& it : repro_items()) ids.push_back(it.id);
  const std::vector<std::string> want = {"ex-2-2",  "prop-4-1", "prop-4-2", "lemma-4-3", "thm-4-5",
                                         "thm-4-6", "ex-5-5",   "thm-5-6",  "thm-6-1"};
  EXPECT_EQ(ids, want);
  EXPECT_EQ(CodeOf([] { run_repro("nope"); }), Errc::kInvalidArgument);
}

TEST(Registry, CheapItemsPassDeterministically) {
  for (const char* id : {"ex-2-2", "prop-4-1", "prop-4-2", "lemma-4-3", "ex-5-5", "thm-6-1"}) {
    ReproReport a = run_repro(id);
    ReproReport b = run_repro(id);
    EXPECT_EQ(a.id, id);
    ExpectAllPass(a);
    ASSERT_EQ(a.checks.checks.size(), b.checks.checks.size());
    for (std::size_t i = 0; i < a.checks.checks.size(); ++i) {
      EXPECT_EQ(a.checks.checks[i].name, b.checks.checks[i].name);
      EXPECT_EQ(a.checks.checks[i].detail, b.checks.checks[i].detail);
      EXPECT_EQ(a.checks.checks[i].count, b.checks.checks[i].count);
    }
  }
}

}  // namespace
}  // namespace qmat
