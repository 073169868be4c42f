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

#include <set>
#include <vector>

#include "qmat/error.h"
#include "qmat/field.h"

namespace qmat {
namespace {

// Naive polynomial arithmetic over F_p, used as an oracle for the order of x.
using P = std::vector<int>;

P Reduce(P f, const P& g, int p) {
  while (f.size() >= g.size()) {
    const int c = f.back();  // g is monic
    const std::size_t s = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[s + i] = ((f[s + i] - c * g[i]) % p + p) % p;
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f;
}

int OrderOfX(const P& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  int total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  P cur = {1};
  for (int e = 1; e < total; ++e) {
    P next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    cur = Reduce(next, f, p);
    if (cur == P{1}) return e;
    if (cur.empty()) return 0;
  }
  return -1;
}

P FirstPrimitiveOracle(int p, int m) {
  int count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (int low = 0; low < count; ++low) {
    P f(m + 1, 0);
    int x = low;
    for (int i = 0; i < m; ++i) {
      f[i] = x % p;
      x /= p;
    }
    f[m] = 1;
    if (OrderOfX(f, p) == count - 1) return f;
  }
  return {};
}

Errc CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInvalidArgument;  // sentinel: nothing thrown
}

TEST(Field, Gf16DefaultModulus) {
  auto f = Field::make(2, 1, 4);
  EXPECT_EQ(f->moduli().ext, (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(f->order(), 16u);
  EXPECT_EQ(f->omega(), 2u);
  EXPECT_EQ(OrderOfX({1, 1, 0, 0, 1}, 2), 15);
  Elem w = f->omega();
  int order = 1;
  for (Elem x = w; x != 1; x = f->mul(x, w)) ++order;
  EXPECT_EQ(order, 15);
}

TEST(Field, Gf2OmegaIsOne) {
  auto f = Field::make(2, 1, 1);
  EXPECT_EQ(f->order(), 2u);
  EXPECT_EQ(f->omega(), 1u);
}

TEST(Field, NonPrimitiveModulusRejected) {
  EXPECT_EQ(OrderOfX({1, 1, 1, 1, 1}, 2), 5);
  EXPECT_EQ(CodeOf([] { Field::make(2, 1, 4, Moduli{{0, 1}, {1, 1, 1, 1, 1}}); }),
            Errc::kNonPrimitiveModulus);
}

TEST(Field, ConstructionErrors) {
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2
  EXPECT_EQ(CodeOf([] { Field::make(2, 1, 4, Moduli{{0, 1}, {1, 0, 1, 0, 1}}); }),
            Errc::kReducibleModulus);
  EXPECT_EQ(CodeOf([] { Field::make(4, 1, 2); }), Errc::kNonPrimeCharacteristic);
  EXPECT_EQ(CodeOf([] { Field::make(2, 1, 21); }), Errc::kNoDefaultModulus);
  EXPECT_EQ(CodeOf([] { Field::make(2, 2, 2, Moduli{{1, 0, 1}, {2, 1, 1}}); }),
            Errc::kReducibleModulus);
}

TEST(Field, Gf16Arithmetic) {
  auto f = Field::make(2, 1, 4);
  const Elem w = f->omega();
  const Elem w3 = f->pow(w, 3);
  EXPECT_EQ(w3, 8u);
  EXPECT_EQ(f->mul(w3, w), 3u);  // w + 1
  EXPECT_EQ(f->pow(w, 15), 1u);
  EXPECT_EQ(f->primitive_power(0), 1u);
  EXPECT_EQ(f->primitive_power(4), 3u);
  EXPECT_EQ(f->primitive_power(-1), f->pow(w, 14));
  EXPECT_EQ(f->mul(f->primitive_power(-1), w), 1u);
  EXPECT_EQ(f->primitive_power(5), 6u);  // w^2 + w
  for (Elem a = 0; a < 16; ++a) EXPECT_EQ(f->add(a, a), 0u);
  EXPECT_TRUE(f->in_base_field(1));
  EXPECT_FALSE(f->in_base_field(w));
  EXPECT_FALSE(f->in_base_field(f->primitive_power(5)));
  EXPECT_EQ(CodeOf([&] { f->inv(0); }), Errc::kDivisionByZero);
}

TEST(Field, PrimeFieldOmegaIsSmallestGenerator) {
  EXPECT_EQ(Field::make(3, 1, 1)->omega(), 2u);
  EXPECT_EQ(Field::make(5, 1, 1)->omega(), 2u);
  EXPECT_EQ(Field::make(7, 1, 1)->omega(), 3u);
  EXPECT_EQ(Field::make(13, 1, 1)->omega(), 2u);
}

TEST(Field, DefaultTableMatchesFirstPrimitiveSearch) {
  const std::vector<std::pair<int, int>> cases = {
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
      {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}, {2, 9}, {5, 3}, {11, 2}};
  for (auto [p, m] : cases) {
    auto mod = Field::default_moduli(p, 1, m);
    ASSERT_TRUE(mod) << p << "^" << m;
    const P oracle = FirstPrimitiveOracle(p, m);
    EXPECT_EQ(std::vector<int>(mod->ext.begin(), mod->ext.end()), oracle) << p << "^" << m;
  }
  EXPECT_EQ(Field::make(3, 1, 2)->moduli().ext, (std::vector<std::uint32_t>{2, 1, 1}));
  EXPECT_EQ(Field::make(2, 1, 8)->moduli().ext,
            (std::vector<std::uint32_t>{1, 0, 1, 1, 1, 0, 0, 0, 1}));
}

void CheckAxioms(const Field& f) {
  const Elem n = f.order();
  for (Elem a = 0; a < n; ++a) {
    EXPECT_EQ(f.add(a, 0), a);
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    if (a != 0) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
    for (Elem b = 0; b < n; ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      for (Elem c = 0; c < n; ++c) {
        ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST(Field, AxiomsExhaustive) {
  CheckAxioms(*Field::make(2, 1, 4));
  CheckAxioms(*Field::make(3, 1, 2));
  CheckAxioms(*Field::make(2, 2, 2));
  CheckAxioms(*Field::make(5, 1, 2));
  CheckAxioms(*Field::make(3, 1, 3));
  CheckAxioms(*Field::make(2, 1, 6));
}

TEST(Field, BaseFieldMembershipAgreesWithFrobenius) {
  for (auto f : {Field::make(2, 1, 4), Field::make(3, 1, 2), Field::make(3, 1, 4),
                 Field::make(2, 2, 2), Field::make(2, 2, 3), Field::make(3, 2, 2)}) {
    int in_base = 0;
    for (Elem a = 0; a < f->order(); ++a) {
      EXPECT_EQ(f->in_base_field(a), f->frobenius_fixed(a)) << f->name() << " " << a;
      in_base += f->in_base_field(a);
    }
    EXPECT_EQ(in_base, static_cast<int>(f->q()));
  }
}

TEST(Field, TowerSubfieldMatchesBaseField) {
  auto big = Field::make(2, 2, 3);
  auto small = Field::base_field(4);
  EXPECT_EQ(big->q(), 4u);
  EXPECT_EQ(big->order(), 64u);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      EXPECT_EQ(big->add(a, b), small->add(a, b));
      EXPECT_EQ(big->mul(a, b), small->mul(a, b));
    }
  }
  // w of F_4 inside F_64 is x with x^2 = x + 1.
  EXPECT_EQ(small->mul(2, 2), 3u);
}

TEST(Field, Frobenius) {
  auto f = Field::make(2, 1, 4);
  for (Elem a = 0; a < 16; ++a) {
    EXPECT_EQ(f->frobenius(a, 1), f->mul(a, a));
    EXPECT_EQ(f->frobenius(a, 4), a);
  }
}

std::vector<std::int64_t> OmegaOracle(std::int64_t q, std::int64_t m) {
  std::int64_t order = 1;
  for (int i = 0; i < m; ++i) order *= q;
  std::set<std::int64_t> removed;
  for (std::int64_t k = 1; k * (order - 1) / (q - 1) <= order - 2; ++k) {
    removed.insert(k * (order - 1) / (q - 1));
  }
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i <= order - 2; ++i) {
    if (!removed.count(i)) out.push_back(i);
  }
  return out;
}

TEST(Field, OmegaIndexSet) {
  auto f16 = Field::make(2, 1, 4);
  std::vector<std::int64_t> expect16;
  for (int i = 1; i <= 14; ++i) expect16.push_back(i);
  EXPECT_EQ(omega_index_set(*f16), expect16);
  EXPECT_EQ(omega_index_set(*Field::make(3, 1, 2)),
            (std::vector<std::int64_t>{1, 2, 3, 5, 6, 7}));
  for (auto f : {Field::make(3, 1, 4), Field::make(2, 2, 2), Field::make(5, 1, 2)}) {
    const auto omega = omega_index_set(*f);
    EXPECT_EQ(omega, OmegaOracle(f->q(), f->ext_degree()));
    for (auto i : omega) EXPECT_FALSE(f->in_base_field(f->primitive_power(i)));
  }
  EXPECT_EQ(CodeOf([] { omega_index_set(*Field::make(2, 1, 1)); }), Errc::kExtensionRequired);
}

TEST(Field, ElementWrapper) {
  auto f = Field::make(2, 1, 4);
  FieldElem w(f, f->omega());
  EXPECT_EQ((w * w * w * w).value(), 3u);
  EXPECT_EQ((w / w).value(), 1u);
  EXPECT_EQ((w + w).value(), 0u);
  EXPECT_EQ(w.pow(-1) * w, FieldElem(f, 1));
  FieldElem other(Field::make(2, 1, 2), 1);
  EXPECT_EQ(CodeOf([&] { (void)(w + other); }), Errc::kFieldMismatch);
}

TEST(Field, Coefficients) {
  auto f = Field::make(3, 1, 2);
  for (Elem a = 0; a < 9; ++a) {
    const auto c = f->coefficients(a);
    EXPECT_EQ(f->from_coefficients(c), a);
  }
}

}  // namespace
}  // namespace qmat
