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

#include "qmat/field.h"

#include <map>
#include <mutex>
#include <utility>

#include "qmat/error.h"

namespace qmat {
namespace {

// Arithmetic tables for a small field F_q (q <= 2^16 in practice).
struct Tables {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> add, mul, neg, inv;

  std::uint32_t Add(std::uint32_t a, std::uint32_t b) const { return add[a * q + b]; }
  std::uint32_t Mul(std::uint32_t a, std::uint32_t b) const { return mul[a * q + b]; }
  std::uint32_t Sub(std::uint32_t a, std::uint32_t b) const { return add[a * q + neg[b]]; }
};

using Poly = std::vector<std::uint32_t>;

void Trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Tables PrimeTables(std::uint32_t p) {
  Tables t;
  t.p = p;
  t.q = p;
  t.add.resize(p * p);
  t.mul.resize(p * p);
  t.neg.resize(p);
  t.inv.assign(p, 0);
  for (std::uint32_t a = 0; a < p; ++a) {
    t.neg[a] = (p - a) % p;
    for (std::uint32_t b = 0; b < p; ++b) {
      t.add[a * p + b] = (a + b) % p;
      t.mul[a * p + b] = (a * b) % p;
      if ((a * b) % p == 1) t.inv[a] = b;
    }
  }
  return t;
}

// f mod g over t; g nonzero.
Poly PolyMod(Poly f, const Poly& g, const Tables& t) {
  Trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = t.inv[g.back()];
  while (f.size() > dg) {
    const std::uint32_t c = t.Mul(f.back(), lead_inv);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = t.Sub(f[shift + i], t.Mul(c, g[i]));
    }
    Trim(f);
  }
  return f;
}

Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& f, const Tables& t) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = t.Add(r[i + j], t.Mul(a[i], b[j]));
    }
  }
  return PolyMod(std::move(r), f, t);
}

Poly PolyPowMod(Poly base, std::uint64_t e, const Poly& f, const Tables& t) {
  Poly result = PolyMod(Poly{1}, f, t);
  base = PolyMod(std::move(base), f, t);
  while (e > 0) {
    if (e & 1) result = PolyMulMod(result, base, f, t);
    base = PolyMulMod(base, base, f, t);
    e >>= 1;
  }
  return result;
}

// Brute-force factor search over monic divisors of degree <= deg(f)/2.
bool Irreducible(const Poly& f, const Tables& t) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= t.q;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      std::uint64_t x = lower;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % t.q);
        x /= t.q;
      }
      if (PolyMod(f, g, t).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> PrimeFactors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Order of x modulo an irreducible f is q^deg - 1 exactly when no maximal
// proper divisor of the group order kills it.
bool Primitive(const Poly& f, const Tables& t) {
  const std::size_t deg = f.size() - 1;
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < deg; ++i) order *= t.q;
  const std::uint64_t group = order - 1;
  const Poly x = {0, 1};
  const Poly one = PolyMod(Poly{1}, f, t);
  if (PolyPowMod(x, group, f, t) != one) return false;
  for (std::uint64_t r : PrimeFactors(group)) {
    if (PolyPowMod(x, group / r, f, t) == one) return false;
  }
  return true;
}

// F_p[x]/(f) for an irreducible monic f of degree k.
Tables ExtensionTables(std::uint32_t p, const Poly& f) {
  const Tables fp = PrimeTables(p);
  const std::size_t k = f.size() - 1;
  std::uint32_t q = 1;
  for (std::size_t i = 0; i < k; ++i) q *= p;
  auto decode = [&](std::uint32_t code) {
    Poly a(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = code % p;
      code /= p;
    }
    Trim(a);
    return a;
  };
  auto encode = [&](const Poly& a) {
    std::uint32_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
  };
  Tables t;
  t.p = p;
  t.q = q;
  t.add.resize(std::size_t{q} * q);
  t.mul.resize(std::size_t{q} * q);
  t.neg.resize(q);
  t.inv.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly pa = decode(a);
    Poly na(k, 0);
    for (std::size_t i = 0; i < pa.size(); ++i) na[i] = fp.neg[pa[i]];
    Trim(na);
    t.neg[a] = encode(na);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly pb = decode(b);
      Poly s(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t ai = i < pa.size() ? pa[i] : 0;
        const std::uint32_t bi = i < pb.size() ? pb[i] : 0;
        s[i] = fp.Add(ai, bi);
      }
      Trim(s);
      t.add[a * q + b] = encode(s);
      const std::uint32_t prod = encode(PolyMulMod(pa, pb, f, fp));
      t.mul[a * q + b] = prod;
      if (prod == 1) t.inv[a] = b;
    }
  }
  return t;
}

Tables BaseTablesFor(std::uint32_t p, const Poly& base_modulus) {
  if (base_modulus.size() == 2) return PrimeTables(p);
  return ExtensionTables(p, base_modulus);
}

std::uint64_t IntPow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

// First primitive monic polynomial of degree m over t, ordered by the integer
// value of its little-endian lower coefficients.
Poly FirstPrimitive(const Tables& t, std::uint32_t m) {
  const std::uint64_t count = IntPow(t.q, m);
  Poly f(m + 1, 0);
  f[m] = 1;
  for (std::uint64_t lower = 0; lower < count; ++lower) {
    std::uint64_t x = lower;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(x % t.q);
      x /= t.q;
    }
    if (Irreducible(f, t) && Primitive(f, t)) return f;
  }
  return {};
}

struct DefaultEntry {
  std::uint32_t p;
  std::uint32_t m;
  std::vector<std::uint32_t> modulus;
};

// Primitive moduli over prime fields; each entry is the first primitive
// polynomial in the FirstPrimitive order (cross-checked by the unit tests).
const std::vector<DefaultEntry>& PrimeFieldTable() {
  static const std::vector<DefaultEntry> table = {
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 0, 0, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {3, 2, {2, 1, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 1, 0, 0, 1}},
      {5, 2, {2, 1, 1}},
      {7, 2, {3, 1, 1}},
  };
  return table;
}

Poly PrimeFieldDefault(std::uint32_t p, std::uint32_t m) {
  for (const auto& e : PrimeFieldTable()) {
    if (e.p == p && e.m == m) return e.modulus;
  }
  return FirstPrimitive(PrimeTables(p), m);
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::optional<Moduli> Field::default_moduli(std::uint32_t p, std::uint32_t k,
                                            std::uint32_t m) {
  if (!is_prime(p) || k == 0 || m == 0) return std::nullopt;
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k * m; ++i) {
    order *= p;
    if (order > kMaxOrder) return std::nullopt;
  }
  Moduli mod;
  mod.base = k == 1 ? Poly{0, 1} : PrimeFieldDefault(p, k);
  if (m == 1) {
    // x - g for the smallest primitive element g of F_q, so w = g.
    const Tables t = BaseTablesFor(p, mod.base);
    for (std::uint32_t g = 1; g < t.q; ++g) {
      std::uint32_t x = g;
      std::uint32_t ord = 1;
      while (x != 1) {
        x = t.Mul(x, g);
        ++ord;
      }
      if (ord == t.q - 1) {
        mod.ext = {t.neg[g], 1};
        break;
      }
    }
  } else if (k == 1) {
    mod.ext = PrimeFieldDefault(p, m);
  } else {
    mod.ext = FirstPrimitive(BaseTablesFor(p, mod.base), m);
  }
  if (mod.ext.empty()) return std::nullopt;
  return mod;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t k,
                                         std::uint32_t m,
                                         std::optional<Moduli> moduli) {
  if (!is_prime(p)) {
    throw Error(Errc::kNonPrimeCharacteristic,
                "characteristic " + std::to_string(p) + " is not prime");
  }
  if (k == 0 || m == 0) {
    throw Error(Errc::kInvalidArgument, "degrees must be positive");
  }
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k * m; ++i) {
    order *= p;
    if (order > kMaxOrder) {
      throw Error(moduli ? Errc::kFieldTooLarge : Errc::kNoDefaultModulus,
                  "field order exceeds 2^20");
    }
  }
  if (!moduli) {
    moduli = default_moduli(p, k, m);
    if (!moduli) throw Error(Errc::kNoDefaultModulus, "no default modulus");
  }
  // Prime base fields carry the identity modulus x.
  if (k == 1 && moduli->base.empty()) moduli->base = {0, 1};
  return std::shared_ptr<const Field>(new Field(p, k, m, std::move(*moduli)));
}

std::shared_ptr<const Field> Field::base_field(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  std::uint32_t p = 2;
  while (p <= q && q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint32_t rest = q;
  while (rest > 1 && rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (q < 2 || rest != 1) {
    throw Error(Errc::kNonPrimeCharacteristic,
                std::to_string(q) + " is not a prime power");
  }
  auto field = make(p, k, 1);
  cache.emplace(q, field);
  return field;
}

Field::Field(std::uint32_t p, std::uint32_t k, std::uint32_t m, Moduli moduli)
    : p_(p), k_(k), m_(m), moduli_(std::move(moduli)) {
  Poly& base = moduli_.base;
  Poly& ext = moduli_.ext;
  Trim(base);
  Trim(ext);
  if (base.size() != k + 1 || base.back() != 1) {
    throw Error(Errc::kInvalidArgument, "base modulus must be monic of degree k");
  }
  if (ext.size() != m + 1 || ext.back() != 1) {
    throw Error(Errc::kInvalidArgument,
                "extension modulus must be monic of degree m");
  }
  for (std::uint32_t c : base) {
    if (c >= p) throw Error(Errc::kInvalidArgument, "base coefficient out of range");
  }
  const Tables fp = PrimeTables(p);
  if (k > 1 && !Irreducible(base, fp)) {
    throw Error(Errc::kReducibleModulus, "base modulus is reducible over F_p");
  }
  const Tables fq = BaseTablesFor(p, base);
  q_ = fq.q;
  for (std::uint32_t c : ext) {
    if (c >= q_) {
      throw Error(Errc::kInvalidArgument, "extension coefficient out of range");
    }
  }
  if (!Irreducible(ext, fq)) {
    throw Error(Errc::kReducibleModulus, "extension modulus is reducible over F_q");
  }
  base_add_ = fq.add;
  base_neg_ = fq.neg;

  order_ = static_cast<std::uint32_t>(IntPow(q_, m));
  // Antilog table by repeated multiplication with x.
  exp_.assign(order_ - 1, 0);
  log_.assign(order_, 0);
  std::vector<std::uint32_t> digits(m, 0);
  std::vector<std::uint32_t> neg_low(m);
  for (std::uint32_t i = 0; i < m; ++i) neg_low[i] = fq.neg[ext[i]];
  digits[0] = 1;
  auto encode = [&]() {
    std::uint32_t code = 0;
    for (std::uint32_t i = m; i-- > 0;) code = code * q_ + digits[i];
    return code;
  };
  std::vector<bool> seen(order_, false);
  for (std::uint32_t e = 0; e + 1 < order_; ++e) {
    const std::uint32_t code = encode();
    if (code == 0 || seen[code]) {
      throw Error(Errc::kNonPrimitiveModulus,
                  "x has multiplicative order " + std::to_string(e));
    }
    seen[code] = true;
    exp_[e] = code;
    log_[code] = e;
    const std::uint32_t top = digits[m - 1];
    for (std::uint32_t i = m - 1; i > 0; --i) digits[i] = digits[i - 1];
    digits[0] = 0;
    if (top != 0) {
      for (std::uint32_t i = 0; i < m; ++i) {
        digits[i] = fq.Add(digits[i], fq.Mul(top, neg_low[i]));
      }
    }
  }
  if (encode() != 1) {
    throw Error(Errc::kNonPrimitiveModulus, "x does not generate GF(q^m)*");
  }
}

std::string Field::name() const {
  std::string base = k_ == 1 ? std::to_string(p_)
                            : "(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
  if (m_ == 1 && k_ == 1) return "GF(" + std::to_string(p_) + ")";
  if (m_ == 1) return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
  return "GF(" + base + "^" + std::to_string(m_) + ")";
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return base_add_[a * q_ + b];
  Elem out = 0;
  Elem scale = 1;
  while (a != 0 || b != 0) {
    out += base_add_[(a % q_) * q_ + (b % q_)] * scale;
    a /= q_;
    b /= q_;
    scale *= q_;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return base_neg_[a];
  Elem out = 0;
  Elem scale = 1;
  while (a != 0) {
    out += base_neg_[a % q_] * scale;
    a /= q_;
    scale *= q_;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::kDivisionByZero, "inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : order_ - 1 - l];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw Error(Errc::kDivisionByZero, "negative power of zero");
  }
  const std::int64_t n = order_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

Elem Field::primitive_power(std::int64_t i) const {
  const std::int64_t n = order_ - 1;
  std::int64_t r = i % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw Error(Errc::kDivisionByZero, "log of zero");
  return log_[a];
}

Elem Field::frobenius(Elem a, std::uint32_t j) const {
  if (a == 0) return 0;
  const std::uint64_t n = order_ - 1;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < j; ++i) e = (e * p_) % n;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * e) % n];
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> out(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = a % q_;
    a /= q_;
  }
  return out;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > m_) {
    throw Error(Errc::kInvalidArgument, "too many coefficients for " + name());
  }
  Elem code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= q_) {
      throw Error(Errc::kInvalidArgument, "coefficient out of range for " + name());
    }
    code = code * q_ + coeffs[i];
  }
  return code;
}

bool Field::operator==(const Field& other) const {
  return p_ == other.p_ && k_ == other.k_ && m_ == other.m_ &&
         moduli_.base == other.moduli_.base && moduli_.ext == other.moduli_.ext;
}

std::vector<std::int64_t> omega_index_set(const Field& field) {
  if (field.ext_degree() < 2) {
    throw Error(Errc::kExtensionRequired, "index set needs m >= 2");
  }
  const std::int64_t order = field.order();
  const std::int64_t step = (order - 1) / (field.q() - 1);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i <= order - 2; ++i) {
    if (i % step != 0) out.push_back(i);
  }
  return out;
}

FieldElem::FieldElem(FieldPtr field, Elem value)
    : field_(std::move(field)), value_(value) {
  if (value_ >= field_->order()) {
    throw Error(Errc::kInvalidArgument, "element code out of range");
  }
}

namespace {
void CheckSame(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field())) {
    throw Error(Errc::kFieldMismatch,
                a.field()->name() + " vs " + b.field()->name());
  }
}
}  // namespace

FieldElem FieldElem::inv() const { return {field_, field_->inv(value_)}; }
FieldElem FieldElem::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElem FieldElem::operator-() const { return {field_, field_->neg(value_)}; }

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  CheckSame(a, b);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  CheckSame(a, b);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  CheckSame(a, b);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  CheckSame(a, b);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}
bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.value_ == b.value_ &&
         (a.field_ == b.field_ || *a.field_ == *b.field_);
}

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::kReducibleModulus: return "ReducibleModulus";
    case Errc::kNonPrimitiveModulus: return "NonPrimitiveModulus";
    case Errc::kNoDefaultModulus: return "NoDefaultModulus";
    case Errc::kFieldTooLarge: return "FieldTooLarge";
    case Errc::kFieldMismatch: return "FieldMismatch";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kExtensionRequired: return "ExtensionRequired";
    case Errc::kAmbientMismatch: return "AmbientMismatch";
    case Errc::kEnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::kBadRankBound: return "BadRankBound";
    case Errc::kRankDeficientG: return "RankDeficientG";
    case Errc::kIncompleteTable: return "IncompleteTable";
    case Errc::kAxiomViolation: return "AxiomViolation";
    case Errc::kFlatAxiomViolation: return "FlatAxiomViolation";
    case Errc::kSearchBoundExceeded: return "SearchBoundExceeded";
    case Errc::kNotAnLMap: return "NotAnLMap";
    case Errc::kZeroNotFixed: return "ZeroNotFixed";
    case Errc::kNotBijective: return "NotBijective";
    case Errc::kTauNotNormalized: return "TauNotNormalized";
    case Errc::kTauNotMonotone: return "TauNotMonotone";
    case Errc::kTauNotSubmodular: return "TauNotSubmodular";
    case Errc::kAlphaNotWeak: return "AlphaNotWeak";
    case Errc::kAlphaNotLinear: return "AlphaNotLinear";
    case Errc::kIndexNotInOmega: return "IndexNotInOmega";
    case Errc::kExtensionTooSmall: return "ExtensionTooSmall";
    case Errc::kParseError: return "ParseError";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qmat
