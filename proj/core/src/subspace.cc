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

#include "qmat/subspace.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <utility>

#include "qmat/error.h"

namespace qmat {
namespace {

std::atomic<std::uint64_t> g_max_vectors{std::uint64_t{1} << 16};
std::atomic<std::uint64_t> g_max_subspaces{10'000'000};

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

std::uint64_t IntPow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r = SatMul(r, b);
  return r;
}

void CheckEnumeration(std::uint32_t q, std::uint32_t n, std::uint64_t count) {
  const Caps c = caps();
  if (IntPow(q, n) > c.max_vectors) {
    throw Error(Errc::kEnumerationCapExceeded,
                std::to_string(q) + "^" + std::to_string(n) + " vectors exceeds cap");
  }
  if (count > c.max_subspaces) {
    throw Error(Errc::kEnumerationCapExceeded,
                std::to_string(count) + " subspaces exceeds cap");
  }
}

}  // namespace

Caps caps() { return {g_max_vectors.load(), g_max_subspaces.load()}; }

void set_caps(const Caps& c) {
  if (c.max_vectors == 0 || c.max_subspaces == 0) {
    throw Error(Errc::kInvalidArgument, "caps must be positive");
  }
  g_max_vectors.store(c.max_vectors);
  g_max_subspaces.store(c.max_subspaces);
}

// ----- GroundSpace -----

const GroundSpace& GroundSpace::get(std::uint32_t q, std::uint32_t n) {
  thread_local const GroundSpace* last = nullptr;
  if (last != nullptr && last->q_ == q && last->n_ == n) return *last;
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>,
                  std::unique_ptr<GroundSpace>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{q, n}];
  if (!slot) slot.reset(new GroundSpace(q, n));
  last = slot.get();
  return *last;
}

GroundSpace::GroundSpace(std::uint32_t q, std::uint32_t n)
    : q_(q), n_(n), field_(Field::base_field(q)) {
  size_ = IntPow(q, n);
  if (size_ > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::kEnumerationCapExceeded, "vector codes exceed 32 bits");
  }
  pow_.resize(n + 1);
  pow_[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) pow_[i] = pow_[i - 1] * q;
}

Vec GroundSpace::with_digit(Vec v, std::uint32_t i, std::uint32_t d) const {
  return v - digit(v, i) * pow_[i] + d * pow_[i];
}

std::vector<std::uint32_t> GroundSpace::digits(Vec v) const {
  std::vector<std::uint32_t> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = v % q_;
    v /= q_;
  }
  return out;
}

Vec GroundSpace::from_digits(std::span<const std::uint32_t> d) const {
  Vec v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * q_ + d[i];
  return v;
}

Vec GroundSpace::add(Vec a, Vec b) const {
  if (q_ == 2) return a ^ b;
  Vec out = 0;
  for (std::uint32_t i = 0; i < n_ && (a | b) != 0; ++i) {
    out += field_->add(a % q_, b % q_) * pow_[i];
    a /= q_;
    b /= q_;
  }
  return out;
}

Vec GroundSpace::scale(Elem c, Vec v) const {
  if (c == 0) return 0;
  if (c == 1) return v;
  Vec out = 0;
  for (std::uint32_t i = 0; i < n_ && v != 0; ++i) {
    out += field_->mul(c, v % q_) * pow_[i];
    v /= q_;
  }
  return out;
}

Elem GroundSpace::dot(Vec a, Vec b) const {
  if (q_ == 2) return std::popcount(a & b) & 1u;
  Elem s = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    s = field_->add(s, field_->mul(a % q_, b % q_));
    a /= q_;
    b /= q_;
  }
  return s;
}

std::uint32_t GroundSpace::pivot(Vec v) const {
  if (v == 0) return n_;
  if (q_ == 2) return static_cast<std::uint32_t>(std::countr_zero(v));
  std::uint32_t i = 0;
  while (v % q_ == 0) {
    v /= q_;
    ++i;
  }
  return i;
}

Vec GroundSpace::normalize(Vec v) const {
  if (v == 0 || q_ == 2) return v;
  return scale(field_->inv(digit(v, pivot(v))), v);
}

std::string GroundSpace::to_string(Vec v) const {
  std::string s;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (q_ > 9 && i > 0) s += '.';
    s += std::to_string(digit(v, i));
  }
  return s;
}

Vec GroundSpace::parse(std::string_view s) const {
  std::vector<std::uint32_t> d;
  if (q_ > 9) {
    std::size_t start = 0;
    while (start <= s.size()) {
      const std::size_t dot = std::min(s.find('.', start), s.size());
      const std::string_view tok = s.substr(start, dot - start);
      if (tok.empty()) throw Error(Errc::kParseError, "empty digit in vector");
      std::uint32_t x = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw Error(Errc::kParseError, "bad digit in vector");
        x = x * 10 + static_cast<std::uint32_t>(ch - '0');
      }
      d.push_back(x);
      start = dot + 1;
    }
  } else {
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw Error(Errc::kParseError, "bad digit in vector");
      d.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
  }
  if (d.size() != n_) {
    throw Error(Errc::kParseError, "vector '" + std::string(s) + "' has wrong length");
  }
  for (std::uint32_t x : d) {
    if (x >= q_) throw Error(Errc::kParseError, "digit out of range in vector");
  }
  return from_digits(d);
}

// ----- Subspace -----

Subspace Subspace::zero(std::uint32_t q, std::uint32_t n) {
  Subspace s;
  s.q_ = q;
  s.n_ = n;
  return s;
}

Subspace Subspace::full(std::uint32_t q, std::uint32_t n) {
  const GroundSpace& g = GroundSpace::get(q, n);
  Subspace s = zero(q, n);
  for (std::uint32_t i = 0; i < n; ++i) s.rows_.push_back(g.unit(i));
  return s;
}

Subspace Subspace::from_rref_rows(std::uint32_t q, std::uint32_t n,
                                  std::vector<Vec> rows) {
  Subspace s = zero(q, n);
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::span(std::uint32_t q, std::uint32_t n,
                        std::span<const Vec> vectors) {
  const GroundSpace& g = GroundSpace::get(q, n);
  Subspace s = zero(q, n);
  std::vector<std::uint32_t> piv;
  for (Vec v : vectors) {
    if (v >= g.size()) throw Error(Errc::kAmbientMismatch, "vector outside F_q^n");
    Vec r = s.reduce(v);
    if (r == 0) continue;
    r = g.normalize(r);
    const std::uint32_t p = g.pivot(r);
    for (Vec& row : s.rows_) {
      const std::uint32_t c = g.digit(row, p);
      if (c != 0) row = g.sub(row, g.scale(c, r));
    }
    const auto pos = std::lower_bound(piv.begin(), piv.end(), p) - piv.begin();
    piv.insert(piv.begin() + pos, p);
    s.rows_.insert(s.rows_.begin() + pos, r);
    if (s.rows_.size() == n) break;
  }
  return s;
}

Subspace Subspace::row_space(const Mat& m) {
  if (m.field()->ext_degree() != 1) {
    throw Error(Errc::kInvalidArgument, "row space needs a matrix over F_q");
  }
  const std::uint32_t q = m.field()->q();
  const std::uint32_t n = static_cast<std::uint32_t>(m.cols());
  const GroundSpace& g = GroundSpace::get(q, n);
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    vs.push_back(g.from_digits(m.row(i)));
  }
  return span(q, n, vs);
}

Subspace Subspace::parse(std::uint32_t q, std::uint32_t n, std::string_view s) {
  const GroundSpace& g = GroundSpace::get(q, n);
  std::vector<Vec> vs;
  std::size_t start = 0;
  while (start < s.size()) {
    const std::size_t comma = std::min(s.find(',', start), s.size());
    std::string_view tok = s.substr(start, comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    vs.push_back(g.parse(tok));
    start = comma + 1;
  }
  return span(q, n, vs);
}

std::vector<std::uint32_t> Subspace::pivots() const {
  const GroundSpace& g = ground();
  std::vector<std::uint32_t> out;
  out.reserve(rows_.size());
  for (Vec r : rows_) out.push_back(g.pivot(r));
  return out;
}

std::uint64_t Subspace::pivot_mask() const {
  std::uint64_t m = 0;
  for (std::uint32_t p : pivots()) m |= std::uint64_t{1} << p;
  return m;
}

bool Subspace::contains(const Subspace& v) const {
  check_same_ambient(*this, v);
  if (v.dim() > dim()) return false;
  for (Vec r : v.rows_) {
    if (!contains(r)) return false;
  }
  return true;
}

Vec Subspace::reduce(Vec v) const {
  if (rows_.empty() || v == 0) return v;
  const GroundSpace& g = ground();
  if (q_ == 2) {
    for (Vec r : rows_) {
      if ((v >> std::countr_zero(r)) & 1u) v ^= r;
    }
    return v;
  }
  for (Vec r : rows_) {
    const std::uint32_t c = g.digit(v, g.pivot(r));
    if (c != 0) v = g.sub(v, g.scale(c, r));
  }
  return v;
}

std::vector<std::uint32_t> Subspace::coordinates(Vec v) const {
  const GroundSpace& g = ground();
  std::vector<std::uint32_t> out;
  out.reserve(rows_.size());
  for (Vec r : rows_) out.push_back(g.digit(v, g.pivot(r)));
  return out;
}

Vec Subspace::combine(std::span<const std::uint32_t> coeffs) const {
  const GroundSpace& g = ground();
  Vec v = 0;
  for (std::size_t i = 0; i < rows_.size() && i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) v = g.axpy(v, coeffs[i], rows_[i]);
  }
  return v;
}

std::vector<Vec> Subspace::vectors() const {
  const GroundSpace& g = ground();
  const std::uint64_t count = IntPow(q_, dim());
  std::vector<Vec> out(count, 0);
  // out[i + c q^j] = out[i] + c row_j for i < q^j.
  std::uint64_t block = 1;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    for (std::uint32_t c = 1; c < q_; ++c) {
      const Vec step = g.scale(c, rows_[j]);
      for (std::uint64_t i = 0; i < block; ++i) {
        out[i + c * block] = g.add(out[i], step);
      }
    }
    block *= q_;
  }
  return out;
}

Mat Subspace::basis_matrix() const {
  const GroundSpace& g = ground();
  Mat m(g.field_ptr(), rows_.size(), n_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) m.at(i, j) = g.digit(rows_[i], j);
  }
  return m;
}

std::string Subspace::to_string() const {
  const GroundSpace& g = ground();
  std::string s = "<";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) s += ',';
    s += g.to_string(rows_[i]);
  }
  return s + ">";
}

std::size_t Subspace::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t{q_} << 32) ^ n_;
  for (Vec r : rows_) {
    h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool Subspace::operator<(const Subspace& o) const {
  if (q_ != o.q_) return q_ < o.q_;
  if (n_ != o.n_) return n_ < o.n_;
  if (dim() != o.dim()) return dim() < o.dim();
  const std::uint64_t a = pivot_mask();
  const std::uint64_t b = o.pivot_mask();
  if (a != b) return a < b;
  const GroundSpace& g = ground();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == o.rows_[i]) continue;
    for (std::uint32_t j = 0; j < n_; ++j) {
      const std::uint32_t x = g.digit(rows_[i], j);
      const std::uint32_t y = g.digit(o.rows_[i], j);
      if (x != y) return x < y;
    }
  }
  return false;
}

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.q() != b.q() || a.n() != b.n()) {
    throw Error(Errc::kAmbientMismatch,
                "F_" + std::to_string(a.q()) + "^" + std::to_string(a.n()) + " vs F_" +
                    std::to_string(b.q()) + "^" + std::to_string(b.n()));
  }
}

Subspace join(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (a.dim() == a.n() || b.dim() == 0) return a;
  if (b.dim() == b.n() || a.dim() == 0) return b;
  std::vector<Vec> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.q(), a.n(), vs);
}

Subspace perp(const Subspace& a) {
  const GroundSpace& g = a.ground();
  const std::vector<std::uint32_t> piv = a.pivots();
  std::vector<bool> is_pivot(a.n(), false);
  for (std::uint32_t p : piv) is_pivot[p] = true;
  std::vector<Vec> vs;
  for (std::uint32_t j = 0; j < a.n(); ++j) {
    if (is_pivot[j]) continue;
    Vec x = g.unit(j);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      const std::uint32_t c = g.digit(a.basis()[i], j);
      if (c != 0) x = g.with_digit(x, piv[i], g.field().neg(c));
    }
    vs.push_back(x);
  }
  return Subspace::span(a.q(), a.n(), vs);
}

Subspace meet(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (a.dim() == 0 || b.dim() == b.n()) return a;
  if (b.dim() == 0 || a.dim() == a.n()) return b;
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  return perp(join(perp(a), perp(b)));
}

std::uint64_t gaussian_binomial(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
  if (d > n) return 0;
  // Multiplicative recurrence [n, d] = [n-1, d-1] + q^d [n-1, d].
  std::vector<std::uint64_t> row(d + 1, 0);
  row[0] = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    for (std::uint32_t j = std::min(m, d); j >= 1; --j) {
      row[j] = SatAdd(row[j - 1], SatMul(IntPow(q, j), row[j]));
    }
  }
  return row[d];
}

std::uint64_t subspace_count(std::uint32_t q, std::uint32_t n) {
  std::uint64_t total = 0;
  for (std::uint32_t d = 0; d <= n; ++d) total = SatAdd(total, gaussian_binomial(q, n, d));
  return total;
}

namespace {

// Appends all d-dimensional subspaces of F_q^n in canonical order.
void EnumerateDim(const GroundSpace& g, std::uint32_t d, std::vector<Subspace>& out) {
  const std::uint32_t n = g.n();
  const std::uint32_t q = g.q();
  if (d == 0) {
    out.push_back(Subspace::zero(q, n));
    return;
  }
  if (d > n) return;
  std::uint64_t mask = (std::uint64_t{1} << d) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    std::vector<std::uint32_t> piv;
    for (std::uint32_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1u) piv.push_back(j);
    }
    // Free positions in row-major order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free;
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = piv[i] + 1; j < n; ++j) {
        if (!((mask >> j) & 1u)) free.emplace_back(i, j);
      }
    }
    std::vector<std::uint32_t> val(free.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<Vec> rows(d);
      for (std::uint32_t i = 0; i < d; ++i) rows[i] = g.unit(piv[i]);
      for (std::size_t f = 0; f < free.size(); ++f) {
        rows[free[f].first] += val[f] * g.unit(free[f].second);
      }
      out.push_back(Subspace::from_rref_rows(q, n, std::move(rows)));
      // Odometer, last position fastest.
      std::size_t f = free.size();
      while (true) {
        if (f == 0) {
          done = true;
          break;
        }
        --f;
        if (++val[f] < q) break;
        val[f] = 0;
      }
    }
    // Next mask with the same popcount.
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::uint32_t n,
                                          std::optional<std::uint32_t> d) {
  if (d && *d > n) return {};
  CheckEnumeration(q, n, d ? gaussian_binomial(q, n, *d) : subspace_count(q, n));
  const GroundSpace& g = GroundSpace::get(q, n);
  std::vector<Subspace> out;
  if (d) {
    EnumerateDim(g, *d, out);
  } else {
    for (std::uint32_t k = 0; k <= n; ++k) EnumerateDim(g, k, out);
  }
  return out;
}

std::vector<Subspace> subspaces_of(const Subspace& v, std::optional<std::uint32_t> d) {
  const std::vector<Subspace> local = enumerate_subspaces(v.q(), v.dim(), d);
  std::vector<Subspace> out;
  out.reserve(local.size());
  const GroundSpace& lg = GroundSpace::get(v.q(), v.dim());
  for (const Subspace& s : local) {
    std::vector<Vec> vs;
    vs.reserve(s.dim());
    for (Vec r : s.basis()) vs.push_back(v.combine(lg.digits(r)));
    out.push_back(Subspace::span(v.q(), v.n(), vs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> one_spaces(const Subspace& v) { return subspaces_of(v, 1); }

Mat quotient_matrix(const Subspace& x) {
  const GroundSpace& g = x.ground();
  const std::vector<std::uint32_t> piv = x.pivots();
  std::vector<std::uint32_t> rest;
  for (std::uint32_t j = 0; j < x.n(); ++j) {
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) rest.push_back(j);
  }
  Mat p(g.field_ptr(), x.n(), rest.size());
  for (std::uint32_t j = 0; j < x.n(); ++j) {
    const Vec r = x.reduce(g.unit(j));
    for (std::size_t c = 0; c < rest.size(); ++c) p.at(j, c) = g.digit(r, rest[c]);
  }
  return p;
}

// ----- Lattice -----

std::shared_ptr<const Lattice> Lattice::get(std::uint32_t q, std::uint32_t n) {
  // Caps apply to cached lattices too.
  CheckEnumeration(q, n, subspace_count(q, n));
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>,
                  std::shared_ptr<const Lattice>>
      cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({q, n});
    if (it != cache.end()) return it->second;
  }
  std::shared_ptr<const Lattice> made(new Lattice(q, n));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(q, n), made).first->second;
}

Lattice::Lattice(std::uint32_t q, std::uint32_t n) : q_(q), n_(n) {
  all_ = enumerate_subspaces(q, n);
  offsets_.assign(n + 2, 0);
  for (const Subspace& s : all_) ++offsets_[s.dim() + 1];
  for (std::uint32_t d = 1; d <= n + 1; ++d) offsets_[d] += offsets_[d - 1];
  index_.reserve(all_.size());
  for (std::size_t i = 0; i < all_.size(); ++i) index_.emplace(all_[i], i);
}

std::size_t Lattice::index(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    throw Error(Errc::kInvalidArgument, "subspace " + s.to_string() + " not in lattice");
  }
  return it->second;
}

}  // namespace qmat
