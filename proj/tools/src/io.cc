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

#include "io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "qmat/error.h"

namespace qmat::io {
namespace {

[[noreturn]] void Fail(const std::string& what) { throw Error(Errc::kParseError, what); }

const json& At(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::uint32_t U32(const json& j, const char* key) {
  const json& v = At(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    Fail(std::string("'") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint32_t>();
}

std::string Text(const json& j, const char* key) {
  const json& v = At(j, key);
  if (!v.is_string()) Fail(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

// Runs a decoder, turning json library exceptions into parse errors.
template <typename F>
auto Decode(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    Fail(e.what());
  }
}

Vec VectorFrom(const json& j, const GroundSpace& g) {
  if (j.is_string()) return g.parse(j.get<std::string>());
  if (!j.is_array() || j.size() != g.n()) Fail("vector must be a string or a list of n digits");
  std::vector<std::uint32_t> d;
  for (const json& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() >= g.q()) {
      Fail("vector digit out of range");
    }
    d.push_back(x.get<std::uint32_t>());
  }
  return g.from_digits(d);
}

json Strings(const std::vector<Subspace>& vs) {
  json a = json::array();
  for (const Subspace& v : vs) a.push_back(v.to_string());
  return a;
}

}  // namespace

json subspace_to_json(const Subspace& v) {
  json basis = json::array();
  for (Vec r : v.basis()) basis.push_back(v.ground().digits(r));
  return {{"q", v.q()}, {"ambient_n", v.n()}, {"basis", basis}};
}

Subspace parse_subspace(std::uint32_t q, std::uint32_t n, const std::string& s) {
  std::string_view t = s;
  if (!t.empty() && t.front() == '<') {
    if (t.back() != '>') Fail("unbalanced <> in '" + s + "'");
    t = t.substr(1, t.size() - 2);
  }
  return Subspace::parse(q, n, t);
}

Subspace subspace_from_json(const json& j, std::uint32_t q, std::uint32_t n) {
  return Decode([&] {
    if (j.is_string()) return parse_subspace(q, n, j.get<std::string>());
    if (U32(j, "q") != q || U32(j, "ambient_n") != n) Fail("subspace ambient mismatch");
    const GroundSpace& g = GroundSpace::get(q, n);
    std::vector<Vec> rows;
    const json& basis = At(j, "basis");
    if (!basis.is_array()) Fail("'basis' must be a list");
    for (const json& r : basis) rows.push_back(VectorFrom(r, g));
    return Subspace::span(q, n, rows);
  });
}

json field_to_json(const Field& f) {
  return {{"p", f.characteristic()},
          {"k", f.base_degree()},
          {"m", f.ext_degree()},
          {"moduli", {{"base", f.moduli().base}, {"ext", f.moduli().ext}}}};
}

FieldPtr field_from_json(const json& j) {
  return Decode([&] {
    std::optional<Moduli> mod;
    if (j.contains("moduli")) {
      const json& m = j.at("moduli");
      mod = Moduli{At(m, "base").get<std::vector<std::uint32_t>>(),
                   At(m, "ext").get<std::vector<std::uint32_t>>()};
    }
    return Field::make(U32(j, "p"), U32(j, "k"), U32(j, "m"), mod);
  });
}

json matroid_to_json(const QMatroid& m, ExportKind kind) {
  json j = {{"q", m.q()}, {"n", m.n()}};
  if (kind == ExportKind::kAuto && m.uniform_rank()) {
    j["kind"] = "uniform";
    j["k"] = *m.uniform_rank();
    return j;
  }
  if (kind == ExportKind::kAuto && m.backend() == QMatroid::Backend::kRepresentable &&
      m.matrix()) {
    const Mat& g = *m.matrix();
    json rows = json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g.field()->coefficients(g.at(i, c)));
      rows.push_back(row);
    }
    j["kind"] = "matrix";
    j["field"] = field_to_json(*g.field());
    j["rows"] = rows;
    return j;
  }
  if (kind == ExportKind::kFlats) {
    const FlatFamily f = flats(m);
    j["kind"] = "flats";
    j["flats"] = flats_to_json(f);
    return j;
  }
  auto lat = Lattice::get(m.q(), m.n());
  const std::vector<std::uint32_t>& t = m.rank_table();
  json ranks = json::object();
  for (std::size_t i = 0; i < lat->size(); ++i) ranks[lat->at(i).to_string()] = t[i];
  j["kind"] = "rank_table";
  j["ranks"] = ranks;
  return j;
}

QMatroid matroid_from_json(const json& j) {
  return Decode([&] {
    const std::uint32_t q = U32(j, "q"), n = U32(j, "n");
    const std::string kind = Text(j, "kind");
    if (kind == "uniform") return QMatroid::uniform(q, n, U32(j, "k"));
    if (kind == "matrix") {
      FieldPtr f = field_from_json(At(j, "field"));
      if (f->q() != q) Fail("field base order differs from q");
      const json& rows = At(j, "rows");
      if (!rows.is_array() || rows.empty()) Fail("'rows' must be a nonempty list");
      std::vector<Elem> entries;
      for (const json& row : rows) {
        if (!row.is_array() || row.size() != n) Fail("each row needs n entries");
        for (const json& e : row) {
          const auto coeffs = e.is_number_integer()
                                  ? std::vector<std::uint32_t>{e.get<std::uint32_t>()}
                                  : e.get<std::vector<std::uint32_t>>();
          if (coeffs.size() > f->ext_degree()) Fail("element has too many coefficients");
          for (std::uint32_t c : coeffs) {
            if (c >= q) Fail("coefficient outside F_q");
          }
          entries.push_back(f->from_coefficients(coeffs));
        }
      }
      return QMatroid::from_matrix(Mat(f, rows.size(), n, std::move(entries)));
    }
    if (kind == "rank_table") {
      const json& ranks = At(j, "ranks");
      if (!ranks.is_object()) Fail("'ranks' must be an object keyed by subspace");
      std::map<Subspace, std::uint32_t> table;
      for (const auto& [key, value] : ranks.items()) {
        if (!value.is_number_integer() || value.get<std::int64_t>() < 0) Fail("bad rank value");
        table[parse_subspace(q, n, key)] = value.get<std::uint32_t>();
      }
      return QMatroid::from_rank_table(q, n, table);
    }
    if (kind == "flats") {
      const json& fl = At(j, "flats");
      if (!fl.is_array()) Fail("'flats' must be a list");
      std::vector<Subspace> members;
      for (const json& s : fl) members.push_back(subspace_from_json(s, q, n));
      return QMatroid::from_flats(FlatFamily::make(q, n, std::move(members)));
    }
    Fail("unknown matroid kind '" + kind + "'");
  });
}

json flats_to_json(const FlatFamily& f) {
  json a = json::array();
  for (const Subspace& v : f.members()) a.push_back(subspace_to_json(v));
  return a;
}

json map_to_json(const LMap& phi) {
  json j = {{"q", phi.q()}, {"domain", phi.domain_dim()}, {"codomain", phi.codomain_dim()}};
  const std::optional<Mat>& a = phi.is_linear() ? phi.linear_matrix() : phi.semilinear_matrix();
  if (a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a->rows(); ++i) rows.push_back(a->row(i));
    j["kind"] = "matrix";
    j["matrix"] = rows;
    if (!phi.is_linear()) j["frobenius"] = *phi.automorphism();
    return j;
  }
  const GroundSpace& to = GroundSpace::get(phi.q(), phi.codomain_dim());
  json images = json::array();
  for (Vec v = 1; v < phi.table().size(); ++v) images.push_back(to.to_string(phi(v)));
  j["kind"] = "table";
  j["images"] = images;
  return j;
}

LMap map_from_json(const json& j) {
  return Decode([&] {
    const std::uint32_t q = U32(j, "q"), n1 = U32(j, "domain"), n2 = U32(j, "codomain");
    const std::string kind = Text(j, "kind");
    const GroundSpace& from = GroundSpace::get(q, n1);
    const GroundSpace& to = GroundSpace::get(q, n2);
    if (kind == "matrix") {
      const json& rows = At(j, "matrix");
      if (!rows.is_array() || rows.size() != n1) Fail("'matrix' needs domain rows");
      std::vector<Elem> entries;
      for (const json& r : rows) {
        const Vec v = VectorFrom(r, to);
        for (std::uint32_t c = 0; c < n2; ++c) entries.push_back(to.digit(v, c));
      }
      const std::uint32_t frob = j.contains("frobenius") ? U32(j, "frobenius") : 0;
      return lmap_from_matrix(Mat(Field::base_field(q), n1, n2, std::move(entries)), frob);
    }
    if (kind == "table") {
      const json& images = At(j, "images");
      if (!images.is_array() || images.size() + 1 != from.size()) {
        Fail("'images' must list the q^domain - 1 nonzero vectors");
      }
      std::vector<Vec> table = {0};
      for (const json& x : images) table.push_back(VectorFrom(x, to));
      return lmap_from_table(q, n1, n2, std::move(table));
    }
    Fail("unknown map kind '" + kind + "'");
  });
}

json check_report_to_json(const CheckReport& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"detail", c.detail},
                      {"count", c.count},
                      {"witnesses", Strings(c.witnesses)}});
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

json axiom_report_to_json(const AxiomReport& r) {
  json vs = json::array();
  for (const Violation& v : r.violations) {
    json e = {{"axiom", v.axiom}, {"witnesses", Strings(v.witnesses)}, {"detail", v.detail}};
    if (v.vector && !v.witnesses.empty()) e["vector"] = v.witnesses[0].ground().to_string(*v.vector);
    vs.push_back(e);
  }
  return {{"ok", r.ok()},
          {"checked", r.checked},
          {"total_violations", r.total_violations},
          {"violations", vs}};
}

json map_type_to_json(const MapTypeReport& r) {
  auto opt = [](const std::optional<Subspace>& s) -> json {
    return s ? json(s->to_string()) : json(nullptr);
  };
  return {{"weak", r.is_weak},
          {"strong", r.is_strong},
          {"rank_preserving", r.is_rank_preserving},
          {"weak_witness", opt(r.weak_witness)},
          {"rank_witness", opt(r.rank_witness)},
          {"strong_witness", opt(r.strong_witness)},
          {"strong_witness_not_subspace", r.strong_witness_not_subspace},
          {"subspaces_checked", r.subspaces_checked},
          {"flats_checked", r.flats_checked}};
}

json iso_to_json(const IsoResult& r) {
  json j = {{"isomorphic", r.witness.has_value()},
            {"leaves", r.leaves},
            {"nodes", r.nodes},
            {"search_space", r.search_space}};
  j["witness"] = r.witness ? map_to_json(*r.witness) : json(nullptr);
  return j;
}

json repro_to_json(const ReproReport& r) {
  json j = check_report_to_json(r.checks);
  j["id"] = r.id;
  return j;
}

std::string flats_to_dot(const FlatFamily& f) {
  std::ostringstream o;
  o << "digraph flats {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    o << "  f" << i << " [label=\"" << f.at(i).to_string() << "\\ndim " << f.at(i).dim()
      << ", height " << f.height(i) << "\"];\n";
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j : f.covers(i)) o << "  f" << i << " -> f" << j << ";\n";
  }
  o << "}\n";
  return o.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    Fail(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace qmat::io
