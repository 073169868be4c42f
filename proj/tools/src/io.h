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

// JSON and DOT encodings for the command-line tool. Every decoding failure
// throws Error{kParseError}.
//
// Matroid spec:
//   {"q", "n", "kind": "uniform", "k"}
//   {"q", "n", "kind": "matrix", "field": {"p", "k", "m", "moduli"?}, "rows"}
//       rows[i][j] is the F_q coefficient list of G_ij in the power basis
//   {"q", "n", "kind": "rank_table", "ranks": {"<1000,0100>": 1, ...}}
//   {"q", "n", "kind": "flats", "flats": [subspace, ...]}
// Subspace: {"q", "ambient_n", "basis": [[digits], ...]} or "1000,0100".
// Map spec:
//   {"kind": "matrix", "q", "domain", "codomain", "matrix", "frobenius"?}
//   {"kind": "table", "q", "domain", "codomain", "images"}
//       images of the nonzero vectors in code order, as digit lists or strings

#ifndef QMAT_TOOLS_IO_H_
#define QMAT_TOOLS_IO_H_

#include <string>

#include <json.hpp>

#include "qmat/dirsum.h"
#include "qmat/lmap.h"
#include "qmat/maps.h"
#include "qmat/qmatroid.h"
#include "qmat/repro.h"

namespace qmat::io {

using nlohmann::json;

json subspace_to_json(const Subspace& v);
Subspace subspace_from_json(const json& j, std::uint32_t q, std::uint32_t n);
// "1000,0100", optionally wrapped in <>.
Subspace parse_subspace(std::uint32_t q, std::uint32_t n, const std::string& s);

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

enum class ExportKind { kAuto, kRankTable, kFlats };

// kAuto keeps uniform and matrix backends symbolic and tabulates the rest.
json matroid_to_json(const QMatroid& m, ExportKind kind = ExportKind::kAuto);
QMatroid matroid_from_json(const json& j);

json flats_to_json(const FlatFamily& f);

json map_to_json(const LMap& phi);
LMap map_from_json(const json& j);

json check_report_to_json(const CheckReport& r);
json axiom_report_to_json(const AxiomReport& r);
json map_type_to_json(const MapTypeReport& r);
json iso_to_json(const IsoResult& r);
// Wall time is left out so reports are byte-identical across runs.
json repro_to_json(const ReproReport& r);

// Hasse diagram of the flat lattice: one node per flat labeled with its basis,
// dimension and height, one edge per cover pair.
std::string flats_to_dot(const FlatFamily& f);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace qmat::io

#endif  // QMAT_TOOLS_IO_H_
