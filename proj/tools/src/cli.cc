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

#include "cli.h"

#include <CLI11.hpp>

#include <ostream>
#include <random>

#include "io.h"
#include "qmat/dirsum.h"
#include "qmat/error.h"
#include "qmat/maps.h"
#include "qmat/qmatroid.h"
#include "qmat/repro.h"

namespace qmat::cli {
namespace {

using io::json;

class CapsGuard {
 public:
  explicit CapsGuard(const Caps& c) : saved_(caps()) { set_caps(c); }
  ~CapsGuard() { set_caps(saved_); }
  CapsGuard(const CapsGuard&) = delete;
  CapsGuard& operator=(const CapsGuard&) = delete;

 private:
  Caps saved_;
};

Caps ParseCaps(const std::string& s) {
  const std::size_t comma = s.find(',');
  if (comma == std::string::npos) throw Error(Errc::kParseError, "--caps expects V,S");
  try {
    Caps c;
    c.max_vectors = std::stoull(s.substr(0, comma));
    c.max_subspaces = std::stoull(s.substr(comma + 1));
    if (c.max_vectors == 0 || c.max_subspaces == 0) {
      throw Error(Errc::kParseError, "caps must be positive");
    }
    return c;
  } catch (const std::logic_error&) {
    throw Error(Errc::kParseError, "--caps expects two positive integers");
  }
}

const char* YesNo(bool b) { return b ? "yes" : "no"; }

void PrintChecks(std::ostream& out, const CheckReport& r) {
  for (const Check& c : r.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (c.count > 0) out << " (" << c.count << ")";
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
      out << (i == 0 ? " witness " : " ") << c.witnesses[i].to_string();
    }
    out << "\n";
  }
}

void PrintAxioms(std::ostream& out, const std::string& what, const AxiomReport& a) {
  out << what << ": " << (a.ok() ? "ok" : "violated") << " (" << a.checked << " instances, "
      << a.total_violations << " violations)\n";
  for (const Violation& v : a.violations) {
    out << "  " << v.axiom;
    for (const Subspace& w : v.witnesses) out << " " << w.to_string();
    if (v.vector && !v.witnesses.empty()) out << " v=" << v.witnesses[0].ground().to_string(*v.vector);
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << "\n";
  }
}

QMatroid LoadMatroid(const std::string& path) {
  return io::matroid_from_json(io::read_json_file(path));
}

json SubspaceList(const std::vector<Subspace>& vs) {
  json a = json::array();
  for (const Subspace& v : vs) a.push_back(v.to_string());
  return a;
}

int EmitReport(std::ostream& out, const CliConfig& cfg, const CheckReport& r, json extra = {}) {
  if (cfg.format == "json") {
    json j = io::check_report_to_json(r);
    if (!extra.is_null()) j.update(extra);
    out << j.dump(2) << "\n";
  } else {
    PrintChecks(out, r);
    out << (r.ok() ? "all checks passed" : "some checks failed") << "\n";
  }
  return r.ok() ? kExitPass : kExitFail;
}

int CmdBuild(std::ostream& out, std::ostream& err, const CliConfig& cfg, const std::string& spec,
             const std::string& output, const std::string& export_kind) {
  const QMatroid m = LoadMatroid(spec);
  const AxiomReport ax = check_rank_axioms(m);
  const io::ExportKind kind = export_kind == "flats"        ? io::ExportKind::kFlats
                              : export_kind == "rank_table" ? io::ExportKind::kRankTable
                                                            : io::ExportKind::kAuto;
  const json artifact = io::matroid_to_json(m, kind);
  std::ostream& report = output.empty() ? err : out;
  if (cfg.format == "json") {
    report << json{{"q", m.q()}, {"n", m.n()}, {"rank", m.rank_of_matroid()},
                   {"axioms", io::axiom_report_to_json(ax)}}
                  .dump(2)
           << "\n";
  } else {
    report << "q-matroid on F_" << m.q() << "^" << m.n() << " of rank " << m.rank_of_matroid()
           << "\n";
    PrintAxioms(report, "rank axioms", ax);
  }
  if (output.empty()) {
    out << artifact.dump(2) << "\n";
  } else {
    io::write_json_file(output, artifact);
  }
  return ax.ok() ? kExitPass : kExitFail;
}

int CmdQuery(std::ostream& out, const CliConfig& cfg, const std::string& path,
             const std::string& op, const std::string& arg) {
  const QMatroid m = LoadMatroid(path);
  const bool json_out = cfg.format == "json";
  auto need_arg = [&] {
    if (arg.empty()) throw Error(Errc::kParseError, "'" + op + "' needs a subspace argument");
    return io::parse_subspace(m.q(), m.n(), arg);
  };
  if (op == "rank") {
    const Subspace v = need_arg();
    const std::uint32_t r = m.rank(v);
    if (json_out) {
      out << json{{"subspace", v.to_string()}, {"rank", r}}.dump(2) << "\n";
    } else {
      out << r << "\n";
    }
  } else if (op == "closure") {
    const Subspace v = need_arg();
    const Subspace c = closure(m, v);
    if (json_out) {
      out << json{{"subspace", v.to_string()}, {"closure", io::subspace_to_json(c)}}.dump(2)
          << "\n";
    } else {
      out << c.to_string() << "\n";
    }
  } else if (op == "flats") {
    const FlatFamily f = flats(m);
    if (cfg.format == "dot") {
      out << io::flats_to_dot(f);
    } else if (json_out) {
      json a = json::array();
      for (std::size_t i = 0; i < f.size(); ++i) {
        json covers = json::array();
        for (std::size_t j : f.covers(i)) covers.push_back(j);
        a.push_back({{"flat", io::subspace_to_json(f.at(i))},
                     {"height", f.height(i)},
                     {"covers", covers}});
      }
      out << json{{"q", f.q()}, {"n", f.n()}, {"flats", a}}.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < f.size(); ++i) {
        out << f.at(i).to_string() << " dim " << f.at(i).dim() << " height " << f.height(i)
            << "\n";
      }
    }
  } else if (op == "circuits" || op == "loops") {
    const std::vector<Subspace> vs = op == "circuits" ? circuits(m) : loops(m);
    if (json_out) {
      out << json{{op, SubspaceList(vs)}}.dump(2) << "\n";
    } else {
      for (const Subspace& v : vs) out << v.to_string() << "\n";
    }
  } else if (op == "restrict" || op == "contract") {
    const Subspace x = need_arg();
    const Minor minor = op == "restrict" ? restriction(m, x) : contraction(m, x);
    out << io::matroid_to_json(minor.matroid, io::ExportKind::kRankTable).dump(2) << "\n";
  } else {
    throw Error(Errc::kParseError, "unknown query '" + op + "'");
  }
  return kExitPass;
}

int CmdMap(std::ostream& out, const CliConfig& cfg, const std::string& map_path,
           const std::string& m1_path, const std::string& m2_path) {
  const LMap phi = io::map_from_json(io::read_json_file(map_path));
  const QMatroid m1 = LoadMatroid(m1_path), m2 = LoadMatroid(m2_path);
  const MapTypeReport t = classify_map(phi, m1, m2);
  if (cfg.format == "json") {
    json j = io::map_type_to_json(t);
    j["linear"] = phi.is_linear();
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  out << "linear: " << YesNo(phi.is_linear()) << "\n";
  out << "weak: " << YesNo(t.is_weak);
  if (t.weak_witness) out << " (witness " << t.weak_witness->to_string() << ")";
  out << "\nrank-preserving: " << YesNo(t.is_rank_preserving);
  if (t.rank_witness) out << " (witness " << t.rank_witness->to_string() << ")";
  out << "\nstrong: " << YesNo(t.is_strong);
  if (t.strong_witness) {
    out << " (flat " << t.strong_witness->to_string() << " has a preimage that is "
        << (t.strong_witness_not_subspace ? "not a subspace" : "not a flat") << ")";
  }
  out << "\n";
  return kExitPass;
}

int CmdDirsum(std::ostream& out, const CliConfig& cfg, const std::string& a, const std::string& b,
              const std::string& output) {
  const DirectSum d = direct_sum(LoadMatroid(a), LoadMatroid(b));
  CheckReport r;
  r.append(verify_embeddings(d), "embeddings: ");
  r.append(additivity_check(d), "additivity: ");
  const json artifact = io::matroid_to_json(d.total);
  if (!output.empty()) io::write_json_file(output, artifact);
  return EmitReport(out, cfg, r, output.empty() ? json{{"total", artifact}} : json{});
}

int CmdIso(std::ostream& out, const CliConfig& cfg, const std::string& a, const std::string& b,
           bool semilinear, bool no_prune, std::uint64_t max_candidates) {
  IsoOptions opt;
  opt.mode = semilinear ? IsoMode::kSemilinear : IsoMode::kLinear;
  opt.prune = !no_prune;
  opt.max_candidates = max_candidates;
  const IsoResult r = is_isomorphic(LoadMatroid(a), LoadMatroid(b), opt);
  if (cfg.format == "json") {
    out << io::iso_to_json(r).dump(2) << "\n";
    return kExitPass;
  }
  out << "isomorphic: " << YesNo(r.witness.has_value()) << "\n";
  out << "search space " << r.search_space << ", nodes " << r.nodes << ", leaves " << r.leaves
      << "\n";
  if (r.witness) out << "witness: " << io::map_to_json(*r.witness).dump() << "\n";
  return kExitPass;
}

int CmdReproList(std::ostream& out, const CliConfig& cfg) {
  if (cfg.format == "json") {
    json a = json::array();
    for (const ReproItem& it : repro_items()) a.push_back({{"id", it.id}, {"summary", it.summary}});
    out << a.dump(2) << "\n";
  } else {
    for (const ReproItem& it : repro_items()) out << it.id << "  " << it.summary << "\n";
  }
  return kExitPass;
}

int CmdReproRun(std::ostream& out, const CliConfig& cfg, const std::string& id) {
  std::vector<ReproReport> reports;
  if (id == "all") {
    for (const ReproItem& it : repro_items()) reports.push_back(run_repro(it.id));
  } else {
    reports.push_back(run_repro(id));
  }
  bool ok = true;
  for (const ReproReport& r : reports) ok &= r.ok();
  if (cfg.format == "json") {
    json a = json::array();
    for (const ReproReport& r : reports) a.push_back(io::repro_to_json(r));
    out << (id == "all" ? a : a[0]).dump(2) << "\n";
  } else {
    for (const ReproReport& r : reports) {
      out << "== " << r.id << "\n";
      PrintChecks(out, r.checks);
      out << r.id << ": " << (r.ok() ? "pass" : "FAIL") << "\n";
    }
  }
  return ok ? kExitPass : kExitFail;
}

// Random representable matroids over GF(16) on F_2^4 through the rank and
// flat axioms and both serialization roundtrips, then every repro item.
int CmdSelftest(std::ostream& out, const CliConfig& cfg, unsigned samples) {
  std::mt19937_64 rng(cfg.seed);
  const FieldPtr f = Field::make(2, 1, 4);
  CheckReport r;
  for (unsigned s = 0; s < samples; ++s) {
    const std::size_t k = 1 + rng() % 3;
    Mat g(f, k, 4);
    do {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < 4; ++j) g.at(i, j) = static_cast<Elem>(rng() % 16);
      }
    } while (rank(g) != k);
    const QMatroid m = QMatroid::from_matrix(g);
    const std::string tag = "sample " + std::to_string(s) + ": ";
    const AxiomReport ra = check_rank_axioms(m);
    r.add(tag + "rank axioms", ra.ok(), {}, ra.checked);
    const FlatFamily fl = flats(m);
    const AxiomReport fa = check_flat_axioms(fl);
    r.add(tag + "flat axioms", fa.ok(), {}, fa.checked);
    r.add(tag + "semimodular", check_semimodular(fl).ok());
    const QMatroid back = io::matroid_from_json(io::matroid_to_json(m));
    const QMatroid table =
        io::matroid_from_json(io::matroid_to_json(m, io::ExportKind::kRankTable));
    const QMatroid via_flats = io::matroid_from_json(io::matroid_to_json(m, io::ExportKind::kFlats));
    r.add(tag + "json roundtrips", same_rank_function(back, m) && same_rank_function(table, m) &&
                                       same_rank_function(via_flats, m));
  }
  for (const ReproItem& it : repro_items()) r.append(run_repro(it.id).checks, it.id + ": ");
  return EmitReport(out, cfg, r);
}

int ExitFor(const Error& e) {
  switch (e.code()) {
    case Errc::kEnumerationCapExceeded:
    case Errc::kSearchBoundExceeded:
    case Errc::kFieldTooLarge:
      return kExitCap;
    case Errc::kParseError:
    case Errc::kInvalidArgument:
    case Errc::kNoDefaultModulus:
    case Errc::kNonPrimeCharacteristic:
    case Errc::kReducibleModulus:
    case Errc::kNonPrimitiveModulus:
    case Errc::kAmbientMismatch:
    case Errc::kBadRankBound:
    case Errc::kIncompleteTable:
    case Errc::kRankDeficientG:
    case Errc::kIndexNotInOmega:
    case Errc::kExtensionTooSmall:
    case Errc::kExtensionRequired:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qmat: q-matroids, their maps and direct sums"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  std::string caps_text;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--caps", caps_text, "enumeration caps as MAX_VECTORS,MAX_SUBSPACES");
  app.add_option("--jobs", cfg.jobs, "parallelism degree")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for sampled checks");

  std::string spec, output, export_kind = "auto";
  auto* build = app.add_subcommand("build", "validate a matroid spec and write its artifact");
  build->add_option("spec", spec)->required();
  build->add_option("-o,--output", output, "artifact path (stdout if omitted)");
  build->add_option("--export", export_kind)->check(CLI::IsMember({"auto", "rank_table", "flats"}));

  std::string matroid, op, arg;
  auto* query = app.add_subcommand("query", "rank, flats, circuits, loops, closure or minors");
  query->add_option("matroid", matroid)->required();
  query->add_option("op", op)
      ->required()
      ->check(CLI::IsMember({"rank", "flats", "circuits", "loops", "closure", "restrict", "contract"}));
  query->add_option("subspace", arg, "e.g. 1000,0100");

  std::string map_path, m1, m2;
  auto* map = app.add_subcommand("map", "classify a map between two matroids");
  map->add_option("map", map_path)->required();
  map->add_option("m1", m1)->required();
  map->add_option("m2", m2)->required();

  auto* dirsum = app.add_subcommand("dirsum", "direct sum of two matroids");
  dirsum->add_option("m1", m1)->required();
  dirsum->add_option("m2", m2)->required();
  dirsum->add_option("-o,--output", output, "artifact path for the sum");

  bool semilinear = false, no_prune = false;
  std::uint64_t max_candidates = 100'000'000;
  auto* iso = app.add_subcommand("iso", "search for a rank-preserving bijection");
  iso->add_option("m1", m1)->required();
  iso->add_option("m2", m2)->required();
  iso->add_flag("--semilinear", semilinear, "allow field automorphisms");
  iso->add_flag("--no-prune", no_prune, "examine every complete matrix");
  iso->add_option("--max-candidates", max_candidates);

  auto* repro = app.add_subcommand("repro", "reproduction suite");
  repro->require_subcommand(1);
  auto* repro_list = repro->add_subcommand("list", "list items");
  std::string item;
  bool repro_json = false;
  auto* repro_run = repro->add_subcommand("run", "run one item, or all");
  repro_run->add_option("item", item)->required();
  repro_run->add_flag("--json", repro_json, "same as --format json");

  unsigned samples = 5;
  auto* selftest = app.add_subcommand("selftest", "seeded property checks plus the repro suite");
  selftest->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    std::optional<CapsGuard> guard;
    if (!caps_text.empty()) guard.emplace(ParseCaps(caps_text));
    if (repro_json) cfg.format = "json";
    if (cfg.format == "dot" && !(query->parsed() && op == "flats")) {
      throw Error(Errc::kParseError, "--format dot applies to 'query <m> flats' only");
    }
    if (build->parsed()) return CmdBuild(out, err, cfg, spec, output, export_kind);
    if (query->parsed()) return CmdQuery(out, cfg, matroid, op, arg);
    if (map->parsed()) return CmdMap(out, cfg, map_path, m1, m2);
    if (dirsum->parsed()) return CmdDirsum(out, cfg, m1, m2, output);
    if (iso->parsed()) return CmdIso(out, cfg, m1, m2, semilinear, no_prune, max_candidates);
    if (repro_list->parsed()) return CmdReproList(out, cfg);
    if (repro_run->parsed()) return CmdReproRun(out, cfg, item);
    if (selftest->parsed()) return CmdSelftest(out, cfg, samples);
  } catch (const AxiomViolationError& e) {
    err << "error: " << e.what() << "\n";
    PrintAxioms(err, "axioms", e.report());
    return kExitFail;
  } catch (const NotAnLMapError& e) {
    err << "error: " << e.what() << " (witness " << e.witness().to_string() << ")\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitFor(e);
  }
  return kExitUsage;
}

}  // namespace qmat::cli
