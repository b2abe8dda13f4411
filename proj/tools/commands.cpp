// Copyright 2026 The eqknot Authors
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

#include "eqknot_cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "eqknot/checkerboard.hpp"
#include "eqknot/gsignature.hpp"
#include "eqknot/parallel.hpp"

namespace eqknot::cli {

using nlohmann::json;

int ExitCodeFor(const Error& error) {
  return error.code() == ErrorCode::kNotDefinite ? kExitHypothesisUnmet
                                                 : kExitInputError;
}

int ResolveThreads(std::optional<int> flag) {
  if (flag) return std::max(*flag, 1);
  if (const char* env = std::getenv("EQKNOT_THREADS")) {
    try {
      return std::max(std::stoi(env), 1);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("EQKNOT_THREADS is not an integer: '") + env +
                      "'");
    }
  }
  return 1;
}

namespace {

std::string Show(const json& value) {
  if (value.is_null()) return "-";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

json SignedPermutationJson(const SignedPermutation& p) {
  return {{"perm", p.perm}, {"signs", p.signs}, {"order", p.Order()}};
}

}  // namespace

json BoundsJson(const BoundsReport& report) {
  json lower = json::array();
  for (const LowerBound& b : report.lower_bounds) {
    lower.push_back({{"name", b.name},
                     {"value", RationalJson(b.value)},
                     {"ceiling", BigIntJson(b.ceiling)},
                     {"target", std::string(GenusKindName(b.target))}});
  }
  json upper = json::array();
  for (const UpperBound& b : report.upper_bounds) {
    upper.push_back({{"name", b.name}, {"value", b.value}});
  }
  json out = {{"lower_bounds", lower},
              {"upper_bounds", upper},
              {"best_lower", BigIntJson(report.best_lower)},
              {"best_upper", nullptr},
              {"best_butterfly_lower", nullptr},
              {"consistent", report.consistent}};
  if (report.best_upper) out["best_upper"] = *report.best_upper;
  if (report.best_butterfly_lower) {
    out["best_butterfly_lower"] = BigIntJson(*report.best_butterfly_lower);
  }
  return out;
}

std::string RenderBoundsText(const json& report) {
  std::ostringstream os;
  for (const json& b : report.at("lower_bounds")) {
    os << "lower  " << std::left << std::setw(20) << Show(b.at("name"))
       << " " << std::setw(8) << Show(b.at("value")) << " ceiling "
       << Show(b.at("ceiling")) << " (" << Show(b.at("target")) << ")\n";
  }
  for (const json& b : report.at("upper_bounds")) {
    os << "upper  " << std::left << std::setw(20) << Show(b.at("name"))
       << " " << Show(b.at("value")) << "\n";
  }
  os << "best lower " << Show(report.at("best_lower")) << ", best upper "
     << Show(report.at("best_upper"));
  if (!report.at("best_butterfly_lower").is_null()) {
    os << ", best butterfly lower " << Show(report.at("best_butterfly_lower"));
  }
  os << (report.at("consistent").get<bool>() ? "" : "  [INCONSISTENT]")
     << "\n";
  return os.str();
}

json ObstructReport(const KnotCase& knot_case, const RunOptions& options) {
  const int sigma = CaseSignature(knot_case);
  const GramLattice lattice = GlLattice(knot_case.graph, options.drop_vertex);
  if (!IsPositiveDefinite(lattice)) {
    throw Error(ErrorCode::kNotDefinite,
                "the Gordon-Litherland form of '" + knot_case.name +
                    "' is not positive definite; the obstruction does not "
                    "apply");
  }
  const LatticeIsometry isometry = InducedIsometry(
      knot_case.graph, knot_case.symmetry, options.drop_vertex);
  const ObstructionReport result = DonaldsonObstruction(
      lattice, isometry, sigma, knot_case.symmetry.order, options.sign_mode,
      SearchOptions{options.threads});

  BigInt embedding_count = 0;
  json classes = json::array();
  for (std::size_t i = 0; i < result.per_class.size(); ++i) {
    const ClassResult& c = result.per_class[i];
    embedding_count += c.orbit_size;
    json entry = {{"index", i + 1},
                  {"orbit_size", BigIntJson(c.orbit_size)},
                  {"representative", MatrixJson(c.representative.matrix)},
                  {"delta", nullptr},
                  {"isometry_sign", nullptr}};
    if (c.delta) {
      entry["delta"] = SignedPermutationJson(*c.delta);
      entry["isometry_sign"] = c.isometry_sign;
    }
    classes.push_back(std::move(entry));
  }

  BoundsInput bounds = knot_case.bounds;
  bounds.sigma_k = sigma;
  const int dropped =
      options.drop_vertex.value_or(knot_case.graph.vertex_count() - 1);
  return {
      {"command", "obstruct"},
      {"name", knot_case.name},
      {"symmetry", std::string(SymmetryKindName(knot_case.symmetry.kind))},
      {"sigma", sigma},
      {"rank", result.rank},
      {"dropped_vertex", dropped},
      {"gram", MatrixJson(lattice.gram())},
      {"isometry", {{"matrix", MatrixJson(isometry.matrix)},
                    {"order", isometry.order}}},
      {"k", result.k},
      {"required_order", result.required_order},
      {"sign_mode", std::string(SignModeName(result.sign_mode))},
      {"class_count", result.class_count},
      {"embedding_count", BigIntJson(embedding_count)},
      {"classes", classes},
      {"obstructed", result.obstructed},
      {"conclusion", result.conclusion},
      {"bounds", BoundsJson(Aggregate(bounds, &result))},
  };
}

std::string RenderObstructText(const json& r) {
  std::ostringstream os;
  os << "case            " << Show(r.at("name")) << " ("
     << Show(r.at("symmetry")) << ")\n"
     << "sigma(K)        " << Show(r.at("sigma")) << "\n"
     << "rank H_1(F)     " << Show(r.at("rank")) << " (dropped vertex "
     << Show(r.at("dropped_vertex")) << ")\n"
     << "rho_* order     " << Show(r.at("isometry").at("order"))
     << ", required delta order " << Show(r.at("required_order")) << "\n"
     << "k               " << Show(r.at("k")) << "\n"
     << "sign mode       " << Show(r.at("sign_mode")) << "\n"
     << "classes         " << Show(r.at("class_count")) << " ("
     << Show(r.at("embedding_count")) << " embeddings)\n";
  for (const json& c : r.at("classes")) {
    os << "  class " << Show(c.at("index")) << "  orbit "
       << Show(c.at("orbit_size")) << "  ";
    if (c.at("delta").is_null()) {
      os << "no delta\n";
    } else {
      os << "delta perm " << Show(c.at("delta").at("perm")) << " signs "
         << Show(c.at("delta").at("signs")) << " order "
         << Show(c.at("delta").at("order")) << " (commutes with "
         << (c.at("isometry_sign").get<int>() > 0 ? "R" : "-R") << ")\n";
    }
  }
  os << "verdict         " << Show(r.at("conclusion")) << "\n"
     << RenderBoundsText(r.at("bounds"));
  return os.str();
}

namespace {

json GSigJson(const std::string& name, const GSignatureReport& report,
              SymmetryKind kind) {
  const GenusKind target = kind == SymmetryKind::kStrongInversion
                               ? GenusKind::kButterfly
                               : GenusKind::kEquivariant;
  return {{"command", "gsig"},
          {"mode", "involution"},
          {"name", name},
          {"sigma_plus", report.sigma_plus},
          {"sigma_minus", report.sigma_minus},
          {"dim_plus", report.dim_plus},
          {"dim_minus", report.dim_minus},
          {"form_plus", MatrixJson(report.form_plus)},
          {"form_minus", MatrixJson(report.form_minus)},
          {"gsig", RationalJson(report.gsig)},
          {"genus_bound", RationalJson(GSigGenusBound(report.gsig))},
          {"bound_target", std::string(GenusKindName(target))}};
}

}  // namespace

json GSigReportForCase(const KnotCase& knot_case, const RunOptions& options) {
  const GramLattice lattice = GlLattice(knot_case.graph, options.drop_vertex);
  const LatticeIsometry isometry = InducedIsometry(
      knot_case.graph, knot_case.symmetry, options.drop_vertex);
  return GSigJson(knot_case.name, GSigInvolution(lattice, isometry.matrix),
                  knot_case.symmetry.kind);
}

json GSigReportForForm(const RawForm& form) {
  if (!form.involution) {
    throw Error(ErrorCode::kSchema, "form file has no 'involution'");
  }
  return GSigJson(form.name, GSigInvolution(form.lattice, *form.involution),
                  form.kind);
}

json GSigReportPeriodic(int n, int sigma_k, int sigma_quotient) {
  const Rational gsig = GSigPeriodic(n, sigma_k, sigma_quotient);
  return {{"command", "gsig"},
          {"mode", "periodic"},
          {"period", n},
          {"sigma", sigma_k},
          {"quotient_sigma", sigma_quotient},
          {"gsig", RationalJson(gsig)},
          {"genus_bound", RationalJson(GSigGenusBound(gsig))},
          {"bound_target", "equivariant"}};
}

std::string RenderGSigText(const json& r) {
  std::ostringstream os;
  if (r.at("mode") == "periodic") {
    os << "period " << Show(r.at("period")) << ", sigma(K) "
       << Show(r.at("sigma")) << ", sigma(quotient) "
       << Show(r.at("quotient_sigma")) << "\n";
  } else {
    if (!r.at("name").get<std::string>().empty()) {
      os << "case " << Show(r.at("name")) << "\n";
    }
    os << "H(+1) dim " << Show(r.at("dim_plus")) << "  form "
       << Show(r.at("form_plus")) << "  signature "
       << Show(r.at("sigma_plus")) << "\n"
       << "H(-1) dim " << Show(r.at("dim_minus")) << "  form "
       << Show(r.at("form_minus")) << "  signature "
       << Show(r.at("sigma_minus")) << "\n";
  }
  os << "g-signature " << Show(r.at("gsig")) << "\n"
     << "genus bound " << Show(r.at("genus_bound")) << " ("
     << Show(r.at("bound_target")) << ")\n";
  return os.str();
}

json EmbedReport(const GramLattice& lattice, int k, bool enumerate_all,
                 int threads) {
  const SearchOptions options{threads};
  const std::vector<Embedding> classes =
      EnumerateEmbeddingClasses(lattice, k, options);
  BigInt total = 0;
  json entries = json::array();
  for (const Embedding& e : classes) {
    const BigInt size = OrbitSize(e);
    total += size;
    entries.push_back(
        {{"orbit_size", BigIntJson(size)}, {"matrix", MatrixJson(e.matrix)}});
  }
  json out = {{"command", "embed"},
              {"rank", lattice.rank()},
              {"k", k},
              {"class_count", classes.size()},
              {"embedding_count", BigIntJson(total)},
              {"classes", entries},
              {"enumerated", nullptr}};
  if (enumerate_all) {
    out["enumerated"] = EnumerateEmbeddings(lattice, k, options).size();
  }
  return out;
}

std::string RenderEmbedText(const json& r) {
  std::ostringstream os;
  os << "rank " << Show(r.at("rank")) << " into Z^" << Show(r.at("k"))
     << ": " << Show(r.at("class_count")) << " classes, "
     << Show(r.at("embedding_count")) << " embeddings";
  if (!r.at("enumerated").is_null()) {
    os << " (" << Show(r.at("enumerated")) << " by full enumeration)";
  }
  os << "\n";
  int index = 1;
  for (const json& c : r.at("classes")) {
    os << "class " << index++ << "  orbit " << Show(c.at("orbit_size"))
       << "\n";
    for (const json& row : c.at("matrix")) os << "  " << row.dump() << "\n";
  }
  return os.str();
}

std::vector<json> BatchRows(const std::filesystem::path& dir,
                            const RunOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo, "'" + dir.string() + "' is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  RunOptions per_file = options;
  per_file.threads = 1;
  std::vector<json> rows(files.size());
  ParallelFor(static_cast<int>(files.size()), options.threads, [&](int i) {
    json row = {{"file", files[i].filename().string()},
                {"name", files[i].stem().string()},
                {"sigma", nullptr},
                {"k", nullptr},
                {"class_count", nullptr},
                {"obstructed", nullptr},
                {"best_lower", nullptr},
                {"best_upper", nullptr},
                {"error", nullptr}};
    try {
      const KnotCase knot_case = LoadCase(files[i]);
      row["name"] = knot_case.name;
      const json report = ObstructReport(knot_case, per_file);
      row["sigma"] = report.at("sigma");
      row["k"] = report.at("k");
      row["class_count"] = report.at("class_count");
      row["obstructed"] = report.at("obstructed");
      row["best_lower"] = report.at("bounds").at("best_lower");
      row["best_upper"] = report.at("bounds").at("best_upper");
    } catch (const Error& e) {
      row["error"] = {{"code", std::string(ErrorCodeName(e.code()))},
                      {"message", e.what()}};
    }
    rows[i] = std::move(row);
  });
  std::stable_sort(rows.begin(), rows.end(), [](const json& a, const json& b) {
    return a.at("name").get<std::string>() < b.at("name").get<std::string>();
  });
  return rows;
}

std::string RenderBatchText(const std::vector<json>& rows) {
  const std::vector<std::pair<std::string, std::string>> columns = {
      {"name", "name"},         {"sigma", "sigma"},
      {"k", "k"},               {"class_count", "classes"},
      {"obstructed", "obstructed"}, {"best_lower", "lower"},
      {"best_upper", "upper"},  {"error", "error"}};
  std::vector<std::vector<std::string>> cells;
  for (const json& row : rows) {
    std::vector<std::string> line;
    for (const auto& [key, header] : columns) {
      const json& v = row.at(key);
      if (key == "error") {
        line.push_back(v.is_null() ? ""
                                   : Show(v.at("code")) + ": " +
                                         Show(v.at("message")));
      } else {
        line.push_back(Show(v));
      }
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width;
  for (const auto& [key, header] : columns) width.push_back(header.size());
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      std::string cell = line[c];
      if (c + 1 < line.size()) cell.resize(width[c], ' ');
      text += cell;
      if (c + 1 < line.size()) text += "  ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << "\n";
  };
  std::vector<std::string> header;
  for (const auto& [key, name] : columns) header.push_back(name);
  emit(header);
  for (const auto& line : cells) emit(line);
  return os.str();
}

namespace {

struct CommonFlags {
  bool json = false;
  std::string sign_mode = "strict";
  std::optional<int> drop_vertex;
  std::optional<int> threads;

  RunOptions ToOptions() const {
    return RunOptions{ParseSignMode(sign_mode), drop_vertex,
                      ResolveThreads(threads)};
  }
};

void AddCommonFlags(CLI::App* app, CommonFlags& flags) {
  app->add_flag("--json", flags.json, "Emit the JSON report");
  app->add_option("--sign-mode", flags.sign_mode,
                  "strict: use R as given; both: also try -R")
      ->check(CLI::IsMember({"strict", "both"}));
  app->add_option("--drop-vertex", flags.drop_vertex,
                  "Vertex omitted from the H_1(F) basis (default: last)");
  app->add_option("--threads", flags.threads,
                  "Worker threads (default: $EQKNOT_THREADS or 1)");
}

void Emit(std::ostream& out, const json& report, bool as_json,
          std::string (*render)(const json&)) {
  if (as_json) {
    out << report.dump(2) << "\n";
  } else {
    out << render(report);
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Equivariant lattice-embedding obstructions and equivariant "
               "4-genus bounds",
               "eqknot"};
  app.require_subcommand(1);
  CommonFlags flags;

  CLI::App* obstruct =
      app.add_subcommand("obstruct", "Decide the equivariant embedding "
                                     "obstruction for a case file");
  std::string obstruct_file;
  obstruct->add_option("file", obstruct_file, "Case JSON")->required();
  AddCommonFlags(obstruct, flags);

  CLI::App* gsig = app.add_subcommand(
      "gsig", "g-signature from a case/form file or from --period flags");
  std::string gsig_file;
  std::optional<int> gsig_period, gsig_sigma, gsig_quotient;
  gsig->add_option("file", gsig_file, "Case JSON or {gram, involution} JSON");
  gsig->add_option("--period", gsig_period, "Period n >= 2");
  gsig->add_option("--sigma", gsig_sigma, "sigma(K)");
  gsig->add_option("--quotient-sigma", gsig_quotient, "sigma of the quotient");
  AddCommonFlags(gsig, flags);

  CLI::App* bounds = app.add_subcommand("bounds", "Aggregate genus bounds");
  BoundsInput bounds_input;
  std::optional<std::string> gsig_text;
  std::string gsig_kind = "periodic";
  std::string bounds_case;
  bounds->add_option("--period", bounds_input.period_n, "Period n >= 2");
  bounds->add_option("--sigma", bounds_input.sigma_k, "sigma(K)");
  bounds->add_option("--quotient-sigma", bounds_input.sigma_quotient,
                     "sigma of the quotient knot");
  bounds->add_option("--g4top-quotient", bounds_input.g4top_quotient,
                     "Topological 4-genus of the quotient knot");
  bounds->add_option("--linking", bounds_input.linking_lambda,
                     "Linking number of K with the axis");
  bounds->add_option("--gsig", gsig_text, "g-signature (integer or p/q)");
  bounds->add_option("--gsig-kind", gsig_kind, "periodic | strong_inversion")
      ->check(CLI::IsMember({"periodic", "strong_inversion"}));
  bounds->add_option("--unknotting-moves",
                     bounds_input.equivariant_unknotting_moves,
                     "Equivariant crossing changes to the unknot");
  bounds->add_option("--g4", bounds_input.g4_k, "Smooth 4-genus of K");
  bounds->add_option("--surface-genus", bounds_input.equivariant_surface_genus,
                     "Genus of a known equivariant surface");
  bounds->add_option("--case", bounds_case,
                     "Case JSON: run the obstruction and merge its bounds");
  AddCommonFlags(bounds, flags);

  CLI::App* embed =
      app.add_subcommand("embed", "Embedding classes of a Gram matrix in Z^k");
  std::string gram_file;
  int embed_k = 0;
  bool embed_all = false;
  embed->add_option("--gram", gram_file, "Gram JSON")->required();
  embed->add_option("--k", embed_k, "Ambient rank k")->required();
  embed->add_flag("--all", embed_all,
                  "Also count every embedding by full enumeration");
  AddCommonFlags(embed, flags);

  CLI::App* batch =
      app.add_subcommand("batch", "Obstruction table for a directory");
  std::string batch_dir;
  batch->add_option("dir", batch_dir, "Directory of case files")->required();
  AddCommonFlags(batch, flags);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const RunOptions options = flags.ToOptions();
    if (obstruct->parsed()) {
      Emit(out, ObstructReport(LoadCase(obstruct_file), options), flags.json,
           RenderObstructText);
    } else if (gsig->parsed()) {
      json report;
      if (!gsig_file.empty()) {
        const json doc = ReadJsonFile(gsig_file);
        report = LooksLikeRawForm(doc)
                     ? GSigReportForForm(ParseRawForm(doc))
                     : GSigReportForCase(ParseCase(doc), options);
      } else if (gsig_period && gsig_sigma && gsig_quotient) {
        report = GSigReportPeriodic(*gsig_period, *gsig_sigma, *gsig_quotient);
      } else {
        throw Error(ErrorCode::kInvalidArgument,
                    "gsig needs a file or --period, --sigma and "
                    "--quotient-sigma");
      }
      Emit(out, report, flags.json, RenderGSigText);
    } else if (bounds->parsed()) {
      if (gsig_text) bounds_input.gsig = ParseRational(*gsig_text);
      bounds_input.gsig_kind = ParseSymmetryKind(gsig_kind);
      json report;
      if (!bounds_case.empty()) {
        KnotCase knot_case = LoadCase(bounds_case);
        const BoundsInput& extra = knot_case.bounds;
        BoundsInput merged = extra;
        // Flags override the case's bounds object field by field.
        auto take = [](auto& dst, const auto& src) {
          if (src) dst = src;
        };
        take(merged.period_n, bounds_input.period_n);
        take(merged.sigma_quotient, bounds_input.sigma_quotient);
        take(merged.g4top_quotient, bounds_input.g4top_quotient);
        take(merged.linking_lambda, bounds_input.linking_lambda);
        take(merged.gsig, bounds_input.gsig);
        if (bounds_input.gsig) merged.gsig_kind = bounds_input.gsig_kind;
        take(merged.equivariant_unknotting_moves,
             bounds_input.equivariant_unknotting_moves);
        take(merged.g4_k, bounds_input.g4_k);
        take(merged.equivariant_surface_genus,
             bounds_input.equivariant_surface_genus);
        if (bounds_input.sigma_k) knot_case.sigma = bounds_input.sigma_k;
        knot_case.bounds = merged;
        report = ObstructReport(knot_case, options).at("bounds");
      } else {
        report = BoundsJson(Aggregate(bounds_input));
      }
      Emit(out, report, flags.json, RenderBoundsText);
    } else if (embed->parsed()) {
      const RawForm form = ParseRawForm(ReadJsonFile(gram_file));
      Emit(out, EmbedReport(form.lattice, embed_k, embed_all, options.threads),
           flags.json, RenderEmbedText);
    } else if (batch->parsed()) {
      const std::vector<json> rows = BatchRows(batch_dir, options);
      if (flags.json) {
        for (const json& row : rows) out << row.dump() << "\n";
      } else {
        out << RenderBatchText(rows);
      }
    }
  } catch (const Error& e) {
    err << "error " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return ExitCodeFor(e);
  }
  return kExitOk;
}

}  // namespace eqknot::cli
