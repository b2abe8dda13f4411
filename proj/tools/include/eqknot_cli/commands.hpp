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

// The eqknot command line: obstruct, gsig, bounds, embed and batch.
//
// Every command first builds a JSON report; the text output is rendered from
// that report alone, so both carry the same numbers. Exit codes: 0 when a
// result was computed (whatever the verdict), 2 on input errors, 3 when the
// form is not positive definite and the obstruction does not apply.

#ifndef EQKNOT_CLI_COMMANDS_HPP_
#define EQKNOT_CLI_COMMANDS_HPP_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eqknot/bounds.hpp"
#include "eqknot/embedsearch.hpp"
#include "eqknot_cli/case_io.hpp"
#include "nlohmann/json.hpp"

namespace eqknot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitHypothesisUnmet = 3;

struct RunOptions {
  SignMode sign_mode = SignMode::kStrict;
  std::optional<int> drop_vertex;
  int threads = 1;
};

int ExitCodeFor(const Error& error);

// --threads when given, else EQKNOT_THREADS, else 1.
int ResolveThreads(std::optional<int> flag);

nlohmann::json ObstructReport(const KnotCase& knot_case,
                              const RunOptions& options);
std::string RenderObstructText(const nlohmann::json& report);

nlohmann::json GSigReportForCase(const KnotCase& knot_case,
                                 const RunOptions& options);
nlohmann::json GSigReportForForm(const RawForm& form);
nlohmann::json GSigReportPeriodic(int n, int sigma_k, int sigma_quotient);
std::string RenderGSigText(const nlohmann::json& report);

nlohmann::json BoundsJson(const BoundsReport& report);
std::string RenderBoundsText(const nlohmann::json& report);

nlohmann::json EmbedReport(const GramLattice& lattice, int k,
                           bool enumerate_all, int threads);
std::string RenderEmbedText(const nlohmann::json& report);

// One row per *.json file in `dir`, sorted by case name then file name.
// Files that fail to parse or compute become rows carrying an error object.
std::vector<nlohmann::json> BatchRows(const std::filesystem::path& dir,
                                      const RunOptions& options);
std::string RenderBatchText(const std::vector<nlohmann::json>& rows);

// Entry point shared by main() and the tests. args[0] is the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace eqknot::cli

#endif  // EQKNOT_CLI_COMMANDS_HPP_
