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

// JSON case files.
//
// A case is one symmetric checkerboard graph:
//
//   {
//     "name": "9_40",
//     "vertices": 5,
//     "edges": [[0, 1, -1], [0, 2, -1], ...],
//     "symmetry": {"vertex_perm": [2, 3, 0, 1, 4], "order": 2,
//                  "kind": "strong_inversion", "lift_sign": 1},
//     "positive_crossings": 6,        (optional)
//     "sigma": -2,                    (optional)
//     "bounds": {...}                 (optional)
//   }
//
// The optional "bounds" object accepts period_n, sigma_quotient,
// g4top_quotient, linking_lambda, gsig (integer or "p/q"), gsig_kind,
// equivariant_unknotting_moves, g4_K and equivariant_surface_genus.
// Unknown keys are rejected.
//
// A raw form file is {"gram": [[...]], "involution": [[...]]} (involution
// optional, plus optional "name" and "kind"), or a bare Gram matrix array.

#ifndef EQKNOT_CLI_CASE_IO_HPP_
#define EQKNOT_CLI_CASE_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "eqknot/bounds.hpp"
#include "eqknot/checkerboard.hpp"
#include "eqknot/lattice.hpp"
#include "nlohmann/json.hpp"

namespace eqknot::cli {

struct KnotCase {
  std::string name;
  CheckerboardGraph graph;
  SymmetrySpec symmetry;
  std::optional<int> positive_crossings;
  std::optional<int> sigma;
  BoundsInput bounds;

  friend bool operator==(const KnotCase&, const KnotCase&) = default;
};

// Throws Error with kSchema, kLoopEdge, kDisconnected, kNotAutomorphism,
// kInconsistentSignature or kInvalidArgument.
KnotCase ParseCase(const nlohmann::json& doc);
KnotCase ParseCase(std::string_view text);
nlohmann::json SerializeCase(const KnotCase& knot_case);

// Reads and parses a file; kIo when unreadable.
nlohmann::json ReadJsonFile(const std::filesystem::path& path);
KnotCase LoadCase(const std::filesystem::path& path);

// The case's sigma, else the value computed from positive_crossings.
// Throws kInvalidArgument when neither is present.
int CaseSignature(const KnotCase& knot_case);

struct RawForm {
  std::string name;
  GramLattice lattice;
  std::optional<BigMatrix> involution;
  SymmetryKind kind = SymmetryKind::kStrongInversion;
};

RawForm ParseRawForm(const nlohmann::json& doc);
bool LooksLikeRawForm(const nlohmann::json& doc);

// JSON encodings shared by the reports.
nlohmann::json BigIntJson(const BigInt& value);  // number when it fits
nlohmann::json RationalJson(const Rational& value);  // integer or "p/q"
nlohmann::json MatrixJson(const BigMatrix& m);
nlohmann::json MatrixJson(const SmallMatrix& m);
nlohmann::json MatrixJson(const RationalMatrix& m);
BigMatrix ParseMatrix(const nlohmann::json& doc, std::string_view what);

}  // namespace eqknot::cli

#endif  // EQKNOT_CLI_CASE_IO_HPP_
