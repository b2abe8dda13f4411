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

#include "eqknot_cli/case_io.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace eqknot::cli {

using nlohmann::json;

namespace {

[[noreturn]] void SchemaError(const std::string& message) {
  throw Error(ErrorCode::kSchema, message);
}

void RejectUnknownKeys(const json& object, std::string_view where,
                       std::initializer_list<std::string_view> allowed) {
  const std::set<std::string_view> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : object.items()) {
    if (!keys.contains(key)) {
      SchemaError("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

const json& Require(const json& object, const char* key,
                    std::string_view where) {
  if (!object.contains(key)) {
    SchemaError(std::string(where) + " is missing '" + key + "'");
  }
  return object.at(key);
}

int AsInt(const json& value, std::string_view what) {
  if (!value.is_number_integer()) {
    SchemaError(std::string(what) + " must be an integer");
  }
  const auto v = value.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    SchemaError(std::string(what) + " is out of range");
  }
  return static_cast<int>(v);
}

std::optional<int> OptionalInt(const json& object, const char* key,
                               std::string_view where) {
  if (!object.contains(key) || object.at(key).is_null()) return std::nullopt;
  return AsInt(object.at(key), std::string(where) + "." + key);
}

BigInt AsBigInt(const json& value, std::string_view what) {
  if (value.is_number_integer()) return BigInt(value.get<std::int64_t>());
  if (value.is_string()) {
    const Rational q = ParseRational(value.get<std::string>());
    if (boost::multiprecision::denominator(q) != 1) {
      SchemaError(std::string(what) + " must be an integer");
    }
    return boost::multiprecision::numerator(q);
  }
  SchemaError(std::string(what) + " must be an integer");
}

Rational AsRational(const json& value, std::string_view what) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return ParseRational(value.get<std::string>());
  SchemaError(std::string(what) + " must be an integer or a \"p/q\" string");
}

BoundsInput ParseBounds(const json& doc) {
  if (!doc.is_object()) SchemaError("'bounds' must be an object");
  RejectUnknownKeys(doc, "bounds",
                    {"period_n", "sigma_quotient", "g4top_quotient",
                     "linking_lambda", "gsig", "gsig_kind",
                     "equivariant_unknotting_moves", "g4_K",
                     "equivariant_surface_genus"});
  BoundsInput b;
  b.period_n = OptionalInt(doc, "period_n", "bounds");
  b.sigma_quotient = OptionalInt(doc, "sigma_quotient", "bounds");
  b.g4top_quotient = OptionalInt(doc, "g4top_quotient", "bounds");
  b.linking_lambda = OptionalInt(doc, "linking_lambda", "bounds");
  if (doc.contains("gsig") && !doc.at("gsig").is_null()) {
    b.gsig = AsRational(doc.at("gsig"), "bounds.gsig");
  }
  if (doc.contains("gsig_kind")) {
    if (!doc.at("gsig_kind").is_string()) {
      SchemaError("bounds.gsig_kind must be a string");
    }
    b.gsig_kind = ParseSymmetryKind(doc.at("gsig_kind").get<std::string>());
  }
  b.equivariant_unknotting_moves =
      OptionalInt(doc, "equivariant_unknotting_moves", "bounds");
  b.g4_k = OptionalInt(doc, "g4_K", "bounds");
  b.equivariant_surface_genus =
      OptionalInt(doc, "equivariant_surface_genus", "bounds");
  return b;
}

json SerializeBounds(const BoundsInput& b) {
  json out = json::object();
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) out[key] = *v;
  };
  put("period_n", b.period_n);
  put("sigma_quotient", b.sigma_quotient);
  put("g4top_quotient", b.g4top_quotient);
  put("linking_lambda", b.linking_lambda);
  if (b.gsig) out["gsig"] = RationalJson(*b.gsig);
  if (b.gsig_kind != SymmetryKind::kPeriodic) {
    out["gsig_kind"] = std::string(SymmetryKindName(b.gsig_kind));
  }
  put("equivariant_unknotting_moves", b.equivariant_unknotting_moves);
  put("g4_K", b.g4_k);
  put("equivariant_surface_genus", b.equivariant_surface_genus);
  return out;
}

CheckerboardGraph ParseGraph(const json& doc, const std::string& name) {
  const int vertices = AsInt(Require(doc, "vertices", "case"), "vertices");
  const json& edges_doc = Require(doc, "edges", "case");
  if (!edges_doc.is_array()) SchemaError("'edges' must be an array");
  std::vector<Edge> edges;
  for (const json& e : edges_doc) {
    if (!e.is_array() || e.size() != 3) {
      SchemaError("each edge must be [u, v, weight]");
    }
    edges.push_back(Edge{AsInt(e[0], "edge endpoint"),
                         AsInt(e[1], "edge endpoint"),
                         AsInt(e[2], "edge weight")});
  }
  return CheckerboardGraph(vertices, std::move(edges), name);
}

SymmetrySpec ParseSymmetry(const json& doc) {
  if (!doc.is_object()) SchemaError("'symmetry' must be an object");
  RejectUnknownKeys(doc, "symmetry",
                    {"vertex_perm", "order", "kind", "lift_sign"});
  SymmetrySpec spec;
  const json& perm = Require(doc, "vertex_perm", "symmetry");
  if (!perm.is_array()) SchemaError("symmetry.vertex_perm must be an array");
  for (const json& p : perm) spec.vertex_perm.push_back(AsInt(p, "vertex_perm"));
  spec.order = AsInt(Require(doc, "order", "symmetry"), "symmetry.order");
  const json& kind = Require(doc, "kind", "symmetry");
  if (!kind.is_string()) SchemaError("symmetry.kind must be a string");
  spec.kind = ParseSymmetryKind(kind.get<std::string>());
  const json& sign = Require(doc, "lift_sign", "symmetry");
  if (sign.is_string()) {
    SchemaError("symmetry.lift_sign must be 1 or -1 (\"" +
                sign.get<std::string>() + "\" is not accepted)");
  }
  spec.lift_sign = AsInt(sign, "symmetry.lift_sign");
  if (spec.lift_sign != 1 && spec.lift_sign != -1) {
    SchemaError("symmetry.lift_sign must be 1 or -1");
  }
  return spec;
}

}  // namespace

KnotCase ParseCase(const json& doc) {
  if (!doc.is_object()) SchemaError("case must be a JSON object");
  RejectUnknownKeys(doc, "case",
                    {"name", "vertices", "edges", "symmetry",
                     "positive_crossings", "sigma", "bounds"});
  const json& name = Require(doc, "name", "case");
  if (!name.is_string()) SchemaError("'name' must be a string");
  const std::string case_name = name.get<std::string>();
  CheckerboardGraph graph = ParseGraph(doc, case_name);
  SymmetrySpec symmetry = ParseSymmetry(Require(doc, "symmetry", "case"));
  ValidateSymmetry(graph, symmetry);
  KnotCase out{case_name, std::move(graph), std::move(symmetry),
               OptionalInt(doc, "positive_crossings", "case"),
               OptionalInt(doc, "sigma", "case"), BoundsInput{}};
  if (doc.contains("bounds")) out.bounds = ParseBounds(doc.at("bounds"));
  if (out.positive_crossings) {
    const int computed = KnotSignature(out.graph, *out.positive_crossings);
    if (out.sigma && *out.sigma != computed) {
      throw Error(ErrorCode::kInconsistentSignature,
                  "sigma " + std::to_string(*out.sigma) +
                      " disagrees with sigma(G_F) - positive_crossings = " +
                      std::to_string(computed));
    }
  }
  return out;
}

KnotCase ParseCase(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return ParseCase(doc);
}

json SerializeCase(const KnotCase& c) {
  json edges = json::array();
  for (const Edge& e : c.graph.edges()) edges.push_back({e.u, e.v, e.weight});
  json out = {
      {"name", c.name},
      {"vertices", c.graph.vertex_count()},
      {"edges", edges},
      {"symmetry",
       {{"vertex_perm", c.symmetry.vertex_perm},
        {"order", c.symmetry.order},
        {"kind", std::string(SymmetryKindName(c.symmetry.kind))},
        {"lift_sign", c.symmetry.lift_sign}}},
  };
  if (c.positive_crossings) out["positive_crossings"] = *c.positive_crossings;
  if (c.sigma) out["sigma"] = *c.sigma;
  json bounds = SerializeBounds(c.bounds);
  if (!bounds.empty()) out["bounds"] = std::move(bounds);
  return out;
}

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    SchemaError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

KnotCase LoadCase(const std::filesystem::path& path) {
  return ParseCase(ReadJsonFile(path));
}

int CaseSignature(const KnotCase& c) {
  if (c.sigma) return *c.sigma;
  if (c.positive_crossings) {
    return KnotSignature(c.graph, *c.positive_crossings);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "case '" + c.name +
                  "' needs 'sigma' or 'positive_crossings' to fix sigma(K)");
}

BigMatrix ParseMatrix(const json& doc, std::string_view what) {
  if (!doc.is_array()) SchemaError(std::string(what) + " must be an array");
  const int rows = static_cast<int>(doc.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(doc[0].size());
  BigMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!doc[r].is_array() || static_cast<int>(doc[r].size()) != cols) {
      SchemaError(std::string(what) + " rows must be arrays of equal length");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = AsBigInt(doc[r][c], what);
  }
  return m;
}

bool LooksLikeRawForm(const json& doc) {
  return doc.is_array() || (doc.is_object() && doc.contains("gram"));
}

RawForm ParseRawForm(const json& doc) {
  if (doc.is_array()) {
    return RawForm{"", GramLattice(ParseMatrix(doc, "gram")), std::nullopt};
  }
  if (!doc.is_object()) SchemaError("form file must be an object or array");
  RejectUnknownKeys(doc, "form", {"name", "gram", "involution", "kind"});
  RawForm out{"", GramLattice(ParseMatrix(Require(doc, "gram", "form"), "gram")),
              std::nullopt};
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) SchemaError("'name' must be a string");
    out.name = doc.at("name").get<std::string>();
  }
  if (doc.contains("involution")) {
    out.involution = ParseMatrix(doc.at("involution"), "involution");
  }
  if (doc.contains("kind")) {
    if (!doc.at("kind").is_string()) SchemaError("'kind' must be a string");
    out.kind = ParseSymmetryKind(doc.at("kind").get<std::string>());
  }
  return out;
}

json BigIntJson(const BigInt& value) {
  if (value <= std::numeric_limits<std::int64_t>::max() &&
      value >= std::numeric_limits<std::int64_t>::min()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

json RationalJson(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return BigIntJson(boost::multiprecision::numerator(value));
  }
  return RationalToString(value);
}

json MatrixJson(const BigMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(BigIntJson(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json MatrixJson(const SmallMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    out.push_back(std::vector<std::int64_t>(m.row(r).begin(), m.row(r).end()));
  }
  return out;
}

json MatrixJson(const RationalMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(RationalJson(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace eqknot::cli
