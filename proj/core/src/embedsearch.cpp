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

#include "eqknot/embedsearch.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "eqknot/parallel.hpp"

namespace eqknot {

BigMatrix GramOf(const Embedding& e) {
  const BigMatrix m = MatrixCast<BigInt>(e.matrix);
  return m.Transpose() * m;
}

SignedPermutation SignedPermutation::Identity(int k) {
  SignedPermutation p;
  p.perm.resize(k);
  std::iota(p.perm.begin(), p.perm.end(), 0);
  p.signs.assign(k, 1);
  return p;
}

void SignedPermutation::Validate() const {
  const int k = size();
  if (static_cast<int>(signs.size()) != k) {
    throw Error(ErrorCode::kInvalidArgument,
                "signed permutation has mismatched sign vector");
  }
  std::vector<bool> hit(k, false);
  for (int i = 0; i < k; ++i) {
    if (perm[i] < 0 || perm[i] >= k || hit[perm[i]]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    }
    hit[perm[i]] = true;
    if (signs[i] != 1 && signs[i] != -1) {
      throw Error(ErrorCode::kInvalidArgument, "signs must be +1 or -1");
    }
  }
}

SmallMatrix SignedPermutation::ToMatrix() const {
  SmallMatrix p(size(), size());
  for (int i = 0; i < size(); ++i) p(i, perm[i]) = signs[i];
  return p;
}

SmallMatrix SignedPermutation::Apply(const SmallMatrix& e) const {
  if (e.rows() != size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "signed permutation size differs from row count");
  }
  SmallMatrix out(e.rows(), e.cols());
  for (int i = 0; i < size(); ++i) {
    const auto src = e.row(perm[i]);
    auto dst = out.row(i);
    for (int c = 0; c < e.cols(); ++c) dst[c] = signs[i] * src[c];
  }
  return out;
}

namespace {

// Order of the signed permutation restricted to `indices`, which must be a
// union of cycles. A cycle of length L has order L when the product of its
// signs is +1 and 2L otherwise.
int CycleOrder(const std::vector<int>& perm, const std::vector<int>& signs,
               const std::vector<int>& indices) {
  std::vector<bool> seen(perm.size(), false);
  int order = 1;
  for (int start : indices) {
    if (seen[start]) continue;
    int length = 0;
    int sign = 1;
    for (int i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      sign *= signs[i];
      ++length;
    }
    order = std::lcm(order, sign == 1 ? length : 2 * length);
  }
  return order;
}

}  // namespace

int SignedPermutation::Order() const {
  std::vector<int> all(size());
  std::iota(all.begin(), all.end(), 0);
  return CycleOrder(perm, signs, all);
}

std::string SignedPermutation::ToString() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) {
    if (i > 0) os << " ";
    os << (signs[i] < 0 ? "-" : "+") << "e" << (perm[i] + 1) << "->e"
       << (i + 1);
  }
  os << "]";
  return os.str();
}

std::vector<IntVector> EnumerateVectors(int k, std::int64_t norm) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative dimension");
  std::vector<IntVector> out;
  if (norm < 0) return out;
  IntVector v(k, 0);
  // remaining = norm minus the squares placed so far.
  auto recurse = [&](auto&& self, int pos, std::int64_t remaining) -> void {
    if (pos == k) {
      if (remaining == 0) out.push_back(v);
      return;
    }
    std::int64_t bound = 0;
    while ((bound + 1) * (bound + 1) <= remaining) ++bound;
    for (std::int64_t x = -bound; x <= bound; ++x) {
      v[pos] = x;
      self(self, pos + 1, remaining - x * x);
    }
    v[pos] = 0;
  };
  recurse(recurse, 0, norm);
  return out;
}

namespace {

SmallMatrix CheckedGram(const GramLattice& lattice) {
  if (!IsPositiveDefinite(lattice)) {
    throw Error(ErrorCode::kNotDefinite,
                "embedding search needs a positive definite form");
  }
  return MatrixCast<std::int64_t>(lattice.gram());
}

// Depth-first column placement. In canonical mode only matrices that are
// their own CanonicalForm survive: rows sharing a prefix stay in ascending
// order and a row whose prefix is zero may only continue with an entry <= 0.
// Every Aut(Z^k) orbit has exactly one such member.
class ColumnSearch {
 public:
  ColumnSearch(SmallMatrix gram, int k, bool canonical_only)
      : gram_(std::move(gram)), k_(k), m_(gram_.rows()),
        canonical_(canonical_only) {
    for (int j = 0; j < m_; ++j) {
      const std::int64_t norm = gram_(j, j);
      auto [it, inserted] = by_norm_.try_emplace(norm);
      if (inserted) it->second = EnumerateVectors(k_, norm);
      columns_.push_back(&it->second);
    }
  }

  std::vector<Embedding> Run(const SearchOptions& options) const {
    if (m_ == 0) return {Embedding{SmallMatrix(k_, 0)}};
    SmallMatrix partial(k_, m_);
    std::vector<const IntVector*> roots;
    for (const IntVector& v : *columns_[0]) {
      if (Admissible(0, partial, v)) roots.push_back(&v);
    }
    std::vector<std::vector<Embedding>> found(roots.size());
    ParallelFor(static_cast<int>(roots.size()), options.threads, [&](int t) {
      SmallMatrix local(k_, m_);
      Place(local, 0, *roots[t]);
      Extend(1, local, found[t]);
    });
    std::vector<Embedding> out;
    for (auto& chunk : found) {
      std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
    }
    return out;
  }

 private:
  static void Place(SmallMatrix& partial, int j, const IntVector& v) {
    for (int r = 0; r < partial.rows(); ++r) partial(r, j) = v[r];
  }

  bool Admissible(int j, const SmallMatrix& partial, const IntVector& v) const {
    for (int i = 0; i < j; ++i) {
      std::int64_t dot = 0;
      for (int r = 0; r < k_; ++r) dot += partial(r, i) * v[r];
      if (dot != gram_(i, j)) return false;
    }
    if (!canonical_) return true;
    for (int r = 0; r < k_; ++r) {
      bool zero_prefix = true;
      bool same_as_previous = r > 0;
      for (int i = 0; i < j; ++i) {
        if (partial(r, i) != 0) zero_prefix = false;
        if (r > 0 && partial(r, i) != partial(r - 1, i)) {
          same_as_previous = false;
        }
      }
      if (zero_prefix && v[r] > 0) return false;
      if (same_as_previous && v[r - 1] > v[r]) return false;
    }
    return true;
  }

  void Extend(int j, SmallMatrix& partial, std::vector<Embedding>& out) const {
    if (j == m_) {
      out.push_back(Embedding{partial});
      return;
    }
    for (const IntVector& v : *columns_[j]) {
      if (!Admissible(j, partial, v)) continue;
      Place(partial, j, v);
      Extend(j + 1, partial, out);
    }
    for (int r = 0; r < k_; ++r) partial(r, j) = 0;
  }

  SmallMatrix gram_;
  int k_;
  int m_;
  bool canonical_;
  std::map<std::int64_t, std::vector<IntVector>> by_norm_;
  std::vector<const std::vector<IntVector>*> columns_;
};

}  // namespace

std::vector<Embedding> EnumerateEmbeddings(const GramLattice& lattice, int k,
                                           const SearchOptions& options) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative k");
  ColumnSearch search(CheckedGram(lattice), k, /*canonical_only=*/false);
  return search.Run(options);
}

std::vector<Embedding> EnumerateEmbeddingClasses(const GramLattice& lattice,
                                                 int k,
                                                 const SearchOptions& options) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative k");
  ColumnSearch search(CheckedGram(lattice), k, /*canonical_only=*/true);
  std::vector<Embedding> out = search.Run(options);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Lesser of r and -r: the first nonzero entry becomes negative.
void NormalizeRow(std::span<std::int64_t> row) {
  for (std::int64_t x : row) {
    if (x == 0) continue;
    if (x > 0) {
      for (std::int64_t& y : row) y = -y;
    }
    return;
  }
}

bool IsZeroRow(std::span<const std::int64_t> row) {
  return std::all_of(row.begin(), row.end(),
                     [](std::int64_t x) { return x == 0; });
}

}  // namespace

Embedding CanonicalForm(const Embedding& e) {
  std::vector<IntVector> rows;
  rows.reserve(e.k());
  for (int r = 0; r < e.k(); ++r) {
    IntVector row(e.matrix.row(r).begin(), e.matrix.row(r).end());
    NormalizeRow(row);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  SmallMatrix out(e.k(), e.m());
  for (int r = 0; r < e.k(); ++r) {
    std::copy(rows[r].begin(), rows[r].end(), out.row(r).begin());
  }
  return Embedding{std::move(out)};
}

BigInt OrbitSize(const Embedding& e) {
  const Embedding canonical = CanonicalForm(e);
  BigInt group = 1;
  for (int i = 1; i <= e.k(); ++i) group *= 2 * i;
  BigInt stabilizer = 1;
  int r = 0;
  while (r < e.k()) {
    int run = 1;
    while (r + run < e.k() &&
           std::equal(canonical.matrix.row(r).begin(),
                      canonical.matrix.row(r).end(),
                      canonical.matrix.row(r + run).begin())) {
      ++run;
    }
    const bool zero = IsZeroRow(canonical.matrix.row(r));
    for (int i = 1; i <= run; ++i) stabilizer *= zero ? 2 * i : i;
    r += run;
  }
  return group / stabilizer;
}

std::vector<OrbitClass> OrbitClasses(const std::vector<Embedding>& embeddings) {
  std::map<Embedding, BigInt> buckets;
  for (const Embedding& e : embeddings) ++buckets[CanonicalForm(e)];
  std::vector<OrbitClass> out;
  out.reserve(buckets.size());
  for (auto& [rep, count] : buckets) out.push_back(OrbitClass{rep, count});
  return out;
}

namespace {

struct CycleChoice {
  int length;
  int sign;
};

// Finds cycles on at most `free_rows` elements whose order d satisfies
// lcm(base_order, d) == target. Cycle lengths are non-decreasing.
bool ChooseFreeCycles(int free_rows, int base_order, int target,
                      int current_order, int min_length,
                      std::vector<CycleChoice>& chosen) {
  if (std::lcm(base_order, current_order) == target) return true;
  for (int length = min_length; length <= free_rows; ++length) {
    for (int sign : {1, -1}) {
      const int order = sign == 1 ? length : 2 * length;
      if (target % order != 0) continue;
      chosen.push_back({length, sign});
      if (ChooseFreeCycles(free_rows - length, base_order, target,
                           std::lcm(current_order, order), length, chosen)) {
        return true;
      }
      chosen.pop_back();
    }
  }
  return false;
}

class DeltaSearch {
 public:
  DeltaSearch(const SmallMatrix& e, const SmallMatrix& target,
              int required_order)
      : required_order_(required_order), perm_(e.rows(), -1),
        signs_(e.rows(), 1), used_(e.rows(), false) {
    for (int i = 0; i < e.rows(); ++i) {
      (IsZeroRow(e.row(i)) ? zero_rows_ : nonzero_rows_).push_back(i);
    }
    // Row i of P E is signs[i] * E[perm[i]] and must equal row i of E R.
    for (int i : nonzero_rows_) {
      std::vector<std::pair<int, int>> options;
      for (int j : nonzero_rows_) {
        const auto a = target.row(i);
        const auto b = e.row(j);
        if (std::equal(a.begin(), a.end(), b.begin())) {
          options.emplace_back(j, 1);
        } else if (std::equal(a.begin(), a.end(), b.begin(),
                              [](std::int64_t x, std::int64_t y) {
                                return x == -y;
                              })) {
          options.emplace_back(j, -1);
        }
      }
      options_.push_back(std::move(options));
    }
  }

  std::optional<SignedPermutation> Run() {
    if (Assign(0)) return SignedPermutation{perm_, signs_};
    return std::nullopt;
  }

 private:
  bool Assign(std::size_t index) {
    if (index == nonzero_rows_.size()) return CompleteFreeRows();
    const int i = nonzero_rows_[index];
    for (const auto& [j, sign] : options_[index]) {
      if (used_[j]) continue;
      used_[j] = true;
      perm_[i] = j;
      signs_[i] = sign;
      if (Assign(index + 1)) return true;
      used_[j] = false;
    }
    perm_[i] = -1;
    signs_[i] = 1;
    return false;
  }

  bool CompleteFreeRows() {
    const int base = CycleOrder(perm_, signs_, nonzero_rows_);
    if (required_order_ % base != 0) return false;
    std::vector<CycleChoice> cycles;
    const int free_rows = static_cast<int>(zero_rows_.size());
    if (!ChooseFreeCycles(free_rows, base, required_order_, 1, 1, cycles)) {
      return false;
    }
    std::size_t next = 0;
    for (const CycleChoice& cycle : cycles) {
      for (int t = 0; t < cycle.length; ++t) {
        const int row = zero_rows_[next + t];
        perm_[row] = zero_rows_[next + (t + 1) % cycle.length];
        signs_[row] = (t == 0) ? cycle.sign : 1;
      }
      next += cycle.length;
    }
    for (; next < zero_rows_.size(); ++next) {
      perm_[zero_rows_[next]] = zero_rows_[next];
      signs_[zero_rows_[next]] = 1;
    }
    return true;
  }

  int required_order_;
  std::vector<int> perm_;
  std::vector<int> signs_;
  std::vector<bool> used_;
  std::vector<int> nonzero_rows_;
  std::vector<int> zero_rows_;
  std::vector<std::vector<std::pair<int, int>>> options_;
};

}  // namespace

std::optional<SignedPermutation> EquivariantDelta(const Embedding& e,
                                                  const BigMatrix& r,
                                                  int required_order) {
  if (r.rows() != e.m() || r.cols() != e.m()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "isometry is " + std::to_string(r.rows()) + "x" +
                    std::to_string(r.cols()) + " but the embedding has " +
                    std::to_string(e.m()) + " columns");
  }
  if (required_order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "required order must be >= 1");
  }
  const SmallMatrix target =
      MatrixCast<std::int64_t>(MatrixCast<BigInt>(e.matrix) * r);
  DeltaSearch search(e.matrix, target, required_order);
  return search.Run();
}

std::string_view SignModeName(SignMode mode) {
  return mode == SignMode::kStrict ? "strict" : "both";
}

SignMode ParseSignMode(std::string_view text) {
  if (text == "strict") return SignMode::kStrict;
  if (text == "both") return SignMode::kBoth;
  throw Error(ErrorCode::kInvalidArgument,
              "sign mode must be 'strict' or 'both', got '" +
                  std::string(text) + "'");
}

ObstructionReport DonaldsonObstruction(const GramLattice& lattice,
                                       const LatticeIsometry& isometry,
                                       int sigma_k, int order,
                                       SignMode sign_mode,
                                       const SearchOptions& options) {
  if (!IsPositiveDefinite(lattice)) {
    throw Error(ErrorCode::kNotDefinite,
                "the Gordon-Litherland form is not positive definite");
  }
  if (sigma_k > 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "sigma(K) must be <= 0; mirror the knot first");
  }
  if (sigma_k % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "sigma(K) must be even");
  }
  if (order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "symmetry order must be >= 1");
  }
  if (isometry.rank() != lattice.rank() ||
      isometry.matrix.cols() != lattice.rank()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "isometry rank differs from lattice rank");
  }
  if (!PreservesForm(lattice, isometry.matrix)) {
    throw Error(ErrorCode::kNotIsometry, "R^T G R != G");
  }

  ObstructionReport report;
  report.sigma_k = sigma_k;
  report.rank = lattice.rank();
  report.k = -sigma_k + lattice.rank();
  report.required_order = order;
  report.sign_mode = sign_mode;

  const std::vector<Embedding> classes =
      EnumerateEmbeddingClasses(lattice, report.k, options);
  report.class_count = static_cast<int>(classes.size());
  const BigMatrix negated = -isometry.matrix;
  std::vector<ClassResult> results(classes.size());
  ParallelFor(static_cast<int>(classes.size()), options.threads, [&](int c) {
    ClassResult& result = results[c];
    result.representative = classes[c];
    result.orbit_size = OrbitSize(classes[c]);
    result.delta = EquivariantDelta(classes[c], isometry.matrix, order);
    if (!result.delta && sign_mode == SignMode::kBoth) {
      result.delta = EquivariantDelta(classes[c], negated, order);
      if (result.delta) result.isometry_sign = -1;
    }
  });
  report.per_class = std::move(results);

  report.obstructed = std::none_of(
      report.per_class.begin(), report.per_class.end(),
      [](const ClassResult& r) { return r.delta.has_value(); });
  const std::string genus = std::to_string(-sigma_k / 2);
  if (report.obstructed) {
    report.conclusion = "obstructed: no equivariant embedding into Z^" +
                        std::to_string(report.k) + ", so g̃₄(K) > " + genus;
  } else {
    report.conclusion = "not obstructed: an equivariant embedding into Z^" +
                        std::to_string(report.k) +
                        " exists, g̃₄(K) = " + genus + " is not ruled out";
  }
  return report;
}

}  // namespace eqknot
