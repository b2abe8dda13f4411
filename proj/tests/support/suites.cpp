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

#include "support/suites.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "eqknot/checkerboard.hpp"
#include "eqknot/embedsearch.hpp"
#include "eqknot/gsignature.hpp"
#include "eqknot/lattice.hpp"
#include "support/oracles.hpp"

namespace eqknot::testing {

namespace {

std::string Describe(const BigMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  os << "]";
  return os.str();
}

std::string Describe(const SmallMatrix& m) { return Describe(Big(m)); }

SmallMatrix RandomSmall(Random& rng, int rows, int cols, int lo, int hi) {
  SmallMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = rng.Int(lo, hi);
  }
  return m;
}

}  // namespace

SuiteResult RowSumZeroSuite(std::uint64_t seed, int cases) {
  SuiteResult out{"row sums of the full form vanish"};
  Random rng(seed);
  for (; out.cases < cases; ++out.cases) {
    const CheckerboardGraph g =
        rng.SignedGraph(rng.Int(1, 8), rng.Int(0, 10));
    const BigMatrix full = GlFullForm(g).gram();
    bool ok = full.IsSymmetric();
    for (int r = 0; r < full.rows() && ok; ++r) {
      BigInt sum = 0;
      for (int c = 0; c < full.cols(); ++c) sum += full(r, c);
      ok = sum == 0 && full(r, r) == g.VertexWeight(r);
    }
    if (!ok) out.Fail("full form " + Describe(full));
  }
  return out;
}

SuiteResult CongruenceSuite(std::uint64_t seed, int cases) {
  SuiteResult out{"signature is a congruence invariant"};
  Random rng(seed);
  for (; out.cases < cases; ++out.cases) {
    const int n = rng.Int(0, 6);
    const BigMatrix g = rng.Symmetric(n, -4, 4);
    const auto [u, inv] = rng.Unimodular(n, 3 * n + 1);
    const BigMatrix moved = u.Transpose() * g * u;
    const SignatureTriple before = Signature(GramLattice(g));
    if (u * inv != BigMatrix::Identity(n)) {
      out.Fail("bad unimodular pair " + Describe(u));
    } else if (Signature(GramLattice(moved)) != before) {
      out.Fail("G = " + Describe(g) + ", U = " + Describe(u));
    } else if (CharpolySignature(g) != before) {
      out.Fail("characteristic polynomial disagrees on " + Describe(g));
    }
  }
  return out;
}

SuiteResult CanonicalFormSuite(std::uint64_t seed, int cases) {
  SuiteResult out{"canonical form is idempotent and orbit constant"};
  Random rng(seed);
  for (; out.cases < cases; ++out.cases) {
    const int k = rng.Int(1, 7);
    const Embedding e{RandomSmall(rng, k, rng.Int(1, 4), -2, 2)};
    const Embedding c = CanonicalForm(e);
    const SignedPermutation p = rng.SignedPerm(k);
    const Embedding moved{p.Apply(e.matrix)};
    if (CanonicalForm(c) != c) {
      out.Fail("not idempotent on " + Describe(e.matrix));
    } else if (CanonicalForm(moved) != c) {
      out.Fail("orbit constancy fails on " + Describe(e.matrix) + " with " +
               p.ToString());
    } else if (GramOf(c) != GramOf(e)) {
      out.Fail("Gram changed on " + Describe(e.matrix));
    }
  }
  return out;
}

SuiteResult OrbitSizeSuite(std::uint64_t seed, int cases) {
  SuiteResult out{"orbit size equals the orbit counted by brute force"};
  Random rng(seed);
  std::vector<std::vector<SignedPermutation>> group(6);
  for (int k = 1; k <= 5; ++k) group[k] = AllSignedPermutations(k);
  for (; out.cases < cases; ++out.cases) {
    const int k = rng.Int(1, 5);
    const Embedding e{RandomSmall(rng, k, rng.Int(1, 3), -1, 1)};
    std::set<SmallMatrix> orbit;
    for (const SignedPermutation& p : group[k]) orbit.insert(p.Apply(e.matrix));
    if (OrbitSize(e) != BigInt(orbit.size())) {
      out.Fail(Describe(e.matrix) + " has orbit " +
               std::to_string(orbit.size()));
    }
  }
  return out;
}

SuiteResult GSigAntipodeSuite(std::uint64_t seed, int cases) {
  SuiteResult out{"gsig(G, -R) = -gsig(G, R)"};
  Random rng(seed);
  for (; out.cases < cases; ++out.cases) {
    const FormWithInvolution f = RandomFormWithInvolution(rng, rng.Int(1, 6));
    const Rational a = GSigInvolution(f.lattice, f.involution).gsig;
    const Rational b = GSigInvolution(f.lattice, -f.involution).gsig;
    if (a != -b) {
      out.Fail("G = " + Describe(f.lattice.gram()) + ", R = " +
               Describe(f.involution));
    }
  }
  return out;
}

SuiteResult GSigAdditivitySuite(std::uint64_t seed, int cases) {
  SuiteResult out{"gsig is additive under direct sum"};
  Random rng(seed);
  for (; out.cases < cases; ++out.cases) {
    const FormWithInvolution f = RandomFormWithInvolution(rng, rng.Int(0, 4));
    const FormWithInvolution h = RandomFormWithInvolution(rng, rng.Int(0, 4));
    const Rational expected = GSigInvolution(f.lattice, f.involution).gsig +
                              GSigInvolution(h.lattice, h.involution).gsig;
    const Rational direct =
        GSigInvolution(GramLattice(DirectSum(f.lattice.gram(),
                                             h.lattice.gram())),
                       DirectSum(f.involution, h.involution))
            .gsig;
    const Rational helper =
        GSigDirectSum(f.lattice, f.involution, h.lattice, h.involution).gsig;
    if (direct != expected || helper != expected) {
      out.Fail("G1 = " + Describe(f.lattice.gram()) + ", G2 = " +
               Describe(h.lattice.gram()));
    }
  }
  return out;
}

SuiteResult GSigRankSuite(std::uint64_t seed, int cases) {
  SuiteResult out{"|gsig| <= rank"};
  Random rng(seed);
  for (; out.cases < cases; ++out.cases) {
    const FormWithInvolution f = RandomFormWithInvolution(rng, rng.Int(0, 6));
    const GSignatureReport r = GSigInvolution(f.lattice, f.involution);
    const Rational abs = r.gsig < 0 ? Rational(-r.gsig) : r.gsig;
    if (abs > f.lattice.rank() ||
        r.dim_plus + r.dim_minus != f.lattice.rank()) {
      out.Fail("G = " + Describe(f.lattice.gram()));
    }
  }
  return out;
}

SuiteResult EmbeddingOracleSuite(std::uint64_t seed, int cases) {
  SuiteResult out{"pruned embedding search equals brute force"};
  Random rng(seed);
  for (; out.cases < cases; ++out.cases) {
    const int m = rng.Int(1, 3);
    const BigMatrix g = rng.PositiveDefinite(m, 4);
    const int k = rng.Int(m, 4);
    const std::vector<Embedding> expected = BruteEmbeddings(g, k);
    out.positives += expected.empty() ? 0 : 1;
    std::vector<Embedding> found = EnumerateEmbeddings(GramLattice(g), k);
    std::sort(found.begin(), found.end());
    if (found != expected) {
      out.Fail("G = " + Describe(g) + ", k = " + std::to_string(k) + ": " +
               std::to_string(found.size()) + " vs " +
               std::to_string(expected.size()));
      continue;
    }
    std::vector<Embedding> reps;
    BigInt total = 0;
    for (const OrbitClass& c : OrbitClasses(expected)) {
      reps.push_back(c.representative);
      total += c.orbit_size;
      if (OrbitSize(c.representative) != c.orbit_size) {
        out.Fail("orbit size of " + Describe(c.representative.matrix));
      }
    }
    if (EnumerateEmbeddingClasses(GramLattice(g), k) != reps ||
        total != BigInt(expected.size())) {
      out.Fail("classes differ for G = " + Describe(g) + ", k = " +
               std::to_string(k));
    }
  }
  return out;
}

SuiteResult DeltaOracleSuite(std::uint64_t seed, int cases) {
  SuiteResult out{"delta search equals exhaustive search"};
  Random rng(seed);
  const int kOrders[] = {1, 2, 3, 4, 6};
  for (; out.cases < cases; ++out.cases) {
    const int k = rng.Int(1, 5);
    const int m = rng.Int(1, std::min(k, 3));
    const SmallMatrix r = rng.SignedPerm(m).ToMatrix();
    SmallMatrix e(k, m);
    if (rng.Coin()) {
      // Rows closed under right multiplication by R, so delta often exists.
      int row = 0;
      while (row < k) {
        const SmallMatrix first = RandomSmall(rng, 1, m, -1, 1);
        SmallMatrix v = first;
        do {
          for (int c = 0; c < m; ++c) e(row, c) = v(0, c);
          v = v * r;
          ++row;
        } while (row < k && !(v == first));
        if (rng.Int(0, 3) == 0) break;
      }
    } else {
      e = RandomSmall(rng, k, m, -1, 1);
    }
    const int order =
        rng.Coin() ? MatrixOrder(r) : kOrders[rng.Int(0, 4)];
    const Embedding emb{e};
    const std::vector<SignedPermutation> all = BruteDeltas(emb, r, order);
    const std::optional<SignedPermutation> found =
        EquivariantDelta(emb, Big(r), order);
    out.positives += all.empty() ? 0 : 1;
    const std::string where = "E = " + Describe(e) + ", R = " + Describe(r) +
                              ", order " + std::to_string(order);
    if (found.has_value() != !all.empty()) {
      out.Fail(where + ": search " + (found ? "found" : "missed") +
               ", oracle has " + std::to_string(all.size()));
    } else if (found &&
               std::find(all.begin(), all.end(), *found) == all.end()) {
      out.Fail(where + ": returned " + found->ToString() +
               " is not a valid delta");
    }
  }
  return out;
}

}  // namespace eqknot::testing
