#pragma once

// Frozen coordinate expansions of the three scalar products on the real
// spinor coordinate bases of Cl(2,2), Cl(1,2) and Cl(1,3). Each term is
// (K slot, left coordinate index, right coordinate index, sign): the product
// of the a-th and b-th real basis spinors contributes sign to that K slot.
// Coordinate indexing is column-major over (data7 slot, data6 slot), i.e.
// index = j * dimK + l, matching psi_{(j+1)(l+1)}.

#include <vector>

#include "clifftwist/forms.hpp"

namespace clifftwist::testutil {

struct OracleTerm {
  int slot;
  int a;
  int b;
  int sign;
};

struct CoordOracle {
  int p, q;
  ProductKind kind;
  int coords;  // number of real coordinates N * dimK
  std::vector<OracleTerm> terms;
};

inline std::vector<CoordOracle> coordinate_oracles() {
  std::vector<CoordOracle> out;

  // Cl(2,2), K = R, basis {f, e1 f, e2 f, e12 f}.
  out.push_back({2, 2, ProductKind::tp, 4,
                 {{0, 0, 0, +1}, {0, 1, 1, +1}, {0, 2, 2, +1}, {0, 3, 3, +1}}});
  out.push_back({2, 2, ProductKind::beta_plus, 4,
                 {{0, 2, 1, +1}, {0, 1, 2, -1}, {0, 3, 0, +1}, {0, 0, 3, -1}}});
  out.push_back({2, 2, ProductKind::beta_minus, 4,
                 {{0, 3, 0, +1}, {0, 1, 2, +1}, {0, 0, 3, -1}, {0, 2, 1, -1}}});

  // Cl(1,2), K = C with basis {1, e2}; coordinates
  // (psi11, psi12, psi21, psi22) over {f, e2 f, e1 f, e1 e2 f}.
  out.push_back({1, 2, ProductKind::tp, 4,
                 {{0, 0, 0, +1}, {0, 3, 3, +1}, {0, 2, 2, +1}, {0, 1, 1, +1},
                  {1, 2, 3, +1}, {1, 3, 2, -1}, {1, 0, 1, +1}, {1, 1, 0, -1}}});
  out.push_back({1, 2, ProductKind::beta_plus, 4,
                 {{0, 0, 2, +1}, {0, 3, 1, +1}, {0, 2, 0, +1}, {0, 1, 3, +1},
                  {1, 2, 1, +1}, {1, 3, 0, -1}, {1, 0, 3, +1}, {1, 1, 2, -1}}});
  out.push_back({1, 2, ProductKind::beta_minus, 4,
                 {{0, 0, 2, +1}, {0, 3, 1, +1}, {0, 2, 0, -1}, {0, 1, 3, -1},
                  {1, 2, 1, -1}, {1, 3, 0, -1}, {1, 0, 3, +1}, {1, 1, 2, +1}}});

  // Cl(1,3), K = H with basis {1, e2, e3, e23}; coordinates psi_{ij} with
  // i = 1,2 over {f, e1 f} and j = 1..4 over the K basis (index 4(i-1)+j-1).
  out.push_back({1, 3, ProductKind::tp, 8,
                 {{0, 0, 0, +1}, {0, 1, 1, +1}, {0, 2, 2, +1}, {0, 3, 3, +1},
                  {0, 4, 4, +1}, {0, 5, 5, +1}, {0, 6, 6, +1}, {0, 7, 7, +1},
                  {1, 0, 1, +1}, {1, 1, 0, -1}, {1, 2, 3, -1}, {1, 3, 2, +1},
                  {1, 4, 5, +1}, {1, 5, 4, -1}, {1, 6, 7, -1}, {1, 7, 6, +1},
                  {2, 0, 2, +1}, {2, 2, 0, -1}, {2, 1, 3, +1}, {2, 3, 1, -1},
                  {2, 4, 6, +1}, {2, 6, 4, -1}, {2, 5, 7, +1}, {2, 7, 5, -1},
                  {3, 0, 3, +1}, {3, 3, 0, -1}, {3, 1, 2, -1}, {3, 2, 1, +1},
                  {3, 4, 7, +1}, {3, 7, 4, -1}, {3, 5, 6, -1}, {3, 6, 5, +1}}});
  out.push_back({1, 3, ProductKind::beta_plus, 8,
                 {{0, 0, 4, +1}, {0, 4, 0, +1}, {0, 1, 5, +1}, {0, 5, 1, +1},
                  {0, 2, 6, +1}, {0, 6, 2, +1}, {0, 3, 7, +1}, {0, 7, 3, +1},
                  {1, 0, 5, +1}, {1, 5, 0, -1}, {1, 1, 4, -1}, {1, 4, 1, +1},
                  {1, 2, 7, -1}, {1, 7, 2, +1}, {1, 3, 6, +1}, {1, 6, 3, -1},
                  {2, 0, 6, +1}, {2, 6, 0, -1}, {2, 1, 7, +1}, {2, 7, 1, -1},
                  {2, 2, 4, -1}, {2, 4, 2, +1}, {2, 3, 5, -1}, {2, 5, 3, +1},
                  {3, 0, 7, +1}, {3, 7, 0, -1}, {3, 1, 6, -1}, {3, 6, 1, +1},
                  {3, 2, 5, +1}, {3, 5, 2, -1}, {3, 4, 3, +1}, {3, 3, 4, -1}}});
  out.push_back({1, 3, ProductKind::beta_minus, 8,
                 {{0, 0, 4, +1}, {0, 4, 0, -1}, {0, 1, 5, -1}, {0, 5, 1, +1},
                  {0, 2, 6, -1}, {0, 6, 2, +1}, {0, 3, 7, +1}, {0, 7, 3, -1},
                  {1, 0, 5, +1}, {1, 5, 0, -1}, {1, 1, 4, +1}, {1, 4, 1, -1},
                  {1, 2, 7, +1}, {1, 7, 2, -1}, {1, 3, 6, +1}, {1, 6, 3, -1},
                  {2, 0, 6, +1}, {2, 6, 0, -1}, {2, 1, 7, -1}, {2, 7, 1, +1},
                  {2, 2, 4, +1}, {2, 4, 2, -1}, {2, 3, 5, -1}, {2, 5, 3, +1},
                  {3, 0, 7, +1}, {3, 7, 0, +1}, {3, 1, 6, +1}, {3, 6, 1, +1},
                  {3, 2, 5, -1}, {3, 5, 2, -1}, {3, 3, 4, -1}, {3, 4, 3, -1}}});
  return out;
}

/// Evaluates the engine's product on all real basis spinor pairs and compares
/// term-for-term against the frozen expansion. Returns true on exact match.
inline bool coordinate_oracle_holds(const CoordOracle& oracle) {
  const CliData cd = make_clidata(make_signature(oracle.p, oracle.q));
  const int dim = cd.kstruct.dim;
  const int D = oracle.coords;
  // Expected tensor: expected[a][b] = K coordinate vector.
  std::vector<std::vector<std::vector<Rational>>> expected(
      D, std::vector<std::vector<Rational>>(D, std::vector<Rational>(dim)));
  for (const auto& t : oracle.terms)
    expected[t.a][t.b][t.slot] += t.sign;
  for (int a = 0; a < D; ++a) {
    for (int b = 0; b < D; ++b) {
      const KElement got =
          beta_product(cd.spinor_basis[a], cd.spinor_basis[b], cd, oracle.kind);
      if (got.a != expected[a][b]) return false;
    }
  }
  return true;
}

}  // namespace clifftwist::testutil
