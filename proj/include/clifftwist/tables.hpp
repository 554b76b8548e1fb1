#pragma once

#include <string>
#include <vector>

#include "clifftwist/classify.hpp"

namespace clifftwist {

/// One classified signature in the sweep.
struct TableRow {
  int p = 0, q = 0, k = 0, N = 1;
  KClass cls = KClass::R;
  GroupName group;
  /// "beta+" on Euclidean rows, "beta-" on anti-Euclidean rows, where the
  /// transposition product coincides with the Lounesto product.
  std::string coincides;
};

/// Classifies the chosen product for every signature with p+q <= max_n.
std::vector<TableRow> table_sweep(int max_n, ProductKind kind, int jobs = 0);

}  // namespace clifftwist
