#include "clifftwist/monomial.hpp"

#include <algorithm>

namespace clifftwist {

std::vector<Mask> all_monomials_sorted(int n) {
  std::vector<Mask> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) out.push_back(static_cast<Mask>(m));
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

}  // namespace clifftwist
