#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "clifftwist/signature.hpp"

namespace clifftwist {

/// All signatures with p+q <= max_n, ordered by (p+q, p).
std::vector<Signature> signatures_up_to(int max_n);

/// Worker count: explicit value, else CLIFFTWIST_JOBS, else hardware.
int resolve_jobs(int jobs);

/// Runs fn(i) for i in [0, count) on a small worker pool. Results must be
/// written into pre-sized slots so the output order is deterministic.
void parallel_for_index(std::size_t count, int jobs,
                        const std::function<void(std::size_t)>& fn);

}  // namespace clifftwist
