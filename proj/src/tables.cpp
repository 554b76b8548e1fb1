#include "clifftwist/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "clifftwist/sweep.hpp"

namespace clifftwist {

std::vector<Signature> signatures_up_to(int max_n) {
  std::vector<Signature> out;
  for (int n = 0; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p) out.push_back(make_signature(p, n - p));
  return out;
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("CLIFFTWIST_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for_index(std::size_t count, int jobs,
                        const std::function<void(std::size_t)>& fn) {
  const int workers = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(resolve_jobs(jobs)), count == 0 ? 1 : count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<TableRow> table_sweep(int max_n, ProductKind kind, int jobs) {
  const auto sigs = signatures_up_to(max_n);
  std::vector<TableRow> rows(sigs.size());
  parallel_for_index(sigs.size(), jobs, [&](std::size_t i) {
    const Signature sig = sigs[i];
    const CliData cd = make_clidata(sig);
    const GramForm g = gram(cd, kind);
    TableRow row;
    row.p = sig.p;
    row.q = sig.q;
    row.k = idempotent_k(sig);
    row.N = cd.N;
    row.cls = cd.cls;
    row.group = classify(g, cd);
    if (sig.q == 0 && sig.p == 0)
      row.coincides = "beta+;beta-";
    else if (sig.q == 0)
      row.coincides = "beta+";
    else if (sig.p == 0)
      row.coincides = "beta-";
    rows[i] = std::move(row);
  });
  return rows;
}

}  // namespace clifftwist
