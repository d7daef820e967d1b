#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <thread>
#include <vector>

namespace dmt {

/// Number of worker threads to use for `work` independent items.
inline unsigned worker_count(std::size_t work, std::size_t min_per_worker = 32) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t by_work = std::max<std::size_t>(1, work / min_per_worker);
  return static_cast<unsigned>(std::min<std::size_t>(hw, by_work));
}

/// Runs body(worker, begin, end) over contiguous chunks of [0, count), one
/// chunk per worker thread, in increasing order of worker index.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
  if (workers <= 1 || count < 2) {
    body(0u, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = count * w / workers;
    const std::size_t hi = count * (w + 1) / workers;
    pool.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

struct ArgMax {
  std::size_t index = 0;
  double value = -1.0;
};

/// Largest eval(i) over [0, count); ties go to the smallest index, so the
/// result does not depend on how the range was split across threads.
template <typename Eval>
ArgMax parallel_argmax(std::size_t count, Eval&& eval, double tie_tol) {
  const unsigned workers = worker_count(count);
  std::vector<ArgMax> partial(workers);
  parallel_chunks(count, workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
    ArgMax best{lo, -std::numeric_limits<double>::infinity()};
    for (std::size_t i = lo; i < hi; ++i) {
      const double v = eval(i);
      if (v > best.value + tie_tol) best = {i, v};
    }
    partial[w] = best;
  });
  ArgMax best{0, -std::numeric_limits<double>::infinity()};
  for (const auto& p : partial)
    if (p.value > best.value + tie_tol) best = p;
  return best;
}

}  // namespace dmt
