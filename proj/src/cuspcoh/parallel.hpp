#pragma once

#include <cstddef>
#include <future>
#include <thread>
#include <utility>
#include <vector>

namespace cuspcoh {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Splits [0, count) into contiguous chunks, runs worker(begin, end) on each,
// and folds the partial results in chunk order. The fold order is fixed, so
// the result never depends on the parallelism width.
template <typename Result, typename Worker, typename Merge>
Result chunked_reduce(std::size_t count, int jobs, Result init, Worker worker, Merge merge) {
  if (count == 0) return init;
  std::size_t chunks = static_cast<std::size_t>(resolve_jobs(jobs));
  chunks = std::min(chunks, count);
  if (chunks <= 1) {
    merge(init, worker(std::size_t{0}, count));
    return init;
  }
  std::vector<std::future<Result>> parts;
  parts.reserve(chunks);
  const std::size_t base = count / chunks;
  const std::size_t rem = count % chunks;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < chunks; ++i) {
    std::size_t end = begin + base + (i < rem ? 1 : 0);
    parts.push_back(std::async(std::launch::async, worker, begin, end));
    begin = end;
  }
  for (auto& part : parts) merge(init, part.get());
  return init;
}

}  // namespace cuspcoh
