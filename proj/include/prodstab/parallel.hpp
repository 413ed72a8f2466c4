#ifndef PRODSTAB_PARALLEL_HPP
#define PRODSTAB_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

namespace prodstab {

// Applies fn to 0..count-1 on up to `jobs` threads and collects the results
// in index order, so the output is independent of scheduling.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, int jobs, Fn fn) {
  std::vector<Result> results(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      results[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  int threads = std::min<std::size_t>(jobs, count);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace prodstab

#endif
