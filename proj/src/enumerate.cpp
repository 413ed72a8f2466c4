#include "prodstab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "prodstab/errors.hpp"

namespace prodstab {

namespace {

// Representatives are computed once per (n, loops) and shared; the filters
// are applied per call.
std::mutex cache_mutex;
std::map<std::pair<int, bool>, std::vector<Graph>> cache;

std::vector<Graph> representatives(int n, bool loops) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + (loops ? 0 : 1); j < n; ++j) slots.emplace_back(i, j);
  int s = int(slots.size());

  std::vector<std::vector<int>> slot_index(n, std::vector<int>(n, -1));
  for (int k = 0; k < s; ++k)
    slot_index[slots[k].first][slots[k].second] = k;

  // slot action of every vertex relabeling
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> slot_perms;
  do {
    std::vector<int> sp(s);
    for (int k = 0; k < s; ++k) {
      int a = perm[slots[k].first], b = perm[slots[k].second];
      sp[k] = slot_index[std::min(a, b)][std::max(a, b)];
    }
    slot_perms.push_back(std::move(sp));
  } while (std::next_permutation(perm.begin(), perm.end()));

  // sieve: walk masks in increasing order; the first unmarked mask of each
  // orbit is its minimum, i.e. the canonical representative
  std::vector<Graph> reps;
  std::vector<bool> marked(std::size_t(1) << s, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << s); ++mask) {
    if (marked[mask]) continue;
    for (const auto& sp : slot_perms) {
      std::uint64_t image = 0;
      for (int k = 0; k < s; ++k)
        if ((mask >> k) & 1) image |= std::uint64_t(1) << sp[k];
      marked[image] = true;
    }
    Graph g(n);
    for (int k = 0; k < s; ++k)
      if ((mask >> k) & 1) g.add_edge(slots[k].first, slots[k].second);
    reps.push_back(std::move(g));
  }
  return reps;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& opt) {
  if (n < 1) throw std::invalid_argument("enumerate_graphs: need n >= 1");
  int cap = opt.loops ? 5 : 7;
  if (n > cap)
    throw CapExceeded("enumerate_graphs capped at " + std::to_string(cap) +
                      (opt.loops ? " vertices with loops" : " vertices"));

  std::vector<Graph> reps;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::pair(n, opt.loops);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, representatives(n, opt.loops)).first;
    reps = it->second;
  }

  std::vector<Graph> out;
  for (auto& g : reps) {
    if (opt.connected && *opt.connected != is_connected(g)) continue;
    if (opt.bipartite && *opt.bipartite != is_bipartite(g).has_value())
      continue;
    if (opt.twin_free && *opt.twin_free != is_twin_free(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace prodstab
