#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "hoctop/analytics.hpp"

namespace hoctop {
namespace {

double linf(const PersistencePair& p, const PersistencePair& q) {
  return std::max(std::abs(p.birth - q.birth), std::abs(p.death - q.death));
}

double diagonal_cost(const PersistencePair& p) { return 0.5 * (p.death - p.birth); }

// Hopcroft-Karp on a bipartite graph with equal sides.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const std::vector<std::vector<std::uint32_t>>& adj)
      : adj_(adj), n_(adj.size()), match_left_(n_, kFree), match_right_(n_, kFree), dist_(n_) {}

  std::size_t maximum_matching() {
    std::size_t matched = 0;
    while (bfs()) {
      for (std::uint32_t u = 0; u < n_; ++u) {
        if (match_left_[u] == kFree && dfs(u)) ++matched;
      }
    }
    return matched;
  }

 private:
  static constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

  bool bfs() {
    std::queue<std::uint32_t> q;
    for (std::uint32_t u = 0; u < n_; ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kUnreached;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t v : adj_[u]) {
        const std::uint32_t w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kUnreached) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::uint32_t u) {
    for (std::uint32_t v : adj_[u]) {
      const std::uint32_t w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kUnreached;
    return false;
  }

  const std::vector<std::vector<std::uint32_t>>& adj_;
  std::size_t n_;
  std::vector<std::uint32_t> match_left_, match_right_, dist_;
};

// Left side: points of a, then diagonal slots for points of b.
// Right side: points of b, then diagonal slots for points of a.
bool perfect_matching_within(const std::vector<PersistencePair>& a, const std::vector<PersistencePair>& b,
                             double delta) {
  const std::size_t m = a.size(), l = b.size();
  std::vector<std::vector<std::uint32_t>> adj(m + l);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < l; ++j) {
      if (linf(a[i], b[j]) <= delta) adj[i].push_back(j);
    }
    if (diagonal_cost(a[i]) <= delta) adj[i].push_back(static_cast<std::uint32_t>(l + i));
  }
  for (std::uint32_t j = 0; j < l; ++j) {
    auto& row = adj[m + j];
    if (diagonal_cost(b[j]) <= delta) row.push_back(j);
    for (std::uint32_t i = 0; i < m; ++i) row.push_back(static_cast<std::uint32_t>(l + i));
  }
  return BipartiteMatcher(adj).maximum_matching() == m + l;
}

}  // namespace

double bottleneck_distance(const Diagram& da, const Diagram& db) {
  std::vector<PersistencePair> a, b;
  for (const auto& p : da.pairs()) {
    if (!p.is_diagonal()) a.push_back(p);
  }
  for (const auto& p : db.pairs()) {
    if (!p.is_diagonal()) b.push_back(p);
  }
  if (a.empty() && b.empty()) return 0.0;

  std::vector<double> candidates;
  candidates.reserve(a.size() * b.size() + a.size() + b.size());
  for (const auto& p : a) {
    candidates.push_back(diagonal_cost(p));
    for (const auto& q : b) candidates.push_back(linf(p, q));
  }
  for (const auto& q : b) candidates.push_back(diagonal_cost(q));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // The largest candidate always admits the all-to-diagonal matching.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (perfect_matching_within(a, b, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

}  // namespace hoctop
