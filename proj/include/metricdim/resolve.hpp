#pragma once

#include <algorithm>
#include <cstring>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metricdim/distance.hpp"

namespace metricdim {

/// r(v|W): distances from v to each landmark, in landmark order.
using Representation = std::vector<std::uint8_t>;

inline Representation representation(const DistanceMatrix& dm, int v,
                                     std::span<const int> landmarks) {
  Representation rep;
  rep.reserve(landmarks.size());
  for (int w : landmarks) {
    std::uint8_t d = dm(v, w);
    if (d == DistanceMatrix::kUnreachable)
      fail(errc::disconnected_graph, "infinite distance in representation");
    rep.push_back(d);
  }
  return rep;
}

struct ResolvingReport {
  bool resolving = false;
  std::optional<std::pair<int, int>> witness;  // equal-representation pair, u < v
  std::vector<int> landmarks;                  // echoed, sorted
};

/// Core verification over an arbitrary distance callable d(v, w) -> int.
/// Representations are materialised once and sorted, so instances with a
/// couple of thousand vertices stay cheap; the reported witness is the
/// lexicographically smallest colliding pair.
template <class DistFn>
ResolvingReport verify_resolving_with(int n, DistFn&& dist, std::span<const int> landmarks) {
  const std::size_t k = landmarks.size();
  std::vector<std::uint8_t> reps(static_cast<std::size_t>(n) * k);
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < k; ++i)
      reps[v * k + i] = static_cast<std::uint8_t>(dist(v, landmarks[i]));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto rep_of = [&](int v) { return reps.data() + static_cast<std::size_t>(v) * k; };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int c = std::memcmp(rep_of(a), rep_of(b), k);
    return c < 0 || (c == 0 && a < b);
  });

  ResolvingReport report;
  report.landmarks.assign(landmarks.begin(), landmarks.end());
  std::sort(report.landmarks.begin(), report.landmarks.end());

  std::optional<std::pair<int, int>> best;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && std::memcmp(rep_of(order[i]), rep_of(order[j]), k) == 0) ++j;
    if (j - i >= 2) {
      // order[i..j) share one representation and are id-sorted within the run
      std::pair<int, int> cand{order[i], order[i + 1]};
      if (!best || cand < *best) best = cand;
    }
    i = j;
  }
  report.resolving = !best.has_value();
  report.witness = best;
  return report;
}

/// Resolving-set check over a BFS distance matrix. Requires a connected
/// graph; an empty landmark set on a multi-vertex graph is reported as
/// NotResolving with witness (0, 1).
inline ResolvingReport verify_resolving(const DistanceMatrix& dm, std::span<const int> landmarks) {
  if (!dm.all_finite()) fail(errc::disconnected_graph, "distance matrix has unreachable pairs");
  for (int w : landmarks)
    if (w < 0 || w >= dm.size()) fail(errc::out_of_range, "landmark id out of range");
  return verify_resolving_with(dm.size(), [&](int v, int w) { return dm(v, w); }, landmarks);
}

/// Upper-bound heuristic: repeatedly add the vertex splitting the most
/// still-unresolved pairs, smallest id on ties. The result is verified by
/// construction (the loop only stops once every pair is split).
inline std::vector<int> greedy_resolving(const DistanceMatrix& dm) {
  if (!dm.all_finite()) fail(errc::disconnected_graph, "distance matrix has unreachable pairs");
  const int n = dm.size();
  std::vector<std::pair<int, int>> unresolved;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) unresolved.emplace_back(u, v);

  std::vector<int> picked;
  while (!unresolved.empty()) {
    int best_v = -1;
    std::size_t best_split = 0;
    for (int w = 0; w < n; ++w) {
      std::size_t split = 0;
      for (auto [u, v] : unresolved)
        if (dm(w, u) != dm(w, v)) ++split;
      if (split > best_split) {
        best_split = split;
        best_v = w;
      }
    }
    // Some vertex always splits a live pair (u itself splits (u, v)).
    picked.push_back(best_v);
    std::erase_if(unresolved,
                  [&](const std::pair<int, int>& p) { return dm(best_v, p.first) != dm(best_v, p.second); });
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

/// Hitting-set view of the resolving condition: one row per unordered vertex
/// pair, holding the set of vertices whose distances to the pair differ.
/// W resolves the graph iff W intersects every row.
struct PairResolverTable {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<DynBitset> resolvers;

  static PairResolverTable build(const DistanceMatrix& dm) {
    PairResolverTable t;
    t.n = dm.size();
    for (int u = 0; u < t.n; ++u)
      for (int v = u + 1; v < t.n; ++v) {
        DynBitset row(t.n);
        for (int w = 0; w < t.n; ++w)
          if (dm(w, u) != dm(w, v)) row.set(w);
        t.pairs.emplace_back(u, v);
        t.resolvers.push_back(std::move(row));
      }
    return t;
  }
};

struct ExactDimension {
  int beta = 0;
  std::vector<int> basis;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

namespace detail {

struct HittingSearch {
  const std::vector<DynBitset>& rows;
  int n;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::vector<int> chosen;

  // Packing lower bound on the vertices still needed: greedily collect
  // pairwise-disjoint unhit rows, restricted to candidates >= from. Returns
  // n + 1 when some row has no remaining candidate at all.
  int packing_bound(const std::vector<int>& unhit, int from) const {
    std::vector<std::pair<std::size_t, int>> by_size;
    by_size.reserve(unhit.size());
    std::vector<DynBitset> restricted;
    restricted.reserve(unhit.size());
    for (int idx : unhit) {
      DynBitset r = rows[idx];
      r.clear_below(static_cast<std::size_t>(from));
      std::size_t c = r.count();
      if (c == 0) return n + 1;
      by_size.emplace_back(c, static_cast<int>(restricted.size()));
      restricted.push_back(std::move(r));
    }
    std::sort(by_size.begin(), by_size.end());
    DynBitset used(static_cast<std::size_t>(n));
    int bound = 0;
    for (auto [c, i] : by_size) {
      (void)c;
      if (!restricted[i].intersects(used)) {
        ++bound;
        used |= restricted[i];
      }
    }
    return bound;
  }

  // Depth-first search over landmark sets in ascending-id (lexicographic)
  // order; the first complete hitting set of size `slots` + |chosen| found
  // is therefore the smallest one in lexicographic order.
  bool dfs(const std::vector<int>& unhit, int from, int slots) {
    if (++visited > budget) fail(errc::budget_exceeded, "search budget exhausted");
    if (unhit.empty()) return true;
    if (slots == 0) return false;
    if (packing_bound(unhit, from) > slots) return false;
    for (int v = from; v < n; ++v) {
      bool useful = false;
      for (int idx : unhit)
        if (rows[idx].test(static_cast<std::size_t>(v))) {
          useful = true;
          break;
        }
      if (!useful) continue;
      std::vector<int> next;
      next.reserve(unhit.size());
      for (int idx : unhit)
        if (!rows[idx].test(static_cast<std::size_t>(v))) next.push_back(idx);
      chosen.push_back(v);
      if (dfs(next, v + 1, slots - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// Exact metric dimension by branch-and-bound over the hitting-set
/// formulation. Deterministic: branching explores vertex ids in ascending
/// order, so the reported basis is the lexicographically smallest one among
/// the minimum resolving sets. The node budget guards against runaway
/// searches and fails loudly instead of returning a wrong answer.
inline ExactDimension exact_metric_dimension(const DistanceMatrix& dm,
                                             std::uint64_t budget = kDefaultSearchBudget) {
  if (!dm.all_finite()) fail(errc::disconnected_graph, "distance matrix has unreachable pairs");
  const int n = dm.size();
  if (n == 1) return {0, {}};

  PairResolverTable table = PairResolverTable::build(dm);
  std::vector<int> all_rows(table.resolvers.size());
  std::iota(all_rows.begin(), all_rows.end(), 0);

  const std::vector<int> upper = greedy_resolving(dm);

  detail::HittingSearch search{table.resolvers, n, budget};
  int lower = search.packing_bound(all_rows, 0);
  for (int k = std::max(lower, 1); k <= static_cast<int>(upper.size()); ++k) {
    search.chosen.clear();
    if (search.dfs(all_rows, 0, k)) return {k, search.chosen};
  }
  // The greedy set is itself a hitting set, so the loop cannot fall through.
  return {static_cast<int>(upper.size()), upper};
}

}  // namespace metricdim
