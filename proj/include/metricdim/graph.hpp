#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metricdim/bitset.hpp"
#include "metricdim/errors.hpp"

namespace metricdim {

enum class Side : std::uint8_t { one = 0, two = 1 };

/// Immutable undirected graph over dense vertex ids 0..n-1, with bitset
/// adjacency rows and an optional bipartition label per vertex.
class Graph {
 public:
  int num_vertices() const { return n_; }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const DynBitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }

  bool has_parts() const { return side_.has_value(); }
  Side side(int v) const { return (*side_)[v]; }

  std::size_t num_edges() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  /// Edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges());
    for (int u = 0; u < n_; ++u)
      adj_[u].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  /// Vertices of one side in ascending id order; requires has_parts().
  std::vector<int> side_vertices(Side s) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if ((*side_)[v] == s) out.push_back(v);
    return out;
  }

  /// Trusted constructor for generators and decoders: adjacency is assumed
  /// symmetric and irreflexive, sides (when given) consistent.
  static Graph from_adjacency(std::vector<DynBitset> adj,
                              std::optional<std::vector<Side>> sides = std::nullopt) {
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    g.adj_ = std::move(adj);
    g.side_ = std::move(sides);
    return g;
  }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<DynBitset> adj_;
  std::optional<std::vector<Side>> side_;
};

/// Validating graph builder. `parts`, when present, lists the vertex ids of
/// each side; the two lists must partition 0..n-1 and every edge must join
/// the sides.
inline Graph build_graph(int num_vertices, std::span<const std::pair<int, int>> edge_list,
                         const std::optional<std::pair<std::vector<int>, std::vector<int>>>&
                             parts = std::nullopt) {
  if (num_vertices < 1) fail(errc::out_of_range, "graph needs at least one vertex");

  std::optional<std::vector<Side>> sides;
  if (parts) {
    std::vector<int> seen(num_vertices, 0);
    sides.emplace(num_vertices, Side::one);
    auto assign = [&](const std::vector<int>& ids, Side s) {
      for (int v : ids) {
        if (v < 0 || v >= num_vertices)
          fail(errc::out_of_range, "part vertex " + std::to_string(v) + " out of range");
        if (seen[v]++) fail(errc::out_of_range, "vertex " + std::to_string(v) + " listed twice in parts");
        (*sides)[v] = s;
      }
    };
    assign(parts->first, Side::one);
    assign(parts->second, Side::two);
    for (int v = 0; v < num_vertices; ++v)
      if (!seen[v]) fail(errc::out_of_range, "vertex " + std::to_string(v) + " missing from parts");
  }

  std::vector<DynBitset> adj(num_vertices, DynBitset(num_vertices));
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
      fail(errc::out_of_range,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) fail(errc::self_loop, "self loop at vertex " + std::to_string(u));
    if (adj[u].test(v))
      fail(errc::duplicate_edge,
           "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (sides && (*sides)[u] == (*sides)[v])
      fail(errc::edge_within_one_part,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins one part");
    adj[u].set(v);
    adj[v].set(u);
  }
  return Graph::from_adjacency(std::move(adj), std::move(sides));
}

inline Graph build_graph(int num_vertices, std::initializer_list<std::pair<int, int>> edge_list,
                         const std::optional<std::pair<std::vector<int>, std::vector<int>>>&
                             parts = std::nullopt) {
  return build_graph(num_vertices, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()),
                     parts);
}

/// True iff a BFS from vertex 0 reaches every vertex.
inline bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  DynBitset visited(n), frontier(n), next(n);
  visited.set(0);
  frontier.set(0);
  while (frontier.any()) {
    next.clear();
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    next.and_not(visited);
    visited |= next;
    std::swap(frontier, next);
  }
  return visited.count() == static_cast<std::size_t>(n);
}

}  // namespace metricdim
