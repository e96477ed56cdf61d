#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

/// All-pairs distance table with 8-bit entries; 255 marks unreachable.
class DistanceMatrix {
 public:
  static constexpr std::uint8_t kUnreachable = 255;

  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int size() const { return n_; }

  std::uint8_t operator()(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

  void set(int u, int v, std::uint8_t dist) {
    d_[static_cast<std::size_t>(u) * n_ + v] = dist;
  }

  bool all_finite() const {
    for (std::uint8_t x : d_)
      if (x == kUnreachable) return false;
    return true;
  }

 private:
  int n_;
  std::vector<std::uint8_t> d_;
};

/// Exact BFS distances, one source row at a time. Unreachable pairs keep the
/// 255 sentinel; a genuine distance above 254 is refused loudly.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.num_vertices();
  DistanceMatrix dm(n);
  DynBitset visited(n), frontier(n), next(n);
  for (int s = 0; s < n; ++s) {
    visited.clear();
    frontier.clear();
    visited.set(s);
    frontier.set(s);
    dm.set(s, s, 0);
    int depth = 0;
    while (frontier.any()) {
      ++depth;
      next.clear();
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      next.and_not(visited);
      if (next.any() && depth > 254)
        fail(errc::distance_overflow, "BFS distance exceeds 8-bit range");
      next.for_each([&](int v) { dm.set(s, v, static_cast<std::uint8_t>(depth)); });
      visited |= next;
      std::swap(frontier, next);
    }
  }
  return dm;
}

}  // namespace metricdim
