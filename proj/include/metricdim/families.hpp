#pragma once

#include <charconv>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/graph.hpp"

namespace metricdim {

// The three graph families. Side sizes are equal; x-side vertices take ids
// 0..n-1 (x_i -> i-1) and y-side vertices ids n..2n-1 (y_i -> n+i-1).
struct CrownSpec {
  int n;  // K_{n,n} minus the perfect matching x_i y_i
};
struct HamCompSpec {
  int m;  // K_{m,m} minus the Hamiltonian cycle x_1 y_1 x_2 y_2 ... x_m y_m x_1
};
struct MultiCycleSpec {
  std::vector<int> parts;  // K_{n,n} minus r disjoint even cycles of half-lengths m_i
};

using FamilySpec = std::variant<CrownSpec, HamCompSpec, MultiCycleSpec>;

/// One removed cycle in the canonical order x_1 y_1 x_2 y_2 ... (global ids).
/// Consecutive entries are non-edges of the generated graph; for half-length
/// two the "cycle" is the 4-cycle on the block's two x's and two y's.
struct CycleLayout {
  std::vector<int> order;
};

struct FamilyInstance {
  FamilySpec spec;
  Graph graph;
  std::vector<CycleLayout> cycles;                    // complement families
  std::vector<std::pair<int, int>> removed_matching;  // crown only
};

/// Side size n of the bipartition (total vertex count is 2n).
inline int family_side_count(const FamilySpec& spec) {
  if (auto* c = std::get_if<CrownSpec>(&spec)) return c->n;
  if (auto* h = std::get_if<HamCompSpec>(&spec)) return h->m;
  const auto& parts = std::get<MultiCycleSpec>(spec).parts;
  return std::accumulate(parts.begin(), parts.end(), 0);
}

inline int family_vertex_count(const FamilySpec& spec) { return 2 * family_side_count(spec); }

inline void validate(const FamilySpec& spec) {
  if (auto* c = std::get_if<CrownSpec>(&spec)) {
    if (c->n < 3) fail(errc::n_too_small, "crown requires n >= 3, got n=" + std::to_string(c->n));
    return;
  }
  if (auto* h = std::get_if<HamCompSpec>(&spec)) {
    if (h->m < 4)
      fail(errc::m_too_small, "hamcomp requires m >= 4, got m=" + std::to_string(h->m));
    return;
  }
  const auto& parts = std::get<MultiCycleSpec>(spec).parts;
  if (parts.empty()) fail(errc::bad_partition, "empty partition");
  int n = 0;
  bool has_two = false;
  for (int m : parts) {
    if (m < 2) fail(errc::bad_partition, "part " + std::to_string(m) + " below 2");
    has_two = has_two || m == 2;
    n += m;
  }
  if (has_two && (parts.size() < 2 || n < 5))
    fail(errc::disconnected, "a half-length-2 cycle needs r >= 2 and n >= 5");
  if (n < 4) fail(errc::bad_partition, "partition sums to n=" + std::to_string(n) + ", need n >= 4");
}

namespace detail {

// Block offset of component `idx` in a multi-cycle partition.
inline int block_offset(const std::vector<int>& parts, std::size_t idx) {
  int off = 0;
  for (std::size_t j = 0; j < idx; ++j) off += parts[j];
  return off;
}

// Cross-side adjacency by index arithmetic; a and b are 0-based x/y indices.
inline bool crown_adjacent(int a, int b) { return a != b; }

inline bool hamcomp_adjacent(int m, int a, int b) {
  return b != a && b != (a + m - 1) % m;  // removed partners of x_a are y_a and y_{a-1}
}

}  // namespace detail

/// Adjacency test straight from the family description (no graph needed).
inline bool family_adjacent(const FamilySpec& spec, int u, int v) {
  const int n = family_side_count(spec);
  if (u == v) return false;
  const bool side_u = u >= n, side_v = v >= n;
  if (side_u == side_v) return false;
  int a = side_u ? v : u;        // x-side id
  int b = (side_u ? u : v) - n;  // y-side index
  if (auto* c = std::get_if<CrownSpec>(&spec)) {
    (void)c;
    return detail::crown_adjacent(a, b);
  }
  if (auto* h = std::get_if<HamCompSpec>(&spec)) return detail::hamcomp_adjacent(h->m, a, b);
  const auto& parts = std::get<MultiCycleSpec>(spec).parts;
  int off = 0;
  for (int m : parts) {
    const bool a_in = a >= off && a < off + m;
    const bool b_in = b >= off && b < off + m;
    if (a_in != b_in) return true;  // different blocks: edge kept
    if (a_in && b_in) {
      if (m == 2) return false;  // the removed 4-cycle is all four cross pairs
      return detail::hamcomp_adjacent(m, a - off, b - off);
    }
    off += m;
  }
  return true;
}

namespace detail {

inline Graph build_family_graph(const FamilySpec& spec) {
  const int n = family_side_count(spec);
  std::vector<DynBitset> adj(2 * n, DynBitset(2 * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (family_adjacent(spec, a, n + b)) {
        adj[a].set(n + b);
        adj[n + b].set(a);
      }
  std::vector<Side> sides(2 * n, Side::one);
  for (int v = n; v < 2 * n; ++v) sides[v] = Side::two;
  return Graph::from_adjacency(std::move(adj), std::move(sides));
}

// Canonical layout of one removed cycle: x_1 y_1 x_2 y_2 ... x_m y_m, as
// global ids for a block starting at `offset` in a host with side size n.
inline CycleLayout block_cycle_layout(int n, int offset, int m) {
  CycleLayout layout;
  layout.order.reserve(2 * m);
  for (int i = 0; i < m; ++i) {
    layout.order.push_back(offset + i);
    layout.order.push_back(n + offset + i);
  }
  return layout;
}

}  // namespace detail

/// (n-1)-regular: K_{n,n} minus the perfect matching x_i y_i.
inline FamilyInstance gen_crown(int n) {
  FamilySpec spec = CrownSpec{n};
  validate(spec);
  FamilyInstance inst{spec, detail::build_family_graph(spec), {}, {}};
  for (int i = 0; i < n; ++i) inst.removed_matching.emplace_back(i, n + i);
  return inst;
}

/// (m-2)-regular: K_{m,m} minus one Hamiltonian cycle.
inline FamilyInstance gen_hamcomp(int m) {
  FamilySpec spec = HamCompSpec{m};
  validate(spec);
  FamilyInstance inst{spec, detail::build_family_graph(spec), {}, {}};
  inst.cycles.push_back(detail::block_cycle_layout(m, 0, m));
  return inst;
}

/// (n-2)-regular: K_{n,n} minus r disjoint even cycles, cycle i on its own
/// block of x/y indices in the canonical alternating order.
inline FamilyInstance gen_multicycle(const std::vector<int>& parts) {
  FamilySpec spec = MultiCycleSpec{parts};
  validate(spec);
  const int n = family_side_count(spec);
  FamilyInstance inst{spec, detail::build_family_graph(spec), {}, {}};
  int off = 0;
  for (int m : parts) {
    inst.cycles.push_back(detail::block_cycle_layout(n, off, m));
    off += m;
  }
  return inst;
}

inline FamilyInstance gen_family(const FamilySpec& spec) {
  if (auto* c = std::get_if<CrownSpec>(&spec)) return gen_crown(c->n);
  if (auto* h = std::get_if<HamCompSpec>(&spec)) return gen_hamcomp(h->m);
  return gen_multicycle(std::get<MultiCycleSpec>(spec).parts);
}

/// True when closed_form_distance covers the spec. HamComp(4) and the n=4
/// multi-cycle instance are excluded: those graphs are 8-cycles of diameter
/// four, while the closed form tops out at three.
inline bool closed_form_available(const FamilySpec& spec) {
  if (std::holds_alternative<CrownSpec>(spec)) return family_side_count(spec) >= 3;
  if (auto* h = std::get_if<HamCompSpec>(&spec)) return h->m >= 5;
  return family_side_count(spec) >= 5;
}

/// Distance without BFS: 0 on the diagonal, 1 across an edge, 2 within one
/// side, 3 for a removed cross pair. Valid for crown(n>=3), hamcomp(m>=5)
/// and multi-cycle hosts with n>=5.
inline int closed_form_distance(const FamilySpec& spec, int u, int v) {
  validate(spec);
  if (!closed_form_available(spec))
    fail(errc::spec_out_of_closed_form_range, "closed form not valid for this family instance");
  const int n = family_side_count(spec);
  if (u < 0 || v < 0 || u >= 2 * n || v >= 2 * n)
    fail(errc::out_of_range, "vertex id out of range");
  if (u == v) return 0;
  if (family_adjacent(spec, u, v)) return 1;
  return (u >= n) == (v >= n) ? 2 : 3;
}

/// Parses "crown:n=5", "hamcomp:m=7" or "multi:m=2,3,5".
inline FamilySpec parse_family_spec(std::string_view text) {
  auto bad = [&](const std::string& why) -> void {
    fail(errc::bad_format, "cannot parse family spec '" + std::string(text) + "': " + why);
  };
  auto colon = text.find(':');
  if (colon == std::string_view::npos) bad("expected '<family>:<params>'");
  std::string_view family = text.substr(0, colon);
  std::string_view params = text.substr(colon + 1);

  auto parse_int = [&](std::string_view s) -> int {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) bad("bad integer '" + std::string(s) + "'");
    return value;
  };

  if (family == "crown") {
    if (params.substr(0, 2) != "n=") bad("expected 'n=<count>'");
    FamilySpec spec = CrownSpec{parse_int(params.substr(2))};
    validate(spec);
    return spec;
  }
  if (family == "hamcomp") {
    if (params.substr(0, 2) != "m=") bad("expected 'm=<count>'");
    FamilySpec spec = HamCompSpec{parse_int(params.substr(2))};
    validate(spec);
    return spec;
  }
  if (family == "multi") {
    if (params.substr(0, 2) != "m=") bad("expected 'm=<m1,m2,...>'");
    std::vector<int> parts;
    std::string_view rest = params.substr(2);
    if (rest.empty()) bad("expected at least one part");
    for (;;) {
      auto comma = rest.find(',');
      std::string_view token = rest.substr(0, comma);
      if (token.empty()) bad("empty part");
      parts.push_back(parse_int(token));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    FamilySpec spec = MultiCycleSpec{std::move(parts)};
    validate(spec);
    return spec;
  }
  bad("unknown family '" + std::string(family) + "'");
  return CrownSpec{3};  // unreachable
}

inline std::string format_family_spec(const FamilySpec& spec) {
  if (auto* c = std::get_if<CrownSpec>(&spec)) return "crown:n=" + std::to_string(c->n);
  if (auto* h = std::get_if<HamCompSpec>(&spec)) return "hamcomp:m=" + std::to_string(h->m);
  std::string out = "multi:m=";
  const auto& parts = std::get<MultiCycleSpec>(spec).parts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace metricdim
