#pragma once

#include <array>
#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "metricdim/families.hpp"

namespace metricdim {

/// One gap: the run of non-landmark cycle vertices strictly between two
/// landmarks that are consecutive in the cycle order. Endpoint sides come
/// from the alternating layout parity (even positions are x-side).
struct Gap {
  int endpoint_a = -1;
  int endpoint_b = -1;
  Side side_a = Side::one;
  Side side_b = Side::one;
  std::vector<int> interior;

  int size() const { return static_cast<int>(interior.size()); }
};

/// Cyclic decomposition of a landmark set along one removed cycle: with r
/// landmarks on the cycle there are exactly r gaps, some possibly empty,
/// and the interiors partition the non-landmark cycle vertices.
struct GapStructure {
  CycleLayout cycle;
  std::vector<int> landmarks;  // cycle ids present in S, in cyclic order
  std::vector<Gap> gaps;       // gaps[i] runs from landmarks[i] to landmarks[i+1 mod r]
};

inline GapStructure gap_decompose(const CycleLayout& layout, std::span<const int> landmark_set) {
  const auto& order = layout.order;
  const int len = static_cast<int>(order.size());
  std::unordered_map<int, int> position;
  position.reserve(order.size());
  for (int p = 0; p < len; ++p) position.emplace(order[p], p);

  std::vector<int> marks;
  for (int v : landmark_set) {
    auto it = position.find(v);
    if (it != position.end()) marks.push_back(it->second);
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  if (marks.size() < 2)
    fail(errc::too_few_landmarks_on_cycle,
         "gap decomposition needs at least two landmarks on the cycle, got " +
             std::to_string(marks.size()));

  GapStructure gs;
  gs.cycle = layout;
  for (int p : marks) gs.landmarks.push_back(order[p]);

  const int r = static_cast<int>(marks.size());
  for (int i = 0; i < r; ++i) {
    const int a = marks[i];
    const int b = marks[(i + 1) % r];
    Gap gap;
    gap.endpoint_a = order[a];
    gap.endpoint_b = order[b];
    gap.side_a = (a % 2 == 0) ? Side::one : Side::two;
    gap.side_b = (b % 2 == 0) ? Side::one : Side::two;
    for (int p = (a + 1) % len; p != b; p = (p + 1) % len) gap.interior.push_back(order[p]);
    gs.gaps.push_back(std::move(gap));
  }
  return gs;
}

/// Audit of the structural gap facts on one or more cycles, plus (for
/// multi-cycle hosts) the cross-cycle conditions. Facts:
///   gap_at_most_four          every gap holds at most four vertices
///   at_most_one_four_gap      at most one gap per cycle holds four
///   large_gap_neighbors_small each gap with >= 2 vertices has both
///                             neighboring gaps of size <= 1
///   three_gaps_opposite_sides the endpoint sides of any two 3-gaps differ
///   no_three_gap_with_four_gap a 3-gap and a 4-gap never coexist
/// The conditions mirror the last three facts across all cycles at once.
struct GapAudit {
  bool gap_at_most_four = true;
  bool at_most_one_four_gap = true;
  bool large_gap_neighbors_small = true;
  bool three_gaps_opposite_sides = true;
  bool no_three_gap_with_four_gap = true;

  std::optional<bool> cond_at_most_one_four_gap;
  std::optional<bool> cond_three_gaps_opposite_sides;
  std::optional<bool> cond_no_three_gap_with_four_gap;

  std::array<int, 6> size_histogram{};  // counts for sizes 0..4; [5] counts 5+
  std::vector<Side> three_gap_sides;    // endpoint side of each 3-gap seen
  std::vector<std::string> violations;

  bool facts_hold() const {
    return gap_at_most_four && at_most_one_four_gap && large_gap_neighbors_small &&
           three_gaps_opposite_sides && no_three_gap_with_four_gap;
  }
  bool conditions_hold() const {
    return cond_at_most_one_four_gap.value_or(true) &&
           cond_three_gaps_opposite_sides.value_or(true) &&
           cond_no_three_gap_with_four_gap.value_or(true);
  }
};

namespace detail {

inline void audit_one_cycle(const GapStructure& gs, int cycle_index, GapAudit& audit) {
  const int r = static_cast<int>(gs.gaps.size());
  auto where = [&](int g) {
    return "gap " + std::to_string(g) + " on cycle " + std::to_string(cycle_index);
  };

  int four_gaps = 0;
  bool has_three = false;
  for (int g = 0; g < r; ++g) {
    const int sz = gs.gaps[g].size();
    ++audit.size_histogram[std::min(sz, 5)];
    if (sz > 4) {
      audit.gap_at_most_four = false;
      audit.violations.push_back(where(g) + " holds " + std::to_string(sz) + " vertices");
    }
    if (sz == 4) ++four_gaps;
    if (sz == 3) {
      has_three = true;
      audit.three_gap_sides.push_back(gs.gaps[g].side_a);
    }
    if (sz >= 2) {
      const int prev = (g + r - 1) % r;
      const int next = (g + 1) % r;
      if (gs.gaps[prev].size() > 1 || gs.gaps[next].size() > 1) {
        audit.large_gap_neighbors_small = false;
        audit.violations.push_back(where(g) + " has a neighboring gap with more than one vertex");
      }
    }
  }
  if (four_gaps > 1) {
    audit.at_most_one_four_gap = false;
    audit.violations.push_back("cycle " + std::to_string(cycle_index) + " holds " +
                               std::to_string(four_gaps) + " four-vertex gaps");
  }
  if (has_three && four_gaps > 0) {
    audit.no_three_gap_with_four_gap = false;
    audit.violations.push_back("cycle " + std::to_string(cycle_index) +
                               " holds both a three-vertex and a four-vertex gap");
  }
}

inline bool sides_pairwise_opposite(const std::vector<Side>& sides) {
  // More than two 3-gaps always repeat a side; two must differ.
  if (sides.size() > 2) return false;
  if (sides.size() == 2) return sides[0] != sides[1];
  return true;
}

}  // namespace detail

inline GapAudit check_facts(std::span<const GapStructure> structures) {
  GapAudit audit;
  for (std::size_t i = 0; i < structures.size(); ++i)
    detail::audit_one_cycle(structures[i], static_cast<int>(i), audit);
  // Fact-level side check stays per cycle; recompute over each cycle alone.
  audit.three_gaps_opposite_sides = true;
  std::size_t offset = 0;
  for (const auto& gs : structures) {
    std::vector<Side> sides;
    for (const auto& gap : gs.gaps)
      if (gap.size() == 3) sides.push_back(gap.side_a);
    if (!detail::sides_pairwise_opposite(sides)) {
      audit.three_gaps_opposite_sides = false;
      audit.violations.push_back("cycle " + std::to_string(offset) +
                                 " holds three-vertex gaps with matching endpoint sides");
    }
    ++offset;
  }
  return audit;
}

inline GapAudit check_facts(const GapStructure& gs) {
  return check_facts(std::span<const GapStructure>(&gs, 1));
}

/// Cross-cycle aggregation for multi-cycle hosts: at most one 4-gap overall,
/// all 3-gaps on pairwise opposite sides, and no 3-gap coexisting with a
/// 4-gap anywhere.
inline GapAudit check_multicycle_conditions(std::span<const GapAudit> per_cycle) {
  GapAudit global;
  int four_total = 0;
  for (const auto& a : per_cycle) {
    global.gap_at_most_four &= a.gap_at_most_four;
    global.at_most_one_four_gap &= a.at_most_one_four_gap;
    global.large_gap_neighbors_small &= a.large_gap_neighbors_small;
    global.three_gaps_opposite_sides &= a.three_gaps_opposite_sides;
    global.no_three_gap_with_four_gap &= a.no_three_gap_with_four_gap;
    for (std::size_t s = 0; s < a.size_histogram.size(); ++s)
      global.size_histogram[s] += a.size_histogram[s];
    four_total += a.size_histogram[4];
    global.three_gap_sides.insert(global.three_gap_sides.end(), a.three_gap_sides.begin(),
                                  a.three_gap_sides.end());
    global.violations.insert(global.violations.end(), a.violations.begin(), a.violations.end());
  }
  const bool has_three = !global.three_gap_sides.empty();
  global.cond_at_most_one_four_gap = four_total <= 1;
  global.cond_three_gaps_opposite_sides = detail::sides_pairwise_opposite(global.three_gap_sides);
  global.cond_no_three_gap_with_four_gap = !(has_three && four_total > 0);
  if (!*global.cond_at_most_one_four_gap)
    global.violations.push_back("host holds " + std::to_string(four_total) + " four-vertex gaps");
  if (!*global.cond_three_gaps_opposite_sides)
    global.violations.push_back("host holds three-vertex gaps with matching endpoint sides");
  if (!*global.cond_no_three_gap_with_four_gap)
    global.violations.push_back("host holds both a three-vertex and a four-vertex gap");
  return global;
}

/// Smallest landmark count s whose maximal gap capacity covers all 2m cycle
/// vertices: s = 2l leaves room for at most 3l+2 gap vertices, s = 2l+1 for
/// at most 3l+3.
inline int counting_lower_bound(int m) {
  if (m < 5) fail(errc::m_too_small, "counting bound needs m >= 5");
  for (int s = 2;; ++s) {
    const int l = s / 2;
    const int capacity = (s % 2 == 0) ? 3 * l + 2 : 3 * l + 3;
    if (2 * m - s <= capacity) return s;
  }
}

}  // namespace metricdim
