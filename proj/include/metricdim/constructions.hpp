#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "metricdim/families.hpp"
#include "metricdim/gaps.hpp"
#include "metricdim/resolve.hpp"

namespace metricdim {

/// Dimension of the crown graph on 2n vertices.
inline int crown_beta(int n) {
  if (n < 3) fail(errc::n_too_small, "crown requires n >= 3");
  return n - 1;
}

/// Dimension of K_{m,m} minus a Hamiltonian cycle. m=4 is the 8-cycle,
/// which two landmarks resolve; from m=5 on the value is floor(4m/5).
inline int hamcomp_beta(int m) {
  if (m < 4) fail(errc::m_too_small, "hamcomp requires m >= 4");
  return m == 4 ? 2 : (4 * m) / 5;
}

/// The landmark set {x_1, ..., x_{n-1}}, ids 0..n-2.
inline std::vector<int> crown_basis(int n) {
  if (n < 3) fail(errc::n_too_small, "crown requires n >= 3");
  std::vector<int> basis(n - 1);
  std::iota(basis.begin(), basis.end(), 0);
  return basis;
}

namespace detail {

// Canonical minimum landmark set of K_{m,m} minus its cycle, viewed with
// local ids (x_i -> i-1, y_i -> m+i-1). The base pattern places
// {y_{5j+1}, y_{5j+2}, x_{5j+4}, x_{5j+5}} per full block of five; the
// residue tail keeps every gap at size <= 2 except for one final gap of
// three (residues 3, 4) or four (residues 1, 2) vertices.
inline std::vector<int> canonical_cycle_component_basis(int m) {
  if (m == 2) return {0, 2};  // {x_1, y_1}
  const int k = m / 5;
  std::vector<int> basis;
  for (int j = 0; j < k; ++j) {
    basis.push_back(m + 5 * j);      // y_{5j+1}
    basis.push_back(m + 5 * j + 1);  // y_{5j+2}
    basis.push_back(5 * j + 3);      // x_{5j+4}
    basis.push_back(5 * j + 4);      // x_{5j+5}
  }
  switch (m % 5) {
    case 0:
    case 1:
      break;
    case 2:
      basis.push_back(5 * k);  // x_{5k+1}
      break;
    case 3:
      basis.push_back(m + 5 * k);      // y_{5k+1}
      basis.push_back(m + 5 * k + 1);  // y_{5k+2}
      break;
    case 4:
      basis.push_back(m + 5 * k);
      basis.push_back(m + 5 * k + 1);
      basis.push_back(m + 5 * k + 2);  // y_{5k+3}
      break;
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

inline CycleLayout local_cycle_layout(int m) { return block_cycle_layout(m, 0, m); }

}  // namespace detail

/// Canonical minimum landmark set of hamcomp(m): floor(4m/5) vertices for
/// m >= 5, and the verified pair {x_1, y_1} for the 8-cycle at m=4.
inline std::vector<int> hamcomp_basis(int m) {
  if (m < 4) fail(errc::m_too_small, "hamcomp requires m >= 4");
  if (m == 4) return {0, 4};
  return detail::canonical_cycle_component_basis(m);
}

/// Dimension contributed by one cycle-complement component of half-length m
/// inside a host with side size host_n.
inline int component_beta(int m, int host_n) {
  if (m < 2 || host_n < m)
    fail(errc::invalid_combination, "component needs 2 <= m <= host n");
  if (m <= 3) {
    if (host_n < 5)
      fail(errc::invalid_combination, "half-length " + std::to_string(m) +
                                          " components need a host with n >= 5");
    return 2;
  }
  if (m == 4) return host_n == 4 ? 2 : 3;
  return (4 * m) / 5;
}

/// Distance inside one component of a multi-cycle host with n >= 5, using
/// local ids: 1 across a kept edge, 2 within a side, 3 for a removed pair.
inline int component_distance(int m, int u, int v) {
  if (u == v) return 0;
  const bool su = u >= m, sv = v >= m;
  if (su == sv) return 2;
  const int a = su ? v : u;
  const int b = (su ? u : v) - m;
  if (m == 2) return 3;  // both cross pairs of the block are removed
  return detail::hamcomp_adjacent(m, a, b) ? 1 : 3;
}

/// Small-component landmark sets (local ids): {x_1, y_1} for m=2, {y_1, y_2}
/// for m=3, {y_1, y_2, y_3} for m=4 in a larger host, and the 8-cycle pair
/// {x_1, y_1} when the component is the whole n=4 host.
inline std::vector<int> small_component_basis(int m, int host_n) {
  if (m < 2 || m > 4) fail(errc::invalid_combination, "small components have m in {2,3,4}");
  if (m == 4 && host_n == 4) return {0, 4};
  component_beta(m, host_n);  // validates the combination
  return detail::canonical_cycle_component_basis(m);
}

/// Closed-form dimension of a multi-cycle complement, with the branch that
/// produced it. k1 counts components with m=2 or m divisible by five, k2
/// those with m = 1 (mod 5), k3 the rest (m >= 3 with m = 2, 3, 4 (mod 5)).
struct DimensionFormulaResult {
  int beta = 0;
  std::string case_tag;             // "even-cycle", "component-sum",
                                    // "component-sum+k2+k3-2", "component-sum+k2+k3-1"
  std::vector<int> component_betas;
  int k1 = 0, k2 = 0, k3 = 0;
};

inline DimensionFormulaResult multicycle_beta(const std::vector<int>& parts) {
  validate(FamilySpec{MultiCycleSpec{parts}});
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  const int r = static_cast<int>(parts.size());

  DimensionFormulaResult res;
  for (int m : parts) {
    if (m == 2 || m % 5 == 0)
      ++res.k1;
    else if (m % 5 == 1)
      ++res.k2;
    else
      ++res.k3;
  }
  if (n == 4) {
    res.beta = 2;
    res.case_tag = "even-cycle";
    res.component_betas.assign(parts.size(), 2);
    return res;
  }
  int sum = 0;
  for (int m : parts) {
    const int b = component_beta(m, n);
    res.component_betas.push_back(b);
    sum += b;
  }
  if (r == 1 || res.k1 >= r - 1) {
    res.beta = sum;
    res.case_tag = "component-sum";
  } else if (res.k3 >= 2) {
    res.beta = sum + res.k2 + res.k3 - 2;
    res.case_tag = "component-sum+k2+k3-2";
  } else {
    res.beta = sum + res.k2 + res.k3 - 1;
    res.case_tag = "component-sum+k2+k3-1";
  }
  return res;
}

namespace detail {

// Mirrors a local landmark set to the opposite side of the cycle by the
// rotation x_i -> y_i, y_i -> x_{i+1}, a graph automorphism of the
// complement. Moves a 3-gap's endpoint pair from one side to the other.
inline std::vector<int> mirror_component_basis(int m, const std::vector<int>& basis) {
  std::vector<int> out;
  out.reserve(basis.size());
  for (int v : basis) {
    if (v < m)
      out.push_back(m + v);          // x_{i} position shifts onto y_{i}
    else
      out.push_back((v - m + 1) % m);  // y_{i} shifts onto x_{i+1}
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Inserts the second interior vertex of every gap with three or more
// vertices, leaving all gaps at size <= 2 (+1 landmark per oversized gap).
inline std::vector<int> augment_to_small_gaps(int m, std::vector<int> basis) {
  const CycleLayout layout = local_cycle_layout(m);
  GapStructure gs = gap_decompose(layout, basis);
  for (const Gap& gap : gs.gaps)
    if (gap.size() >= 3) basis.push_back(gap.interior[1]);
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace detail

/// Assembles a minimum landmark set of a multi-cycle complement from the
/// per-component canonical sets:
///   - m=2 and m = 0 (mod 5) components keep their all-gaps<=2 sets;
///   - depending on the formula branch, one or two components keep a set
///     with one large gap (two 3-gaps are placed on opposite sides);
///   - every other component's set is augmented to all-gaps<=2.
/// The result is post-verified; a failure to reach the formula size or the
/// verifier rejecting the set raises AssemblyFailed.
inline std::vector<int> multicycle_basis(const std::vector<int>& parts) {
  const FamilySpec spec = MultiCycleSpec{parts};
  validate(spec);
  const int n = family_side_count(spec);
  if (n == 4) return {0, 4};  // single possibility: the 8-cycle

  const DimensionFormulaResult formula = multicycle_beta(parts);
  const int r = static_cast<int>(parts.size());

  enum class Role { small_gaps, keep, keep_mirrored, augment };
  std::vector<Role> roles(parts.size());
  auto klass = [&](int m) { return (m == 2 || m % 5 == 0) ? 1 : (m % 5 == 1 ? 2 : 3); };
  auto three_gap_capable = [&](int m) { return m % 5 == 3 || m % 5 == 4; };

  for (std::size_t i = 0; i < parts.size(); ++i)
    roles[i] = klass(parts[i]) == 1 ? Role::small_gaps : Role::augment;

  if (formula.case_tag == "component-sum") {
    // At most one component is outside class one; it keeps its canonical set.
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (klass(parts[i]) != 1) roles[i] = Role::keep;
  } else if (formula.case_tag == "component-sum+k2+k3-2") {
    int kept = 0;
    for (std::size_t i = 0; i < parts.size() && kept < 2; ++i)
      if (klass(parts[i]) == 3 && three_gap_capable(parts[i]))
        roles[i] = (kept++ == 0) ? Role::keep : Role::keep_mirrored;
  } else {  // component-sum+k2+k3-1
    bool kept = false;
    for (std::size_t i = 0; i < parts.size() && !kept; ++i)
      if (klass(parts[i]) == 3) {
        roles[i] = Role::keep;
        kept = true;
      }
    for (std::size_t i = 0; i < parts.size() && !kept; ++i)
      if (klass(parts[i]) == 2) {
        roles[i] = Role::keep;
        kept = true;
      }
  }

  std::vector<int> landmarks;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int m = parts[i];
    std::vector<int> local = detail::canonical_cycle_component_basis(m);
    switch (roles[i]) {
      case Role::small_gaps:
      case Role::keep:
        break;
      case Role::keep_mirrored:
        local = detail::mirror_component_basis(m, local);
        break;
      case Role::augment:
        local = detail::augment_to_small_gaps(m, local);
        break;
    }
    const int off = detail::block_offset(parts, i);
    for (int v : local) landmarks.push_back(v < m ? off + v : n + off + (v - m));
  }
  std::sort(landmarks.begin(), landmarks.end());

  if (static_cast<int>(landmarks.size()) != formula.beta)
    fail(errc::assembly_failed, "assembled " + std::to_string(landmarks.size()) +
                                    " landmarks, formula expects " + std::to_string(formula.beta));
  ResolvingReport report = verify_resolving_with(
      2 * n, [&](int u, int v) { return closed_form_distance(spec, u, v); }, landmarks);
  if (!report.resolving)
    fail(errc::assembly_failed,
         "assembled set fails verification; colliding pair (" +
             std::to_string(report.witness->first) + "," + std::to_string(report.witness->second) +
             ")");
  (void)r;
  return landmarks;
}

}  // namespace metricdim
