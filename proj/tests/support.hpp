#pragma once

// Shared test utilities: independent oracles (naive dimension search by
// subset enumeration, a string-based graph6 encoder, brute-force isomorphism)
// and small generators. Everything here stays independent of the library
// code paths it is used to check.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "metricdim/metricdim.hpp"

namespace mdtest {

/// Calls fn(combination) for every k-subset of 0..n-1 in lexicographic
/// order; stops early when fn returns true. Returns true if stopped.
inline bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  if (k > n) return false;
  for (;;) {
    if (fn(comb)) return true;
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

/// Direct check that W gives every vertex a distinct distance vector,
/// written against the raw matrix (no library verification path).
inline bool naive_resolves(const metricdim::DistanceMatrix& dm, const std::vector<int>& w) {
  const int n = dm.size();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool split = false;
      for (int x : w)
        if (dm(x, u) != dm(x, v)) {
          split = true;
          break;
        }
      if (!split) return false;
    }
  return true;
}

struct NaiveDimension {
  int beta = 0;
  std::vector<int> basis;
};

/// Independent oracle: subsets in increasing cardinality, lexicographic
/// within each size; the first resolving subset found is returned.
inline NaiveDimension naive_metric_dimension(const metricdim::DistanceMatrix& dm) {
  const int n = dm.size();
  for (int k = 0; k <= n; ++k) {
    NaiveDimension result;
    bool found = for_each_combination(n, k, [&](const std::vector<int>& comb) {
      if (!naive_resolves(dm, comb)) return false;
      result.beta = k;
      result.basis = comb;
      return true;
    });
    if (found || (k == 0 && naive_resolves(dm, {}))) {
      if (!found) result = {0, {}};
      return result;
    }
  }
  return {n, {}};  // unreachable for connected graphs
}

/// Reference graph6 encoder built on a textual bitstring, independent of the
/// library's bit-packing.
inline std::string reference_graph6(int n, const std::function<bool(int, int)>& adj) {
  std::string header;
  header.push_back(static_cast<char>(63 + n));  // callers keep n <= 62
  std::string bits;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) bits.push_back(adj(row, col) ? '1' : '0');
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string payload;
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = (value << 1) | (bits[i + b] - '0');
    payload.push_back(static_cast<char>(63 + value));
  }
  return header + payload;
}

/// Brute-force isomorphism over all vertex permutations (fine for n <= 8).
inline bool isomorphic(const metricdim::Graph& a, const metricdim::Graph& b) {
  const int n = a.num_vertices();
  if (b.num_vertices() != n || a.num_edges() != b.num_edges()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline metricdim::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return metricdim::build_graph(n, edges);
}

inline metricdim::Graph random_connected_graph(std::mt19937& rng, int max_n = 8) {
  std::uniform_int_distribution<int> pick_n(2, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double probs[] = {0.25, 0.4, 0.6};
  for (;;) {
    const int n = pick_n(rng);
    const double p = probs[rng() % 3];
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unit(rng) < p) edges.emplace_back(u, v);
    metricdim::Graph g = metricdim::build_graph(n, edges);
    if (metricdim::is_connected(g)) return g;
  }
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/// Runs the CLI binary through the shell, capturing stdout and the exit
/// code; `env` is prepended verbatim (e.g. "METRICDIM_BUDGET=2").
inline CliResult run_cli(const std::string& args, const std::string& env = {}) {
#ifndef METRICDIM_CLI_PATH
  (void)env;
  return {-1, "METRICDIM_CLI_PATH not configured"};
#else
  CliResult result;
  const std::string cmd = (env.empty() ? std::string() : env + " ") +
                          std::string(METRICDIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
#endif
}

}  // namespace mdtest
