#pragma once

#include <string>
#include <string_view>

#include "metricdim/graph.hpp"

namespace metricdim {

namespace detail {

inline void append_bigendian_6bit_groups(std::string& out, std::uint64_t value, int groups) {
  for (int g = groups - 1; g >= 0; --g)
    out.push_back(static_cast<char>(63 + ((value >> (6 * g)) & 63)));
}

}  // namespace detail

/// Standard graph6 encoding: N(n) header, then the upper-triangular
/// adjacency bits in column-major order (x(0,1), x(0,2), x(1,2), ...),
/// packed big-endian into 6-bit printable chunks offset by 63.
inline std::string encode_graph6(const Graph& g) {
  const int n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    detail::append_bigendian_6bit_groups(out, static_cast<std::uint64_t>(n), 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    detail::append_bigendian_6bit_groups(out, static_cast<std::uint64_t>(n), 6);
  }

  int acc = 0, acc_bits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++acc_bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        acc_bits = 0;
      }
    }
  }
  if (acc_bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - acc_bits))));
  return out;
}

/// Inverse of encode_graph6. Rejects bad header bytes and payloads whose
/// length does not match the encoded vertex count. Trailing newlines are
/// tolerated; decoded graphs carry no bipartition labels.
inline Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) fail(errc::malformed_header, "empty graph6 string");

  auto value_at = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      fail(errc::malformed_header, "byte " + std::to_string(i) + " outside graph6 alphabet");
    return c - 63;
  };

  std::size_t pos = 0;
  std::uint64_t n64 = 0;
  if (text[0] != 126) {
    n64 = static_cast<std::uint64_t>(value_at(0));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) fail(errc::malformed_header, "truncated long-form vertex count");
    for (std::size_t i = 1; i <= 3; ++i) n64 = (n64 << 6) | static_cast<std::uint64_t>(value_at(i));
    pos = 4;
  } else {
    if (text.size() < 8) fail(errc::malformed_header, "truncated long-form vertex count");
    for (std::size_t i = 2; i <= 7; ++i) n64 = (n64 << 6) | static_cast<std::uint64_t>(value_at(i));
    pos = 8;
  }
  if (n64 < 1 || n64 > 100000) fail(errc::malformed_header, "unsupported vertex count");
  const int n = static_cast<int>(n64);

  const std::size_t payload_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t payload_chars = (payload_bits + 5) / 6;
  if (text.size() - pos < payload_chars)
    fail(errc::truncated_payload, "expected " + std::to_string(payload_chars) +
                                      " payload bytes, got " + std::to_string(text.size() - pos));
  if (text.size() - pos > payload_chars)
    fail(errc::truncated_payload, "unexpected trailing bytes after payload");

  std::vector<DynBitset> adj(n, DynBitset(n));
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      int v = value_at(pos + bit / 6);
      if ((v >> (5 - bit % 6)) & 1) {
        adj[row].set(col);
        adj[col].set(row);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace metricdim
