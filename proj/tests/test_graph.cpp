#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace metricdim;

TEST_CASE("build_graph validates input") {
  SECTION("complete bipartite K22") {
    auto g = build_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}},
                         std::make_pair(std::vector<int>{0, 1}, std::vector<int>{2, 3}));
    REQUIRE(g.num_vertices() == 4);
    REQUIRE(g.num_edges() == 4);
    REQUIRE(g.has_edge(0, 2));
    REQUIRE(g.has_edge(2, 0));
    REQUIRE_FALSE(g.has_edge(0, 1));
    REQUIRE(g.side(0) == Side::one);
    REQUIRE(g.side(3) == Side::two);
  }
  SECTION("single vertex, no edges") {
    auto g = build_graph(1, {});
    REQUIRE(g.num_vertices() == 1);
    REQUIRE(g.num_edges() == 0);
  }
  SECTION("edge within one part is rejected") {
    auto parts = std::make_pair(std::vector<int>{0, 1}, std::vector<int>{2, 3});
    try {
      build_graph(4, {{0, 1}}, parts);
      FAIL("expected EdgeWithinOnePart");
    } catch (const error& e) {
      REQUIRE(e.code() == errc::edge_within_one_part);
    }
  }
  SECTION("other invalid inputs") {
    auto code_of = [](auto fn) {
      try {
        fn();
      } catch (const error& e) {
        return e.code();
      }
      return errc::bad_format;
    };
    REQUIRE(code_of([] { build_graph(3, {{0, 3}}); }) == errc::out_of_range);
    REQUIRE(code_of([] { build_graph(3, {{1, 1}}); }) == errc::self_loop);
    REQUIRE(code_of([] { build_graph(3, {{0, 1}, {1, 0}}); }) == errc::duplicate_edge);
    REQUIRE(code_of([] {
              build_graph(3, {}, std::make_pair(std::vector<int>{0}, std::vector<int>{2}));
            }) == errc::out_of_range);
  }
}

TEST_CASE("all_pairs_distances matches the crown pattern") {
  auto crown = gen_crown(3);
  auto dm = all_pairs_distances(crown.graph);
  // x_1 = 0, x_2 = 1, y_1 = 3, y_2 = 4
  REQUIRE(dm(0, 3) == 3);
  REQUIRE(dm(0, 4) == 1);
  REQUIRE(dm(0, 1) == 2);
  for (int v = 0; v < 6; ++v) REQUIRE(dm(v, v) == 0);
}

TEST_CASE("all_pairs_distances records unreachable pairs") {
  auto g = build_graph(4, {});  // two sides of K22 with the 4-cycle removed: no edges at all
  auto dm = all_pairs_distances(g);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      REQUIRE(dm(u, v) == (u == v ? 0 : DistanceMatrix::kUnreachable));
  REQUIRE_FALSE(dm.all_finite());
}

TEST_CASE("distance matrix invariants on random graphs") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 12);
    const int n = pick_n(rng);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    auto g = build_graph(n, edges);
    auto dm = all_pairs_distances(g);
    for (int u = 0; u < n; ++u) {
      REQUIRE(dm(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        REQUIRE(dm(u, v) == dm(v, u));
        REQUIRE((dm(u, v) == 1) == g.has_edge(u, v));
        for (int w = 0; w < n; ++w) {
          // triangle inequality on finite entries
          if (dm(u, w) != DistanceMatrix::kUnreachable &&
              dm(w, v) != DistanceMatrix::kUnreachable) {
            REQUIRE(dm(u, v) != DistanceMatrix::kUnreachable);
            REQUIRE(dm(u, v) <= dm(u, w) + dm(w, v));
          }
        }
      }
    }
  }
}

TEST_CASE("is_connected") {
  REQUIRE(is_connected(gen_crown(3).graph));
  REQUIRE(is_connected(build_graph(1, {})));
  // K33 minus its Hamiltonian cycle is a perfect matching: x_i -> y_{i+1}
  auto matching = build_graph(6, {{0, 5}, {1, 3}, {2, 4}});
  REQUIRE_FALSE(is_connected(matching));
}

TEST_CASE("graph6 codec") {
  SECTION("K22 matches the reference encoder") {
    auto g = build_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto expected = mdtest::reference_graph6(4, [&](int u, int v) { return g.has_edge(u, v); });
    REQUIRE(encode_graph6(g) == expected);
  }
  SECTION("single vertex encodes as @") {
    REQUIRE(encode_graph6(build_graph(1, {})) == "@");
  }
  SECTION("round-trip is the identity on crown(5)") {
    auto g = gen_crown(5).graph;
    auto back = decode_graph6(encode_graph6(g));
    REQUIRE(back.num_vertices() == g.num_vertices());
    for (int u = 0; u < g.num_vertices(); ++u)
      for (int v = 0; v < g.num_vertices(); ++v)
        REQUIRE(back.has_edge(u, v) == g.has_edge(u, v));
  }
  SECTION("round-trip property on random graphs, checked against the reference") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> pick_n(1, 20);
      const int n = pick_n(rng);
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 2) edges.emplace_back(u, v);
      auto g = build_graph(n, edges);
      auto text = encode_graph6(g);
      REQUIRE(text == mdtest::reference_graph6(n, [&](int u, int v) { return g.has_edge(u, v); }));
      auto back = decode_graph6(text);
      REQUIRE(back.num_vertices() == n);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) REQUIRE(back.has_edge(u, v) == g.has_edge(u, v));
    }
  }
  SECTION("long-form vertex count") {
    auto g = gen_crown(40).graph;  // 80 vertices forces the 4-byte header
    auto text = encode_graph6(g);
    REQUIRE(text[0] == 126);
    auto back = decode_graph6(text);
    REQUIRE(back.num_vertices() == 80);
    REQUIRE(back.has_edge(0, 41));
    REQUIRE_FALSE(back.has_edge(0, 40));
  }
  SECTION("decode errors") {
    auto code_of = [](const std::string& s) {
      try {
        decode_graph6(s);
      } catch (const error& e) {
        return e.code();
      }
      return errc::bad_format;
    };
    REQUIRE(code_of("") == errc::malformed_header);
    REQUIRE(code_of("C\x01") == errc::malformed_header);   // payload byte outside the alphabet
    REQUIRE(code_of("D") == errc::truncated_payload);      // 5 vertices need payload
    REQUIRE(code_of("C]]") == errc::truncated_payload);    // trailing bytes
  }
}
