#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "toricgraph/graph.hpp"

using namespace toric;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  REQUIRE(false);
  return errc::bad_argument;
}

}  // namespace

TEST_CASE("parse C4 edge list") {
  Graph g = parse_graph("0 1\n1 2\n2 3\n3 0");
  CHECK(g.n == 4);
  CHECK(g.m() == 4);
  CHECK(g.edges[0] == std::pair<int, int>{0, 1});
  CHECK(g.edges[3] == std::pair<int, int>{0, 3});
}

TEST_CASE("parse handles comments and blank lines") {
  Graph g = parse_graph("# triangle\n0 1\n\n1 2  # edge\n2 0\n");
  CHECK(g.m() == 3);
}

TEST_CASE("parse rejects loops, duplicates, disconnection, junk") {
  CHECK(code_of([] { parse_graph("0 1\n1 2\n2 0\n0 0"); }) == errc::loop_edge);
  CHECK(code_of([] { parse_graph("0 1\n1 0"); }) == errc::duplicate_edge);
  // two disjoint triangles
  CHECK(code_of([] { parse_graph("0 1\n1 2\n2 0\n3 4\n4 5\n5 3"); }) == errc::disconnected_graph);
  CHECK(code_of([] { parse_graph("0 x"); }) == errc::malformed_line);
  CHECK(code_of([] { parse_graph("0 1 2"); }) == errc::malformed_line);
  CHECK(code_of([] { parse_graph("0 -1"); }) == errc::malformed_line);
  CHECK(code_of([] { parse_graph("# nothing"); }) == errc::empty_graph);
}

TEST_CASE("generators") {
  Graph k4 = complete_graph(4);
  CHECK(k4.n == 4);
  CHECK(k4.m() == 6);
  CHECK(k4.edges[0] == std::pair<int, int>{0, 1});
  CHECK(k4.edges[5] == std::pair<int, int>{2, 3});

  Graph f33 = family_graph(3, 3);
  CHECK(f33.n == 9);
  CHECK(f33.m() == 12);

  Graph f55 = family_graph(5, 5);
  CHECK(f55.n == 25);
  CHECK(f55.m() == 30);

  CHECK(code_of([] { family_graph(3, 4); }) == errc::bad_argument);
  CHECK(code_of([] { complete_graph(2); }) == errc::bad_argument);
}

TEST_CASE("block decomposition of biconnected and bowtie graphs") {
  Graph k4 = complete_graph(4);
  BlockDecomposition d = block_decomposition(k4);
  CHECK(d.blocks.size() == 1);
  CHECK(d.cut_vertices.empty());
  CHECK(d.cut_edges.empty());
  CHECK(d.block_is_cycle[0] == 0);  // K4 is not a cycle

  // bowtie: two triangles sharing vertex 0
  Graph bow = parse_graph("0 1\n1 2\n2 0\n0 3\n3 4\n4 0");
  d = block_decomposition(bow);
  CHECK(d.blocks.size() == 2);
  REQUIRE(d.cut_vertices.size() == 1);
  CHECK(d.cut_vertices[0] == 0);
  CHECK(d.cut_edges.empty());
  CHECK(d.block_is_cycle[0] == 1);
  CHECK(d.block_is_cycle[1] == 1);
  REQUIRE(d.block_tree.size() == 1);
  CHECK(d.block_tree[0].second.size() == 2);
}

TEST_CASE("block decomposition of the family graph") {
  Graph g = family_graph(3, 3);
  BlockDecomposition d = block_decomposition(g);
  CHECK(d.blocks.size() == 4);
  CHECK(d.cut_vertices == std::vector<int>{0, 1, 2});
  CHECK(d.cut_edges.empty());
  int cyclic = 0;
  for (char c : d.block_is_cycle) cyclic += c;
  CHECK(cyclic == 4);
  // invariant for the family: s+1 blocks, s cut vertices, no cut edges
  Graph f55 = family_graph(5, 5);
  BlockDecomposition d55 = block_decomposition(f55);
  CHECK(d55.blocks.size() == 6);
  CHECK(d55.cut_vertices.size() == 5);
  CHECK(d55.cut_edges.empty());
}

TEST_CASE("blocks partition the edge set; cut vertices lie in >= 2 blocks") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    // random connected graph: a path plus random chords
    int n = 4 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> used;
    for (int v = 1; v < n; ++v) {
      int u = static_cast<int>(rng() % v);
      edges.emplace_back(u, v);
      used.insert({u, v});
    }
    for (int extra = 0; extra < n; ++extra) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (used.insert({u, v}).second) edges.emplace_back(u, v);
    }
    Graph g = make_graph(n, edges);
    BlockDecomposition d = block_decomposition(g);
    std::vector<int> all;
    for (const auto& b : d.blocks) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    std::vector<int> want(g.m());
    std::iota(want.begin(), want.end(), 0);
    CHECK(all == want);
    for (const auto& [v, bs] : d.block_tree) CHECK(bs.size() >= 2);
    for (int cv : d.cut_vertices) {
      int count = 0;
      for (const auto& vs : d.block_vertices)
        count += std::binary_search(vs.begin(), vs.end(), cv);
      CHECK(count >= 2);
    }
    // singleton blocks and cut edges agree
    std::vector<int> singles;
    for (const auto& b : d.blocks)
      if (b.size() == 1) singles.push_back(b[0]);
    std::sort(singles.begin(), singles.end());
    CHECK(singles == d.cut_edges);
  }
}

TEST_CASE("cycle enumeration counts") {
  Graph c4 = parse_graph("0 1\n1 2\n2 3\n3 0");
  CHECK(enumerate_cycles(c4, 4, 1000).size() == 1);

  Graph k4 = complete_graph(4);
  auto cyc = enumerate_cycles(k4, 4, 1000);
  CHECK(cyc.size() == 7);  // 4 triangles + 3 quadrilaterals
  int tri = 0;
  for (const auto& c : cyc) tri += c.length() == 3;
  CHECK(tri == 4);

  Graph k5 = complete_graph(5);
  CHECK(enumerate_cycles(k5, 3, 1000).size() == 10);  // C(5,3) triangles
}

TEST_CASE("cycle enumeration respects the count cap") {
  Graph k5 = complete_graph(5);
  CHECK_THROWS_AS(enumerate_cycles(k5, 5, 3), error);
}

TEST_CASE("canonical cycle form is idempotent and rotation/reflection invariant") {
  Graph k5 = complete_graph(5);
  auto cycles = enumerate_cycles(k5, 5, 10000);
  std::mt19937 rng(11);
  for (const auto& c : cycles) {
    CHECK(c.vertices[0] == *std::min_element(c.vertices.begin(), c.vertices.end()));
    CHECK(c.vertices[1] < c.vertices.back());
    CHECK(canonical_cycle(k5, c.vertices) == c);
    // random rotation + optional reflection reaches the same canonical form
    std::vector<int> verts = c.vertices;
    std::rotate(verts.begin(), verts.begin() + rng() % verts.size(), verts.end());
    if (rng() % 2) std::reverse(verts.begin(), verts.end());
    CHECK(canonical_cycle(k5, verts) == c);
  }
}

TEST_CASE("edge list round trip") {
  Graph g = family_graph(4, 3);
  Graph h = parse_graph(format_edge_list(g));
  CHECK(g.n == h.n);
  CHECK(g.edges == h.edges);
}
