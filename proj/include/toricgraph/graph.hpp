#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toricgraph/errors.hpp"

namespace toric {

// Finite simple connected graph with indexed edges. Edge indices are assigned
// by input/generation order and never reordered; every exponent vector
// downstream is indexed by them.
struct Graph {
  int n = 0;                               // vertex count (vertices 0..n-1)
  std::vector<std::pair<int, int>> edges;  // each {u,v} stored with u < v
  // vertex -> (neighbor, edge id), in edge-index order
  std::vector<std::vector<std::pair<int, int>>> adj;

  int m() const { return static_cast<int>(edges.size()); }

  int other_end(int e, int v) const {
    const auto& [a, b] = edges[e];
    return v == a ? b : a;
  }

  // -1 if u and v are not adjacent
  int edge_between(int u, int v) const;
};

// Validates: no loops, no duplicate pairs, connected, endpoints in range.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// Lines "u v" with nonnegative integers; '#' starts a comment; blank lines
// skipped. Vertices are 0..max seen, edges indexed in input order.
Graph parse_graph(const std::string& text);

std::string format_edge_list(const Graph& g);

Graph complete_graph(int n);  // edges in lexicographic pair order, n >= 3

// Central cycle of length s (vertices 0..s-1, edge i = {i,(i+1)%s}), then for
// each central vertex k an attached odd cycle of length l through k using
// fresh vertices s+k(l-1) .. s+(k+1)(l-1)-1, edges appended cycle by cycle.
Graph family_graph(int s, int l);  // s >= 3, l >= 3 odd

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;          // sorted edge ids per block
  std::vector<std::vector<int>> block_vertices;  // sorted vertex ids per block
  std::vector<char> block_is_cycle;              // |E| == |V| >= 3
  std::vector<int> cut_vertices;                 // sorted
  std::vector<int> cut_edges;                    // sorted (singleton blocks)
  // cut vertex -> ids of blocks containing it (the block-cut tree)
  std::vector<std::pair<int, std::vector<int>>> block_tree;
};

BlockDecomposition block_decomposition(const Graph& g);
// Decomposition of the subgraph spanned by edge_set (parent edge/vertex ids).
BlockDecomposition block_decomposition(const Graph& g, const std::vector<int>& edge_set);

struct Cycle {
  // canonical: vertices[0] is the smallest, vertices[1] < vertices.back()
  std::vector<int> vertices;
  std::vector<int> edges;  // edges[i] joins vertices[i], vertices[(i+1)%k]

  int length() const { return static_cast<int>(vertices.size()); }
  bool odd() const { return length() % 2 == 1; }
  bool operator==(const Cycle&) const = default;
};

// Rotates/reflects a vertex sequence into canonical form; validates that the
// sequence really is a simple cycle of g.
Cycle canonical_cycle(const Graph& g, std::vector<int> vertices);

// All simple cycles of length <= max_len, each once, in canonical form,
// sorted by (length, vertex sequence). Throws when more than count_cap
// cycles exist.
std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len, long long count_cap);

}  // namespace toric
