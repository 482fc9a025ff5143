#include "toricgraph/graph.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric {

int Graph::edge_between(int u, int v) const {
  if (u < 0 || u >= n) return -1;
  for (const auto& [w, e] : adj[u])
    if (w == v) return e;
  return -1;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n <= 0 || edge_list.empty()) throw error(errc::empty_graph, "graph has no vertices or no edges");
  Graph g;
  g.n = n;
  g.adj.resize(n);
  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < edge_list.size(); ++i) {
    auto [u, v] = edge_list[i];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw error(errc::bad_argument, "edge " + std::to_string(i) + " has an endpoint out of range");
    if (u == v) throw error(errc::loop_edge, "loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw error(errc::duplicate_edge,
                  "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    int e = static_cast<int>(g.edges.size());
    g.edges.emplace_back(u, v);
    g.adj[u].emplace_back(v, e);
    g.adj[v].emplace_back(u, e);
  }
  // connectivity (isolated vertices count as disconnection)
  std::vector<char> vis(n, 0);
  std::vector<int> stack = {0};
  vis[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& [v, e] : g.adj[u])
      if (!vis[v]) {
        vis[v] = 1;
        stack.push_back(v);
      }
  }
  if (std::find(vis.begin(), vis.end(), 0) != vis.end())
    throw error(errc::disconnected_graph, "graph is not connected");
  return g;
}

Graph parse_graph(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  long long max_v = -1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tok_u, tok_v, extra;
    if (!(ls >> tok_u)) continue;  // blank or comment-only line
    auto parse_vertex = [&](const std::string& tok) -> long long {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw error(errc::malformed_line, "line " + std::to_string(lineno) + ": expected nonnegative integer, got '" + tok + "'");
      if (tok.size() > 9) throw error(errc::malformed_line, "line " + std::to_string(lineno) + ": vertex id too large");
      return std::stoll(tok);
    };
    if (!(ls >> tok_v)) throw error(errc::malformed_line, "line " + std::to_string(lineno) + ": expected 'u v'");
    if (ls >> extra) throw error(errc::malformed_line, "line " + std::to_string(lineno) + ": trailing tokens");
    long long u = parse_vertex(tok_u), v = parse_vertex(tok_v);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_v = std::max({max_v, u, v});
  }
  if (edges.empty()) throw error(errc::empty_graph, "no edges in input");
  return make_graph(static_cast<int>(max_v) + 1, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph complete_graph(int n) {
  if (n < 3) throw error(errc::bad_argument, "complete_graph requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

Graph family_graph(int s, int l) {
  if (s < 3) throw error(errc::bad_argument, "family_graph requires s >= 3");
  if (l < 3) throw error(errc::bad_argument, "family_graph requires l >= 3");
  if (l % 2 == 0) throw error(errc::bad_argument, "family_graph requires odd l (walk parity needs odd outer cycles)");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i) edges.emplace_back(i, (i + 1) % s);
  for (int k = 0; k < s; ++k) {
    int base = s + k * (l - 1);
    edges.emplace_back(k, base);
    for (int j = 0; j + 1 < l - 1; ++j) edges.emplace_back(base + j, base + j + 1);
    edges.emplace_back(base + l - 2, k);
  }
  return make_graph(s + s * (l - 1), edges);
}

namespace {

// Hopcroft-Tarjan biconnected components restricted to in_set edges.
BlockDecomposition decompose(const Graph& g, const std::vector<char>& in_set) {
  const int n = g.n;
  BlockDecomposition d;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<int> edge_stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (const auto& [v, e] : g.adj[u]) {
      if (!in_set[e] || e == parent_edge) continue;
      if (disc[v] == -1) {
        ++children;
        edge_stack.push_back(e);
        dfs(v, e);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent_edge != -1) is_cut[u] = 1;
          std::vector<int> block;
          while (true) {
            int f = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(f);
            if (f == e) break;
          }
          d.blocks.push_back(std::move(block));
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.push_back(e);
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (parent_edge == -1 && children >= 2) is_cut[u] = 1;
  };

  for (int e = 0; e < g.m(); ++e) {
    if (!in_set[e]) continue;
    int u = g.edges[e].first;
    if (disc[u] == -1) dfs(u, -1);
    u = g.edges[e].second;
    if (disc[u] == -1) dfs(u, -1);
  }

  for (auto& b : d.blocks) std::sort(b.begin(), b.end());
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  const int nb = static_cast<int>(d.blocks.size());
  d.block_vertices.resize(nb);
  d.block_is_cycle.resize(nb);
  std::vector<std::vector<int>> vertex_blocks(n);
  for (int i = 0; i < nb; ++i) {
    std::vector<int> vs;
    for (int e : d.blocks[i]) {
      vs.push_back(g.edges[e].first);
      vs.push_back(g.edges[e].second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) vertex_blocks[v].push_back(i);
    d.block_is_cycle[i] = d.blocks[i].size() >= 3 && d.blocks[i].size() == vs.size();
    d.block_vertices[i] = std::move(vs);
    if (d.blocks[i].size() == 1) d.cut_edges.push_back(d.blocks[i][0]);
  }
  std::sort(d.cut_edges.begin(), d.cut_edges.end());
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) {
      d.cut_vertices.push_back(v);
      d.block_tree.emplace_back(v, vertex_blocks[v]);
    }
  return d;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  std::vector<char> all(g.m(), 1);
  return decompose(g, all);
}

BlockDecomposition block_decomposition(const Graph& g, const std::vector<int>& edge_set) {
  std::vector<char> in_set(g.m(), 0);
  for (int e : edge_set) {
    if (e < 0 || e >= g.m()) throw error(errc::bad_edge_index, "edge id out of range: " + std::to_string(e));
    in_set[e] = 1;
  }
  return decompose(g, in_set);
}

Cycle canonical_cycle(const Graph& g, std::vector<int> vertices) {
  const int k = static_cast<int>(vertices.size());
  if (k < 3) throw error(errc::bad_argument, "cycle needs at least 3 vertices");
  {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw error(errc::bad_argument, "cycle vertices not distinct");
  }
  int pos = static_cast<int>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  std::rotate(vertices.begin(), vertices.begin() + pos, vertices.end());
  if (vertices[1] > vertices.back()) std::reverse(vertices.begin() + 1, vertices.end());
  Cycle c;
  c.edges.resize(k);
  for (int i = 0; i < k; ++i) {
    int e = g.edge_between(vertices[i], vertices[(i + 1) % k]);
    if (e < 0) throw error(errc::bad_argument, "consecutive cycle vertices not adjacent");
    c.edges[i] = e;
  }
  c.vertices = std::move(vertices);
  return c;
}

std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len, long long count_cap) {
  if (max_len < 3) throw error(errc::bad_argument, "enumerate_cycles requires max_len >= 3");
  const int n = g.n;

  std::vector<std::vector<Cycle>> found(n);
  std::atomic<long long> produced{0};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int s = 0; s < n; ++s) {
    std::vector<int> path = {s};
    std::vector<char> on_path(n, 0);
    on_path[s] = 1;
    std::function<void(int)> dfs = [&](int u) {
      if (produced.load(std::memory_order_relaxed) > count_cap) return;
      for (const auto& [v, e] : g.adj[u]) {
        (void)e;
        if (v == s && path.size() >= 3) {
          if (path[1] < path.back()) {
            found[s].push_back(canonical_cycle(g, path));
            produced.fetch_add(1, std::memory_order_relaxed);
          }
        } else if (v > s && !on_path[v] && static_cast<int>(path.size()) < max_len) {
          on_path[v] = 1;
          path.push_back(v);
          dfs(v);
          path.pop_back();
          on_path[v] = 0;
        }
      }
    };
    dfs(s);
  }

  std::vector<Cycle> out;
  long long total = 0;
  for (auto& v : found) total += static_cast<long long>(v.size());
  if (total > count_cap)
    throw error(errc::cycle_budget, "cycle count exceeds cap of " + std::to_string(count_cap));
  for (auto& v : found)
    for (auto& c : v) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace toric
