#include "toricgraph/walks.hpp"

#include <algorithm>
#include <cassert>

namespace toric {

const char* to_string(CircuitKind k) {
  switch (k) {
    case CircuitKind::EvenCycle: return "even_cycle";
    case CircuitKind::TwoOddCyclesSharedVertex: return "two_odd_cycles_shared_vertex";
    case CircuitKind::TwoOddCyclesJoinedByPath: return "two_odd_cycles_joined_by_path";
    case CircuitKind::NotACircuit: return "none";
  }
  return "none";
}

namespace {

bool support_connected(const Graph& g, const std::vector<int>& support) {
  if (support.empty()) return false;
  std::vector<char> in_set(g.m(), 0);
  for (int e : support) in_set[e] = 1;
  std::vector<char> vis_edge(g.m(), 0), vis_vertex(g.n, 0);
  std::vector<int> stack = {g.edges[support[0]].first};
  vis_vertex[stack[0]] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& [v, e] : g.adj[u]) {
      if (!in_set[e]) continue;
      if (!vis_edge[e]) {
        vis_edge[e] = 1;
        ++reached;
      }
      if (!vis_vertex[v]) {
        vis_vertex[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return reached == static_cast<int>(support.size());
}

// Within a block, the walk edges incident to v (with multiplicity collapsed:
// a doubled cut edge counts as its single underlying edge).
std::vector<int> block_edges_at(const Graph& g, const std::vector<int>& block, int v) {
  std::vector<int> out;
  for (int e : block)
    if (g.edges[e].first == v || g.edges[e].second == v) out.push_back(e);
  return out;
}

}  // namespace

WalkAnalysis analyze_walk(const Graph& g, const Binomial& b) {
  WalkAnalysis a;
  a.support = b.support();
  a.multiplicity.assign(g.m(), 0);
  a.edge_class.assign(g.m(), 0);
  for (int e = 0; e < g.m(); ++e) {
    a.multiplicity[e] = b.plus[e] + b.minus[e];
    if (b.plus[e] > 0) a.edge_class[e] = 1;
    else if (b.minus[e] > 0) a.edge_class[e] = -1;
  }
  a.connected = support_connected(g, a.support);
  a.blocks = block_decomposition(g, a.support);

  const int nb = static_cast<int>(a.blocks.blocks.size());
  a.pure.assign(nb, 0);
  for (int i = 0; i < nb; ++i) {
    if (!a.blocks.block_is_cycle[i]) continue;
    signed char c0 = a.edge_class[a.blocks.blocks[i][0]];
    a.pure[i] = std::all_of(a.blocks.blocks[i].begin(), a.blocks.blocks[i].end(),
                            [&](int e) { return a.edge_class[e] == c0; });
  }

  // sink map at cut vertices: a cut vertex is a sink of a cyclic block when
  // its two block edges share a class, and of a cut-edge block when the edge
  // is doubled (then both its endpoints are sinks).
  for (const auto& [v, bs] : a.blocks.block_tree) {
    for (int i : bs) {
      bool sink = false;
      if (a.blocks.blocks[i].size() == 1) {
        sink = a.multiplicity[a.blocks.blocks[i][0]] == 2;
      } else {
        auto at_v = block_edges_at(g, a.blocks.blocks[i], v);
        sink = at_v.size() == 2 && a.edge_class[at_v[0]] == a.edge_class[at_v[1]];
      }
      if (sink) a.sinks[v].push_back(i);
    }
  }

  // primitivity conditions
  a.primitive = false;
  if (!a.connected) {
    a.failure = "support subgraph is disconnected";
    return a;
  }
  for (int i = 0; i < nb; ++i) {
    if (a.blocks.blocks[i].size() != 1 && !a.blocks.block_is_cycle[i]) {
      a.failure = "a block is neither a cycle nor a cut edge";
      return a;
    }
  }
  std::vector<char> is_cut_edge(g.m(), 0);
  for (int e : a.blocks.cut_edges) is_cut_edge[e] = 1;
  for (int e : a.support) {
    if (a.multiplicity[e] > 2 || (a.multiplicity[e] == 2 && !is_cut_edge[e])) {
      a.failure = "a multiple edge is not a doubled cut edge";
      return a;
    }
    if (a.multiplicity[e] == 1 && is_cut_edge[e]) {
      a.failure = "a cut edge is not doubled";
      return a;
    }
  }
  for (const auto& [v, bs] : a.blocks.block_tree) {
    if (bs.size() != 2) {
      a.failure = "a cut vertex lies in more than two blocks";
      return a;
    }
    auto it = a.sinks.find(v);
    if (it == a.sinks.end() || it->second.size() != 2) {
      a.failure = "a cut vertex is not a sink of both its blocks";
      return a;
    }
  }
  a.primitive = true;
  return a;
}

bool is_primitive(const Graph& g, const Binomial& b, WalkAnalysis& out) {
  out = analyze_walk(g, b);
  return out.primitive;
}

bool is_primitive(const Graph& g, const Binomial& b) {
  return analyze_walk(g, b).primitive;
}

bool is_mixed(const WalkAnalysis& a) {
  if (!a.primitive) throw error(errc::bad_argument, "is_mixed requires a primitive analysis");
  return std::find(a.pure.begin(), a.pure.end(), 1) == a.pure.end();
}

CircuitKind classify_circuit(const Graph& g, const Binomial& b) {
  WalkAnalysis a = analyze_walk(g, b);
  if (!a.connected) return CircuitKind::NotACircuit;
  const auto& d = a.blocks;
  const int nb = static_cast<int>(d.blocks.size());

  int cyclic = 0, singleton = 0;
  for (int i = 0; i < nb; ++i) {
    if (d.block_is_cycle[i]) ++cyclic;
    else if (d.blocks[i].size() == 1) ++singleton;
    else return CircuitKind::NotACircuit;
  }

  auto exponents_ok = [&](Exp cycle_mult, Exp cut_mult) {
    for (int i = 0; i < nb; ++i) {
      Exp want = d.block_is_cycle[i] ? cycle_mult : cut_mult;
      for (int e : d.blocks[i])
        if (a.multiplicity[e] != want) return false;
    }
    return true;
  };

  if (nb == 1 && cyclic == 1) {
    if (d.blocks[0].size() % 2 == 0 && exponents_ok(1, 0)) return CircuitKind::EvenCycle;
    return CircuitKind::NotACircuit;
  }
  if (nb == 2 && cyclic == 2) {
    bool both_odd = d.blocks[0].size() % 2 == 1 && d.blocks[1].size() % 2 == 1;
    if (both_odd && d.cut_vertices.size() == 1 && exponents_ok(1, 0))
      return CircuitKind::TwoOddCyclesSharedVertex;
    return CircuitKind::NotACircuit;
  }
  if (cyclic == 2 && singleton >= 1 && cyclic + singleton == nb) {
    // block-cut tree must be a path with the two odd cycles as its leaves
    if (static_cast<int>(d.cut_vertices.size()) != nb - 1) return CircuitKind::NotACircuit;
    std::vector<int> deg(nb, 0);
    for (const auto& [v, bs] : d.block_tree) {
      if (bs.size() != 2) return CircuitKind::NotACircuit;
      for (int i : bs) ++deg[i];
    }
    for (int i = 0; i < nb; ++i) {
      if (d.block_is_cycle[i]) {
        if (deg[i] != 1 || d.blocks[i].size() % 2 == 0) return CircuitKind::NotACircuit;
      } else if (deg[i] != 2) {
        return CircuitKind::NotACircuit;
      }
    }
    if (exponents_ok(1, 2)) return CircuitKind::TwoOddCyclesJoinedByPath;
  }
  return CircuitKind::NotACircuit;
}

bool in_ugb_structural(const Graph& g, const Binomial& b) {
  WalkAnalysis a = analyze_walk(g, b);
  return a.primitive && is_mixed(a);
}

TermOrder witness_order(const WalkAnalysis& a) {
  if (!a.primitive || !is_mixed(a))
    throw error(errc::not_mixed, "witness order is only constructed for mixed primitive walks");
  const int m = static_cast<int>(a.multiplicity.size());
  TermOrder o = TermOrder::lex(m);
  for (int e = 0; e < m; ++e) o.elim[e] = a.multiplicity[e] == 0;
  for (size_t i = 0; i < a.blocks.blocks.size(); ++i) {
    if (!a.blocks.block_is_cycle[i]) continue;
    long long t_plus = 0, t_minus = 0;
    for (int e : a.blocks.blocks[i]) (a.edge_class[e] > 0 ? t_plus : t_minus) += 1;
    std::vector<long long> row(m, 0);
    for (int e : a.blocks.blocks[i]) row[e] = a.edge_class[e] > 0 ? t_minus : t_plus;
    o.weight_rows.push_back(std::move(row));
  }
  return o;
}

std::vector<Binomial> pure_block_certificate(const Graph& g, const WalkAnalysis& a) {
  if (!a.primitive)
    throw error(errc::bad_argument, "certificates are constructed from primitive walks");
  int pb = -1;
  for (size_t i = 0; i < a.pure.size(); ++i)
    if (a.pure[i]) {
      pb = static_cast<int>(i);
      break;
    }
  if (pb < 0) throw error(errc::no_pure_block, "walk has no pure cyclic block");

  // cyclic vertex order of the pure block (two block edges per vertex, so
  // walking forward without turning back traces the cycle once)
  Cycle cyc = [&] {
    const auto& edges = a.blocks.blocks[pb];
    std::vector<int> verts;
    int cur = a.blocks.block_vertices[pb][0], prev_edge = -1;
    for (size_t step = 0; step < edges.size(); ++step) {
      verts.push_back(cur);
      for (int e : edges)
        if (e != prev_edge && (g.edges[e].first == cur || g.edges[e].second == cur)) {
          prev_edge = e;
          cur = g.other_end(e, cur);
          break;
        }
    }
    return canonical_cycle(g, verts);
  }();
  const int s = cyc.length();

  // sides are named relative to the pure block: its class plays the E- role
  const signed char pure_class = a.edge_class[a.blocks.blocks[pb][0]];
  const int m = static_cast<int>(a.multiplicity.size());
  auto side_of = [&](int e) -> int {  // +1 = E+ role, -1 = E- role
    return a.edge_class[e] == pure_class ? -1 : 1;
  };

  // branch at each block vertex: support edges reachable without pure-block edges
  std::vector<char> in_block(m, 0);
  for (int e : a.blocks.blocks[pb]) in_block[e] = 1;
  std::vector<std::vector<int>> branch(s);
  std::vector<char> edge_seen(m, 0);
  for (int i = 0; i < s; ++i) {
    std::vector<int> stack = {cyc.vertices[i]};
    std::vector<char> vseen(g.n, 0);
    vseen[cyc.vertices[i]] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [v, e] : g.adj[u]) {
        if (a.multiplicity[e] == 0 || in_block[e]) continue;
        if (!edge_seen[e]) {
          edge_seen[e] = 1;
          branch[i].push_back(e);
        }
        if (!vseen[v]) {
          vseen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    if (branch[i].empty())
      throw error(errc::bad_argument, "pure block vertex carries no attached walk");
  }

  auto branch_side = [&](int i, int side) {
    std::vector<Exp> v(m, 0);
    for (int e : branch[i])
      if (side_of(e) == side) v[e] = a.multiplicity[e];
    return v;
  };
  auto add = [](std::vector<Exp> x, const std::vector<Exp>& y) {
    for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
  };

  std::vector<Binomial> out;
  for (int i = 0; i < s; ++i) {
    int j = (i + 1) % s;
    std::vector<Exp> p = add(branch_side(i, 1), branch_side(j, 1));
    std::vector<Exp> q = add(branch_side(i, -1), branch_side(j, -1));
    q[cyc.edges[i]] += 2;
    out.push_back(make_binomial(g, std::move(p), std::move(q)));
  }
  if (s % 2 == 0) {
    std::vector<Exp> p(m, 0), q(m, 0);
    for (int i = 0; i < s; ++i) (i % 2 == 0 ? p : q)[cyc.edges[i]] += 1;
    out.push_back(make_binomial(g, std::move(p), std::move(q)));
  } else {
    const int k = (s - 1) / 2;
    for (int i = 0; i < s; ++i) {
      std::vector<Exp> p = branch_side(i, 1), q = branch_side(i, -1);
      for (int t = 1; t <= 2 * k - 1; t += 2) p[cyc.edges[(i + t) % s]] += 1;
      for (int t = 0; t <= 2 * k; t += 2) q[cyc.edges[(i + t) % s]] += 1;
      out.push_back(make_binomial(g, std::move(p), std::move(q)));
    }
  }
  return out;
}

}  // namespace toric
