#include "toricgraph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric {

Exp BasisReport::max_degree() const {
  Exp d = 0;
  for (const auto& t : elements) d = std::max(d, t.degree);
  return d;
}

std::vector<Binomial> BasisReport::binomials() const {
  std::vector<Binomial> out;
  out.reserve(elements.size());
  for (const auto& t : elements) out.push_back(t.b);
  return out;
}

bool BasisReport::contains(const Binomial& b) const {
  return std::any_of(elements.begin(), elements.end(),
                     [&](const TaggedBinomial& t) { return t.b == b; });
}

namespace {

struct PoolBlock {
  std::vector<int> vertices;      // sorted
  std::vector<int> edges;         // cycle: traversal order; cut edge: one id
  std::vector<int> cyc_vertices;  // cycle vertex order aligned with edges
  bool cyclic = false;
};

PoolBlock block_of_cycle(const Cycle& c) {
  PoolBlock b;
  b.cyclic = true;
  b.edges = c.edges;
  b.cyc_vertices = c.vertices;
  b.vertices = c.vertices;
  std::sort(b.vertices.begin(), b.vertices.end());
  return b;
}

PoolBlock block_of_edge(const Graph& g, int e) {
  PoolBlock b;
  b.cyclic = false;
  b.edges = {e};
  b.vertices = {g.edges[e].first, g.edges[e].second};
  return b;
}

// Class propagation over a candidate tree of blocks. Returns the binomial
// when the assembly satisfies the structural walk conditions, otherwise
// nothing.
std::optional<Binomial> assembly_binomial(const Graph& g,
                                          const std::vector<const PoolBlock*>& blocks) {
  const int s = static_cast<int>(blocks.size());
  const int m = g.m();

  std::vector<int> vuse(g.n, 0);
  for (const auto* b : blocks)
    for (int v : b->vertices) {
      if (++vuse[v] > 2) return std::nullopt;  // a vertex in three blocks
    }
  std::vector<int> artic;
  for (int v = 0; v < g.n; ++v)
    if (vuse[v] == 2) artic.push_back(v);
  if (static_cast<int>(artic.size()) != s - 1) return std::nullopt;  // not a tree of blocks

  std::vector<char> is_artic(g.n, 0);
  for (int v : artic) is_artic[v] = 1;

  // leaf cut edges are unbalanced; cyclic sink counts must match parity
  for (const auto* b : blocks) {
    if (b->cyclic) {
      int sinks = 0;
      for (int v : b->vertices) sinks += is_artic[v];
      if ((sinks - static_cast<int>(b->edges.size())) % 2 != 0) return std::nullopt;
    } else {
      if (!is_artic[b->vertices[0]] || !is_artic[b->vertices[1]]) return std::nullopt;
    }
  }

  // block adjacency through shared articulation vertices must connect
  std::vector<std::vector<int>> touching(g.n);
  for (int i = 0; i < s; ++i)
    for (int v : blocks[i]->vertices)
      if (is_artic[v]) touching[v].push_back(i);
  std::vector<std::vector<std::pair<int, int>>> adj(s);  // (neighbor block, via vertex)
  for (int v : artic) {
    if (touching[v].size() != 2) return std::nullopt;
    adj[touching[v][0]].emplace_back(touching[v][1], v);
    adj[touching[v][1]].emplace_back(touching[v][0], v);
  }

  std::vector<signed char> cls(m, 0);
  std::vector<Exp> expo(m, 0);

  // assigns classes around a cycle entering at anchor with the given class;
  // articulation vertices keep the class (sinks), the rest alternate
  auto assign_cycle = [&](const PoolBlock& b, int anchor, signed char c) -> bool {
    const int t = static_cast<int>(b.edges.size());
    int idx = 0;
    while (b.cyc_vertices[idx] != anchor) ++idx;
    signed char cur = c;
    for (int i = 0; i < t; ++i) {
      int p = (idx + i) % t;
      if (i > 0) {
        int v = b.cyc_vertices[p];
        if (!is_artic[v]) cur = -cur;
      }
      int e = b.edges[p];
      if (expo[e] != 0) return false;  // edge shared between blocks
      cls[e] = cur;
      expo[e] = 1;
    }
    // closing consistency at the anchor
    signed char last = cls[b.edges[(idx + t - 1) % t]];
    if (is_artic[anchor] ? last != c : last != -c) return false;
    return true;
  };
  auto assign_cut = [&](const PoolBlock& b, signed char c) -> bool {
    int e = b.edges[0];
    if (expo[e] != 0) return false;
    cls[e] = c;
    expo[e] = 2;
    return true;
  };
  // class of a processed block at one of its articulation vertices
  auto class_at = [&](const PoolBlock& b, int v) -> signed char {
    if (!b.cyclic) return cls[b.edges[0]];
    for (size_t p = 0; p < b.cyc_vertices.size(); ++p)
      if (b.cyc_vertices[p] == v) return cls[b.edges[p]];
    return 0;
  };

  std::vector<char> done(s, 0);
  std::vector<int> queue_blocks = {0};
  if (blocks[0]->cyclic) {
    if (!assign_cycle(*blocks[0], blocks[0]->cyc_vertices[0], 1)) return std::nullopt;
  } else {
    if (!assign_cut(*blocks[0], 1)) return std::nullopt;
  }
  done[0] = 1;
  for (size_t qi = 0; qi < queue_blocks.size(); ++qi) {
    int i = queue_blocks[qi];
    for (const auto& [j, v] : adj[i]) {
      if (done[j]) continue;
      signed char entry = static_cast<signed char>(-class_at(*blocks[i], v));
      if (blocks[j]->cyclic) {
        if (!assign_cycle(*blocks[j], v, entry)) return std::nullopt;
      } else {
        if (!assign_cut(*blocks[j], entry)) return std::nullopt;
      }
      done[j] = 1;
      queue_blocks.push_back(j);
    }
  }
  if (std::find(done.begin(), done.end(), 0) != done.end()) return std::nullopt;  // forest, not tree

  std::vector<Exp> plus(m, 0), minus(m, 0);
  for (int e = 0; e < m; ++e) {
    if (expo[e] == 0) continue;
    (cls[e] > 0 ? plus : minus)[e] = expo[e];
  }
  if (!is_balanced(g, plus, minus)) return std::nullopt;
  return canonical_sign(std::move(plus), std::move(minus));
}

struct EffectiveCaps {
  int max_cycle_len;
  int max_blocks;
  long long candidate_budget;
  long long cycle_budget;
  int threads;
};

EffectiveCaps resolve(const Graph& g, const EnumCaps& caps) {
  EffectiveCaps e;
  e.max_cycle_len = caps.max_cycle_len > 0 ? caps.max_cycle_len : 2 * g.m();
  e.max_blocks = caps.max_blocks > 0 ? caps.max_blocks : g.n;
  e.candidate_budget = caps.candidate_budget;
  e.cycle_budget = caps.cycle_budget;
  e.threads = caps.threads;
  if (e.max_cycle_len < g.n)
    throw error(errc::cycle_cap,
                "max_cycle_len " + std::to_string(e.max_cycle_len) + " is below the vertex count " +
                    std::to_string(g.n) + "; enumeration would silently miss cycles");
  if (e.max_blocks < 1 || e.candidate_budget < 1 || e.cycle_budget < 1)
    throw error(errc::bad_argument, "caps must be positive");
  return e;
}

std::vector<PoolBlock> build_pool(const Graph& g, const EffectiveCaps& caps) {
  std::vector<PoolBlock> pool;
  for (const Cycle& c : enumerate_cycles(g, std::min(caps.max_cycle_len, g.n), caps.cycle_budget))
    pool.push_back(block_of_cycle(c));
  for (int e = 0; e < g.m(); ++e) pool.push_back(block_of_edge(g, e));
  return pool;
}

int shared_vertex_count(const PoolBlock& a, const PoolBlock& b) {
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.vertices.size() && j < b.vertices.size()) {
    if (a.vertices[i] == b.vertices[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a.vertices[i] < b.vertices[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

TaggedBinomial tag_one(const Graph& g, Binomial b) {
  TaggedBinomial t;
  t.degree = b.degree();
  t.kind = classify_circuit(g, b);
  WalkAnalysis a = analyze_walk(g, b);
  t.primitive = a.primitive;
  t.mixed = a.primitive && is_mixed(a);
  t.ugb = t.primitive && t.mixed;
  t.b = std::move(b);
  return t;
}

bool tagged_less(const TaggedBinomial& a, const TaggedBinomial& b) {
  return binomial_less(a.b, b.b);
}

void sort_dedupe(std::vector<TaggedBinomial>& v) {
  std::sort(v.begin(), v.end(), tagged_less);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const TaggedBinomial& a, const TaggedBinomial& b) { return a.b == b.b; }),
          v.end());
}

// Per-seed search state shared by the parallel kernel and the serial
// reference checks below.
struct SeedSearch {
  const Graph& g;
  const std::vector<PoolBlock>& pool;
  const std::vector<std::vector<int>>& vertex_blocks;  // vertex -> pool ids
  int max_blocks;
  std::function<void(const std::vector<int>&)> emit;
  bool truncated = false;  // a compatible extension was cut off by max_blocks

  // blocks sharing >= 1 vertex with pool[c], ascending, above the seed
  std::vector<int> neighbors_above(int c, int seed) const {
    std::vector<int> out;
    for (int v : pool[c].vertices)
      for (int u : vertex_blocks[v])
        if (u > seed && u != c) out.push_back(u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool compatible(const std::vector<int>& vuse, int c) const {
    int shared = -1;
    for (int v : pool[c].vertices) {
      if (vuse[v] == 0) continue;
      if (shared >= 0) return false;  // two vertices shared with the assembly
      if (vuse[v] != 1) return false; // shared vertex already an articulation
      shared = v;
    }
    return shared >= 0;
  }

  bool adjacent_to_set(const std::vector<int>& sel, int u) const {
    for (int i : sel)
      if (shared_vertex_count(pool[i], pool[u]) > 0) return true;
    return false;
  }

  // FANMOD-style enumeration: every connected block set whose smallest
  // member is `seed` is visited exactly once.
  void extend(std::vector<int>& sel, std::vector<int>& vuse, const std::vector<int>& ext,
              int seed) {
    emit(sel);
    if (static_cast<int>(sel.size()) >= max_blocks) {
      for (int c : ext)
        if (compatible(vuse, c)) {
          truncated = true;
          break;
        }
      return;
    }
    for (size_t i = 0; i < ext.size(); ++i) {
      int c = ext[i];
      if (!compatible(vuse, c)) continue;
      std::vector<int> next_ext(ext.begin() + i + 1, ext.end());
      for (int u : neighbors_above(c, seed))
        if (!adjacent_to_set(sel, u) && std::find(sel.begin(), sel.end(), u) == sel.end())
          next_ext.push_back(u);
      sel.push_back(c);
      for (int v : pool[c].vertices) ++vuse[v];
      extend(sel, vuse, next_ext, seed);
      for (int v : pool[c].vertices) --vuse[v];
      sel.pop_back();
    }
  }

  void run_seed(int seed) {
    std::vector<int> sel = {seed};
    std::vector<int> vuse(g.n, 0);
    for (int v : pool[seed].vertices) ++vuse[v];
    extend(sel, vuse, neighbors_above(seed, seed), seed);
  }
};

BasisReport graver_impl(const Graph& g, const EnumCaps& caps, bool parallel) {
  EffectiveCaps eff = resolve(g, caps);
  std::vector<PoolBlock> pool = build_pool(g, eff);
  const int np = static_cast<int>(pool.size());

  std::vector<std::vector<int>> vertex_blocks(g.n);
  for (int i = 0; i < np; ++i)
    for (int v : pool[i].vertices) vertex_blocks[v].push_back(i);

  std::atomic<long long> candidates{0};
  std::atomic<bool> over_budget{false};
  std::atomic<bool> truncated{false};

  int nthreads = 1;
#ifdef _OPENMP
  nthreads = eff.threads > 0 ? eff.threads : omp_get_max_threads();
#endif
  if (!parallel) nthreads = 1;
  std::vector<std::vector<TaggedBinomial>> results(np);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (parallel)
#endif
  for (int seed = 0; seed < np; ++seed) {
    if (over_budget.load(std::memory_order_relaxed)) continue;
    SeedSearch search{g, pool, vertex_blocks, eff.max_blocks, nullptr};
    search.emit = [&](const std::vector<int>& sel) {
      if (candidates.fetch_add(1, std::memory_order_relaxed) + 1 > eff.candidate_budget) {
        over_budget.store(true, std::memory_order_relaxed);
        return;
      }
      std::vector<const PoolBlock*> bs;
      bs.reserve(sel.size());
      for (int i : sel) bs.push_back(&pool[i]);
      if (auto b = assembly_binomial(g, bs)) {
        TaggedBinomial t = tag_one(g, std::move(*b));
        if (t.primitive) results[seed].push_back(std::move(t));
      }
    };
    search.run_seed(seed);
    if (search.truncated) truncated.store(true, std::memory_order_relaxed);
  }

  if (over_budget.load())
    throw error(errc::candidate_budget,
                "candidate budget of " + std::to_string(eff.candidate_budget) + " exceeded");
  if (truncated.load())
    throw error(errc::block_budget, "max_blocks cap cut off a growing assembly; raise it");

  BasisReport report;
  report.provenance = "structural";
  for (auto& v : results)
    for (auto& t : v) report.elements.push_back(std::move(t));
  sort_dedupe(report.elements);
  return report;
}

}  // namespace

BasisReport enumerate_graver(const Graph& g, const EnumCaps& caps) {
  return graver_impl(g, caps, true);
}

BasisReport enumerate_graver_serial(const Graph& g, const EnumCaps& caps) {
  // Independent reference path: grow block sets in every order and dedupe,
  // instead of the canonical-extension search used by the parallel kernel.
  EffectiveCaps eff = resolve(g, caps);
  std::vector<PoolBlock> pool = build_pool(g, eff);
  const int np = static_cast<int>(pool.size());

  std::vector<std::vector<int>> vertex_blocks(g.n);
  for (int i = 0; i < np; ++i)
    for (int v : pool[i].vertices) vertex_blocks[v].push_back(i);

  long long candidates = 0;
  bool truncated = false;
  std::set<std::vector<int>> seen;
  std::vector<TaggedBinomial> out;

  std::function<void(std::vector<int>&, std::vector<int>&)> grow = [&](std::vector<int>& sel,
                                                                       std::vector<int>& vuse) {
    std::vector<int> key = sel;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    if (++candidates > eff.candidate_budget)
      throw error(errc::candidate_budget,
                  "candidate budget of " + std::to_string(eff.candidate_budget) + " exceeded");
    std::vector<const PoolBlock*> bs;
    for (int i : sel) bs.push_back(&pool[i]);
    if (auto b = assembly_binomial(g, bs)) {
      TaggedBinomial t = tag_one(g, std::move(*b));
      if (t.primitive) out.push_back(std::move(t));
    }
    // candidate extensions: blocks sharing exactly one non-articulation vertex
    std::vector<int> cands;
    for (int v = 0; v < g.n; ++v)
      if (vuse[v] == 1)
        for (int u : vertex_blocks[v])
          if (std::find(sel.begin(), sel.end(), u) == sel.end()) cands.push_back(u);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (int c : cands) {
      int shared = 0;
      bool artic_conflict = false;
      for (int v : pool[c].vertices) {
        if (vuse[v] == 2) artic_conflict = true;
        shared += vuse[v] > 0;
      }
      if (shared != 1 || artic_conflict) continue;
      if (static_cast<int>(sel.size()) >= eff.max_blocks) {
        truncated = true;
        break;
      }
      sel.push_back(c);
      for (int v : pool[c].vertices) ++vuse[v];
      grow(sel, vuse);
      for (int v : pool[c].vertices) --vuse[v];
      sel.pop_back();
    }
  };

  for (int seed = 0; seed < np; ++seed) {
    std::vector<int> sel = {seed};
    std::vector<int> vuse(g.n, 0);
    for (int v : pool[seed].vertices) ++vuse[v];
    grow(sel, vuse);
  }
  if (truncated)
    throw error(errc::block_budget, "max_blocks cap cut off a growing assembly; raise it");

  BasisReport report;
  report.provenance = "structural";
  report.elements = std::move(out);
  sort_dedupe(report.elements);
  return report;
}

BasisReport enumerate_ugb(const Graph& g, const EnumCaps& caps) {
  BasisReport graver = enumerate_graver(g, caps);
  BasisReport report;
  report.provenance = "structural";
  for (auto& t : graver.elements)
    if (t.ugb) report.elements.push_back(std::move(t));
  return report;
}

BasisReport enumerate_circuits(const Graph& g, const EnumCaps& caps) {
  EffectiveCaps eff = resolve(g, caps);
  std::vector<Cycle> cycles = enumerate_cycles(g, std::min(eff.max_cycle_len, g.n), eff.cycle_budget);
  const int nc = static_cast<int>(cycles.size());
  std::vector<PoolBlock> cycle_blocks;
  cycle_blocks.reserve(nc);
  for (const auto& c : cycles) cycle_blocks.push_back(block_of_cycle(c));

  long long candidates = 0;
  auto charge = [&](long long k = 1) {
    candidates += k;
    if (candidates > eff.candidate_budget)
      throw error(errc::candidate_budget,
                  "candidate budget of " + std::to_string(eff.candidate_budget) + " exceeded");
  };

  std::vector<TaggedBinomial> out;
  auto emit = [&](const std::vector<const PoolBlock*>& bs) {
    charge();
    if (auto b = assembly_binomial(g, bs)) {
      TaggedBinomial t = tag_one(g, std::move(*b));
      if (t.primitive && t.kind != CircuitKind::NotACircuit) out.push_back(std::move(t));
    }
  };

  // shape 1: even cycles
  for (int i = 0; i < nc; ++i)
    if (!cycles[i].odd()) emit({&cycle_blocks[i]});

  // shape 2: odd cycles sharing exactly one vertex
  for (int i = 0; i < nc; ++i) {
    if (cycles[i].odd())
      for (int j = i + 1; j < nc; ++j)
        if (cycles[j].odd() && shared_vertex_count(cycle_blocks[i], cycle_blocks[j]) == 1)
          emit({&cycle_blocks[i], &cycle_blocks[j]});
  }

  // shape 3: vertex-disjoint odd cycles joined by a simple path that avoids
  // both cycles internally; the path edges become doubled cut edges
  for (int i = 0; i < nc; ++i) {
    if (!cycles[i].odd()) continue;
    for (int j = i + 1; j < nc; ++j) {
      if (!cycles[j].odd() || shared_vertex_count(cycle_blocks[i], cycle_blocks[j]) != 0) continue;
      std::vector<char> on_cycle(g.n, 0);
      for (int v : cycle_blocks[i].vertices) on_cycle[v] = 1;
      std::vector<char> target(g.n, 0);
      for (int v : cycle_blocks[j].vertices) {
        target[v] = 1;
        on_cycle[v] = 1;
      }
      std::vector<PoolBlock> path_blocks;
      std::vector<char> visited(g.n, 0);
      std::function<void(int)> dfs = [&](int u) {
        for (const auto& [v, e] : g.adj[u]) {
          if (target[v]) {
            path_blocks.push_back(block_of_edge(g, e));
            std::vector<const PoolBlock*> bs = {&cycle_blocks[i], &cycle_blocks[j]};
            for (const auto& pb : path_blocks) bs.push_back(&pb);
            emit(bs);
            path_blocks.pop_back();
          } else if (!on_cycle[v] && !visited[v]) {
            visited[v] = 1;
            path_blocks.push_back(block_of_edge(g, e));
            dfs(v);
            path_blocks.pop_back();
            visited[v] = 0;
          }
        }
      };
      for (int a : cycle_blocks[i].vertices) dfs(a);
    }
  }

  BasisReport report;
  report.provenance = "structural";
  report.elements = std::move(out);
  sort_dedupe(report.elements);
  return report;
}

BasisReport tag_binomials(const Graph& g, const std::vector<Binomial>& set,
                          const std::string& provenance) {
  BasisReport report;
  report.provenance = provenance;
  for (const auto& b : set) report.elements.push_back(tag_one(g, b));
  sort_dedupe(report.elements);
  return report;
}

DegreeStats degree_stats(const BasisReport& report) {
  if (report.elements.empty()) throw error(errc::bad_argument, "empty report has no degree stats");
  DegreeStats s;
  std::map<Exp, long long> hist;
  s.min_degree = report.elements.front().degree;
  s.max_degree = 0;
  for (const auto& t : report.elements) {
    s.min_degree = std::min(s.min_degree, t.degree);
    s.max_degree = std::max(s.max_degree, t.degree);
    ++hist[t.degree];
  }
  s.histogram.assign(hist.begin(), hist.end());
  return s;
}

std::string degree_histogram_csv(const DegreeStats& stats) {
  std::ostringstream out;
  out << "degree,count\n";
  for (const auto& [d, c] : stats.histogram) out << d << ',' << c << '\n';
  return out.str();
}

}  // namespace toric
