#include "toricgraph/binomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

namespace toric {

Exp Binomial::degree() const {
  return std::accumulate(plus.begin(), plus.end(), Exp{0});
}

std::vector<int> Binomial::support() const {
  std::vector<int> out;
  for (size_t e = 0; e < plus.size(); ++e)
    if (plus[e] + minus[e] > 0) out.push_back(static_cast<int>(e));
  return out;
}

int lex_compare(const std::vector<Exp>& a, const std::vector<Exp>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

bool binomial_less(const Binomial& a, const Binomial& b) {
  Exp da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  int c = lex_compare(a.plus, b.plus);
  if (c != 0) return c < 0;
  return lex_compare(a.minus, b.minus) < 0;
}

bool is_balanced(const Graph& g, const std::vector<Exp>& plus, const std::vector<Exp>& minus) {
  std::vector<mpz_class> deg(g.n, 0);
  for (int e = 0; e < g.m(); ++e) {
    mpz_class diff = mpz_class(static_cast<long>(plus[e])) - mpz_class(static_cast<long>(minus[e]));
    if (diff == 0) continue;
    deg[g.edges[e].first] += diff;
    deg[g.edges[e].second] += diff;
  }
  return std::all_of(deg.begin(), deg.end(), [](const mpz_class& d) { return d == 0; });
}

Binomial canonical_sign(std::vector<Exp> plus, std::vector<Exp> minus) {
  if (lex_compare(plus, minus) < 0) plus.swap(minus);
  return Binomial{std::move(plus), std::move(minus)};
}

Binomial make_binomial(const Graph& g, std::vector<Exp> plus, std::vector<Exp> minus) {
  const size_t m = static_cast<size_t>(g.m());
  if (plus.size() != m || minus.size() != m)
    throw error(errc::length_mismatch, "exponent vectors must have one entry per edge");
  bool any = false;
  for (size_t e = 0; e < m; ++e) {
    if (plus[e] < 0 || minus[e] < 0) throw error(errc::negative_exponent, "negative exponent");
    if (plus[e] > 0 && minus[e] > 0)
      throw error(errc::support_overlap, "edge " + std::to_string(e) + " appears on both sides");
    any = any || plus[e] > 0 || minus[e] > 0;
  }
  if (!any) throw error(errc::zero_binomial, "both sides are zero");
  if (!is_balanced(g, plus, minus))
    throw error(errc::unbalanced, "sides have different incidence degrees");
  return canonical_sign(std::move(plus), std::move(minus));
}

Binomial binomial_of_walk(const Graph& g, const std::vector<int>& walk) {
  if (walk.size() < 2) throw error(errc::walk_open, "walk too short to close");
  if (walk.size() % 2 != 0) throw error(errc::walk_odd, "walk has odd length");
  for (int e : walk)
    if (e < 0 || e >= g.m()) throw error(errc::bad_edge_index, "edge id out of range: " + std::to_string(e));

  // 0 = ok, 1 = closes at the wrong vertex, 2 = non-incident step
  auto traverse = [&](int start) -> int {
    int cur = start;
    for (int e : walk) {
      if (g.edges[e].first != cur && g.edges[e].second != cur) return 2;
      cur = g.other_end(e, cur);
    }
    return cur == start ? 0 : 1;
  };
  int r0 = traverse(g.edges[walk[0]].first);
  int r1 = r0 == 0 ? 0 : traverse(g.edges[walk[0]].second);
  if (r0 != 0 && r1 != 0) {
    if (r0 == 1 || r1 == 1) throw error(errc::walk_open, "walk is not closed");
    throw error(errc::walk_not_incident, "consecutive walk edges are not incident");
  }

  std::vector<Exp> plus(g.m(), 0), minus(g.m(), 0);
  for (size_t i = 0; i < walk.size(); ++i) (i % 2 == 0 ? plus : minus)[walk[i]] += 1;
  for (int e = 0; e < g.m(); ++e)
    if (plus[e] > 0 && minus[e] > 0)
      throw error(errc::walk_reducible, "walk repeats edge " + std::to_string(e) + " in both classes");
  return make_binomial(g, std::move(plus), std::move(minus));
}

}  // namespace toric
