#include "toricgraph/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <tuple>

namespace toric {

namespace {

bool divides_mono(const std::vector<Exp>& a, const std::vector<Exp>& u) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > u[i]) return false;
  return true;
}

Exp total_degree(const std::vector<Exp>& u) {
  Exp d = 0;
  for (Exp x : u) d += x;
  return d;
}

// Normal form of a monomial against the current basis: repeatedly rewrite by
// the first element whose lead divides it. Terminates because each rewrite
// strictly lowers the monomial in the term order.
std::vector<Exp> normal_form(std::vector<Exp> u, const std::vector<OBinomial>& G,
                             const std::vector<char>& alive) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < G.size(); ++k) {
      if (!alive[k]) continue;
      if (divides_mono(G[k].lhs, u)) {
        for (size_t i = 0; i < u.size(); ++i) u[i] += G[k].rhs[i] - G[k].lhs[i];
        changed = true;
      }
    }
  }
  return u;
}

bool orient(OBinomial& b, const TermOrder& order) {  // false when the sides are equal
  Cmp c = compare(order, b.lhs, b.rhs);
  if (c == Cmp::equal) return false;
  if (c == Cmp::less) b.lhs.swap(b.rhs);
  return true;
}

bool obinomial_less(const OBinomial& a, const OBinomial& b) {
  Exp da = total_degree(a.lhs), db = total_degree(b.lhs);
  if (da != db) return da < db;
  if (a.lhs != b.lhs) return a.lhs < b.lhs;
  return a.rhs < b.rhs;
}

}  // namespace

std::vector<OBinomial> buchberger_reduced(const std::vector<OBinomial>& gens,
                                          const TermOrder& order, long long pair_budget) {
  std::vector<OBinomial> G;
  std::vector<char> alive;
  // (lcm degree, i, j) min-heap for a deterministic normal selection strategy
  using PairKey = std::tuple<Exp, size_t, size_t>;
  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<PairKey>> pairs;

  auto push_element = [&](OBinomial b) {
    if (!orient(b, order)) return;
    size_t idx = G.size();
    for (size_t k = 0; k < idx; ++k) {
      if (!alive[k]) continue;
      Exp lcm_deg = 0;
      bool coprime = true;
      for (size_t i = 0; i < b.lhs.size(); ++i) {
        if (G[k].lhs[i] > 0 && b.lhs[i] > 0) coprime = false;
        lcm_deg += std::max(G[k].lhs[i], b.lhs[i]);
      }
      if (!coprime) pairs.emplace(lcm_deg, k, idx);  // coprime S-pairs reduce to zero
    }
    G.push_back(std::move(b));
    alive.push_back(1);
  };

  for (const auto& g : gens) push_element(g);

  long long processed = 0;
  while (!pairs.empty()) {
    auto [deg, i, j] = pairs.top();
    pairs.pop();
    if (++processed > pair_budget)
      throw error(errc::pair_budget, "Buchberger S-pair budget exceeded");
    const size_t m = G[i].lhs.size();
    std::vector<Exp> u(m), v(m);
    for (size_t t = 0; t < m; ++t) {
      Exp lcm = std::max(G[i].lhs[t], G[j].lhs[t]);
      u[t] = lcm - G[i].lhs[t] + G[i].rhs[t];
      v[t] = lcm - G[j].lhs[t] + G[j].rhs[t];
    }
    u = normal_form(std::move(u), G, alive);
    v = normal_form(std::move(v), G, alive);
    if (u == v) continue;
    push_element(OBinomial{std::move(u), std::move(v)});
  }

  // minimal leading terms (keep the first of any equal-lead pair)
  for (size_t k = 0; k < G.size(); ++k) {
    if (!alive[k]) continue;
    for (size_t t = 0; t < G.size(); ++t) {
      if (t == k || !alive[t]) continue;
      if (divides_mono(G[t].lhs, G[k].lhs) && (G[t].lhs != G[k].lhs || t < k)) {
        alive[k] = 0;
        break;
      }
    }
  }
  // reduce tails, drop duplicates
  std::vector<OBinomial> out;
  for (size_t k = 0; k < G.size(); ++k) {
    if (!alive[k]) continue;
    OBinomial b = G[k];
    b.rhs = normal_form(std::move(b.rhs), G, alive);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), obinomial_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<long long> column_sums(const IntMat& A) {
  std::vector<long long> d(A.cols);
  for (int j = 0; j < A.cols; ++j) {
    Int s = 0;
    for (int i = 0; i < A.rows; ++i) s += A.at(i, j);
    if (s <= 0 || !s.fits_slong_p())
      throw error(errc::bad_argument, "matrix must be nonnegative with no zero column");
    d[j] = s.get_si();
  }
  return d;
}

std::vector<OBinomial> kernel_generators(const IntMat& A) {
  IntMat K = integer_kernel(A);
  std::vector<OBinomial> gens;
  for (int j = 0; j < K.cols; ++j) {
    OBinomial b;
    b.lhs.assign(A.cols, 0);
    b.rhs.assign(A.cols, 0);
    for (int i = 0; i < A.cols; ++i) {
      const Int& x = K.at(i, j);
      if (!x.fits_slong_p())
        throw error(errc::bad_argument, "kernel basis entry exceeds exponent range");
      long long e = x.get_si();
      if (e > 0) b.lhs[i] = e;
      else if (e < 0) b.rhs[i] = -e;
    }
    gens.push_back(std::move(b));
  }
  return gens;
}

Binomial to_canonical(const OBinomial& b) { return canonical_sign(b.lhs, b.rhs); }

}  // namespace

BinomialSet toric_ideal(const IntMat& A, long long pair_budget) {
  std::vector<long long> grading = column_sums(A);
  std::vector<OBinomial> gens = kernel_generators(A);
  for (int j = 0; j < A.cols && !gens.empty(); ++j) {
    TermOrder order = TermOrder::graded_revlex_cheapest(grading, j);
    std::vector<OBinomial> G = buchberger_reduced(gens, order, pair_budget);
    for (auto& g : G) {
      Exp common = std::min(g.lhs[j], g.rhs[j]);
      g.lhs[j] -= common;
      g.rhs[j] -= common;
    }
    gens = std::move(G);
  }
  BinomialSet out;
  for (const auto& g : gens) out.push_back(to_canonical(g));
  std::sort(out.begin(), out.end(), binomial_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BinomialSet graver_oracle(const IntMat& A, long long pair_budget) {
  IntMat L = lawrence_lift(A);
  BinomialSet lifted = toric_ideal(L, pair_budget);

  // One more pass so membership in a *reduced* basis is what we read off.
  std::vector<OBinomial> gens;
  for (const auto& b : lifted) gens.push_back(OBinomial{b.plus, b.minus});
  TermOrder order = TermOrder::graded_revlex_cheapest(column_sums(L), 0);
  std::vector<OBinomial> gb = buchberger_reduced(gens, order, pair_budget);

  const int m = A.cols;
  BinomialSet out;
  for (const auto& g : gb) {
    std::vector<Exp> p(g.lhs.begin(), g.lhs.begin() + m);
    std::vector<Exp> q(g.rhs.begin(), g.rhs.begin() + m);
    // lifted elements mirror their sides in the shadow variables
    for (int i = 0; i < m; ++i)
      if (g.lhs[m + i] != q[i] || g.rhs[m + i] != p[i])
        throw error(errc::bad_argument, "lifted basis element is not in mirrored form");
    out.push_back(canonical_sign(std::move(p), std::move(q)));
  }
  std::sort(out.begin(), out.end(), binomial_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BinomialSet circuits_from_graver(const BinomialSet& graver) {
  std::vector<std::vector<int>> supports;
  supports.reserve(graver.size());
  for (const auto& b : graver) supports.push_back(b.support());
  BinomialSet out;
  for (size_t i = 0; i < graver.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < graver.size() && minimal; ++j) {
      if (i == j) continue;
      if (std::includes(supports[i].begin(), supports[i].end(), supports[j].begin(),
                        supports[j].end()) &&
          supports[i].size() > supports[j].size())
        minimal = false;
    }
    if (minimal) out.push_back(graver[i]);
  }
  return out;
}

bool ugb_membership_lp(const Binomial& b, const BinomialSet& graver, long long pivot_budget) {
  if (std::find(graver.begin(), graver.end(), b) == graver.end())
    throw error(errc::bad_argument, "binomial is not in the supplied Graver basis");
  const size_t m = b.plus.size();
  std::vector<std::vector<Rat>> rows;
  auto push_row = [&](const std::vector<Exp>& hi, const std::vector<Exp>& lo) {
    std::vector<Rat> r(m);
    for (size_t i = 0; i < m; ++i) r[i] = Rat(static_cast<long>(hi[i] - lo[i]));
    rows.push_back(std::move(r));
  };
  push_row(b.plus, b.minus);  // b's own lead must win
  for (const auto& g : graver) {
    if (g == b) continue;
    // whenever a monomial of g divides a monomial of b, it must lose within g
    if (divides_mono(g.plus, b.plus) || divides_mono(g.plus, b.minus))
      push_row(g.minus, g.plus);
    if (divides_mono(g.minus, b.plus) || divides_mono(g.minus, b.minus))
      push_row(g.plus, g.minus);
  }
  return lp_feasible_strict(rows, pivot_budget).feasible;
}

bool reduced_gb_contains(const Binomial& b, const BinomialSet& gens, const TermOrder& order,
                         long long pair_budget) {
  std::vector<OBinomial> og;
  og.reserve(gens.size());
  for (const auto& g : gens) og.push_back(OBinomial{g.plus, g.minus});
  std::vector<OBinomial> gb = buchberger_reduced(og, order, pair_budget);
  for (const auto& g : gb)
    if ((g.lhs == b.plus && g.rhs == b.minus) || (g.lhs == b.minus && g.rhs == b.plus))
      return true;
  return false;
}

bool reduced_gb_contains(const Binomial& b, const IntMat& A, const TermOrder& order,
                         long long pair_budget) {
  return reduced_gb_contains(b, toric_ideal(A, pair_budget), order, pair_budget);
}

}  // namespace toric
