#include "toricgraph/order.hpp"

#include <algorithm>
#include <numeric>

namespace toric {

TermOrder TermOrder::lex(int vars) {
  TermOrder o;
  o.vars = vars;
  o.elim.assign(vars, 0);
  o.tiebreak.resize(vars);
  std::iota(o.tiebreak.begin(), o.tiebreak.end(), 0);
  return o;
}

TermOrder TermOrder::weighted(std::vector<long long> row) {
  TermOrder o = lex(static_cast<int>(row.size()));
  o.weight_rows.push_back(std::move(row));
  return o;
}

TermOrder TermOrder::graded_revlex_cheapest(const std::vector<long long>& grading, int cheapest) {
  const int n = static_cast<int>(grading.size());
  TermOrder o = lex(n);
  // cheapness ranking: `cheapest` first, then the rest by descending index
  std::vector<int> rank;
  rank.push_back(cheapest);
  for (int j = n - 1; j >= 0; --j)
    if (j != cheapest) rank.push_back(j);
  std::vector<long long> row = grading;
  o.weight_rows.push_back(row);
  for (int k = 0; k + 1 < n; ++k) {
    row[rank[k]] = 0;
    o.weight_rows.push_back(row);
  }
  return o;
}

bool order_valid(const TermOrder& o) {
  if (o.vars <= 0) return false;
  if (static_cast<int>(o.elim.size()) != o.vars) return false;
  for (const auto& row : o.weight_rows) {
    if (static_cast<int>(row.size()) != o.vars) return false;
    for (long long w : row)
      if (w < 0) return false;
  }
  std::vector<char> seen(o.vars, 0);
  if (static_cast<int>(o.tiebreak.size()) != o.vars) return false;
  for (int p : o.tiebreak) {
    if (p < 0 || p >= o.vars || seen[p]) return false;
    seen[p] = 1;
  }
  return true;
}

Cmp compare(const TermOrder& o, const std::vector<Exp>& u, const std::vector<Exp>& v) {
  if (static_cast<int>(u.size()) != o.vars || static_cast<int>(v.size()) != o.vars)
    throw error(errc::length_mismatch, "exponent vector length does not match order");
  __int128 du = 0, dv = 0;
  for (int i = 0; i < o.vars; ++i)
    if (o.elim[i]) {
      du += u[i];
      dv += v[i];
    }
  if (du != dv) return du > dv ? Cmp::greater : Cmp::less;
  for (const auto& row : o.weight_rows) {
    __int128 d = 0;
    for (int i = 0; i < o.vars; ++i)
      if (u[i] != v[i]) d += static_cast<__int128>(row[i]) * (u[i] - v[i]);
    if (d != 0) return d > 0 ? Cmp::greater : Cmp::less;
  }
  for (int p : o.tiebreak)
    if (u[p] != v[p]) return u[p] > v[p] ? Cmp::greater : Cmp::less;
  return Cmp::equal;
}

}  // namespace toric
