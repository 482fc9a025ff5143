#pragma once

#include <vector>

#include "toricgraph/graph.hpp"

namespace toric {

using Exp = long long;

// Binomial x^plus - x^minus over the edge variables. Invariants: disjoint
// supports, balanced under the vertex-edge incidence map, neither side zero,
// and plus is the lexicographically larger exponent vector (by edge index).
struct Binomial {
  std::vector<Exp> plus, minus;

  Exp degree() const;               // total degree of either side
  std::vector<int> support() const;  // ascending edge ids with plus+minus > 0
  bool operator==(const Binomial&) const = default;
};

// -1 / 0 / +1, first differing coordinate decides
int lex_compare(const std::vector<Exp>& a, const std::vector<Exp>& b);

// Report order: by degree, then plus, then minus.
bool binomial_less(const Binomial& a, const Binomial& b);

bool is_balanced(const Graph& g, const std::vector<Exp>& plus, const std::vector<Exp>& minus);

// Validates all invariants and applies the canonical sign.
Binomial make_binomial(const Graph& g, std::vector<Exp> plus, std::vector<Exp> minus);

// Same sign rule without graph validation (for already-checked vectors).
Binomial canonical_sign(std::vector<Exp> plus, std::vector<Exp> minus);

// Alternates a closed even walk (edge-index sequence) into the two sides.
// Errors: open walk, odd length, non-incident consecutive edges, and a walk
// whose two classes share an edge (reducible).
Binomial binomial_of_walk(const Graph& g, const std::vector<int>& walk);

}  // namespace toric
