#pragma once

#include <vector>

#include "toricgraph/binomial.hpp"

namespace toric {

enum class Cmp { less = -1, equal = 0, greater = 1 };

// Term order realized as: an elimination block compared first by total
// degree (those variables are "larger"), then nonnegative weight rows (the
// first row with row.(u-v) != 0 decides, positive means u larger), then a
// lexicographic tiebreak along a permutation of the variables.
struct TermOrder {
  int vars = 0;
  std::vector<char> elim;                           // size vars, 1 = eliminated
  std::vector<std::vector<long long>> weight_rows;  // nonnegative entries
  std::vector<int> tiebreak;                        // permutation of 0..vars-1

  static TermOrder lex(int vars);
  static TermOrder weighted(std::vector<long long> row);
  // Graded reverse-lex with the given positive grading and one variable
  // cheapest: nonnegative rows grading, grading - g_j e_j, ... peeling the
  // cheap end of the variable ranking (cheapest, then descending index).
  static TermOrder graded_revlex_cheapest(const std::vector<long long>& grading, int cheapest);
};

bool order_valid(const TermOrder& o);

Cmp compare(const TermOrder& o, const std::vector<Exp>& u, const std::vector<Exp>& v);

}  // namespace toric
