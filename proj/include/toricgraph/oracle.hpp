#pragma once

#include "toricgraph/intlinalg.hpp"
#include "toricgraph/order.hpp"

namespace toric {

// Oracle-side binomial x^lhs - x^rhs, oriented so lhs is the leading monomial
// under the active order. Sides may share support before saturation.
struct OBinomial {
  std::vector<Exp> lhs, rhs;
  bool operator==(const OBinomial&) const = default;
};

using BinomialSet = std::vector<Binomial>;

// Reduced Groebner basis of the binomial ideal generated by gens: leading
// terms minimally generate the initial ideal, every tail is in normal form,
// output sorted by leading term. Throws when more than pair_budget S-pairs
// are processed.
std::vector<OBinomial> buchberger_reduced(const std::vector<OBinomial>& gens,
                                          const TermOrder& order, long long pair_budget);

// Generating set of the toric ideal of A: binomials of an integer kernel
// lattice basis, saturated variable by variable (Groebner basis under a
// graded reverse-lex order with that variable cheapest, then dividing out
// its common power from each generator). Requires nonnegative A with no
// zero column. Output canonical-sorted.
BinomialSet toric_ideal(const IntMat& A, long long pair_budget);

// Full Graver basis via the Lawrence lifting: the reduced Groebner basis of
// the lifted toric ideal, projected back to the original variables.
BinomialSet graver_oracle(const IntMat& A, long long pair_budget);

// Elements whose support is minimal under inclusion within the set.
BinomialSet circuits_from_graver(const BinomialSet& graver);

// Universal-Groebner-basis membership for b (an element of graver): is there
// a weight vector making b's leading term a minimal generator of the initial
// ideal and its tail irreducible? Decided exactly by lp_feasible_strict over
// the divisibility constraints against all other Graver elements.
bool ugb_membership_lp(const Binomial& b, const BinomialSet& graver, long long pivot_budget);

bool reduced_gb_contains(const Binomial& b, const IntMat& A, const TermOrder& order,
                         long long pair_budget);
bool reduced_gb_contains(const Binomial& b, const BinomialSet& gens, const TermOrder& order,
                         long long pair_budget);

}  // namespace toric
