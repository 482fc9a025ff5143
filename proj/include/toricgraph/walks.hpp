#pragma once

#include <map>
#include <string>

#include "toricgraph/binomial.hpp"
#include "toricgraph/order.hpp"

namespace toric {

enum class CircuitKind {
  EvenCycle,
  TwoOddCyclesSharedVertex,
  TwoOddCyclesJoinedByPath,
  NotACircuit,
};

const char* to_string(CircuitKind k);

// Structure of the subgraph spanned by a binomial, read as the graph of a
// closed even walk: per-edge multiplicity and class, block decomposition,
// per-block purity, and the sink map at cut vertices.
struct WalkAnalysis {
  std::vector<int> support;             // ascending edge ids
  std::vector<Exp> multiplicity;        // plus+minus per edge, length m
  std::vector<signed char> edge_class;  // +1 plus side, -1 minus side, 0 off support
  bool connected = false;
  BlockDecomposition blocks;            // of the support subgraph
  std::vector<char> pure;               // per block: cyclic with all edges in one class
  std::map<int, std::vector<int>> sinks;  // cut vertex -> blocks it is a sink of
  bool primitive = false;
  std::string failure;                  // first violated condition when not primitive
};

WalkAnalysis analyze_walk(const Graph& g, const Binomial& b);

// Primitive iff: support connected; every block a cycle or a cut edge; every
// exponent >= 2 is exactly 2 and sits on a cut edge; every cut vertex lies in
// exactly two blocks and is a sink of both.
bool is_primitive(const Graph& g, const Binomial& b);
bool is_primitive(const Graph& g, const Binomial& b, WalkAnalysis& out);

// No cyclic block has all its edges in one class. Requires a primitive analysis.
bool is_mixed(const WalkAnalysis& a);

CircuitKind classify_circuit(const Graph& g, const Binomial& b);

// Universal-Groebner-basis membership: primitive and mixed.
bool in_ugb_structural(const Graph& g, const Binomial& b);

// Elimination order with off-support variables larger; one weight row per
// cyclic block: 0 off the block, (minus-class edge count) on plus-class
// edges, (plus-class edge count) on minus-class edges; identity tiebreak.
// Only defined for mixed primitive walks.
TermOrder witness_order(const WalkAnalysis& a);

// For the first pure cyclic block with edges eps_1..eps_s and the branch
// walks w_1..w_s hanging at its vertices, the non-membership certificates:
// F_i = E+(w_i)E+(w_{i+1}) - eps_i^2 E-(w_i)E-(w_{i+1}) for all i, then
// G = eps_1 eps_3 ... - eps_2 eps_4 ... when s is even, or
// G_i = E+(w_i) eps_{i+1} eps_{i+3} ... - E-(w_i) eps_i eps_{i+2} ... when s
// is odd. All returned binomials are balance-checked.
std::vector<Binomial> pure_block_certificate(const Graph& g, const WalkAnalysis& a);

}  // namespace toric
