#pragma once

#include <optional>
#include <string>

#include "toricgraph/intlinalg.hpp"
#include "toricgraph/walks.hpp"

namespace toric {

struct EnumCaps {
  int max_cycle_len = 0;                    // 0: defaults to 2*m
  int max_blocks = 0;                       // 0: defaults to the vertex count
  long long candidate_budget = 10'000'000;  // assemblies examined
  long long cycle_budget = 10'000'000;      // simple cycles stored
  int threads = 0;                          // 0: OpenMP default
};

struct TaggedBinomial {
  Binomial b;
  CircuitKind kind = CircuitKind::NotACircuit;
  bool primitive = false;
  bool mixed = false;
  bool ugb = false;
  Exp degree = 0;
  std::optional<Int> true_degree;
};

struct BasisReport {
  std::string provenance;               // "structural" or "oracle"
  std::vector<TaggedBinomial> elements;  // sorted by (degree, plus, minus)

  Exp max_degree() const;
  std::vector<Binomial> binomials() const;
  bool contains(const Binomial& b) const;
};

// Circuits by their three shapes: even cycles; two odd cycles sharing one
// vertex; two vertex-disjoint odd cycles joined by a path (path edges
// doubled).
BasisReport enumerate_circuits(const Graph& g, const EnumCaps& caps);

// Graver basis: every candidate support is a tree of blocks (cycles and cut
// edges) glued at articulation vertices lying in exactly two blocks; class
// assignment is forced by the sink conditions; candidates are kept when
// balanced and primitive. OpenMP-parallel over seed blocks.
BasisReport enumerate_graver(const Graph& g, const EnumCaps& caps);

// Single-threaded reference enumeration kept for testing; must produce
// exactly the same report as enumerate_graver.
BasisReport enumerate_graver_serial(const Graph& g, const EnumCaps& caps);

// Graver elements that are mixed.
BasisReport enumerate_ugb(const Graph& g, const EnumCaps& caps);

// Tags an externally computed set (e.g. the algebraic oracle's).
BasisReport tag_binomials(const Graph& g, const std::vector<Binomial>& set,
                          const std::string& provenance);

struct DegreeStats {
  Exp min_degree = 0;
  Exp max_degree = 0;
  std::vector<std::pair<Exp, long long>> histogram;  // degree -> count, ascending
};

DegreeStats degree_stats(const BasisReport& report);
std::string degree_histogram_csv(const DegreeStats& stats);

}  // namespace toric
