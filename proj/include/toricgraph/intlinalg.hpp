#pragma once

#include <gmpxx.h>

#include <vector>

#include "toricgraph/binomial.hpp"

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const IntMat&) const = default;
};

IntMat incidence_matrix(const Graph& g);  // n x m, entries 0/1
// [[A, 0], [I, I]]: rows+cols by 2*cols
IntMat lawrence_lift(const IntMat& A);
IntMat matmul(const IntMat& A, const IntMat& B);
IntMat identity_matrix(int n);
Int determinant(IntMat A);  // fraction-free elimination, square input

// Columns form a lattice basis of {x : A x = 0} over the integers.
IntMat integer_kernel(const IntMat& A);

// Column-HNF basis of the integer column span (zero columns dropped).
IntMat hermite_basis(const IntMat& A);

struct SmithNormalForm {
  IntMat U, D, V;  // A = U * D * V with U, V unimodular, D diagonal, d1 | d2 | ...
};
SmithNormalForm smith_normal_form(const IntMat& A);

struct LatticeIndexResult {
  int rank = 0;
  Int index;  // >= 1; 1 iff the support lattice is saturated
};

// Index of Z{a_e : e in supp} inside Q{a_e : e in supp} intersected with the
// full edge-column lattice, computed from HNF bases of both lattices and the
// determinant of the coordinate matrix.
LatticeIndexResult circuit_index(const Graph& g, const Binomial& circuit);
Int true_degree(const Graph& g, const Binomial& circuit);

struct StrictFeasibility {
  bool feasible = false;
  std::vector<Rat> witness;  // c with M c > 0, |c|_inf <= 1, when feasible
};

// Decides whether a rational c with M c > 0 componentwise exists, by
// maximizing delta subject to M c >= delta * 1 and |c|_inf <= 1 with an exact
// rational simplex (Bland's rule). Feasible iff the optimum delta > 0.
StrictFeasibility lp_feasible_strict(const std::vector<std::vector<Rat>>& M, long long pivot_budget);

}  // namespace toric
