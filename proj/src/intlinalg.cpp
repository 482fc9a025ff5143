#include "toricgraph/intlinalg.hpp"

#include <algorithm>
#include <cassert>

#include "toricgraph/walks.hpp"

namespace toric {

IntMat incidence_matrix(const Graph& g) {
  IntMat A(g.n, g.m());
  for (int e = 0; e < g.m(); ++e) {
    A.at(g.edges[e].first, e) = 1;
    A.at(g.edges[e].second, e) = 1;
  }
  return A;
}

IntMat lawrence_lift(const IntMat& A) {
  IntMat L(A.rows + A.cols, 2 * A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) L.at(i, j) = A.at(i, j);
  for (int j = 0; j < A.cols; ++j) {
    L.at(A.rows + j, j) = 1;
    L.at(A.rows + j, A.cols + j) = 1;
  }
  return L;
}

IntMat matmul(const IntMat& A, const IntMat& B) {
  assert(A.cols == B.rows);
  IntMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A.at(i, k) == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        if (B.at(k, j) != 0) C.at(i, j) += A.at(i, k) * B.at(k, j);
    }
  return C;
}

IntMat identity_matrix(int n) {
  IntMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

static IntMat transpose(const IntMat& A) {
  IntMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Int determinant(IntMat A) {
  assert(A.rows == A.cols);
  const int n = A.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (A.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (A.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
      }
    prev = A.at(k, k);
  }
  return sign > 0 ? A.at(n - 1, n - 1) : -A.at(n - 1, n - 1);
}

namespace {

// Unimodular column operations bringing M to column echelon / Hermite form.
// Applies the same operations to *U when given (so A_in * U = M_out).
// Returns the number of pivot columns.
int column_hermite(IntMat& M, IntMat* U) {
  auto col_sub = [&](int j, const Int& q, int j0) {  // col j -= q * col j0
    for (int i = 0; i < M.rows; ++i) M.at(i, j) -= q * M.at(i, j0);
    if (U)
      for (int i = 0; i < U->rows; ++i) U->at(i, j) -= q * U->at(i, j0);
  };
  auto col_swap = [&](int j, int j0) {
    if (j == j0) return;
    for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, j), M.at(i, j0));
    if (U)
      for (int i = 0; i < U->rows; ++i) std::swap(U->at(i, j), U->at(i, j0));
  };
  auto col_neg = [&](int j) {
    for (int i = 0; i < M.rows; ++i) M.at(i, j) = -M.at(i, j);
    if (U)
      for (int i = 0; i < U->rows; ++i) U->at(i, j) = -U->at(i, j);
  };

  int pivot = 0;
  for (int i = 0; i < M.rows && pivot < M.cols; ++i) {
    while (true) {
      int jmin = -1;
      for (int j = pivot; j < M.cols; ++j)
        if (M.at(i, j) != 0 &&
            (jmin < 0 || mpz_cmpabs(M.at(i, j).get_mpz_t(), M.at(i, jmin).get_mpz_t()) < 0))
          jmin = j;
      if (jmin < 0) break;
      bool others = false;
      for (int j = pivot; j < M.cols; ++j) {
        if (j == jmin || M.at(i, j) == 0) continue;
        others = true;
        Int q = M.at(i, j) / M.at(i, jmin);  // truncated: |remainder| < |pivot|
        col_sub(j, q, jmin);
      }
      if (!others) {
        col_swap(jmin, pivot);
        if (M.at(i, pivot) < 0) col_neg(pivot);
        for (int j = 0; j < pivot; ++j) {
          // reduce earlier columns so 0 <= M(i,j) < M(i,pivot)
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), M.at(i, j).get_mpz_t(), M.at(i, pivot).get_mpz_t());
          if (q != 0) col_sub(j, q, pivot);
        }
        ++pivot;
        break;
      }
    }
  }
  return pivot;
}

}  // namespace

IntMat integer_kernel(const IntMat& A) {
  IntMat M = A;
  IntMat U = identity_matrix(A.cols);
  int rank = column_hermite(M, &U);
  IntMat K(A.cols, A.cols - rank);
  for (int j = rank; j < A.cols; ++j)
    for (int i = 0; i < A.cols; ++i) K.at(i, j - rank) = U.at(i, j);
  return K;
}

IntMat hermite_basis(const IntMat& A) {
  IntMat M = A;
  int rank = column_hermite(M, nullptr);
  IntMat H(A.rows, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < A.rows; ++i) H.at(i, j) = M.at(i, j);
  return H;
}

SmithNormalForm smith_normal_form(const IntMat& A) {
  IntMat M = A;
  IntMat U = identity_matrix(A.rows);  // tracks inverse row ops: A = U M V
  IntMat V = identity_matrix(A.cols);

  auto row_sub = [&](int i, const Int& q, int i0) {  // M.row i -= q * row i0
    for (int j = 0; j < M.cols; ++j) M.at(i, j) -= q * M.at(i0, j);
    for (int r = 0; r < U.rows; ++r) U.at(r, i0) += q * U.at(r, i);
  };
  auto row_swap = [&](int i, int i0) {
    if (i == i0) return;
    for (int j = 0; j < M.cols; ++j) std::swap(M.at(i, j), M.at(i0, j));
    for (int r = 0; r < U.rows; ++r) std::swap(U.at(r, i), U.at(r, i0));
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < M.cols; ++j) M.at(i, j) = -M.at(i, j);
    for (int r = 0; r < U.rows; ++r) U.at(r, i) = -U.at(r, i);
  };
  auto col_sub = [&](int j, const Int& q, int j0) {  // M.col j -= q * col j0
    for (int i = 0; i < M.rows; ++i) M.at(i, j) -= q * M.at(i, j0);
    for (int c = 0; c < V.cols; ++c) V.at(j0, c) += q * V.at(j, c);
  };
  auto col_swap = [&](int j, int j0) {
    if (j == j0) return;
    for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, j), M.at(i, j0));
    for (int c = 0; c < V.cols; ++c) std::swap(V.at(j, c), V.at(j0, c));
  };

  const int mn = std::min(M.rows, M.cols);
  for (int t = 0; t < mn; ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < M.rows; ++i)
        for (int j = t; j < M.cols; ++j)
          if (M.at(i, j) != 0 &&
              (pi < 0 || mpz_cmpabs(M.at(i, j).get_mpz_t(), M.at(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;  // submatrix zero
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      for (int i = t + 1; i < M.rows; ++i)
        if (M.at(i, t) != 0) {
          Int q = M.at(i, t) / M.at(t, t);
          row_sub(i, q, t);
          if (M.at(i, t) != 0) clean = false;
        }
      for (int j = t + 1; j < M.cols; ++j)
        if (M.at(t, j) != 0) {
          Int q = M.at(t, j) / M.at(t, t);
          col_sub(j, q, t);
          if (M.at(t, j) != 0) clean = false;
        }
      if (!clean) continue;  // smaller remainders exist; pick a new pivot

      // pivot must divide the rest of the submatrix
      bool divides = true;
      for (int i = t + 1; i < M.rows && divides; ++i)
        for (int j = t + 1; j < M.cols && divides; ++j)
          if (M.at(i, j) % M.at(t, t) != 0) {
            Int negone = -1;
            row_sub(t, negone, i);  // row t += row i, then restart
            divides = false;
          }
      if (divides) break;
    }
    if (M.at(t, t) < 0) row_neg(t);
  }

  SmithNormalForm out;
  out.U = std::move(U);
  out.V = std::move(V);
  out.D = std::move(M);
  return out;
}

namespace {

// Solves A X = B over the rationals; A must have full column rank and the
// system must be consistent.
std::vector<std::vector<Rat>> rational_solve(const IntMat& A, const IntMat& B) {
  const int n = A.rows, r = A.cols, k = B.cols;
  std::vector<std::vector<Rat>> T(n, std::vector<Rat>(r + k));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) T[i][j] = Rat(A.at(i, j));
    for (int j = 0; j < k; ++j) T[i][r + j] = Rat(B.at(i, j));
  }
  int row = 0;
  std::vector<int> pivot_row(r, -1);
  for (int col = 0; col < r; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (T[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw error(errc::bad_argument, "matrix does not have full column rank");
    std::swap(T[p], T[row]);
    Rat inv = 1 / T[row][col];
    for (int j = col; j < r + k; ++j) T[row][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || T[i][col] == 0) continue;
      Rat f = T[i][col];
      for (int j = col; j < r + k; ++j) T[i][j] -= f * T[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int i = row; i < n; ++i)
    for (int j = 0; j < k; ++j)
      if (T[i][r + j] != 0) throw error(errc::bad_argument, "inconsistent linear system");
  std::vector<std::vector<Rat>> X(r, std::vector<Rat>(k));
  for (int col = 0; col < r; ++col)
    for (int j = 0; j < k; ++j) X[col][j] = T[pivot_row[col]][r + j];
  return X;
}

}  // namespace

LatticeIndexResult circuit_index(const Graph& g, const Binomial& circuit) {
  if (classify_circuit(g, circuit) == CircuitKind::NotACircuit)
    throw error(errc::not_a_circuit, "binomial is not a circuit");
  const std::vector<int> supp = circuit.support();
  IntMat A = incidence_matrix(g);
  IntMat B1(g.n, static_cast<int>(supp.size()));
  for (size_t j = 0; j < supp.size(); ++j)
    for (int i = 0; i < g.n; ++i) B1.at(i, static_cast<int>(j)) = A.at(i, supp[j]);

  IntMat L1 = hermite_basis(B1);  // n x r
  const int r = L1.cols;
  if (r != static_cast<int>(supp.size()) - 1)
    throw error(errc::not_a_circuit, "support columns do not have corank one");

  IntMat F = hermite_basis(A);                     // n x k, basis of the full lattice
  IntMat N = integer_kernel(transpose(B1));        // n x (n - r), left kernel of B1
  IntMat T = integer_kernel(matmul(transpose(N), F));  // k x r
  IntMat L2 = matmul(F, T);                        // n x r, basis of QB1 n ZA
  if (L2.cols != r) throw error(errc::bad_argument, "lattice intersection rank mismatch");

  // coordinates of L1 in the L2 basis; integral because L1 is a sublattice
  auto X = rational_solve(L2, L1);
  IntMat Xi(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (X[i][j].get_den() != 1)
        throw error(errc::bad_argument, "support lattice is not contained in the saturation");
      Xi.at(i, j) = X[i][j].get_num();
    }
  LatticeIndexResult out;
  out.rank = r;
  out.index = abs(determinant(Xi));
  if (out.index == 0) throw error(errc::bad_argument, "degenerate coordinate matrix");
  return out;
}

Int true_degree(const Graph& g, const Binomial& circuit) {
  LatticeIndexResult r = circuit_index(g, circuit);
  return Int(static_cast<long>(circuit.degree())) * r.index;
}

StrictFeasibility lp_feasible_strict(const std::vector<std::vector<Rat>>& M, long long pivot_budget) {
  StrictFeasibility out;
  if (M.empty()) {
    out.feasible = true;
    return out;
  }
  const int m = static_cast<int>(M[0].size());
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != m)
      throw error(errc::length_mismatch, "ragged constraint matrix");

  // variables: c+ (m), c- (m), d; maximize d
  // rows: -M c+ + M c- + d <= 1 ; c+_i <= 1 ; c-_i <= 1 ; d <= 2
  const int nvars = 2 * m + 1;
  const int nrows = static_cast<int>(M.size()) + 2 * m + 1;
  std::vector<std::vector<Rat>> T(nrows, std::vector<Rat>(nvars + nrows + 1));
  std::vector<Rat> obj(nvars + nrows + 1);
  obj[2 * m] = -1;  // z-row for maximizing d

  for (size_t i = 0; i < M.size(); ++i) {
    for (int j = 0; j < m; ++j) {
      T[i][j] = -M[i][j];
      T[i][m + j] = M[i][j];
    }
    T[i][2 * m] = 1;
    T[i].back() = 1;
  }
  for (int j = 0; j < 2 * m; ++j) {
    T[M.size() + j][j] = 1;
    T[M.size() + j].back() = 1;
  }
  T[nrows - 1][2 * m] = 1;
  T[nrows - 1].back() = 2;
  for (int i = 0; i < nrows; ++i) T[i][nvars + i] = 1;  // slacks

  std::vector<int> basis(nrows);
  for (int i = 0; i < nrows; ++i) basis[i] = nvars + i;

  long long pivots = 0;
  while (true) {
    int enter = -1;
    for (int j = 0; j < nvars + nrows; ++j)
      if (obj[j] < 0) {
        enter = j;  // Bland: smallest improving index
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < nrows; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i].back() / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) throw error(errc::lp_budget, "unbounded feasibility program");
    if (++pivots > pivot_budget)
      throw error(errc::lp_budget, "simplex pivot budget exceeded");

    Rat piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (int i = 0; i < nrows; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (int j = 0; j <= nvars + nrows; ++j) T[i][j] -= f * T[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (int j = 0; j <= nvars + nrows; ++j) obj[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  std::vector<Rat> x(nvars);
  for (int i = 0; i < nrows; ++i)
    if (basis[i] < nvars) x[basis[i]] = T[i].back();
  Rat delta = x[2 * m] - 1;
  out.feasible = delta > 0;
  if (out.feasible) {
    out.witness.resize(m);
    for (int j = 0; j < m; ++j) out.witness[j] = x[j] - x[m + j];
  }
  return out;
}

}  // namespace toric
