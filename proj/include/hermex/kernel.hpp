#pragma once

#include "hermex/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hermex {

/// Float-backend thresholds. Both are relative: rank counts singular values
/// above rank_tol * sigma_max * max(m, n); inertia counts eigenvalues whose
/// magnitude exceeds inertia_tol * max|lambda|. The exact backend ignores it.
struct TolerancePolicy {
  double rank_tol = 1e-9;
  double inertia_tol = 1e-9;
};

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;

  std::size_t rank() const { return plus + minus; }
  std::size_t size() const { return plus + minus + zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

std::string to_string(const Inertia& in);

template <class T>
std::size_t rank(const Matrix<T>& m, const TolerancePolicy& pol = {});

/// Congruence diagonalization (exact) or eigenvalue signs (float).
template <class T>
Inertia inertia(const Hermitian<T>& a, const TolerancePolicy& pol = {});

/// Moore-Penrose inverse. Exact: full-rank factorization from the reduced row
/// echelon form. Float: truncated SVD.
template <class T>
Matrix<T> pinv(const Matrix<T>& m, const TolerancePolicy& pol = {});

template <class T>
struct Projectors {
  Matrix<T> left;   ///< E_A = I - A A^dagger
  Matrix<T> right;  ///< F_A = I - A^dagger A
};

template <class T>
Projectors<T> projectors(const Matrix<T>& a, const TolerancePolicy& pol = {});

/// (M + M*) / 2.
template <class T>
Hermitian<T> hermitian_part(const Matrix<T>& m);

/// Reduced row echelon form over the exact field together with pivot columns.
struct Echelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(ExactMatrix m);

/// Exact inverse of a nonsingular square matrix; nullopt when singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Solves M x = b exactly (b may have several columns). Returns one solution
/// or nullopt when the system is inconsistent.
std::optional<ExactMatrix> solve_linear(const ExactMatrix& m, const ExactMatrix& b);

/// Basis of the null space of M as the columns of the returned matrix.
ExactMatrix null_space(const ExactMatrix& m);

// Derived predicates used throughout the formula layer.

template <class T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> vcat(const Matrix<T>& a, const Matrix<T>& b);

/// R(C) subset of R(A), tested as r[A, C] = r(A).
template <class T>
bool range_includes(const Matrix<T>& a, const Matrix<T>& c, const TolerancePolicy& pol = {});

template <class T>
bool is_psd(const Hermitian<T>& a, const TolerancePolicy& pol = {});

template <class T>
bool is_nsd(const Hermitian<T>& a, const TolerancePolicy& pol = {});

/// Hermitian view of a matrix that is Hermitian by construction (products
/// such as B X B*). The float backend symmetrizes away rounding.
template <class T>
Hermitian<T> as_hermitian(const Matrix<T>& m);

}  // namespace hermex
