#pragma once

#include "hermex/condition.hpp"
#include "hermex/kernel.hpp"
#include "hermex/random.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hermex {

/// Shapes of the parametric correction terms appearing in general solutions.
enum class TermKind {
  plain,                 ///< L V R
  adjoint_pair,          ///< L V R + (L V R)*
  hermitian_sandwich,    ///< L U L*, U Hermitian
  psd_sandwich,          ///< L U L*, U >= 0
  projected_complement,  ///< U - L U L*, U Hermitian (L a Hermitian idempotent)
};

std::string to_string(TermKind k);

template <class T>
struct CorrectionTerm {
  TermKind kind = TermKind::plain;
  Matrix<T> left;
  Matrix<T> right;  ///< equals left* for the sandwich kinds

  std::size_t param_rows() const;
  std::size_t param_cols() const;
  Matrix<T> apply(const Matrix<T>& param) const;
};

/// left * X * right = rhs.
template <class T>
struct LinearConstraint {
  Matrix<T> left;
  Matrix<T> right;
  Matrix<T> rhs;
};

/// X0 plus a sum of parametrized correction terms. `constraints` are the
/// source equations, kept so that any generated X can be re-checked.
template <class T>
struct AffineSolutionSet {
  Matrix<T> x0;
  std::vector<CorrectionTerm<T>> terms;
  std::vector<LinearConstraint<T>> constraints;
  bool hermitian = false;
  bool psd = false;

  std::size_t rows() const { return x0.rows(); }
  std::size_t cols() const { return x0.cols(); }

  /// X for one parameter per term (Hermitian / PSD where the kind requires).
  Matrix<T> evaluate(const std::vector<Matrix<T>>& params) const;
  std::vector<Matrix<T>> draw_parameters(Rng& rng, const EntryDist& d) const;
  Matrix<T> sample(Rng& rng, const EntryDist& d = {}) const { return evaluate(draw_parameters(rng, d)); }

  /// Largest residual magnitude over all constraints (0 exactly when exact).
  double residual(const Matrix<T>& x) const;
  /// Constraints hold (exactly, or within tol relative to the data scale) and
  /// the Hermitian / PSD requirements are met.
  bool satisfies(const Matrix<T>& x, double tol = 1e-8) const;
};

template <class T>
struct SolveResult {
  bool solvable = false;
  std::vector<Condition> conditions;
  std::optional<AffineSolutionSet<T>> set;

  /// First failing condition, for diagnostics.
  std::string reason() const;
};

/// A1 X B1 = C1 and A2 X B2 = C2 simultaneously.
template <class T>
SolveResult<T> pair_linear_common(const Matrix<T>& a1, const Matrix<T>& b1, const Matrix<T>& c1,
                                  const Matrix<T>& a2, const Matrix<T>& b2, const Matrix<T>& c2,
                                  const TolerancePolicy& pol = {});

enum class CongruenceForm { complement, adjoint_pair };

/// Hermitian solutions of A X A* = B.
template <class T>
SolveResult<T> congruence_solve(const Matrix<T>& a, const Hermitian<T>& b,
                                CongruenceForm form = CongruenceForm::complement,
                                const TolerancePolicy& pol = {});

/// Hermitian solutions of A X = B.
template <class T>
SolveResult<T> linear_hermitian_solve(const Matrix<T>& a, const Matrix<T>& b, const TolerancePolicy& pol = {});

/// Positive semidefinite solutions of A X = B.
template <class T>
SolveResult<T> linear_psd_solve(const Matrix<T>& a, const Matrix<T>& b, const TolerancePolicy& pol = {});

/// Common Hermitian solutions of B2 X B2* = A2 and B3 X B3* = A3. Throws
/// PremiseViolated when either equation alone is inconsistent.
template <class T>
SolveResult<T> pair_congruence_common(const Matrix<T>& b2, const Hermitian<T>& a2, const Matrix<T>& b3,
                                      const Hermitian<T>& a3, const TolerancePolicy& pol = {});

/// (X + X*)/2 of the special solution of a congruence-type common solution set
/// (constraints of the form B X B* = A with A Hermitian). Throws
/// PremiseViolated when the set is not of that shape or X0 does not solve it.
template <class T>
Hermitian<T> hermitize_common_solution(const AffineSolutionSet<T>& s);

}  // namespace hermex
