#pragma once

#include "hermex/condition.hpp"
#include "hermex/kernel.hpp"
#include "hermex/solvers.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hermex {

/// Global extremes of rank and partial inertias over a feasible set.
struct ExtremalSummary {
  long max_rank = 0;
  long min_rank = 0;
  long max_ip = 0;
  long min_ip = 0;
  long max_im = 0;
  long min_im = 0;

  static constexpr std::array<const char*, 6> field_names{"max_rank", "min_rank", "max_ip",
                                                          "min_ip",   "max_im",   "min_im"};
  long field(std::size_t k) const;
  long& field(std::size_t k);
  /// i+ and i- exchanged, i.e. the summary of the negated objective.
  ExtremalSummary negated() const;
  /// Ordering invariants; returns the first violated one or "".
  std::string invariant_violation(long ambient) const;
  friend bool operator==(const ExtremalSummary&, const ExtremalSummary&) = default;
};

std::string to_string(const ExtremalSummary& s);

/// One yes/no question about the feasible set, evaluated twice: from an
/// explicit rank/inertia/range criterion, and from the summary extremes.
struct Decision {
  std::string id;
  std::string question;
  bool verdict = false;
  std::vector<Condition> criterion;                  ///< all must hold
  std::vector<std::vector<Condition>> alternatives;  ///< plus: some group fully holds (if any)
  Condition from_summary;
};

struct DecisionReport {
  std::vector<Decision> items;
  const Decision& at(const std::string& id) const;
  bool has(const std::string& id) const;
};

/// Summary with its decision list and the premises that were checked.
struct Analysis {
  ExtremalSummary summary;
  DecisionReport decisions;
  std::vector<Condition> premises;
};

template <class T>
struct PairInstance {
  Hermitian<T> a1, a2, a3;
  Matrix<T> b1, b2, b3;
  std::size_t n() const { return b1.cols(); }
};

/// A1 - B1 X B1* with X Hermitian (or PSD) solving B4 X = A4.
template <class T>
struct LinearInstance {
  Hermitian<T> a1;
  Matrix<T> b1;
  Matrix<T> a4;
  Matrix<T> b4;
  std::size_t n() const { return b1.cols(); }
};

/// [A1, A2] X = [B1, B2] with X Hermitian, split n = n1 + n2.
template <class T>
struct PartitionedInstance {
  Matrix<T> a1, a2, b1, b2;
};

template <class T>
struct SubmatrixAnalysis {
  ExtremalSummary x1;
  ExtremalSummary x3;
  DecisionReport decisions;  ///< about X1
  std::vector<Condition> premises;
};

template <class T>
struct TripleDecision {
  DecisionReport report;
  std::optional<Matrix<T>> witness;
};

enum class Sign { plus, minus };

// ---- unconstrained families -------------------------------------------------

/// A - B X B* over Hermitian X.
template <class T>
ExtremalSummary extremal_free(const Hermitian<T>& a, const Matrix<T>& b, const TolerancePolicy& pol = {});

/// A + B X B* (plus) or A - B X B* (minus) over X >= 0.
template <class T>
ExtremalSummary extremal_free_psd(const Hermitian<T>& a, const Matrix<T>& b, Sign sign,
                                  const TolerancePolicy& pol = {});

/// A - B X C - (B X C)* over arbitrary X. When R(C*) is inside R(B) the
/// nested-range formulas are evaluated too and must agree.
template <class T>
ExtremalSummary extremal_bxc(const Hermitian<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                             const TolerancePolicy& pol = {});

/// The nested-range formulas alone; HypothesisViolated if R(C*) is not in R(B).
template <class T>
ExtremalSummary extremal_bxc_nested(const Hermitian<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                    const TolerancePolicy& pol = {});

/// A - B1 X1 C1 - (B1 X1 C1)* - B2 X2 C2 - (B2 X2 C2)*, requires R(B2), R(C1*),
/// R(C2*) inside R(B1).
template <class T>
ExtremalSummary extremal_two_var(const Hermitian<T>& a, const Matrix<T>& b1, const Matrix<T>& c1,
                                 const Matrix<T>& b2, const Matrix<T>& c2, const TolerancePolicy& pol = {});

// ---- two congruence constraints -----------------------------------------------

/// A1 - B1 X B1* over common Hermitian solutions of B2 X B2* = A2, B3 X B3* = A3.
template <class T>
ExtremalSummary extremal_pair_constrained(const PairInstance<T>& inst, const TolerancePolicy& pol = {});

/// Same extremes when every pair of the three equations is consistent; the
/// result is cross-checked against extremal_pair_constrained.
template <class T>
ExtremalSummary extremal_pair_allpairs(const PairInstance<T>& inst, const TolerancePolicy& pol = {});

/// Do all three B_i X B_i* = A_i have a common Hermitian solution.
template <class T>
TripleDecision<T> triple_common_solvable(const PairInstance<T>& inst, const TolerancePolicy& pol = {});

/// Common least-squares Hermitian solution of the three equations.
template <class T>
DecisionReport lsq_common_condition(const PairInstance<T>& inst, const TolerancePolicy& pol = {});

/// Extremes of X itself over the common Hermitian solutions of the pair.
template <class T>
Analysis solution_extremal_pair(const Matrix<T>& b2, const Hermitian<T>& a2, const Matrix<T>& b3,
                                const Hermitian<T>& a3, const TolerancePolicy& pol = {});

// ---- one linear constraint ------------------------------------------------------

template <class T>
Analysis extremal_linear_constrained(const LinearInstance<T>& inst, const TolerancePolicy& pol = {});

template <class T>
Analysis extremal_linear_psd_constrained(const LinearInstance<T>& inst, const TolerancePolicy& pol = {});

/// X - P over Hermitian (psd = false) or PSD (psd = true) solutions of A X = B.
template <class T>
Analysis solution_shift_extremal(const Matrix<T>& a, const Matrix<T>& b, const Hermitian<T>& p, bool psd,
                                 const TolerancePolicy& pol = {});

/// X over Hermitian solutions of A X = B.
template <class T>
Analysis solution_extremal_linear(const Matrix<T>& a, const Matrix<T>& b, const TolerancePolicy& pol = {});

/// Diagonal blocks X1 (n1 x n1) and X3 of Hermitian solutions of [A1,A2] X = [B1,B2].
template <class T>
SubmatrixAnalysis<T> submatrix_extremal(const PartitionedInstance<T>& inst, const TolerancePolicy& pol = {});

// ---- decision helpers ------------------------------------------------------------

/// Summary-side criterion for a standard decision id about matrices of size m
/// (exists_pd, forall_pd, exists_nd, forall_nd, exists_psd, forall_psd,
/// exists_nsd, forall_nsd, exists_nonsingular, forall_nonsingular,
/// exists_zero, forall_zero, rank_invariant, ip_invariant, im_invariant).
Condition summary_criterion(const std::string& id, const ExtremalSummary& s, long m);

}  // namespace hermex
