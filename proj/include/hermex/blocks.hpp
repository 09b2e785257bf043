#pragma once

#include "hermex/kernel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hermex {

/// A grid cell: a concrete block, or std::nullopt for a zero block whose size
/// is inferred from the other blocks in its row and column.
template <class T>
using Cell = std::optional<Matrix<T>>;

template <class T>
using BlockGrid = std::vector<std::vector<Cell<T>>>;

/// Dense concatenation of a rectangular grid of blocks. Throws
/// DimensionMismatch on ragged grids, nonconformant blocks, or a row/column
/// made only of zero cells.
template <class T>
Matrix<T> assemble(const BlockGrid<T>& grid);

/// Outcome of evaluating both sides of one expansion identity.
struct IdentityReport {
  std::string id;
  std::vector<long> left;
  std::vector<long> right;
  bool equal = false;
  bool skipped = false;  ///< hypothesis of a special case failed; nothing asserted
  std::string note;
};

/// Rank expansions for A (m x n), B (m x p), C (q x n), P (q x s), Q (t x p):
/// row block, column block, bordered, and the three projector-bordered forms.
template <class T>
std::vector<IdentityReport> rank_expansion_suite(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                                 const Matrix<T>& p, const Matrix<T>& q,
                                                 const TolerancePolicy& pol = {});

/// Inertia expansions for A (m x m Hermitian), B (m x n), D (n x n Hermitian),
/// P (s x n). Special cases are reported as skipped when their hypotheses fail.
template <class T>
std::vector<IdentityReport> inertia_expansion_suite(const Hermitian<T>& a, const Matrix<T>& b, const Hermitian<T>& d,
                                                    const Matrix<T>& p, const TolerancePolicy& pol = {});

}  // namespace hermex
