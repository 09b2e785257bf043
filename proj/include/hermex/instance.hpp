#pragma once

#include "hermex/extremal.hpp"

#include <map>
#include <string>
#include <vector>

namespace hermex {

enum class Kind { pair, linear, linear_psd, partitioned, free };

std::string to_string(Kind k);
/// Throws InputError on unknown names.
Kind parse_kind(const std::string& s);
/// Matrix slots required by a kind, in canonical order.
const std::vector<std::string>& slot_names(Kind k);

/// A named collection of matrices for one problem kind.
template <class T>
struct Instance {
  Kind kind = Kind::free;
  std::map<std::string, Matrix<T>> mats;

  const Matrix<T>& at(const std::string& name) const;
  /// Every required slot present, no extras (InputError otherwise).
  void check_slots() const;

  PairInstance<T> as_pair() const;
  LinearInstance<T> as_linear() const;
  PartitionedInstance<T> as_partitioned() const;
};

Instance<Complex> to_float(const Instance<Gaussian>& in);

/// The engine result for an instance, dispatched on its kind. Each kind has
/// one or two objectives; `objectives` names them in order.
struct KindAnalysis {
  std::vector<std::string> objectives;
  std::vector<ExtremalSummary> summaries;
  std::vector<DecisionReport> decisions;  ///< one per objective
  std::vector<Condition> premises;
};

template <class T>
KindAnalysis analyze(const Instance<T>& in, const TolerancePolicy& pol = {});

}  // namespace hermex
