#pragma once

// Brute-force checker. Builds its own parametrization of each feasible set
// (real coordinates of X, exact elimination), samples it and walks a small
// lattice, and compares what it sees with the closed forms. Exact only.

#include "hermex/extremal.hpp"
#include "hermex/instance.hpp"
#include "hermex/random.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hermex {

struct SearchBudget {
  std::size_t random_trials = 200;
  long grid_radius = 2;
  std::uint64_t seed = 1;
  std::size_t max_grid_dims = 6;  ///< lattice walk only when the family is this small
};

/// Feasible points X = x0 + sum_k c_k dirs[k] with real c_k, mapped through an
/// affine objective. With `psd` set, only PSD points count and random points
/// come from `psd_sampler`.
struct ObjectiveFamily {
  std::string name;
  ExactMatrix x0;
  std::vector<ExactMatrix> dirs;
  std::function<ExactMatrix(const ExactMatrix&)> objective;
  bool psd = false;
  std::function<ExactMatrix(Rng&)> psd_sampler;

  std::size_t dims() const { return dirs.size(); }
};

/// Hermitian n x n X with L X R = C for each (L, R, C). Empty optional when
/// no Hermitian solution exists.
std::optional<ObjectiveFamily> hermitian_family(std::size_t n, const std::vector<LinearConstraint<Gaussian>>& cs);

/// Unconstrained complex X of the given shapes, packed block-diagonally; the
/// objective receives the individual blocks.
ObjectiveFamily complex_family(const std::vector<std::pair<std::size_t, std::size_t>>& shapes,
                               std::function<ExactMatrix(const std::vector<ExactMatrix>&)> objective);

/// Blocks of a block-diagonal packing (inverse of complex_family's layout).
std::vector<ExactMatrix> unpack_blocks(const ExactMatrix& x, const std::vector<std::pair<std::size_t, std::size_t>>& shapes);

/// Observed extremes with the X that produced each.
struct Observation {
  ExtremalSummary all;      ///< over every probe
  ExtremalSummary random;   ///< over the random probes only
  std::array<ExactMatrix, 6> arg;  ///< X reaching each field of `all`
  std::size_t random_probes = 0;
  std::size_t grid_probes = 0;
  bool grid_used = false;
};

Observation observed_extremes(const ObjectiveFamily& f, const SearchBudget& b);

enum class FieldStatus { confirmed_equal, sandwich_only, violated, violated_by_bound };
std::string to_string(FieldStatus s);

struct FieldOutcome {
  FieldStatus status = FieldStatus::confirmed_equal;
  long predicted = 0;
  long observed = 0;
  std::optional<ExactMatrix> witness;  ///< feasible X beyond the predicted bound
};

struct VerificationOutcome {
  std::string objective;
  ExtremalSummary predicted;
  ExtremalSummary observed;
  std::array<FieldOutcome, 6> fields;
  std::size_t random_probes = 0;
  std::size_t grid_probes = 0;
  bool grid_used = false;

  bool ok() const;            ///< nothing violated
  bool all_confirmed() const;  ///< every field confirmed_equal
};

/// Max fields: confirmed when a random probe attains them, violated when any
/// probe exceeds them, violated_by_bound otherwise. Min fields: confirmed when
/// attained, sandwich_only when the search stayed above, violated when
/// undercut.
VerificationOutcome classify(const std::string& name, const ExtremalSummary& predicted, const Observation& obs);

VerificationOutcome verify_family(const ObjectiveFamily& f, const ExtremalSummary& predicted, const SearchBudget& b);

/// The objective families matching analyze()'s objectives, in the same order.
std::vector<ObjectiveFamily> families_for(const Instance<Gaussian>& in);

struct VerificationReport {
  std::vector<VerificationOutcome> outcomes;
  bool ok() const;
};

/// Checks every objective of the instance against the engine, or against
/// `predicted` (one summary per objective) when given. PremiseViolated
/// propagates from the engine.
VerificationReport verify_instance(const Instance<Gaussian>& in, const SearchBudget& b,
                                   const std::optional<std::vector<ExtremalSummary>>& predicted = std::nullopt);

struct GeneratedInstance {
  Instance<Gaussian> instance;
  ExactMatrix planted;  ///< the X used to build right-hand sides
};

/// Random consistent instance with a planted Hermitian (PSD for linear_psd)
/// solution. `n` is the size of X; for partitioned the split is n1 = n / 2
/// rounded up. Deterministic in the seed.
GeneratedInstance gen_instance(Kind kind, std::size_t n, std::uint64_t seed);

/// Three-equation instances B_i X B_i* = A_i. With `infeasible` false the
/// right-hand sides come from one planted X. Otherwise the search keeps
/// drawing sparse B_i until every pair is consistent but the triple is not
/// (checked by exact elimination); `attempts` counts the draws.
struct TripleCase {
  PairInstance<Gaussian> inst;
  std::optional<ExactMatrix> planted;
  std::size_t attempts = 0;
};
TripleCase gen_triple(std::size_t n, std::uint64_t seed, bool infeasible);

/// `count` points of a constructive solution set, each re-checked to have
/// exactly zero residual and the required symmetry / PSD-ness (else
/// InternalInconsistency).
std::vector<ExactMatrix> sample_solutions(const AffineSolutionSet<Gaussian>& s, std::size_t count,
                                          std::uint64_t seed, long scale = 2);

}  // namespace hermex
