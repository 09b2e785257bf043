#pragma once

// Pieces shared by the acceptance run and the curation tool.

#include "hermex/fault.hpp"
#include "hermex/oracle.hpp"

#include <cstdint>
#include <vector>

namespace hermex {

/// A generated instance; `anchored` replaces A1 by B1 X B1* + s v v* with X
/// the planted solution and s = 0, 1, -1 by seed, so the objective can get
/// down to rank <= 1. Those are the instances where the bordered matrices are
/// not simply of full rank, which is what makes block faults visible.
struct CuratedCase {
  Kind kind;
  std::size_t n;
  std::uint64_t seed;
  bool anchored = false;
};

inline Instance<Gaussian> curated_instance(const CuratedCase& c) {
  GeneratedInstance g = gen_instance(c.kind, c.n, c.seed);
  if (c.anchored && (c.kind == Kind::pair || c.kind == Kind::linear || c.kind == Kind::linear_psd)) {
    const ExactMatrix& b1 = g.instance.mats.at("B1");
    ExactMatrix a1 = b1 * g.planted * b1.adjoint();
    Rng rng(derive_seed(c.seed, 99));
    const ExactMatrix v = random_matrix<Gaussian>(rng, b1.rows(), 1);
    if (c.seed % 3 == 1) a1 += v * v.adjoint();
    if (c.seed % 3 == 2) a1 -= v * v.adjoint();
    g.instance.mats["A1"] = a1;
  }
  return g.instance;
}

/// The injected faults. Rank-only matrices get one block negated; for the
/// Hermitian bordered ones a diagonal block is negated or an off-diagonal
/// block and its mirror are dropped (negating a mirrored off-diagonal pair is
/// a congruence by a signature matrix here, invisible to any inertia).
inline std::vector<fault::Site> fault_sites() {
  using fault::Mode;
  std::vector<fault::Site> out;
  for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {0, 4}, {1, 1}, {1, 3}, {2, 2}, {2, 4}, {3, 0}, {3, 1}, {3, 2}})
    out.push_back({"pair.Q1", std::size_t(r), std::size_t(c), Mode::negate, false});
  for (auto [r, c] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}})
    out.push_back({"linear.M", std::size_t(r), std::size_t(c), Mode::negate, false});
  for (const char* m : {"pair.P2", "pair.P3"}) {
    out.push_back({m, 0, 0, Mode::negate, false});
    out.push_back({m, 1, 1, Mode::negate, false});
    out.push_back({m, 0, 2, Mode::zero, true});
    out.push_back({m, 1, 2, Mode::zero, true});
  }
  out.push_back({"linear.N", 0, 0, Mode::negate, false});
  out.push_back({"linear.N", 2, 2, Mode::negate, false});
  out.push_back({"linear.N", 0, 1, Mode::zero, true});
  out.push_back({"linear.N", 1, 2, Mode::zero, true});
  return out;
}

inline bool fault_applies(const fault::Site& s, Kind k) {
  return s.matrix.rfind("pair.", 0) == 0 ? k == Kind::pair : k == Kind::linear;
}

/// The engine's first-objective summary with `site` injected; nullopt when
/// the engine's own consistency check trips instead.
inline std::optional<ExtremalSummary> faulty_summary(const Instance<Gaussian>& in, const fault::Site& site) {
  try {
    fault::Scope scope(site);
    return in.kind == Kind::pair ? extremal_pair_constrained(in.as_pair())
                                 : extremal_linear_constrained(in.as_linear()).summary;
  } catch (const InternalInconsistency&) {
    return std::nullopt;
  }
}

}  // namespace hermex
