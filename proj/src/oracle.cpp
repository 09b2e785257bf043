#include "hermex/oracle.hpp"

#include "hermex/solvers.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace hermex {

namespace {

Gaussian rat(long num, long den = 1) { return Gaussian(mpq_class(num, den)); }
const Gaussian kI = Gaussian::imag_unit();

// Real basis of the Hermitian n x n matrices.
std::vector<ExactMatrix> hermitian_basis(std::size_t n) {
  std::vector<ExactMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      ExactMatrix h(n, n);
      h(i, j) = h(j, i) = rat(1);
      out.push_back(h);
      if (i != j) {
        ExactMatrix g(n, n);
        g(i, j) = kI;
        g(j, i) = -kI;
        out.push_back(g);
      }
    }
  return out;
}

// mixed-scale rational: (p/q) 2^e
Gaussian mixed_scale(Rng& rng) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3), ex(-3, 3);
  const long e = ex(rng);
  mpq_class v(num(rng), den(rng));
  v.canonicalize();
  if (e > 0) v *= mpq_class(1L << e);
  if (e < 0) v /= mpq_class(1L << -e);
  return Gaussian(v);
}

Gaussian small_rational(Rng& rng, long g) {
  std::uniform_int_distribution<long> num(-3 * g, 3 * g), den(1, 3);
  mpq_class v(num(rng), den(rng));
  v.canonicalize();
  return Gaussian(v);
}

Gaussian lattice_int(Rng& rng, long g, double zero_prob) {
  std::bernoulli_distribution z(zero_prob);
  if (z(rng)) return Gaussian();
  std::uniform_int_distribution<long> d(-g, g);
  return rat(d(rng));
}

ExactMatrix combine(const ExactMatrix& base, const std::vector<ExactMatrix>& dirs, const std::vector<Gaussian>& c) {
  ExactMatrix x = base;
  for (std::size_t k = 0; k < dirs.size(); ++k)
    if (!c[k].is_zero()) x += dirs[k] * c[k];
  return x;
}

// Re tr(A* B), the real inner product on matrices
Gaussian real_inner(const ExactMatrix& a, const ExactMatrix& b) {
  mpq_class acc = 0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    const Gaussian& x = a.data()[k];
    const Gaussian& y = b.data()[k];
    acc += x.real() * y.real() + x.imag() * y.imag();
  }
  return Gaussian(acc);
}

// G D G* with a random number of positive / negative entries in D, scaled
// by 2^e, e in [-8, 10]: large targets dominate the offset, small ones let
// the offset win along constrained directions
ExactMatrix random_target(Rng& rng, std::size_t m) {
  // half the time fully definite of either sign, which is where maxima hide
  std::size_t p = 0, q = 0;
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: p = m; break;
    case 1: q = m; break;
    default:
      p = std::uniform_int_distribution<std::size_t>(0, m)(rng);
      q = std::uniform_int_distribution<std::size_t>(0, m - p)(rng);
  }
  std::uniform_int_distribution<int> ex(-8, 10);
  const int e = ex(rng);
  const Gaussian scale = e >= 0 ? rat(1L << e) : rat(1, 1L << -e);
  std::vector<Gaussian> dg(m);
  for (std::size_t k = 0; k < m; ++k) dg[k] = k < p ? scale : (k < p + q ? -scale : Gaussian());
  const ExactMatrix g = random_matrix<Gaussian>(rng, m, m);
  return g * ExactMatrix::diagonal(dg) * g.adjoint();
}

Eigen::MatrixXcd to_eigen(const ExactMatrix& a) {
  Eigen::MatrixXcd r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {a(i, j).real_double(), a(i, j).imag_double()};
  return r;
}

// nearest multiple of 2^-24
Gaussian dyadic(double x) {
  const double s = 16777216.0;
  return Gaussian(mpq_class(static_cast<long>(std::llround(x * s))) / mpq_class(16777216L));
}

Inertia exact_inertia(const ExactMatrix& y) { return inertia(Hermitian<Gaussian>(y)); }

struct Tracker {
  Observation obs;
  bool seen = false;
  bool seen_random = false;

  // x_of is only called when some extreme improves.
  template <class F>
  void probe(const Inertia& in, bool random, F&& x_of) {
    const long p = static_cast<long>(in.plus), q = static_cast<long>(in.minus), r = p + q;
    const long v[6] = {r, r, p, p, q, q};
    const bool is_max[6] = {true, false, true, false, true, false};
    std::optional<ExactMatrix> x;
    for (std::size_t k = 0; k < 6; ++k) {
      long& cur = obs.all.field(k);
      const bool better = !seen || (is_max[k] ? v[k] > cur : v[k] < cur);
      if (better) {
        cur = v[k];
        if (!x) x = x_of();
        obs.arg[k] = *x;
      }
      if (random) {
        long& cr = obs.random.field(k);
        if (!seen_random || (is_max[k] ? v[k] > cr : v[k] < cr)) cr = v[k];
      }
    }
    seen = true;
    if (random) {
      seen_random = true;
      ++obs.random_probes;
    } else {
      ++obs.grid_probes;
    }
  }
};

}  // namespace

std::optional<ObjectiveFamily> hermitian_family(std::size_t n, const std::vector<LinearConstraint<Gaussian>>& cs) {
  const auto basis = hermitian_basis(n);
  ObjectiveFamily f;
  if (cs.empty()) {
    f.x0 = ExactMatrix(n, n);
    f.dirs = basis;
    return f;
  }
  std::size_t rows = 0;
  for (const auto& c : cs) {
    if (c.left.cols() != n || c.right.rows() != n || c.rhs.rows() != c.left.rows() ||
        c.rhs.cols() != c.right.cols()) {
      throw DimensionMismatch("constraint shape does not match an " + std::to_string(n) + "x" + std::to_string(n) +
                              " unknown");
    }
    rows += 2 * c.rhs.rows() * c.rhs.cols();
  }
  ExactMatrix k(rows, basis.size()), rhs(rows, 1);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::size_t r = 0;
    for (const auto& c : cs) {
      const ExactMatrix img = c.left * basis[b] * c.right;
      for (const auto& z : img.data()) {
        k(r++, b) = Gaussian(z.real());
        k(r++, b) = Gaussian(z.imag());
      }
    }
  }
  std::size_t r = 0;
  for (const auto& c : cs)
    for (const auto& z : c.rhs.data()) {
      rhs(r++, 0) = Gaussian(z.real());
      rhs(r++, 0) = Gaussian(z.imag());
    }
  const auto sol = solve_linear(k, rhs);
  if (!sol) return std::nullopt;
  f.x0 = ExactMatrix(n, n);
  for (std::size_t b = 0; b < basis.size(); ++b) f.x0 += basis[b] * (*sol)(b, 0);
  const ExactMatrix ns = null_space(k);
  for (std::size_t j = 0; j < ns.cols(); ++j) {
    ExactMatrix d(n, n);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (!ns(b, j).is_zero()) d += basis[b] * ns(b, j);
    f.dirs.push_back(d);
  }
  return f;
}

std::vector<ExactMatrix> unpack_blocks(const ExactMatrix& x,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& shapes) {
  std::vector<ExactMatrix> out;
  std::size_t r = 0, c = 0;
  for (const auto& [p, q] : shapes) {
    out.push_back(x.block(r, c, p, q));
    r += p;
    c += q;
  }
  return out;
}

ObjectiveFamily complex_family(const std::vector<std::pair<std::size_t, std::size_t>>& shapes,
                               std::function<ExactMatrix(const std::vector<ExactMatrix>&)> objective) {
  std::size_t rows = 0, cols = 0;
  for (const auto& [p, q] : shapes) {
    rows += p;
    cols += q;
  }
  ObjectiveFamily f;
  f.x0 = ExactMatrix(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& [p, q] : shapes) {
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        ExactMatrix e(rows, cols), ie(rows, cols);
        e(r0 + i, c0 + j) = rat(1);
        ie(r0 + i, c0 + j) = kI;
        f.dirs.push_back(e);
        f.dirs.push_back(ie);
      }
    r0 += p;
    c0 += q;
  }
  f.objective = [shapes, objective](const ExactMatrix& x) { return objective(unpack_blocks(x, shapes)); };
  return f;
}

Observation observed_extremes(const ObjectiveFamily& f, const SearchBudget& b) {
  const std::size_t d = f.dims();
  const bool grid = d <= b.max_grid_dims;
  if (!grid && b.random_trials == 0) {
    throw BudgetUnsatisfiable("family has " + std::to_string(d) + " real parameters, above the lattice cap of " +
                              std::to_string(b.max_grid_dims) + ", and no random trials were requested");
  }
  Tracker t;
  const ExactMatrix y0 = f.objective(f.x0);
  std::vector<ExactMatrix> ys;
  ys.reserve(d);
  for (const auto& dir : f.dirs) ys.push_back(f.objective(f.x0 + dir) - y0);

  // Real Gram matrix of the objective directions, for targeted probes.
  ExactMatrix gram(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k; l < d; ++l) gram(k, l) = gram(l, k) = real_inner(ys[k], ys[l]);

  // A quarter of the random budget goes to a walk that perturbs the best
  // point for i+ and for i- (plateau moves accepted); broad sampling alone
  // rarely lands in thin definite regions.
  const bool walk = !f.psd && d > 0 && b.random_trials >= 8;
  const std::size_t broad = walk ? b.random_trials - b.random_trials / 4 : b.random_trials;
  std::vector<Gaussian> best_c[2];
  long best_v[2] = {-1, -1};
  auto probe_coefs = [&](const std::vector<Gaussian>& c) {
    const Inertia in = exact_inertia(combine(y0, ys, c));
    t.probe(in, true, [&] { return combine(f.x0, f.dirs, c); });
    return in;
  };
  auto remember = [&](const std::vector<Gaussian>& c, const Inertia& in) {
    const long v[2] = {static_cast<long>(in.plus), static_cast<long>(in.minus)};
    for (int s = 0; s < 2; ++s)
      if (v[s] >= best_v[s]) {
        best_v[s] = v[s];
        best_c[s] = c;
      }
  };

  for (std::size_t trial = 0; trial < broad; ++trial) {
    Rng rng(derive_seed(b.seed, trial));
    if (f.psd) {
      const ExactMatrix x = f.psd_sampler(rng);
      t.probe(exact_inertia(f.objective(x)), true, [&] { return x; });
      continue;
    }
    std::vector<Gaussian> c(d);
    const std::size_t mode = trial % 2 == 1 ? 3 : (trial / 2) % 3;
    if (mode == 3 && d > 0) {
      // random point of the image nearest to a large target of random inertia
      const ExactMatrix w = random_target(rng, y0.rows()) - y0;
      ExactMatrix rhs(d, 1);
      for (std::size_t k = 0; k < d; ++k) rhs(k, 0) = real_inner(ys[k], w);
      const auto sol = solve_linear(gram, rhs);
      for (std::size_t k = 0; k < d; ++k) c[k] = (*sol)(k, 0);
    } else {
      for (auto& v : c) {
        if (mode == 0) v = mixed_scale(rng);
        else if (mode == 1) v = lattice_int(rng, b.grid_radius, 0.5);
        else v = small_rational(rng, b.grid_radius);
      }
    }
    remember(c, probe_coefs(c));
  }

  if (walk) {
    // Float eigenvalues steer the climb; only exact probes at dyadic points
    // are recorded. For i+ at current value v the (v+1)-th largest
    // eigenvalue is pushed up, for i- the (v+1)-th smallest is pushed down.
    const std::size_t m = y0.rows();
    const Eigen::MatrixXcd fy0 = to_eigen(y0);
    std::vector<Eigen::MatrixXcd> fys;
    for (const auto& y : ys) fys.push_back(to_eigen(y));
    auto eig = [&](const std::vector<double>& c) {
      Eigen::MatrixXcd y = fy0;
      for (std::size_t k = 0; k < d; ++k) y += c[k] * fys[k];
      return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(y, Eigen::EigenvaluesOnly).eigenvalues();
    };
    const std::size_t budget = b.random_trials - broad;
    std::size_t used = 0;
    for (int sgn = 0; sgn < 2; ++sgn) {
      const std::size_t limit = sgn == 0 ? budget / 2 : budget;
      long v = best_v[sgn];
      if (v >= static_cast<long>(m)) continue;
      Rng rng(derive_seed(b.seed ^ 0x6a09e667f3bcc908ULL, static_cast<std::uint64_t>(sgn)));
      std::normal_distribution<double> nd(0.0, 1.0);
      std::vector<double> c(d);
      for (std::size_t k = 0; k < d; ++k) c[k] = best_c[sgn][k].real().get_d();
      auto sur = [&](const std::vector<double>& x) {
        const auto ev = eig(x);
        return sgn == 0 ? ev(static_cast<Eigen::Index>(m) - 1 - v) : -ev(v);
      };
      double cur = sur(c);
      double step = 1.0;
      for (double x : c) step = std::max(step, 0.1 * std::abs(x));
      for (std::size_t it = 0; used < limit && v < static_cast<long>(m); ++it) {
        std::vector<double> t = c;
        for (auto& x : t) x += step * nd(rng);
        const double val = sur(t);
        if (val > cur) {
          c = t;
          cur = val;
          step *= 1.5;
        } else {
          step *= 0.9;
          if (step < 1e-9) step = 1.0;
        }
        if (cur > 0 || it % 50 == 49) {
          std::vector<Gaussian> q(d);
          for (std::size_t k = 0; k < d; ++k) q[k] = dyadic(c[k]);
          const Inertia in = probe_coefs(q);
          ++used;
          const long got = sgn == 0 ? static_cast<long>(in.plus) : static_cast<long>(in.minus);
          if (got > v) {
            v = got;
            if (v < static_cast<long>(m)) cur = sur(c);
          } else if (cur > 0) {
            cur = 0;  // float was too optimistic here; keep climbing
          }
        }
      }
    }
    // leftover budget: more broad samples
    for (std::size_t k = used; k < budget; ++k) {
      Rng rng(derive_seed(b.seed, broad + k));
      std::vector<Gaussian> c(d);
      for (auto& x : c) x = mixed_scale(rng);
      probe_coefs(c);
    }
  }

  if (grid) {
    const long g = b.grid_radius;
    std::vector<long> idx(d, -g);
    std::vector<Gaussian> c(d, rat(-g));
    while (true) {
      if (f.psd) {
        const ExactMatrix x = combine(f.x0, f.dirs, c);
        if (exact_inertia(x).minus == 0) t.probe(exact_inertia(f.objective(x)), false, [&] { return x; });
      } else {
        t.probe(exact_inertia(combine(y0, ys, c)), false, [&] { return combine(f.x0, f.dirs, c); });
      }
      std::size_t k = 0;
      while (k < d && idx[k] == g) {
        idx[k] = -g;
        c[k] = rat(-g);
        ++k;
      }
      if (k == d) break;
      ++idx[k];
      c[k] = rat(idx[k]);
    }
    t.obs.grid_used = true;
  }
  if (!t.seen) throw BudgetUnsatisfiable("no feasible probe in the budget");
  if (!t.seen_random) t.obs.random = t.obs.all;
  return t.obs;
}

std::string to_string(FieldStatus s) {
  switch (s) {
    case FieldStatus::confirmed_equal: return "confirmed-equal";
    case FieldStatus::sandwich_only: return "sandwich-only";
    case FieldStatus::violated: return "violated";
    case FieldStatus::violated_by_bound: return "violated-by-bound";
  }
  return "?";
}

bool VerificationOutcome::ok() const {
  return std::all_of(fields.begin(), fields.end(), [](const FieldOutcome& f) {
    return f.status == FieldStatus::confirmed_equal || f.status == FieldStatus::sandwich_only;
  });
}

bool VerificationOutcome::all_confirmed() const {
  return std::all_of(fields.begin(), fields.end(),
                     [](const FieldOutcome& f) { return f.status == FieldStatus::confirmed_equal; });
}

bool VerificationReport::ok() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const VerificationOutcome& o) { return o.ok(); });
}

VerificationOutcome classify(const std::string& name, const ExtremalSummary& predicted, const Observation& obs) {
  VerificationOutcome out;
  out.objective = name;
  out.predicted = predicted;
  out.observed = obs.all;
  out.random_probes = obs.random_probes;
  out.grid_probes = obs.grid_probes;
  out.grid_used = obs.grid_used;
  for (std::size_t k = 0; k < 6; ++k) {
    FieldOutcome& fo = out.fields[k];
    fo.predicted = predicted.field(k);
    fo.observed = obs.all.field(k);
    const bool is_max = k % 2 == 0;
    if (is_max) {
      if (fo.observed > fo.predicted) {
        fo.status = FieldStatus::violated;
        fo.witness = obs.arg[k];
      } else if (obs.random.field(k) == fo.predicted) {
        fo.status = FieldStatus::confirmed_equal;
      } else {
        // generic points attain the max; not seeing it means the bound is off
        fo.status = FieldStatus::violated_by_bound;
      }
    } else {
      if (fo.observed < fo.predicted) {
        fo.status = FieldStatus::violated;
        fo.witness = obs.arg[k];
      } else if (fo.observed == fo.predicted) {
        fo.status = FieldStatus::confirmed_equal;
      } else {
        fo.status = FieldStatus::sandwich_only;
      }
    }
  }
  return out;
}

VerificationOutcome verify_family(const ObjectiveFamily& f, const ExtremalSummary& predicted, const SearchBudget& b) {
  return classify(f.name, predicted, observed_extremes(f, b));
}

namespace {

ExactMatrix eye(std::size_t n) { return ExactMatrix::identity(n); }

void psd_sampler_for(ObjectiveFamily& f, const ExactMatrix& b4, const ExactMatrix& a4) {
  const auto sol = linear_psd_solve(b4, a4);
  if (!sol.solvable || !sol.set) throw PremiseViolated("B4 X = A4 has no positive semidefinite solution");
  const AffineSolutionSet<Gaussian> set = *sol.set;
  f.psd = true;
  f.psd_sampler = [set, b4, a4](Rng& rng) {
    std::vector<ExactMatrix> params;
    for (const auto& term : set.terms) {
      const std::size_t m = term.param_rows();
      std::uniform_int_distribution<std::size_t> kd(0, m);
      const std::size_t k = kd(rng);
      ExactMatrix g(m, k);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          std::bernoulli_distribution cplx(0.5);
          g(i, j) = mixed_scale(rng) + (cplx(rng) ? mixed_scale(rng) * kI : Gaussian());
        }
      // wide scale so that both thin and dominant PSD parts show up
      const int e = std::uniform_int_distribution<int>(-4, 8)(rng);
      const Gaussian sc = e >= 0 ? rat(1L << e) : rat(1, 1L << -e);
      params.push_back(g * g.adjoint() * sc);
    }
    ExactMatrix x = set.evaluate(params);
    // the oracle trusts nothing it did not check itself
    if (!(b4 * x == a4) || !(x == x.adjoint()) || exact_inertia(x).minus != 0) {
      throw InternalInconsistency("PSD parametrization produced an infeasible point");
    }
    return x;
  };
}

}  // namespace

std::vector<ObjectiveFamily> families_for(const Instance<Gaussian>& in) {
  in.check_slots();
  std::vector<ObjectiveFamily> out;
  auto need = [](std::optional<ObjectiveFamily> f, const char* what) {
    if (!f) throw PremiseViolated(std::string("no Hermitian solution: ") + what);
    return *f;
  };
  switch (in.kind) {
    case Kind::free: {
      const ExactMatrix a = in.at("A"), b = in.at("B");
      ObjectiveFamily f = *hermitian_family(b.cols(), {});
      f.name = "A - B X B*";
      f.objective = [a, b](const ExactMatrix& x) { return a - b * x * b.adjoint(); };
      out.push_back(f);
      break;
    }
    case Kind::pair: {
      const ExactMatrix a1 = in.at("A1"), b1 = in.at("B1");
      const ExactMatrix &b2 = in.at("B2"), &b3 = in.at("B3");
      ObjectiveFamily base = need(
          hermitian_family(b1.cols(), {{b2, b2.adjoint(), in.at("A2")}, {b3, b3.adjoint(), in.at("A3")}}),
          "B2 X B2* = A2, B3 X B3* = A3");
      ObjectiveFamily f = base;
      f.name = "A1 - B1 X B1*";
      f.objective = [a1, b1](const ExactMatrix& x) { return a1 - b1 * x * b1.adjoint(); };
      out.push_back(f);
      base.name = "X";
      base.objective = [](const ExactMatrix& x) { return x; };
      out.push_back(base);
      break;
    }
    case Kind::linear:
    case Kind::linear_psd: {
      const ExactMatrix a1 = in.at("A1"), b1 = in.at("B1");
      const ExactMatrix &a4 = in.at("A4"), &b4 = in.at("B4");
      ObjectiveFamily base = need(hermitian_family(b1.cols(), {{b4, eye(b4.cols()), a4}}), "B4 X = A4");
      if (in.kind == Kind::linear_psd) psd_sampler_for(base, b4, a4);
      ObjectiveFamily f = base;
      f.name = "A1 - B1 X B1*";
      f.objective = [a1, b1](const ExactMatrix& x) { return a1 - b1 * x * b1.adjoint(); };
      out.push_back(f);
      base.name = "X";
      base.objective = [](const ExactMatrix& x) { return x; };
      out.push_back(base);
      break;
    }
    case Kind::partitioned: {
      const ExactMatrix a = hcat(in.at("A1"), in.at("A2")), b = hcat(in.at("B1"), in.at("B2"));
      const std::size_t n1 = in.at("A1").cols(), n2 = in.at("A2").cols();
      if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("[A1,A2] and [B1,B2] differ in shape");
      ObjectiveFamily base = need(hermitian_family(n1 + n2, {{a, eye(n1 + n2), b}}), "[A1,A2] X = [B1,B2]");
      ObjectiveFamily f1 = base, f3 = base;
      f1.name = "X1";
      f1.objective = [n1](const ExactMatrix& x) { return x.block(0, 0, n1, n1); };
      f3.name = "X3";
      f3.objective = [n1, n2](const ExactMatrix& x) { return x.block(n1, n1, n2, n2); };
      out.push_back(f1);
      out.push_back(f3);
      break;
    }
  }
  return out;
}

VerificationReport verify_instance(const Instance<Gaussian>& in, const SearchBudget& b,
                                   const std::optional<std::vector<ExtremalSummary>>& predicted) {
  std::vector<ExtremalSummary> pred;
  if (predicted) {
    pred = *predicted;
  } else {
    pred = analyze(in).summaries;
  }
  const auto fams = families_for(in);
  if (pred.size() != fams.size()) {
    throw InputError("expected " + std::to_string(fams.size()) + " predicted summaries, got " +
                     std::to_string(pred.size()));
  }
  VerificationReport rep;
  for (std::size_t k = 0; k < fams.size(); ++k) rep.outcomes.push_back(verify_family(fams[k], pred[k], b));
  return rep;
}

GeneratedInstance gen_instance(Kind kind, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("n must be at least 1");
  Rng rng(seed);
  auto dim = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  // random rank so degenerate structure shows up
  auto mat = [&](std::size_t r, std::size_t c) {
    const std::size_t k = dim(0, std::min(r, c));
    return random_low_rank<Gaussian>(rng, r, c, k);
  };
  GeneratedInstance out;
  Instance<Gaussian>& in = out.instance;
  in.kind = kind;
  switch (kind) {
    case Kind::free: {
      const std::size_t m = dim(1, n + 1);
      out.planted = ExactMatrix(n, n);
      in.mats["A"] = random_hermitian<Gaussian>(rng, m).matrix();
      in.mats["B"] = mat(m, n);
      break;
    }
    case Kind::pair: {
      const ExactMatrix x = random_hermitian<Gaussian>(rng, n).matrix();
      out.planted = x;
      const std::size_t m1 = dim(1, n + 1), m2 = dim(1, n), m3 = dim(1, n);
      in.mats["A1"] = random_hermitian<Gaussian>(rng, m1).matrix();
      in.mats["B1"] = mat(m1, n);
      const ExactMatrix b2 = mat(m2, n), b3 = mat(m3, n);
      in.mats["B2"] = b2;
      in.mats["B3"] = b3;
      in.mats["A2"] = b2 * x * b2.adjoint();
      in.mats["A3"] = b3 * x * b3.adjoint();
      break;
    }
    case Kind::linear:
    case Kind::linear_psd: {
      ExactMatrix x;
      if (kind == Kind::linear) {
        x = random_hermitian<Gaussian>(rng, n).matrix();
      } else {
        x = random_psd<Gaussian>(rng, n, dim(0, n)).matrix();
      }
      out.planted = x;
      const std::size_t m1 = dim(1, n + 1), m4 = dim(1, n);
      in.mats["A1"] = random_hermitian<Gaussian>(rng, m1).matrix();
      in.mats["B1"] = mat(m1, n);
      const ExactMatrix b4 = mat(m4, n);
      in.mats["B4"] = b4;
      in.mats["A4"] = b4 * x;
      break;
    }
    case Kind::partitioned: {
      const std::size_t n1 = (n + 1) / 2, n2 = std::max<std::size_t>(1, n - n1);
      const ExactMatrix x = random_hermitian<Gaussian>(rng, n1 + n2).matrix();
      out.planted = x;
      const std::size_t m = dim(1, n1 + n2);
      const ExactMatrix a = mat(m, n1 + n2);
      const ExactMatrix b = a * x;
      in.mats["A1"] = a.block(0, 0, m, n1);
      in.mats["A2"] = a.block(0, n1, m, n2);
      in.mats["B1"] = b.block(0, 0, m, n1);
      in.mats["B2"] = b.block(0, n1, m, n2);
      break;
    }
  }
  return out;
}

std::vector<ExactMatrix> sample_solutions(const AffineSolutionSet<Gaussian>& s, std::size_t count,
                                          std::uint64_t seed, long scale) {
  std::vector<ExactMatrix> out;
  const EntryDist dist{scale, scale, 0.5, 0.0};
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng(derive_seed(seed, t));
    const ExactMatrix x = s.evaluate(s.draw_parameters(rng, dist));
    for (const auto& c : s.constraints)
      if (!(c.left * x * c.right == c.rhs)) throw InternalInconsistency("sampled solution has nonzero residual");
    if ((s.hermitian || s.psd) && !(x == x.adjoint())) throw InternalInconsistency("sampled solution not Hermitian");
    if (s.psd && exact_inertia(x).minus != 0) throw InternalInconsistency("sampled solution not PSD");
    out.push_back(x);
  }
  return out;
}

namespace {

// real matrix of X -> B X B* on the Hermitian basis
ExactMatrix congruence_map(const ExactMatrix& b, const std::vector<ExactMatrix>& basis) {
  const std::size_t m = b.rows();
  ExactMatrix k(2 * m * m, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ExactMatrix img = b * basis[j] * b.adjoint();
    std::size_t r = 0;
    for (const auto& z : img.data()) {
      k(r++, j) = Gaussian(z.real());
      k(r++, j) = Gaussian(z.imag());
    }
  }
  return k;
}

ExactMatrix from_coords(const std::vector<ExactMatrix>& basis, const ExactMatrix& c, std::size_t n) {
  ExactMatrix x(n, n);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!c(j, 0).is_zero()) x += basis[j] * c(j, 0);
  return x;
}

bool jointly_solvable(const PairInstance<Gaussian>& p) {
  std::vector<LinearConstraint<Gaussian>> cs;
  cs.push_back({p.b1, p.b1.adjoint(), p.a1.matrix()});
  cs.push_back({p.b2, p.b2.adjoint(), p.a2.matrix()});
  cs.push_back({p.b3, p.b3.adjoint(), p.a3.matrix()});
  return hermitian_family(p.b1.cols(), cs).has_value();
}

}  // namespace

TripleCase gen_triple(std::size_t n, std::uint64_t seed, bool infeasible) {
  if (n == 0) throw InputError("n must be at least 1");
  TripleCase out;
  auto dim = [](Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  if (!infeasible) {
    Rng rng(seed);
    const ExactMatrix x = random_hermitian<Gaussian>(rng, n).matrix();
    ExactMatrix b[3];
    for (auto& bi : b) {
      const std::size_t m = dim(rng, 1, n);
      bi = random_low_rank<Gaussian>(rng, m, n, dim(rng, 0, std::min(m, n)));
    }
    auto a = [&](int i) { return Hermitian<Gaussian>::trusted(b[i] * x * b[i].adjoint()); };
    out.inst = {a(0), a(1), a(2), b[0], b[1], b[2]};
    out.planted = x;
    out.attempts = 1;
    return out;
  }
  // Rank-one constraints never conflict jointly; the gap needs
  // span(L3) meeting L1 + L2 outside (L1 n L3) + (L2 n L3), so use rank >= 2.
  if (n < 3) throw InputError("infeasible triples need n >= 3");
  const auto basis = hermitian_basis(n);
  const EntryDist sparse{1, 1, 0.3, 0.5};
  for (std::size_t t = 0; t < 100000; ++t) {
    ++out.attempts;
    Rng rng(derive_seed(seed, t));
    ExactMatrix b[3];
    for (auto& bi : b) bi = random_matrix<Gaussian>(rng, dim(rng, 2, n), n, sparse);
    const ExactMatrix phi1 = congruence_map(b[0], basis), phi2 = congruence_map(b[1], basis),
                      phi3 = congruence_map(b[2], basis);
    const ExactMatrix k1 = null_space(phi1), k2 = null_space(phi2);
    if (k1.cols() == 0 || k2.cols() == 0) continue;
    // Z in ker phi1 whose phi3-image also comes from ker phi2
    const ExactMatrix s1 = phi3 * k1, s2 = phi3 * k2;
    const ExactMatrix both = null_space(hcat(s1, ExactMatrix(-s2)));
    if (both.cols() == 0) continue;
    ExactMatrix c(both.cols(), 1);
    for (std::size_t j = 0; j < both.cols(); ++j) c(j, 0) = lattice_int(rng, 2, 0.3);
    const ExactMatrix coef = both * c;
    const ExactMatrix z = from_coords(basis, k1 * coef.block(0, 0, k1.cols(), 1), n);
    const ExactMatrix x = random_hermitian<Gaussian>(rng, n).matrix();
    auto a = [&](int i, const ExactMatrix& y) { return Hermitian<Gaussian>::trusted(b[i] * y * b[i].adjoint()); };
    out.inst = {a(0, x), a(1, x), a(2, ExactMatrix(x + z)), b[0], b[1], b[2]};
    if (!jointly_solvable(out.inst)) return out;
  }
  throw BudgetUnsatisfiable("no jointly infeasible triple found");
}

}  // namespace hermex
