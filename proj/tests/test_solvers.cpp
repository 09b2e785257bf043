#include "hermex/solvers.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

namespace hermex {
namespace {

using G = Gaussian;
using EM = ExactMatrix;
const G I_ = G::imag_unit();

// Real-linear span of the images of a term set, as real vectors.
std::vector<std::vector<mpq_class>> term_images(const AffineSolutionSet<G>& s) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& t : s.terms) {
    const std::size_t pr = t.param_rows(), pc = t.param_cols();
    const bool herm = t.kind != TermKind::plain && t.kind != TermKind::adjoint_pair;
    for (std::size_t i = 0; i < pr; ++i)
      for (std::size_t j = 0; j < pc; ++j)
        for (int part = 0; part < 2; ++part) {
          EM v(pr, pc);
          if (herm) {
            if (j < i || (i == j && part == 1)) continue;
            v(i, j) = part ? I_ : G(1);
            if (i != j) v(j, i) = v(i, j).conj();
          } else {
            v(i, j) = part ? I_ : G(1);
          }
          const EM img = t.apply(v);
          std::vector<mpq_class> row;
          for (const auto& x : img.data()) {
            row.push_back(x.real());
            row.push_back(x.imag());
          }
          rows.push_back(std::move(row));
        }
  }
  return rows;
}

std::size_t span_rank(const std::vector<std::vector<mpq_class>>& rows) {
  if (rows.empty()) return 0;
  EM m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = G(rows[i][j]);
  return rank(m);
}

TEST(PairLinearCommon, ForcedSolution) {
  const EM c{{1, 2}, {3, I_}};
  const EM id = EM::identity(2);
  const auto r = pair_linear_common<G>(id, id, c, id, id, c);
  ASSERT_TRUE(r.solvable);
  EXPECT_EQ(r.set->x0, c);
  for (const auto& t : r.set->terms) EXPECT_TRUE(t.apply(EM::identity(2)).is_zero());
}

TEST(PairLinearCommon, ScalarConflictIsUnsolvable) {
  const EM one{{1}};
  const auto r = pair_linear_common<G>(one, one, EM{{0}}, one, one, EM{{1}});
  EXPECT_FALSE(r.solvable);
  EXPECT_FALSE(r.set.has_value());
  const auto& last = r.conditions.back();
  EXPECT_EQ(last.lhs, 3);
  EXPECT_EQ(last.rhs, 2);
}

TEST(PairLinearCommon, PlantedResidualsVanish) {
  Rng rng(201);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 3, p = 1 + rng() % 3;
    const EntryDist d{3, 2, 0.5, 0.2};
    const EM x = random_matrix<G>(rng, n, p, d);
    const EM a1 = random_low_rank<G>(rng, 1 + rng() % 3, n, 1 + rng() % 2, d);
    const EM a2 = random_matrix<G>(rng, rng() % 3, n, d);
    const EM b1 = random_matrix<G>(rng, p, 1 + rng() % 3, d);
    const EM b2 = random_low_rank<G>(rng, p, 1 + rng() % 3, 1, d);
    const auto r = pair_linear_common<G>(a1, b1, a1 * x * b1, a2, b2, a2 * x * b2);
    ASSERT_TRUE(r.solvable) << r.reason();
    for (int k = 0; k < 25; ++k) {
      const EM s = r.set->sample(rng, d);
      EXPECT_EQ(a1 * s * b1, a1 * x * b1);
      EXPECT_EQ(a2 * s * b2, a2 * x * b2);
    }
  }
}

TEST(CongruenceSolve, Examples) {
  const EM b{{2, I_}, {-I_, 1}};
  auto r = congruence_solve<G>(EM::identity(2), Hermitian<G>(b));
  ASSERT_TRUE(r.solvable);
  EXPECT_EQ(r.set->x0, b);
  EXPECT_TRUE(r.set->terms[0].apply(b).is_zero());

  r = congruence_solve<G>(EM{{1, 0}}, Hermitian<G>(EM{{4}}));
  ASSERT_TRUE(r.solvable);
  EXPECT_EQ(r.set->x0, EM::diagonal({G(4), G(0)}));
  const EM u{{7, 5}, {5, 3}};
  EXPECT_EQ(r.set->terms[0].apply(u), (EM{{0, 5}, {5, 3}}));

  EXPECT_FALSE(congruence_solve<G>(EM::zeros(1, 2), Hermitian<G>(EM{{1}})).solvable);
  EXPECT_THROW(congruence_solve<G>(EM::zeros(2, 2), Hermitian<G>(EM{{1}})), DimensionMismatch);
}

TEST(CongruenceSolve, BothFormsSpanTheSameSet) {
  Rng rng(203);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 3;
    const EntryDist d{3, 2, 0.5, 0.2};
    const EM a = random_low_rank<G>(rng, m, n, 1 + rng() % 2, d);
    const EM x = random_hermitian<G>(rng, n, d).matrix();
    const Hermitian<G> b(a * x * a.adjoint());
    const auto c = congruence_solve<G>(a, b, CongruenceForm::complement);
    const auto p = congruence_solve<G>(a, b, CongruenceForm::adjoint_pair);
    ASSERT_TRUE(c.solvable && p.solvable);
    EXPECT_EQ(c.set->x0, p.set->x0);
    auto ic = term_images(*c.set);
    auto ip = term_images(*p.set);
    const std::size_t rc = span_rank(ic), rp = span_rank(ip);
    ic.insert(ic.end(), ip.begin(), ip.end());
    EXPECT_EQ(rc, rp);
    EXPECT_EQ(span_rank(ic), rc);
    // Hermitian matrices killed by A(.)A* have real dimension n^2 - r(A)^2.
    const std::size_t ra = rank(a);
    EXPECT_EQ(rc, n * n - ra * ra);
    for (int k = 0; k < 25; ++k) {
      EXPECT_TRUE(c.set->satisfies(c.set->sample(rng, d)));
      EXPECT_TRUE(p.set->satisfies(p.set->sample(rng, d)));
    }
  }
}

TEST(CongruenceSolve, FormsReachTheSameInertiasOnAGrid) {
  const auto c = congruence_solve<G>(EM{{1, 0}}, Hermitian<G>(EM{{4}}), CongruenceForm::complement);
  const auto p = congruence_solve<G>(EM{{1, 0}}, Hermitian<G>(EM{{4}}), CongruenceForm::adjoint_pair);
  auto collect = [](const AffineSolutionSet<G>& s, bool herm_param) {
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          for (int d = -1; d <= 1; ++d) {
            EM v = herm_param ? EM{{G(a), G(b) + G(c) * I_}, {G(b) - G(c) * I_, G(d)}}
                              : EM{{G(0), G(0)}, {G(b) + G(c) * I_, G(d) + G(a) * I_}};
            const EM x = s.evaluate({v});
            const Inertia in = inertia(Hermitian<G>(x));
            seen.insert({rank(x), in.plus, in.minus});
          }
    return seen;
  };
  EXPECT_EQ(collect(*c.set, true), collect(*p.set, false));
  EXPECT_EQ(collect(*c.set, true).size(), 3u);
}

TEST(LinearHermitianSolve, Examples) {
  const EM b{{2, I_}, {-I_, 1}};
  auto r = linear_hermitian_solve<G>(EM::identity(2), b);
  ASSERT_TRUE(r.solvable);
  EXPECT_EQ(r.set->x0, b);

  r = linear_hermitian_solve<G>(EM{{1, 0}}, EM{{1, 0}});
  ASSERT_TRUE(r.solvable);
  EXPECT_EQ(r.set->x0, EM::diagonal({G(1), G(0)}));
  EXPECT_EQ(r.set->terms[0].apply(EM{{7, 5}, {5, 3}}), EM::diagonal({G(0), G(3)}));

  r = linear_hermitian_solve<G>(EM{{1, 0}}, EM{{0, 1}});
  ASSERT_TRUE(r.solvable);
  EXPECT_EQ(r.set->x0, (EM{{0, 1}, {1, 0}}));

  EXPECT_FALSE(linear_hermitian_solve<G>(EM{{0, 0}}, EM{{1, 0}}).solvable);
  EXPECT_FALSE(linear_hermitian_solve<G>(EM::identity(2), EM{{0, 1}, {0, 0}}).solvable);
}

TEST(LinearPsdSolve, Examples) {
  auto r = linear_psd_solve<G>(EM::identity(2), EM::identity(2));
  ASSERT_TRUE(r.solvable);
  EXPECT_EQ(r.set->x0, EM::identity(2));

  r = linear_psd_solve<G>(EM{{1, 0}}, EM{{1, 0}});
  ASSERT_TRUE(r.solvable);
  EXPECT_EQ(r.set->x0, EM::diagonal({G(1), G(0)}));
  EXPECT_EQ(r.set->terms[0].kind, TermKind::psd_sandwich);

  r = linear_psd_solve<G>(EM{{1, 0}}, EM{{-1, 0}});
  EXPECT_FALSE(r.solvable);
  EXPECT_EQ(r.reason().substr(0, 8), "i-(A B*)");
}

TEST(LinearPsdSolve, PlantedSamplesArePsd) {
  Rng rng(207);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 3;
    const EntryDist d{3, 2, 0.5, 0.2};
    const EM x = random_psd<G>(rng, n, rng() % (n + 1), d).matrix();
    const EM a = random_matrix<G>(rng, m, n, d);
    const auto r = linear_psd_solve<G>(a, a * x);
    ASSERT_TRUE(r.solvable) << r.reason();
    for (int k = 0; k < 25; ++k) {
      const EM s = r.set->sample(rng, d);
      EXPECT_EQ(a * s, a * x);
      EXPECT_EQ(oracle::descartes_inertia(s).minus, 0u);
    }
  }
}

TEST(PairCongruenceCommon, DisjointConstraints) {
  const auto r = pair_congruence_common<G>(EM{{1, 0}}, Hermitian<G>(EM{{3}}), EM{{0, 1}}, Hermitian<G>(EM{{-2}}));
  ASSERT_TRUE(r.solvable);
  EXPECT_EQ(r.conditions[0].lhs, 4);
  Rng rng(1);
  for (int k = 0; k < 25; ++k) {
    const EM x = r.set->sample(rng);
    EXPECT_EQ(x(0, 0), G(3));
    EXPECT_EQ(x(1, 1), G(-2));
    EXPECT_EQ(x, x.adjoint());
  }
}

TEST(PairCongruenceCommon, ScalarConflict) {
  const EM one{{1}};
  const auto r = pair_congruence_common<G>(one, Hermitian<G>(EM{{0}}), one, Hermitian<G>(EM{{1}}));
  EXPECT_FALSE(r.solvable);
  EXPECT_EQ(r.conditions[0].lhs, 3);
  EXPECT_EQ(r.conditions[0].rhs, 2);
}

TEST(PairCongruenceCommon, IndividuallyInconsistentIsPremiseViolation) {
  EXPECT_THROW(pair_congruence_common<G>(EM::zeros(1, 2), Hermitian<G>(EM{{1}}), EM{{1, 0}}, Hermitian<G>(EM{{1}})),
               PremiseViolated);
}

TEST(PairCongruenceCommon, Planted) {
  Rng rng(211);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const EntryDist d{3, 2, 0.5, 0.2};
    const EM x = random_hermitian<G>(rng, n, d).matrix();
    const EM b2 = random_low_rank<G>(rng, 1 + rng() % 3, n, 1 + rng() % 2, d);
    const EM b3 = random_matrix<G>(rng, rng() % 3, n, d);
    const auto r = pair_congruence_common<G>(b2, Hermitian<G>(b2 * x * b2.adjoint()), b3,
                                             Hermitian<G>(b3 * x * b3.adjoint()));
    ASSERT_TRUE(r.solvable);
    for (int k = 0; k < 25; ++k) {
      const EM s = r.set->sample(rng, d);
      EXPECT_TRUE(r.set->satisfies(s));
      EXPECT_EQ(b2 * s * b2.adjoint(), b2 * x * b2.adjoint());
    }
  }
}

TEST(HermitizeCommonSolution, Examples) {
  const EM e1{{1, 0}}, e2{{0, 1}};
  AffineSolutionSet<G> s;
  s.x0 = EM{{1, 1}, {0, 1}};
  s.constraints = {{e1, e1.adjoint(), EM{{1}}}, {e2, e2.adjoint(), EM{{1}}}};
  EXPECT_EQ(hermitize_common_solution(s).matrix(), (EM{{1, G::ratio(1, 2)}, {G::ratio(1, 2), 1}}));
  s.x0 = EM{{1, 2}, {2, 1}};
  EXPECT_EQ(hermitize_common_solution(s).matrix(), s.x0);
  s.x0 = EM{{2, 0}, {0, 1}};
  EXPECT_THROW(hermitize_common_solution(s), PremiseViolated);
}

TEST(FloatSolvers, PlantedPairCongruence) {
  Rng rng(213);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const EM x = random_hermitian<G>(rng, n).matrix();
    const EM b2 = random_matrix<G>(rng, 1, n), b3 = random_matrix<G>(rng, 1, n);
    const FloatMatrix fb2 = to_float(b2), fb3 = to_float(b3);
    const auto r = pair_congruence_common<Complex>(fb2, Hermitian<Complex>(to_float(b2 * x * b2.adjoint())), fb3,
                                                   Hermitian<Complex>(to_float(b3 * x * b3.adjoint())));
    ASSERT_TRUE(r.solvable);
    EXPECT_TRUE(r.set->satisfies(r.set->sample(rng)));
  }
}

}  // namespace
}  // namespace hermex
