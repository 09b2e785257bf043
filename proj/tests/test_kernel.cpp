#include "hermex/kernel.hpp"
#include "hermex/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace hermex {
namespace {

using G = Gaussian;
using EM = ExactMatrix;

G q(long n, long d = 1) { return G::ratio(n, d); }
const G I_ = G::imag_unit();

TEST(Gaussian, ParseAndPrint) {
  EXPECT_EQ(G::parse("3"), q(3));
  EXPECT_EQ(G::parse("-1/2"), q(-1, 2));
  EXPECT_EQ(G::parse("2/4"), q(1, 2));
  EXPECT_EQ(G::parse("1/2+3/4i"), G(mpq_class(1, 2), mpq_class(3, 4)));
  EXPECT_EQ(G::parse("-2i"), G(0, -2));
  EXPECT_EQ(G::parse("i"), I_);
  EXPECT_EQ(G::parse("1-i"), G(1, -1));
  EXPECT_EQ(G(mpq_class(1, 2), mpq_class(-3, 4)).str(), "1/2-3/4i");
  EXPECT_EQ(G(0, 1).str(), "i");
  EXPECT_EQ(q(-7, 3).str(), "-7/3");
  EXPECT_THROW(G::parse("1/0"), InputError);
  EXPECT_THROW(G::parse("abc"), InputError);
  EXPECT_THROW(G::parse(""), InputError);
}

TEST(Gaussian, FieldAxioms) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const G a = random_scalar<G>(rng, {7, 5, 0.7});
    const G b = random_scalar<G>(rng, {7, 5, 0.7});
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ(G::parse(a.str()), a);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(EM::identity(3)), 3u);
  EXPECT_EQ(rank(EM::zeros(2, 4)), 0u);
  const EM m{{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  EXPECT_EQ(oracle::minor_rank(m), 3u);
  EXPECT_EQ(rank(m), 3u);
  EXPECT_EQ(rank(EM(0, 3)), 0u);
  EXPECT_EQ(rank(EM(3, 0)), 0u);
}

TEST(Rank, AgreesWithMinorOracle) {
  Rng rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t m = 1 + rng() % 4;
    const std::size_t n = 1 + rng() % 4;
    const std::size_t k = rng() % 4;
    const EM a = random_low_rank<G>(rng, m, n, k, {3, 2, 0.5});
    EXPECT_EQ(rank(a), oracle::minor_rank(a));
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(Hermitian<G>(EM::diagonal({q(2), q(-3), q(0)}))), (Inertia{1, 1, 1}));
  EXPECT_EQ(inertia(Hermitian<G>(EM::zeros(2, 2))), (Inertia{0, 0, 2}));
  const EM five{{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}};
  // Frozen from the characteristic-polynomial oracle.
  EXPECT_EQ(oracle::descartes_inertia(five), (Inertia{3, 2, 0}));
  EXPECT_EQ(inertia(Hermitian<G>(five)), (Inertia{3, 2, 0}));
  EXPECT_EQ(inertia(Hermitian<G>(EM(0, 0))), (Inertia{0, 0, 0}));
}

TEST(Inertia, HyperbolicPivotWithImaginaryCoupling) {
  // Zero diagonal with a purely imaginary off-diagonal entry.
  const EM a{{0, I_, 0}, {-I_, 0, 1}, {0, 1, 0}};
  EXPECT_EQ(oracle::descartes_inertia(a), inertia(Hermitian<G>(a)));
  const EM b{{0, 0, 2}, {0, 0, 0}, {2, 0, 0}};
  EXPECT_EQ(inertia(Hermitian<G>(b)), (Inertia{1, 1, 1}));
}

TEST(Inertia, RejectsNonHermitian) {
  EXPECT_THROW(Hermitian<G>(EM{{1, 2}, {3, 4}}), NotHermitian);
  EXPECT_THROW(Hermitian<G>(EM{{1, 2}}), NotSquare);
  EXPECT_THROW(Hermitian<G>(EM{{I_}}), NotHermitian);
}

TEST(Inertia, AgreesWithDescartesOracle) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 5;
    EntryDist d{3, 2, 0.5, 0.4};
    Hermitian<G> h = random_hermitian<G>(rng, n, d);
    if (t % 3 == 0) {
      // Zero diagonal forces the hyperbolic branch.
      EM m = h.matrix();
      for (std::size_t i = 0; i < n; ++i) m(i, i) = G();
      h = Hermitian<G>(m);
    }
    const Inertia got = inertia(h);
    EXPECT_EQ(got, oracle::descartes_inertia(h.matrix()));
    EXPECT_EQ(got.rank(), rank(h.matrix()));
  }
}

TEST(Inertia, CongruenceInvariance) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Hermitian<G> a = random_hermitian<G>(rng, n, {2, 1, 0.5, 0.3});
    EM s = random_matrix<G>(rng, n, n, {3, 2, 0.5});
    if (rank(s) < n) continue;
    const Hermitian<G> c(s * a.matrix() * s.adjoint());
    EXPECT_EQ(inertia(c), inertia(a));
  }
}

TEST(Pinv, Examples) {
  EXPECT_EQ(pinv(EM::diagonal({q(2), q(0)})), EM::diagonal({q(1, 2), q(0)}));
  EXPECT_EQ(pinv(EM{{1}, {1}}), (EM{{q(1, 2), q(1, 2)}}));
  EXPECT_EQ(pinv(EM(0, 3)), EM(3, 0));
  EXPECT_EQ(pinv(EM::zeros(2, 3)), EM::zeros(3, 2));
}

TEST(Pinv, PenroseEquationsHoldExactly) {
  Rng rng(13);
  for (int t = 0; t < 150; ++t) {
    const std::size_t m = 1 + rng() % 4;
    const std::size_t n = 1 + rng() % 4;
    const EM a = (t % 2 == 0) ? random_matrix<G>(rng, m, n, {3, 3, 0.5})
                              : random_low_rank<G>(rng, m, n, 1 + rng() % 2, {3, 2, 0.5});
    const EM x = pinv(a);
    EXPECT_TRUE(oracle::is_moore_penrose(a, x)) << "t=" << t;
  }
  const EM a32 = random_matrix<G>(rng, 3, 2, {5, 4, 0.0});
  EXPECT_TRUE(oracle::is_moore_penrose(a32, pinv(a32)));
}

TEST(Pinv, HermitianCommutes) {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const EM g = random_low_rank<G>(rng, n, n, 1 + rng() % n, {2, 1, 0.5});
    const EM a = g + g.adjoint();
    const EM p = pinv(a);
    EXPECT_EQ(a * p, p * a);
  }
}

TEST(Projectors, Examples) {
  auto pr = projectors(EM::identity(2));
  EXPECT_EQ(pr.left, EM::zeros(2, 2));
  EXPECT_EQ(pr.right, EM::zeros(2, 2));
  pr = projectors(EM::zeros(2, 3));
  EXPECT_EQ(pr.left, EM::identity(2));
  EXPECT_EQ(pr.right, EM::identity(3));
  pr = projectors(EM{{1, 0}});
  EXPECT_EQ(pr.left, EM::zeros(1, 1));
  EXPECT_EQ(pr.right, EM::diagonal({q(0), q(1)}));
}

TEST(Projectors, IdempotentHermitianWithComplementaryRank) {
  Rng rng(19);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 1 + rng() % 4;
    const std::size_t n = 1 + rng() % 4;
    const EM a = random_low_rank<G>(rng, m, n, rng() % 3, {3, 2, 0.5});
    const auto pr = projectors(a);
    EXPECT_EQ(pr.left * pr.left, pr.left);
    EXPECT_EQ(pr.right * pr.right, pr.right);
    EXPECT_EQ(pr.left.adjoint(), pr.left);
    EXPECT_EQ(pr.right.adjoint(), pr.right);
    EXPECT_EQ(rank(pr.left), m - rank(a));
    EXPECT_EQ(rank(pr.right), n - rank(a));
    EXPECT_TRUE((pr.left * a).is_zero());
    EXPECT_TRUE((a * pr.right).is_zero());
  }
}

TEST(HermitianPart, Examples) {
  EXPECT_EQ(hermitian_part(EM::identity(2)).matrix(), EM::identity(2));
  EXPECT_EQ(hermitian_part(EM{{0, 2}, {0, 0}}).matrix(), (EM{{0, 1}, {1, 0}}));
  EXPECT_EQ(hermitian_part(EM{{1, I_}, {0, 1}}).matrix(),
            (EM{{1, I_ * q(1, 2)}, {-I_ * q(1, 2), 1}}));
  EXPECT_THROW(hermitian_part(EM{{1, 2}}), NotSquare);
}

TEST(LinearAlgebra, SolveAndNullSpace) {
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 1 + rng() % 5;
    const std::size_t n = 1 + rng() % 5;
    const EM a = random_low_rank<G>(rng, m, n, 1 + rng() % 3, {3, 2, 0.5});
    const EM x = random_matrix<G>(rng, n, 2, {3, 2, 0.5});
    const EM b = a * x;
    const auto sol = solve_linear(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a * *sol, b);
    const EM ns = null_space(a);
    EXPECT_EQ(ns.cols(), n - rank(a));
    EXPECT_TRUE((a * ns).is_zero());
  }
  EXPECT_FALSE(solve_linear(EM{{1, 0}, {1, 0}}, EM{{1}, {2}}).has_value());
}

TEST(FloatBackend, AgreesWithExactOnSmallIntegerMatrices) {
  Rng rng(29);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 6;
    EntryDist d{8, 1, 0.5, 0.3};
    Hermitian<G> h = random_hermitian<G>(rng, n, d);
    if (t % 2 == 0) {
      const std::size_t k = 1 + rng() % n;
      const EM g = random_matrix<G>(rng, n, k, {3, 1, 0.5});
      h = Hermitian<G>(g * EM::diagonal(std::vector<G>(k, q(t % 4 == 0 ? 1 : -1))) * g.adjoint() + h.matrix() * q(0));
    }
    const FloatMatrix hf = to_float(h.matrix());
    EXPECT_EQ(inertia(Hermitian<Complex>(hf)), inertia(h));
    EXPECT_EQ(rank(hf), rank(h.matrix()));
    const EM r = random_low_rank<G>(rng, 1 + rng() % 6, 1 + rng() % 6, rng() % 4, {8, 1, 0.5});
    EXPECT_EQ(rank(to_float(r)), rank(r));
  }
}

TEST(FloatBackend, PinvSatisfiesPenroseApproximately) {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const FloatMatrix a = to_float(random_low_rank<G>(rng, 4, 3, 2, {4, 1, 0.5}));
    const FloatMatrix x = pinv(a);
    const FloatMatrix d = a * x * a - a;
    double err = 0.0;
    for (const auto& v : d.data()) err = std::max(err, std::abs(v));
    EXPECT_LT(err, 1e-9);
  }
}

}  // namespace
}  // namespace hermex
