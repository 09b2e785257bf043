#pragma once

#include "hermex/matrix.hpp"

#include <cstdint>
#include <random>

namespace hermex {

using Rng = std::mt19937_64;

/// Derives an independent stream seed for `index` under `seed` (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Shape of random rational entries: numerators in [-num, num], denominators
/// in [1, den], imaginary part present with probability `complex_prob`.
struct EntryDist {
  long num = 3;
  long den = 1;
  double complex_prob = 0.5;
  double zero_prob = 0.0;
};

template <class T>
T random_scalar(Rng& rng, const EntryDist& d) {
  std::uniform_int_distribution<long> num(-d.num, d.num);
  std::uniform_int_distribution<long> den(1, std::max(1L, d.den));
  std::bernoulli_distribution cplx(d.complex_prob);
  std::bernoulli_distribution zero(d.zero_prob);
  if (d.zero_prob > 0.0 && zero(rng)) return ScalarTraits<T>::zero();
  const long rn = num(rng);
  const long rd = den(rng);
  if (cplx(rng)) {
    const long in = num(rng);
    const long id = den(rng);
    return ScalarTraits<T>::from_ratio(rn, rd, in, id);
  }
  return ScalarTraits<T>::from_ratio(rn, rd);
}

template <class T>
Matrix<T> random_matrix(Rng& rng, std::size_t m, std::size_t n, const EntryDist& d = {}) {
  Matrix<T> r(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = random_scalar<T>(rng, d);
  return r;
}

/// Random matrix of rank at most k, built as a product of thin factors.
template <class T>
Matrix<T> random_low_rank(Rng& rng, std::size_t m, std::size_t n, std::size_t k, const EntryDist& d = {}) {
  return random_matrix<T>(rng, m, k, d) * random_matrix<T>(rng, k, n, d);
}

/// Random Hermitian matrix: real diagonal, conjugate-mirrored off-diagonal.
template <class T>
Hermitian<T> random_hermitian(Rng& rng, std::size_t n, const EntryDist& d = {}) {
  Matrix<T> r(n, n);
  EntryDist real = d;
  real.complex_prob = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = random_scalar<T>(rng, real);
    for (std::size_t j = i + 1; j < n; ++j) {
      r(i, j) = random_scalar<T>(rng, d);
      r(j, i) = ScalarTraits<T>::conj(r(i, j));
    }
  }
  return Hermitian<T>::trusted(std::move(r));
}

/// G G* for a random n x k factor G.
template <class T>
Hermitian<T> random_psd(Rng& rng, std::size_t n, std::size_t k, const EntryDist& d = {}) {
  const Matrix<T> g = random_matrix<T>(rng, n, k, d);
  return Hermitian<T>::trusted(g * g.adjoint());
}

}  // namespace hermex
