#include "hermex/kernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace hermex {

std::string to_string(const Inertia& in) {
  return "(" + std::to_string(in.plus) + "," + std::to_string(in.minus) + "," + std::to_string(in.zero) + ")";
}

namespace {

// ---------------------------------------------------------------- exact ----

std::size_t exact_rank(ExactMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != r)
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(r, j));
    const Gaussian inv = Gaussian(1) / a(r, c);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a(i, c).is_zero()) continue;
      const Gaussian f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

void swap_sym(ExactMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
  for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
}

Inertia exact_inertia(ExactMatrix a) {
  const std::size_t n = a.rows();
  Inertia in;
  std::size_t s = 0;
  while (s < n) {
    std::size_t p = s;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p < n) {
      swap_sym(a, s, p);
      const Gaussian& d = a(s, s);
      if (sgn(d.real()) > 0) {
        ++in.plus;
      } else {
        ++in.minus;
      }
      const Gaussian inv = Gaussian(1) / d;
      for (std::size_t i = s + 1; i < n; ++i) {
        if (a(i, s).is_zero()) continue;
        const Gaussian f = a(i, s) * inv;
        for (std::size_t j = s + 1; j < n; ++j) a(i, j) -= f * a(s, j);
      }
      ++s;
      continue;
    }
    // Zero diagonal: pivot on a hyperbolic 2x2 block [[0, h], [conj h, 0]].
    std::size_t pj = n;
    std::size_t pk = n;
    for (std::size_t j = s; j < n && pj == n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!a(j, k).is_zero()) {
          pj = j;
          pk = k;
          break;
        }
    if (pj == n) {
      in.zero += n - s;
      break;
    }
    swap_sym(a, s, pj);
    swap_sym(a, s + 1, pk == s ? pj : pk);
    const Gaussian h = a(s, s + 1);
    const Gaussian inv_h = Gaussian(1) / h;
    const Gaussian inv_hc = Gaussian(1) / h.conj();
    ++in.plus;
    ++in.minus;
    for (std::size_t i = s + 2; i < n; ++i) {
      const Gaussian u = a(i, s) * inv_hc;
      const Gaussian v = a(i, s + 1) * inv_h;
      if (u.is_zero() && v.is_zero()) continue;
      for (std::size_t j = s + 2; j < n; ++j) a(i, j) -= u * a(s + 1, j) + v * a(s, j);
    }
    s += 2;
  }
  return in;
}

ExactMatrix exact_pinv(const ExactMatrix& a) {
  const Echelon e = rref(a);
  const std::size_t r = e.pivots.size();
  if (r == 0) return ExactMatrix(a.cols(), a.rows());
  ExactMatrix f(a.rows(), r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) f(i, k) = a(i, e.pivots[k]);
  const ExactMatrix g = e.reduced.block(0, 0, r, a.cols());
  const ExactMatrix fh = f.adjoint();
  const ExactMatrix gh = g.adjoint();
  const auto gg = inverse(g * gh);
  const auto ff = inverse(fh * f);
  return gh * (*gg) * (*ff) * fh;
}

// ---------------------------------------------------------------- float ----

Eigen::MatrixXcd to_eigen(const FloatMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

FloatMatrix from_eigen(const Eigen::MatrixXcd& e) {
  FloatMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

double rank_threshold(const Eigen::VectorXd& sv, std::size_t m, std::size_t n, const TolerancePolicy& pol) {
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  return pol.rank_tol * smax * static_cast<double>(std::max(m, n));
}

std::size_t float_rank(const FloatMatrix& a, const TolerancePolicy& pol) {
  if (a.empty()) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
  const Eigen::VectorXd& sv = svd.singularValues();
  const double thr = rank_threshold(sv, a.rows(), a.cols(), pol);
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > thr && sv(k) > 0.0) ++r;
  return r;
}

Inertia float_inertia(const FloatMatrix& a, const TolerancePolicy& pol) {
  Inertia in;
  if (a.rows() == 0) return in;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double thr = pol.inertia_tol * ev.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) > thr && ev(k) > 0.0) {
      ++in.plus;
    } else if (ev(k) < -thr && ev(k) < 0.0) {
      ++in.minus;
    } else {
      ++in.zero;
    }
  }
  return in;
}

FloatMatrix float_pinv(const FloatMatrix& a, const TolerancePolicy& pol) {
  if (a.empty()) return FloatMatrix(a.cols(), a.rows());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double thr = rank_threshold(sv, a.rows(), a.cols(), pol);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > thr && sv(k) > 0.0) inv(k) = 1.0 / sv(k);
  const Eigen::MatrixXcd x = svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
  return from_eigen(x);
}

}  // namespace

// -------------------------------------------------------------- exact API ----

Echelon rref(ExactMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
    const Gaussian inv = Gaussian(1) / a(r, c);
    for (std::size_t j = c; j < n; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Gaussian f = a(i, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw NotSquare("inverse of " + m.shape());
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, ExactMatrix::identity(n));
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

std::optional<ExactMatrix> solve_linear(const ExactMatrix& m, const ExactMatrix& b) {
  if (m.rows() != b.rows()) throw DimensionMismatch("solve_linear: " + m.shape() + " vs rhs " + b.shape());
  const std::size_t n = m.cols();
  ExactMatrix aug(m.rows(), n + b.cols());
  aug.set_block(0, 0, m);
  aug.set_block(0, n, b);
  const Echelon e = rref(std::move(aug));
  ExactMatrix x(n, b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, n + j);
  }
  return x;
}

ExactMatrix null_space(const ExactMatrix& m) {
  const std::size_t n = m.cols();
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  ExactMatrix basis(n, n - e.pivots.size());
  std::size_t col = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, col) = Gaussian(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) basis(e.pivots[k], col) = -e.reduced(k, f);
    ++col;
  }
  return basis;
}

// ------------------------------------------------------------ generic API ----

template <class T>
std::size_t rank(const Matrix<T>& m, const TolerancePolicy& pol) {
  if constexpr (ScalarTraits<T>::exact) {
    (void)pol;
    return exact_rank(m);
  } else {
    return float_rank(m, pol);
  }
}

template <class T>
Inertia inertia(const Hermitian<T>& a, const TolerancePolicy& pol) {
  if constexpr (ScalarTraits<T>::exact) {
    (void)pol;
    return exact_inertia(a.matrix());
  } else {
    return float_inertia(a.matrix(), pol);
  }
}

template <class T>
Matrix<T> pinv(const Matrix<T>& m, const TolerancePolicy& pol) {
  if constexpr (ScalarTraits<T>::exact) {
    (void)pol;
    return exact_pinv(m);
  } else {
    return float_pinv(m, pol);
  }
}

template <class T>
Projectors<T> projectors(const Matrix<T>& a, const TolerancePolicy& pol) {
  const Matrix<T> p = pinv(a, pol);
  return {Matrix<T>::identity(a.rows()) - a * p, Matrix<T>::identity(a.cols()) - p * a};
}

template <class T>
Hermitian<T> hermitian_part(const Matrix<T>& m) {
  if (!m.is_square()) throw NotSquare("hermitian_part of " + m.shape());
  Matrix<T> h = m + m.adjoint();
  h *= ScalarTraits<T>::half();
  return Hermitian<T>::trusted(std::move(h));
}

template <class T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hcat " + a.shape() + " | " + b.shape());
  Matrix<T> r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

template <class T>
Matrix<T> vcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vcat " + a.shape() + " / " + b.shape());
  Matrix<T> r(a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

template <class T>
bool range_includes(const Matrix<T>& a, const Matrix<T>& c, const TolerancePolicy& pol) {
  return rank(hcat(a, c), pol) == rank(a, pol);
}

template <class T>
bool is_psd(const Hermitian<T>& a, const TolerancePolicy& pol) {
  return inertia(a, pol).minus == 0;
}

template <class T>
bool is_nsd(const Hermitian<T>& a, const TolerancePolicy& pol) {
  return inertia(a, pol).plus == 0;
}

template <class T>
Hermitian<T> as_hermitian(const Matrix<T>& m) {
  if constexpr (ScalarTraits<T>::exact) {
    return Hermitian<T>(m);
  } else {
    return Hermitian<T>(m, 1e-8);
  }
}

#define HERMEX_INSTANTIATE_KERNEL(T)                                                   \
  template std::size_t rank<T>(const Matrix<T>&, const TolerancePolicy&);              \
  template Inertia inertia<T>(const Hermitian<T>&, const TolerancePolicy&);            \
  template Matrix<T> pinv<T>(const Matrix<T>&, const TolerancePolicy&);                \
  template Projectors<T> projectors<T>(const Matrix<T>&, const TolerancePolicy&);      \
  template Hermitian<T> hermitian_part<T>(const Matrix<T>&);                           \
  template Matrix<T> hcat<T>(const Matrix<T>&, const Matrix<T>&);                      \
  template Matrix<T> vcat<T>(const Matrix<T>&, const Matrix<T>&);                      \
  template bool range_includes<T>(const Matrix<T>&, const Matrix<T>&, const TolerancePolicy&); \
  template bool is_psd<T>(const Hermitian<T>&, const TolerancePolicy&);                \
  template bool is_nsd<T>(const Hermitian<T>&, const TolerancePolicy&);                \
  template Hermitian<T> as_hermitian<T>(const Matrix<T>&);

HERMEX_INSTANTIATE_KERNEL(Gaussian)
HERMEX_INSTANTIATE_KERNEL(Complex)

}  // namespace hermex
