#include "hermex/solvers.hpp"

#include "hermex/blocks.hpp"

#include <cmath>

namespace hermex {

std::string to_string(TermKind k) {
  switch (k) {
    case TermKind::plain: return "plain";
    case TermKind::adjoint_pair: return "adjoint_pair";
    case TermKind::hermitian_sandwich: return "hermitian_sandwich";
    case TermKind::psd_sandwich: return "psd_sandwich";
    case TermKind::projected_complement: return "projected_complement";
  }
  return "?";
}

template <class T>
std::size_t CorrectionTerm<T>::param_rows() const {
  return kind == TermKind::projected_complement ? left.rows() : left.cols();
}

template <class T>
std::size_t CorrectionTerm<T>::param_cols() const {
  switch (kind) {
    case TermKind::plain:
    case TermKind::adjoint_pair: return right.rows();
    case TermKind::projected_complement: return left.rows();
    default: return left.cols();
  }
}

template <class T>
Matrix<T> CorrectionTerm<T>::apply(const Matrix<T>& v) const {
  if (v.rows() != param_rows() || v.cols() != param_cols()) {
    throw DimensionMismatch("parameter " + v.shape() + " for a " + to_string(kind) + " term");
  }
  switch (kind) {
    case TermKind::plain: return left * v * right;
    case TermKind::adjoint_pair: {
      const Matrix<T> m = left * v * right;
      return m + m.adjoint();
    }
    case TermKind::hermitian_sandwich:
    case TermKind::psd_sandwich: return left * v * left.adjoint();
    case TermKind::projected_complement: return v - left * v * left.adjoint();
  }
  return v;
}

template <class T>
Matrix<T> AffineSolutionSet<T>::evaluate(const std::vector<Matrix<T>>& params) const {
  if (params.size() != terms.size()) throw DimensionMismatch("parameter count does not match term count");
  Matrix<T> x = x0;
  for (std::size_t k = 0; k < terms.size(); ++k) x += terms[k].apply(params[k]);
  return x;
}

template <class T>
std::vector<Matrix<T>> AffineSolutionSet<T>::draw_parameters(Rng& rng, const EntryDist& d) const {
  std::vector<Matrix<T>> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    switch (t.kind) {
      case TermKind::plain:
      case TermKind::adjoint_pair: out.push_back(random_matrix<T>(rng, t.param_rows(), t.param_cols(), d)); break;
      case TermKind::hermitian_sandwich:
      case TermKind::projected_complement: out.push_back(random_hermitian<T>(rng, t.param_rows(), d).matrix()); break;
      case TermKind::psd_sandwich: {
        const std::size_t n = t.param_rows();
        const std::size_t k = static_cast<std::size_t>(rng() % (n + 1));
        out.push_back(random_psd<T>(rng, n, k, d).matrix());
        break;
      }
    }
  }
  return out;
}

namespace {

template <class T>
double max_abs(const Matrix<T>& m) {
  double r = 0.0;
  for (const auto& x : m.data()) r = std::max(r, ScalarTraits<T>::magnitude(x));
  return r;
}

}  // namespace

template <class T>
double AffineSolutionSet<T>::residual(const Matrix<T>& x) const {
  double r = 0.0;
  for (const auto& c : constraints) r = std::max(r, max_abs(Matrix<T>(c.left * x * c.right - c.rhs)));
  return r;
}

template <class T>
bool AffineSolutionSet<T>::satisfies(const Matrix<T>& x, double tol) const {
  if (x.rows() != rows() || x.cols() != cols()) return false;
  if constexpr (ScalarTraits<T>::exact) {
    for (const auto& c : constraints)
      if (!(c.left * x * c.right == c.rhs)) return false;
    if (hermitian && !(x.adjoint() == x)) return false;
  } else {
    double scale = std::max(1.0, max_abs(x));
    for (const auto& c : constraints) scale = std::max(scale, max_abs(c.rhs));
    if (residual(x) > tol * scale) return false;
    if (hermitian && max_abs(Matrix<T>(x - x.adjoint())) > tol * scale) return false;
  }
  if (psd && !is_psd(as_hermitian(x))) return false;
  return true;
}

template <class T>
std::string SolveResult<T>::reason() const {
  for (const auto& c : conditions)
    if (!c.holds()) return c.str();
  return "";
}

namespace {

template <class T>
long rk(const Matrix<T>& m, const TolerancePolicy& pol) {
  return static_cast<long>(rank(m, pol));
}

template <class T>
Condition inclusion(const std::string& text, const Matrix<T>& a, const Matrix<T>& c, const TolerancePolicy& pol) {
  return cond(text, rk(hcat(a, c), pol), rk(a, pol));
}

// Solves sum over constraints of L X R = C for one X (rows x cols) through the
// vectorized system; nullopt when inconsistent.
template <class T>
std::optional<Matrix<T>> vec_solve(const std::vector<LinearConstraint<T>>& cs, std::size_t rows, std::size_t cols,
                                   const TolerancePolicy& pol) {
  std::size_t eqs = 0;
  for (const auto& c : cs) eqs += c.rhs.rows() * c.rhs.cols();
  const std::size_t unknowns = rows * cols;
  Matrix<T> k(eqs, unknowns);
  Matrix<T> rhs(eqs, 1);
  std::size_t e = 0;
  for (const auto& c : cs) {
    for (std::size_t i = 0; i < c.rhs.rows(); ++i)
      for (std::size_t j = 0; j < c.rhs.cols(); ++j, ++e) {
        rhs(e, 0) = c.rhs(i, j);
        for (std::size_t a = 0; a < rows; ++a) {
          if (ScalarTraits<T>::is_zero(c.left(i, a))) continue;
          for (std::size_t b = 0; b < cols; ++b) k(e, a * cols + b) = c.left(i, a) * c.right(b, j);
        }
      }
  }
  Matrix<T> x(unknowns, 1);
  if constexpr (ScalarTraits<T>::exact) {
    const auto sol = solve_linear(k, rhs);
    if (!sol) return std::nullopt;
    x = *sol;
  } else {
    x = pinv(k, pol) * rhs;
    const Matrix<T> res = k * x - rhs;
    if (max_abs(res) > 1e-8 * std::max(1.0, max_abs(rhs))) return std::nullopt;
  }
  Matrix<T> out(rows, cols);
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b) out(a, b) = x(a * cols + b, 0);
  return out;
}

template <class T>
void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch(what);
}

}  // namespace

template <class T>
SolveResult<T> pair_linear_common(const Matrix<T>& a1, const Matrix<T>& b1, const Matrix<T>& c1,
                                  const Matrix<T>& a2, const Matrix<T>& b2, const Matrix<T>& c2,
                                  const TolerancePolicy& pol) {
  const std::size_t n = a1.cols();
  const std::size_t p = b1.rows();
  require<T>(a2.cols() == n && b2.rows() == p, "A1, A2 must share columns and B1, B2 rows");
  require<T>(c1.rows() == a1.rows() && c1.cols() == b1.cols(), "C1 must be rows(A1) x cols(B1)");
  require<T>(c2.rows() == a2.rows() && c2.cols() == b2.cols(), "C2 must be rows(A2) x cols(B2)");
  const std::nullopt_t O = std::nullopt;

  SolveResult<T> res;
  res.conditions.push_back(inclusion("R(C1) in R(A1)", a1, c1, pol));
  res.conditions.push_back(inclusion("R(C1*) in R(B1*)", b1.adjoint(), c1.adjoint(), pol));
  res.conditions.push_back(inclusion("R(C2) in R(A2)", a2, c2, pol));
  res.conditions.push_back(inclusion("R(C2*) in R(B2*)", b2.adjoint(), c2.adjoint(), pol));
  const Matrix<T> big = assemble<T>({{c1, O, a1}, {O, -c2, a2}, {b1, b2, O}});
  res.conditions.push_back(cond("r[[C1,0,A1],[0,-C2,A2],[B1,B2,0]] = r[A1;A2] + r[B1,B2]", rk(big, pol),
                                rk(vcat(a1, a2), pol) + rk(hcat(b1, b2), pol)));
  res.solvable = all_hold(res.conditions);

  std::vector<LinearConstraint<T>> cs{{a1, b1, c1}, {a2, b2, c2}};
  auto x0 = vec_solve(cs, n, p, pol);
  if (res.solvable != x0.has_value()) {
    if constexpr (ScalarTraits<T>::exact) {
      throw InternalInconsistency("block-rank solvability test disagrees with direct elimination");
    }
    res.solvable = false;
  }
  if (!res.solvable) return res;

  AffineSolutionSet<T> s;
  s.x0 = *x0;
  s.constraints = std::move(cs);
  const Matrix<T> in = Matrix<T>::identity(n);
  const Matrix<T> ip = Matrix<T>::identity(p);
  const Matrix<T> fa = projectors(vcat(a1, a2), pol).right;
  const Matrix<T> eb = projectors(hcat(b1, b2), pol).left;
  s.terms.push_back({TermKind::plain, fa, ip});
  s.terms.push_back({TermKind::plain, in, eb});
  s.terms.push_back({TermKind::plain, projectors(a1, pol).right, projectors(b2, pol).left});
  s.terms.push_back({TermKind::plain, projectors(a2, pol).right, projectors(b1, pol).left});
  res.set = std::move(s);
  return res;
}

template <class T>
SolveResult<T> congruence_solve(const Matrix<T>& a, const Hermitian<T>& bh, CongruenceForm form,
                                const TolerancePolicy& pol) {
  const Matrix<T>& b = bh;
  require<T>(b.rows() == a.rows(), "B must be rows(A) x rows(A)");
  const std::size_t n = a.cols();
  const Matrix<T> ap = pinv(a, pol);
  SolveResult<T> res;
  res.conditions.push_back(cond("A A^+ B = B", rk(Matrix<T>(a * ap * b - b), pol), 0));
  res.solvable = all_hold(res.conditions);
  if (!res.solvable) return res;

  AffineSolutionSet<T> s;
  s.hermitian = true;
  s.x0 = as_hermitian(Matrix<T>(ap * b * ap.adjoint())).matrix();
  s.constraints.push_back({a, a.adjoint(), b});
  if (form == CongruenceForm::complement) {
    s.terms.push_back({TermKind::projected_complement, ap * a, ap * a});
  } else {
    s.terms.push_back({TermKind::adjoint_pair, projectors(a, pol).right, Matrix<T>::identity(n)});
  }
  res.set = std::move(s);
  return res;
}

template <class T>
SolveResult<T> linear_hermitian_solve(const Matrix<T>& a, const Matrix<T>& b, const TolerancePolicy& pol) {
  require<T>(a.rows() == b.rows() && a.cols() == b.cols(), "A and B must have the same shape");
  const Matrix<T> bas = b * a.adjoint();
  const Matrix<T> abs = a * b.adjoint();
  SolveResult<T> res;
  res.conditions.push_back(inclusion("R(B) in R(A)", a, b, pol));
  res.conditions.push_back(cond("A B* = B A*", rk(Matrix<T>(abs - bas), pol), 0));
  res.solvable = all_hold(res.conditions);
  if (!res.solvable) return res;

  const Matrix<T> ap = pinv(a, pol);
  const Matrix<T> apb = ap * b;
  AffineSolutionSet<T> s;
  s.hermitian = true;
  s.x0 = as_hermitian(Matrix<T>(apb + apb.adjoint() - apb * ap * a)).matrix();
  s.constraints.push_back({a, Matrix<T>::identity(a.cols()), b});
  const Matrix<T> fa = projectors(a, pol).right;
  s.terms.push_back({TermKind::hermitian_sandwich, fa, fa});
  res.set = std::move(s);
  return res;
}

template <class T>
SolveResult<T> linear_psd_solve(const Matrix<T>& a, const Matrix<T>& b, const TolerancePolicy& pol) {
  require<T>(a.rows() == b.rows() && a.cols() == b.cols(), "A and B must have the same shape");
  const Matrix<T> abs = a * b.adjoint();
  SolveResult<T> res;
  res.conditions.push_back(inclusion("R(B) in R(A)", a, b, pol));
  const long skew = rk(Matrix<T>(abs - abs.adjoint()), pol);
  res.conditions.push_back(cond("A B* = B A*", skew, 0));
  // i-(AB*) only makes sense once AB* is Hermitian.
  const long neg = skew == 0 ? static_cast<long>(inertia(as_hermitian(abs), pol).minus) : 1;
  res.conditions.push_back(cond("i-(A B*) = 0", neg, 0));
  res.conditions.push_back(cond("r(A B*) = r(B)", rk(abs, pol), rk(b, pol)));
  res.solvable = all_hold(res.conditions);
  if (!res.solvable) return res;

  AffineSolutionSet<T> s;
  s.hermitian = true;
  s.psd = true;
  s.x0 = as_hermitian(Matrix<T>(b.adjoint() * pinv(abs, pol) * b)).matrix();
  s.constraints.push_back({a, Matrix<T>::identity(a.cols()), b});
  const Matrix<T> fa = projectors(a, pol).right;
  s.terms.push_back({TermKind::psd_sandwich, fa, fa});
  res.set = std::move(s);
  return res;
}

template <class T>
SolveResult<T> pair_congruence_common(const Matrix<T>& b2, const Hermitian<T>& a2h, const Matrix<T>& b3,
                                      const Hermitian<T>& a3h, const TolerancePolicy& pol) {
  const Matrix<T>& a2 = a2h;
  const Matrix<T>& a3 = a3h;
  const std::size_t n = b2.cols();
  require<T>(b3.cols() == n, "B2 and B3 must share columns");
  require<T>(a2.rows() == b2.rows() && a3.rows() == b3.rows(), "A_i must be rows(B_i) square");
  if (rk(hcat(b2, a2), pol) != rk(b2, pol)) throw PremiseViolated("B2 X B2* = A2 has no solution: R(A2) not in R(B2)");
  if (rk(hcat(b3, a3), pol) != rk(b3, pol)) throw PremiseViolated("B3 X B3* = A3 has no solution: R(A3) not in R(B3)");
  const std::nullopt_t O = std::nullopt;

  const Matrix<T> bb = vcat(b2, b3);
  SolveResult<T> res;
  const Matrix<T> big = assemble<T>({{a2, O, b2}, {O, -a3, b3}, {b2.adjoint(), b3.adjoint(), O}});
  res.conditions.push_back(cond("r[[A2,0,B2],[0,-A3,B3],[B2*,B3*,0]] = 2 r[B2;B3]", rk(big, pol), 2 * rk(bb, pol)));
  res.solvable = all_hold(res.conditions);
  if (!res.solvable) return res;

  const auto common = pair_linear_common(b2, b2.adjoint(), a2, b3, b3.adjoint(), a3, pol);
  if (!common.solvable) {
    if constexpr (ScalarTraits<T>::exact) {
      throw InternalInconsistency("common Hermitian solution predicted but the linear pair is inconsistent");
    }
    res.solvable = false;
    return res;
  }
  AffineSolutionSet<T> s;
  s.hermitian = true;
  s.x0 = hermitize_common_solution(*common.set).matrix();
  s.constraints = common.set->constraints;
  const Matrix<T> in = Matrix<T>::identity(n);
  s.terms.push_back({TermKind::adjoint_pair, in, projectors(bb, pol).right});
  s.terms.push_back({TermKind::adjoint_pair, projectors(b2, pol).right, projectors(b3, pol).right});
  res.set = std::move(s);
  return res;
}

template <class T>
Hermitian<T> hermitize_common_solution(const AffineSolutionSet<T>& s) {
  if (!s.x0.is_square()) throw PremiseViolated("special solution is not square");
  for (const auto& c : s.constraints) {
    bool shape_ok = c.rhs.is_square() && c.left.rows() == c.rhs.rows() && c.right.cols() == c.rhs.cols();
    if (shape_ok) {
      if constexpr (ScalarTraits<T>::exact) {
        shape_ok = c.right == c.left.adjoint() && c.rhs == c.rhs.adjoint();
      } else {
        shape_ok = max_abs(Matrix<T>(c.right - c.left.adjoint())) < 1e-12 &&
                   max_abs(Matrix<T>(c.rhs - c.rhs.adjoint())) <= 1e-9 * std::max(1.0, max_abs(c.rhs));
      }
    }
    if (!shape_ok) throw PremiseViolated("constraints are not of the form B X B* = A with A Hermitian");
  }
  AffineSolutionSet<T> plain = s;
  plain.hermitian = false;
  plain.psd = false;
  if (!plain.satisfies(s.x0)) throw PremiseViolated("special solution does not solve the constraints");
  return hermitian_part(s.x0);
}

#define HERMEX_INSTANTIATE_SOLVERS(T)                                                                          \
  template struct CorrectionTerm<T>;                                                                           \
  template struct AffineSolutionSet<T>;                                                                        \
  template struct SolveResult<T>;                                                                              \
  template SolveResult<T> pair_linear_common<T>(const Matrix<T>&, const Matrix<T>&, const Matrix<T>&,          \
                                                const Matrix<T>&, const Matrix<T>&, const Matrix<T>&,          \
                                                const TolerancePolicy&);                                       \
  template SolveResult<T> congruence_solve<T>(const Matrix<T>&, const Hermitian<T>&, CongruenceForm,           \
                                              const TolerancePolicy&);                                         \
  template SolveResult<T> linear_hermitian_solve<T>(const Matrix<T>&, const Matrix<T>&, const TolerancePolicy&); \
  template SolveResult<T> linear_psd_solve<T>(const Matrix<T>&, const Matrix<T>&, const TolerancePolicy&);     \
  template SolveResult<T> pair_congruence_common<T>(const Matrix<T>&, const Hermitian<T>&, const Matrix<T>&,   \
                                                    const Hermitian<T>&, const TolerancePolicy&);              \
  template Hermitian<T> hermitize_common_solution<T>(const AffineSolutionSet<T>&);

HERMEX_INSTANTIATE_SOLVERS(Gaussian)
HERMEX_INSTANTIATE_SOLVERS(Complex)

}  // namespace hermex
