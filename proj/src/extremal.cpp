#include "hermex/extremal.hpp"

#include "hermex/blocks.hpp"
#include "hermex/fault.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>

namespace hermex {

namespace {

// assemble, unless a test has asked for this matrix to be corrupted
template <class T>
Matrix<T> assemble_at(const char* site, BlockGrid<T> g) {
  const fault::Site* f = fault::active();
  if (f && f->matrix == site) {
    auto hit = [&](std::size_t i, std::size_t j) {
      if (i >= g.size() || j >= g[i].size() || !g[i][j]) return;
      Matrix<T>& b = *g[i][j];
      b = f->mode == fault::Mode::negate ? Matrix<T>(-b) : Matrix<T>::zeros(b.rows(), b.cols());
    };
    hit(f->row, f->col);
    if (f->mirror && f->row != f->col) hit(f->col, f->row);
  }
  return assemble<T>(g);
}

}  // namespace

// ------------------------------------------------------------ summary ----

long ExtremalSummary::field(std::size_t k) const {
  switch (k) {
    case 0: return max_rank;
    case 1: return min_rank;
    case 2: return max_ip;
    case 3: return min_ip;
    case 4: return max_im;
    case 5: return min_im;
  }
  throw std::out_of_range("summary field");
}

long& ExtremalSummary::field(std::size_t k) {
  switch (k) {
    case 0: return max_rank;
    case 1: return min_rank;
    case 2: return max_ip;
    case 3: return min_ip;
    case 4: return max_im;
    case 5: return min_im;
  }
  throw std::out_of_range("summary field");
}

ExtremalSummary ExtremalSummary::negated() const {
  return {max_rank, min_rank, max_im, min_im, max_ip, min_ip};
}

std::string ExtremalSummary::invariant_violation(long ambient) const {
  for (std::size_t k = 0; k < 6; ++k) {
    if (field(k) < 0) return std::string(field_names[k]) + " is negative";
    if (field(k) > ambient) return std::string(field_names[k]) + " exceeds the matrix size";
  }
  if (min_rank > max_rank) return "min_rank > max_rank";
  if (min_ip > max_ip) return "min_ip > max_ip";
  if (min_im > max_im) return "min_im > max_im";
  if (max_rank > max_ip + max_im) return "max_rank > max_ip + max_im";
  return "";
}

std::string to_string(const ExtremalSummary& s) {
  std::ostringstream os;
  os << "rank [" << s.min_rank << ", " << s.max_rank << "]  i+ [" << s.min_ip << ", " << s.max_ip << "]  i- ["
     << s.min_im << ", " << s.max_im << "]";
  return os.str();
}

const Decision& DecisionReport::at(const std::string& id) const {
  for (const auto& d : items)
    if (d.id == id) return d;
  throw std::out_of_range("no decision '" + id + "'");
}

bool DecisionReport::has(const std::string& id) const {
  for (const auto& d : items)
    if (d.id == id) return true;
  return false;
}

Condition summary_criterion(const std::string& id, const ExtremalSummary& s, long m) {
  if (id == "exists_pd") return cond("max i+ = size", s.max_ip, m);
  if (id == "forall_pd") return cond("min i+ = size", s.min_ip, m);
  if (id == "exists_nd") return cond("max i- = size", s.max_im, m);
  if (id == "forall_nd") return cond("min i- = size", s.min_im, m);
  if (id == "exists_psd") return cond("min i- = 0", s.min_im, 0);
  if (id == "forall_psd") return cond("max i- = 0", s.max_im, 0);
  if (id == "exists_nsd") return cond("min i+ = 0", s.min_ip, 0);
  if (id == "forall_nsd") return cond("max i+ = 0", s.max_ip, 0);
  if (id == "exists_nonsingular") return cond("max r = size", s.max_rank, m);
  if (id == "forall_nonsingular") return cond("min r = size", s.min_rank, m);
  if (id == "exists_zero") return cond("min r = 0", s.min_rank, 0);
  if (id == "forall_zero") return cond("max r = 0", s.max_rank, 0);
  if (id == "rank_invariant") return cond("max r = min r", s.max_rank, s.min_rank);
  if (id == "ip_invariant") return cond("max i+ = min i+", s.max_ip, s.min_ip);
  if (id == "im_invariant") return cond("max i- = min i-", s.max_im, s.min_im);
  throw std::invalid_argument("unknown decision id '" + id + "'");
}

namespace {

// Rank / inertia evaluation on assembled blocks.
template <class T>
struct Ev {
  const TolerancePolicy& pol;
  long r(const Matrix<T>& m) const { return static_cast<long>(rank(m, pol)); }
  Inertia in(const Matrix<T>& m) const { return inertia(Hermitian<T>(m, 1e-8), pol); }
  long ip(const Matrix<T>& m) const { return static_cast<long>(in(m).plus); }
  long im(const Matrix<T>& m) const { return static_cast<long>(in(m).minus); }

  // Criteria in rank form.
  Condition includes(const std::string& text, const Matrix<T>& big, const Matrix<T>& part) const {
    return cond(text, r(hcat(big, part)), r(big));
  }
  std::vector<Condition> same_range(const std::string& text, const Matrix<T>& u, const Matrix<T>& v) const {
    const long ruv = r(hcat(u, v));
    return {cond(text + " (first side)", r(u), ruv), cond(text + " (second side)", r(v), ruv)};
  }
  Condition psd(const std::string& text, const Matrix<T>& m) const { return cond(text, im(m), 0); }
  Condition nsd(const std::string& text, const Matrix<T>& m) const { return cond(text, ip(m), 0); }
};

std::vector<Condition> join(std::initializer_list<std::vector<Condition>> parts) {
  std::vector<Condition> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const char* question_for(const std::string& id) {
  if (id == "exists_pd") return "some feasible point makes it positive definite";
  if (id == "forall_pd") return "every feasible point makes it positive definite";
  if (id == "exists_nd") return "some feasible point makes it negative definite";
  if (id == "forall_nd") return "every feasible point makes it negative definite";
  if (id == "exists_psd") return "some feasible point makes it positive semidefinite";
  if (id == "forall_psd") return "every feasible point makes it positive semidefinite";
  if (id == "exists_nsd") return "some feasible point makes it negative semidefinite";
  if (id == "forall_nsd") return "every feasible point makes it negative semidefinite";
  if (id == "exists_nonsingular") return "some feasible point makes it nonsingular";
  if (id == "forall_nonsingular") return "every feasible point makes it nonsingular";
  if (id == "exists_zero") return "some feasible point makes it vanish";
  if (id == "forall_zero") return "every feasible point makes it vanish";
  if (id == "rank_invariant") return "its rank is the same at every feasible point";
  if (id == "ip_invariant") return "its positive index is the same at every feasible point";
  if (id == "im_invariant") return "its negative index is the same at every feasible point";
  return "";
}

// Records a decision; the explicit criterion and the summary extremes must
// agree, otherwise some formula transcription is wrong.
void decide(DecisionReport& rep, const std::string& id, std::vector<Condition> criterion, const ExtremalSummary& s,
            long m, std::vector<std::vector<Condition>> alternatives = {}) {
  Decision d;
  d.id = id;
  d.question = question_for(id);
  d.criterion = std::move(criterion);
  d.alternatives = std::move(alternatives);
  d.from_summary = summary_criterion(id, s, m);
  bool v = all_hold(d.criterion);
  if (!d.alternatives.empty()) {
    bool any = false;
    for (const auto& g : d.alternatives) any = any || all_hold(g);
    v = v && any;
  }
  d.verdict = v;
  if (v != d.from_summary.holds()) {
    std::string msg = "decision '" + id + "': criterion says " + (v ? "yes" : "no") + " but extremes say " +
                      (d.from_summary.holds() ? "yes" : "no") + " (" + d.from_summary.str() + ")";
    for (const auto& c : d.criterion) msg += "; " + c.str();
    throw InternalInconsistency(msg);
  }
  rep.items.push_back(std::move(d));
}

template <class T>
void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch(what);
}

template <class T>
void require_premises(const std::vector<Condition>& ps, const std::string& what) {
  for (const auto& c : ps)
    if (!c.holds()) throw PremiseViolated(what + ": " + c.str());
}

template <class T>
Matrix<T> neg(const Matrix<T>& m) {
  return -m;
}

long max_of(std::initializer_list<long> xs) { return *std::max_element(xs.begin(), xs.end()); }
long min_of(std::initializer_list<long> xs) { return *std::min_element(xs.begin(), xs.end()); }

}  // namespace

// -------------------------------------------------- unconstrained ----

template <class T>
ExtremalSummary extremal_free(const Hermitian<T>& ah, const Matrix<T>& b, const TolerancePolicy& pol) {
  const Matrix<T>& a = ah;
  require<T>(b.rows() == a.rows(), "B must have as many rows as A");
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T> m = assemble<T>({{a, b}, {b.adjoint(), O}});
  const long rk = e.r(hcat(a, b));
  const Inertia im = e.in(m);
  const long p = static_cast<long>(im.plus), q = static_cast<long>(im.minus);
  return {rk, 2 * rk - p - q, p, rk - q, q, rk - p};
}

template <class T>
ExtremalSummary extremal_free_psd(const Hermitian<T>& ah, const Matrix<T>& b, Sign sign, const TolerancePolicy& pol) {
  const Matrix<T>& a = ah;
  require<T>(b.rows() == a.rows(), "B must have as many rows as A");
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Inertia im = e.in(assemble<T>({{a, b}, {b.adjoint(), O}}));
  const Inertia ia = e.in(a);
  const long rk = e.r(hcat(a, b));
  const long mp = static_cast<long>(im.plus), mm = static_cast<long>(im.minus);
  const long ap = static_cast<long>(ia.plus), am = static_cast<long>(ia.minus);
  if (sign == Sign::plus) return {rk, ap + rk - mp, mp, ap, am, rk - mp};
  return {rk, am + rk - mm, ap, rk - mm, mm, am};
}

template <class T>
ExtremalSummary extremal_bxc_nested(const Hermitian<T>& ah, const Matrix<T>& b, const Matrix<T>& c,
                                    const TolerancePolicy& pol) {
  const Matrix<T>& a = ah;
  require<T>(b.rows() == a.rows() && c.cols() == a.rows(), "B must be m x p and C q x m");
  if (!range_includes(b, c.adjoint(), pol)) throw HypothesisViolated("R(C*) is not contained in R(B)");
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T> m2 = assemble<T>({{a, c.adjoint()}, {c, O}});
  const long rab = e.r(hcat(a, b));
  const long rabc = e.r(assemble<T>({{a, b}, {c, O}}));
  const Inertia i2 = e.in(m2);
  const long p = static_cast<long>(i2.plus), q = static_cast<long>(i2.minus);
  return {std::min(rab, p + q), 2 * rab + p + q - 2 * rabc, p, rab + p - rabc, q, rab + q - rabc};
}

template <class T>
ExtremalSummary extremal_bxc(const Hermitian<T>& ah, const Matrix<T>& b, const Matrix<T>& c,
                             const TolerancePolicy& pol) {
  const Matrix<T>& a = ah;
  require<T>(b.rows() == a.rows() && c.cols() == a.rows(), "B must be m x p and C q x m");
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T> cs = c.adjoint();
  const Matrix<T> m1 = assemble<T>({{a, b}, {b.adjoint(), O}});
  const Matrix<T> m2 = assemble<T>({{a, cs}, {c, O}});
  const long rn = e.r(assemble<T>({{a, b, cs}}));
  const long rn1 = e.r(assemble<T>({{a, b, cs}, {b.adjoint(), O, O}}));
  const long rn2 = e.r(assemble<T>({{a, b, cs}, {c, O, O}}));
  const Inertia i1 = e.in(m1), i2 = e.in(m2);
  const long p1 = static_cast<long>(i1.plus), q1 = static_cast<long>(i1.minus);
  const long p2 = static_cast<long>(i2.plus), q2 = static_cast<long>(i2.minus);
  const long s1 = p1 + q1 - 2 * rn1;
  const long s2 = p2 + q2 - 2 * rn2;
  const long s3 = p1 + q2 - rn1 - rn2;
  const long s4 = q1 + p2 - rn1 - rn2;
  ExtremalSummary s;
  s.max_rank = min_of({rn, p1 + q1, p2 + q2});
  s.min_rank = 2 * rn + max_of({s1, s2, s3, s4});
  s.max_ip = std::min(p1, p2);
  s.max_im = std::min(q1, q2);
  s.min_ip = rn + std::max(p1 - rn1, p2 - rn2);
  s.min_im = rn + std::max(q1 - rn1, q2 - rn2);
  if (range_includes(b, cs, pol)) {
    const ExtremalSummary nested = extremal_bxc_nested(ah, b, c, pol);
    if (!(nested == s)) {
      throw InternalInconsistency("general and nested-range formulas disagree: " + to_string(s) + " vs " +
                                  to_string(nested));
    }
  }
  return s;
}

template <class T>
ExtremalSummary extremal_two_var(const Hermitian<T>& ah, const Matrix<T>& b1, const Matrix<T>& c1,
                                 const Matrix<T>& b2, const Matrix<T>& c2, const TolerancePolicy& pol) {
  const Matrix<T>& a = ah;
  const std::size_t m = a.rows();
  require<T>(b1.rows() == m && b2.rows() == m && c1.cols() == m && c2.cols() == m, "blocks must act on size(A)");
  if (!range_includes(b1, b2, pol)) throw HypothesisViolated("R(B2) is not contained in R(B1)");
  if (!range_includes(b1, c1.adjoint(), pol)) throw HypothesisViolated("R(C1*) is not contained in R(B1)");
  if (!range_includes(b1, c2.adjoint(), pol)) throw HypothesisViolated("R(C2*) is not contained in R(B1)");
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T> c1s = c1.adjoint(), c2s = c2.adjoint(), b2s = b2.adjoint();
  const long rn = e.r(assemble<T>({{a, b2, c1s, c2s}, {c1, O, O, O}}));
  const long rn1 = e.r(assemble<T>({{a, b2, c1s, c2s}, {b2s, O, O, O}, {c1, O, O, O}}));
  const long rn2 = e.r(assemble<T>({{a, b2, c1s, c2s}, {c1, O, O, O}, {c2, O, O, O}}));
  const long rm = e.r(assemble<T>({{a, b1}, {c1, O}}));
  const Inertia i1 = e.in(assemble<T>({{a, b2, c1s}, {b2s, O, O}, {c1, O, O}}));
  const Inertia i2 = e.in(assemble<T>({{a, c1s, c2s}, {c1, O, O}, {c2, O, O}}));
  const long rab = e.r(hcat(a, b1));
  const long p1 = static_cast<long>(i1.plus), q1 = static_cast<long>(i1.minus);
  const long p2 = static_cast<long>(i2.plus), q2 = static_cast<long>(i2.minus);
  const long s1 = p1 + q1 - 2 * rn1;
  const long s2 = p2 + q2 - 2 * rn2;
  const long s3 = p1 + q2 - rn1 - rn2;
  const long s4 = q1 + p2 - rn1 - rn2;
  const long base = rab - rm + rn;
  ExtremalSummary s;
  s.max_rank = min_of({rab, rn, p1 + q1, p2 + q2});
  s.min_rank = 2 * base + max_of({s1, s2, s3, s4});
  s.max_ip = std::min(p1, p2);
  s.max_im = std::min(q1, q2);
  s.min_ip = base + std::max(p1 - rn1, p2 - rn2);
  s.min_im = base + std::max(q1 - rn1, q2 - rn2);
  return s;
}

// ------------------------------------------------ congruence pair ----

namespace {

template <class T>
void check_pair(const PairInstance<T>& in) {
  const std::size_t n = in.b1.cols();
  require<T>(in.b2.cols() == n && in.b3.cols() == n, "B1, B2, B3 must share columns");
  require<T>(in.a1.size() == in.b1.rows() && in.a2.size() == in.b2.rows() && in.a3.size() == in.b3.rows(),
             "A_i must be rows(B_i) square");
}

template <class T>
bool pair_consistent(const Matrix<T>& bi, const Hermitian<T>& ai, const Matrix<T>& bj, const Hermitian<T>& aj,
                     const TolerancePolicy& pol) {
  try {
    return pair_congruence_common(bi, ai, bj, aj, pol).solvable;
  } catch (const PremiseViolated&) {
    return false;
  }
}

// each B_i X B_i* = A_i alone, with the right label in the message
template <class T>
void require_each_consistent(const PairInstance<T>& in, const TolerancePolicy& pol) {
  const Matrix<T>* bs[3] = {&in.b1, &in.b2, &in.b3};
  const Matrix<T>* as[3] = {&in.a1.matrix(), &in.a2.matrix(), &in.a3.matrix()};
  for (int k = 0; k < 3; ++k) {
    if (rank(hcat(*bs[k], *as[k]), pol) != rank(*bs[k], pol)) {
      const std::string i = std::to_string(k + 1);
      throw PremiseViolated("B" + i + " X B" + i + "* = A" + i + " has no solution: R(A" + i + ") not in R(B" + i + ")");
    }
  }
}

}  // namespace

template <class T>
ExtremalSummary extremal_pair_constrained(const PairInstance<T>& in, const TolerancePolicy& pol) {
  check_pair(in);
  if (!pair_consistent(in.b2, in.a2, in.b3, in.a3, pol)) {
    throw PremiseViolated("B2 X B2* = A2 and B3 X B3* = A3 have no common Hermitian solution");
  }
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T>&a1 = in.a1, &a2 = in.a2, &a3 = in.a3;
  const Matrix<T>&b1 = in.b1, &b2 = in.b2, &b3 = in.b3;
  const Matrix<T> b1s = b1.adjoint(), b2s = b2.adjoint(), b3s = b3.adjoint();
  const Matrix<T> na2 = -a2, na3 = -a3;

  const long rp1 = e.r(assemble<T>({{a1, b1, O, O}, {b1s, O, b2s, b3s}}));
  const Matrix<T> p2 = assemble_at<T>("pair.P2", {{a1, O, b1}, {O, na2, b2}, {b1s, b2s, O}});
  const Matrix<T> p3 = assemble_at<T>("pair.P3", {{a1, O, b1}, {O, na3, b3}, {b1s, b3s, O}});
  const long rq1 = e.r(assemble_at<T>(
      "pair.Q1", {{a1, O, O, b1, b1}, {O, na2, O, b2, O}, {O, O, na3, O, b3}, {b1s, b2s, b3s, O, O}}));
  const long rq2 = e.r(assemble<T>({{a1, O, b1, b1}, {O, na2, b2, O}, {b1s, b2s, O, O}, {O, O, O, b3}}));
  const long rq3 = e.r(assemble<T>({{a1, O, b1, b1}, {O, na3, b3, O}, {b1s, b3s, O, O}, {O, O, O, b2}}));
  const Inertia i2 = e.in(p2), i3 = e.in(p3);
  const long pp2 = static_cast<long>(i2.plus), pm2 = static_cast<long>(i2.minus);
  const long pp3 = static_cast<long>(i3.plus), pm3 = static_cast<long>(i3.minus);
  const long rab = e.r(hcat(a1, b1));
  const long rb2 = e.r(b2), rb3 = e.r(b3), rb23 = e.r(vcat(b2, b3));
  const long u1 = pp2 + pm3 - rq2 - rq3;
  const long u2 = pm2 + pp3 - rq2 - rq3;
  const long base = rab - rp1 + rq1;

  ExtremalSummary s;
  s.max_rank = min_of({rab, rq1 - rb23 - rb2 - rb3, pp2 + pm2 - 2 * rb2, pp3 + pm3 - 2 * rb3});
  s.min_rank = 2 * base + max_of({pp2 + pm2 - 2 * rq2, pp3 + pm3 - 2 * rq3, u1, u2});
  s.max_ip = std::min(pp2 - rb2, pp3 - rb3);
  s.max_im = std::min(pm2 - rb2, pm3 - rb3);
  s.min_ip = base + std::max(pp2 - rq2, pp3 - rq3);
  s.min_im = base + std::max(pm2 - rq2, pm3 - rq3);
  return s;
}

template <class T>
ExtremalSummary extremal_pair_allpairs(const PairInstance<T>& in, const TolerancePolicy& pol) {
  check_pair(in);
  require_each_consistent(in, pol);
  if (!pair_consistent(in.b1, in.a1, in.b2, in.a2, pol) || !pair_consistent(in.b1, in.a1, in.b3, in.a3, pol) ||
      !pair_consistent(in.b2, in.a2, in.b3, in.a3, pol)) {
    throw PremiseViolated("some pair of the three equations has no common Hermitian solution");
  }
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T>&a1 = in.a1, &a2 = in.a2, &a3 = in.a3;
  const Matrix<T>&b1 = in.b1, &b2 = in.b2, &b3 = in.b3;
  const long rq1 = e.r(assemble<T>({{a1, O, O, b1, b1},
                                    {O, Matrix<T>(-a2), O, b2, O},
                                    {O, O, Matrix<T>(-a3), O, b3},
                                    {b1.adjoint(), b2.adjoint(), b3.adjoint(), O, O}}));
  const long rb1 = e.r(b1), rb2 = e.r(b2), rb3 = e.r(b3);
  const long rb23 = e.r(vcat(b2, b3)), rb12 = e.r(vcat(b1, b2)), rb13 = e.r(vcat(b1, b3));
  const long rb123 = e.r(vcat(vcat(b1, b2), b3));
  const long rbb = e.r(assemble<T>({{b1, b1}, {b2, O}, {O, b3}}));
  ExtremalSummary s;
  s.max_rank = min_of({rb1, rq1 - rb23 - rb2 - rb3, 2 * rb12 - 2 * rb2, 2 * rb13 - 2 * rb3});
  s.min_rank = 2 * rq1 - 2 * rb123 - 2 * rbb;
  s.max_ip = s.max_im = std::min(rb12 - rb2, rb13 - rb3);
  s.min_ip = s.min_im = rq1 - rb123 - rbb;
  const ExtremalSummary full = extremal_pair_constrained(in, pol);
  if (!(full == s)) {
    throw InternalInconsistency("pairwise-consistent formulas disagree with the general ones: " + to_string(s) +
                                " vs " + to_string(full));
  }
  return s;
}

namespace {

Gaussian re_of(const Gaussian& g) { return Gaussian(g.real()); }
Gaussian im_of(const Gaussian& g) { return Gaussian(g.imag()); }
Complex re_of(const Complex& z) { return {z.real(), 0.0}; }
Complex im_of(const Complex& z) { return {z.imag(), 0.0}; }

// Hermitian X with B_i X B_i* = A_i for all i, by elimination over real
// coordinates of X (exact), or least squares with a residual test (float).
template <class T>
std::optional<Matrix<T>> hermitian_common(const std::vector<std::pair<Matrix<T>, Matrix<T>>>& eqs, std::size_t n,
                                          const TolerancePolicy& pol) {
  using Tr = ScalarTraits<T>;
  // Basis of Hermitian n x n: E_ii, E_ij + E_ji, i(E_ij - E_ji).
  std::vector<Matrix<T>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix<T> h(n, n);
      h(i, j) = h(j, i) = Tr::one();
      basis.push_back(h);
      if (i != j) {
        Matrix<T> g(n, n);
        g(i, j) = Tr::from_ratio(0, 1, 1, 1);
        g(j, i) = Tr::from_ratio(0, 1, -1, 1);
        basis.push_back(g);
      }
    }
  std::size_t rows = 0;
  for (const auto& [b, a] : eqs) rows += 2 * a.rows() * a.cols();
  Matrix<T> k(rows, basis.size());
  Matrix<T> rhs(rows, 1);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    std::size_t r = 0;
    for (const auto& [b, a] : eqs) {
      const Matrix<T> img = b * basis[c] * b.adjoint();
      for (const auto& z : img.data()) {
        k(r++, c) = re_of(z);
        k(r++, c) = im_of(z);
      }
    }
  }
  {
    std::size_t r = 0;
    for (const auto& [b, a] : eqs)
      for (const auto& z : a.data()) {
        rhs(r++, 0) = re_of(z);
        rhs(r++, 0) = im_of(z);
      }
  }
  Matrix<T> coef;
  if constexpr (Tr::exact) {
    auto sol = solve_linear(k, rhs);
    if (!sol) return std::nullopt;
    coef = *sol;
  } else {
    coef = pinv(k, pol) * rhs;
    const Matrix<T> res = k * coef - rhs;
    double err = 0, scale = 1;
    for (const auto& z : res.data()) err = std::max(err, std::abs(z));
    for (const auto& z : rhs.data()) scale = std::max(scale, std::abs(z));
    if (err > 1e-8 * scale) return std::nullopt;
  }
  Matrix<T> x(n, n);
  for (std::size_t c = 0; c < basis.size(); ++c) x += basis[c] * coef(c, 0);
  return x;
}

}  // namespace

template <class T>
TripleDecision<T> triple_common_solvable(const PairInstance<T>& in, const TolerancePolicy& pol) {
  check_pair(in);
  require_each_consistent(in, pol);
  if (!pair_consistent(in.b1, in.a1, in.b2, in.a2, pol) || !pair_consistent(in.b1, in.a1, in.b3, in.a3, pol) ||
      !pair_consistent(in.b2, in.a2, in.b3, in.a3, pol)) {
    throw PremiseViolated("some pair of the three equations has no common Hermitian solution");
  }
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T>&a1 = in.a1, &a2 = in.a2, &a3 = in.a3;
  const Matrix<T>&b1 = in.b1, &b2 = in.b2, &b3 = in.b3;
  const long rq1 = e.r(assemble<T>({{a1, O, O, b1, b1},
                                    {O, Matrix<T>(-a2), O, b2, O},
                                    {O, O, Matrix<T>(-a3), O, b3},
                                    {b1.adjoint(), b2.adjoint(), b3.adjoint(), O, O}}));
  const long rbb = e.r(assemble<T>({{b1, b1}, {b2, O}, {O, b3}}));
  const long rbs = e.r(hcat(hcat(b1.adjoint(), b2.adjoint()), b3.adjoint()));

  TripleDecision<T> out;
  out.witness = hermitian_common<T>({{b1, a1}, {b2, a2}, {b3, a3}}, in.n(), pol);
  Decision d;
  d.id = "triple_common_solution";
  d.question = "the three equations have a common Hermitian solution";
  d.criterion.push_back(cond("r(Q1) = r[[B1,B1],[B2,0],[0,B3]] + r[B1*,B2*,B3*]", rq1, rbb + rbs));
  d.verdict = all_hold(d.criterion);
  d.from_summary = cond("direct elimination finds a solution", out.witness ? 1 : 0, 1);
  if (d.verdict != d.from_summary.holds()) {
    if constexpr (ScalarTraits<T>::exact) {
      throw InternalInconsistency("triple criterion disagrees with direct elimination: " + d.criterion[0].str());
    }
  }
  out.report.items.push_back(std::move(d));
  return out;
}

template <class T>
DecisionReport lsq_common_condition(const PairInstance<T>& in, const TolerancePolicy& pol) {
  check_pair(in);
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T>* bs[3] = {&in.b1, &in.b2, &in.b3};
  const Matrix<T>* as[3] = {&in.a1.matrix(), &in.a2.matrix(), &in.a3.matrix()};
  Matrix<T> at[3], bt[3];
  for (int i = 0; i < 3; ++i) {
    at[i] = bs[i]->adjoint() * *as[i] * *bs[i];
    bt[i] = bs[i]->adjoint() * *bs[i];
  }
  DecisionReport rep;
  std::vector<Condition> all;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    const int i = pr[0], j = pr[1];
    const long lhs = e.r(assemble<T>({{at[i], O, bt[i]}, {O, Matrix<T>(-at[j]), bt[j]}, {bt[i], bt[j], O}}));
    all.push_back(cond("normal equations " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ": bordered rank = 2 r[B_i;B_j]",
                       lhs, 2 * e.r(vcat(*bs[i], *bs[j]))));
  }
  {
    const long lhs = e.r(assemble<T>({{at[0], O, O, bt[0], bt[0]},
                                      {O, Matrix<T>(-at[1]), O, bt[1], O},
                                      {O, O, Matrix<T>(-at[2]), O, bt[2]},
                                      {bt[0], bt[1], bt[2], O, O}}));
    const long rbb = e.r(assemble<T>({{in.b1, in.b1}, {in.b2, O}, {O, in.b3}}));
    const long rb = e.r(vcat(vcat(in.b1, in.b2), in.b3));
    all.push_back(cond("normal equations 1,2,3: r(Q1~) = r[[B1,B1],[B2,0],[0,B3]] + r[B1;B2;B3]", lhs, rbb + rb));
  }
  Decision d;
  d.id = "lsq_common_solution";
  d.question = "the three equations have a common least-squares Hermitian solution";
  d.criterion = all;
  d.verdict = all_hold(all);
  const auto x = hermitian_common<T>({{bt[0], at[0]}, {bt[1], at[1]}, {bt[2], at[2]}}, in.n(), pol);
  d.from_summary = cond("direct elimination solves the normal equations", x ? 1 : 0, 1);
  if (d.verdict != d.from_summary.holds()) {
    if constexpr (ScalarTraits<T>::exact) {
      throw InternalInconsistency("least-squares criterion disagrees with direct elimination");
    }
  }
  rep.items.push_back(std::move(d));
  return rep;
}

template <class T>
Analysis solution_extremal_pair(const Matrix<T>& b2, const Hermitian<T>& a2h, const Matrix<T>& b3,
                                const Hermitian<T>& a3h, const TolerancePolicy& pol) {
  const std::size_t n = b2.cols();
  require<T>(b3.cols() == n, "B2 and B3 must share columns");
  require<T>(a2h.size() == b2.rows() && a3h.size() == b3.rows(), "A_i must be rows(B_i) square");
  Analysis out;
  const auto common = pair_congruence_common(b2, a2h, b3, a3h, pol);
  out.premises = common.conditions;
  if (!common.solvable) throw PremiseViolated("no common Hermitian solution: " + common.reason());
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T>&a2 = a2h, &a3 = a3h;
  const long ln = static_cast<long>(n);
  const Matrix<T> w = assemble<T>({{a2, O, b2}, {O, Matrix<T>(-a3), b3}});
  const Matrix<T> t2 = assemble<T>({{a2, b2}, {O, b3}});
  const Matrix<T> t3 = assemble<T>({{O, b2}, {Matrix<T>(-a3), b3}});
  const long rw = e.r(w), rt2 = e.r(t2), rt3 = e.r(t3);
  const long rb2 = e.r(b2), rb3 = e.r(b3), rb23 = e.r(vcat(b2, b3));
  const Inertia i2 = e.in(a2), i3 = e.in(a3);
  const long p2 = static_cast<long>(i2.plus), q2 = static_cast<long>(i2.minus);
  const long p3 = static_cast<long>(i3.plus), q3 = static_cast<long>(i3.minus);
  ExtremalSummary& s = out.summary;
  s.max_rank = min_of({ln, 2 * ln + rw - rb23 - rb2 - rb3, 2 * ln + p2 + q2 - 2 * rb2, 2 * ln + p3 + q3 - 2 * rb3});
  s.min_rank = 2 * rw + max_of({p2 + q2 - 2 * rt2, p3 + q3 - 2 * rt3, p2 + q3 - rt2 - rt3, q2 + p3 - rt2 - rt3});
  s.max_ip = std::min(ln + p2 - rb2, ln + p3 - rb3);
  s.max_im = std::min(ln + q2 - rb2, ln + q3 - rb3);
  s.min_ip = rw + std::max(p2 - rt2, p3 - rt3);
  s.min_im = rw + std::max(q2 - rt2, q3 - rt3);

  auto& rep = out.decisions;
  const Condition a2p = e.psd("A2 >= 0", a2), a3p = e.psd("A3 >= 0", a3);
  const Condition a2n = e.nsd("A2 <= 0", a2), a3n = e.nsd("A3 <= 0", a3);
  const auto ranges = join({e.same_range("R(A2) = R(B2)", a2, b2), e.same_range("R(A3) = R(B3)", a3, b3)});
  const std::vector<std::vector<Condition>> forced_pd{
      {cond("r(A2) = n", p2 + q2, ln), cond("r(B2) = n", rb2, ln)},
      {cond("r(A3) = n", p3 + q3, ln), cond("r(B3) = n", rb3, ln)}};
  const std::vector<std::vector<Condition>> forced{{cond("r(B2) = n", rb2, ln)}, {cond("r(B3) = n", rb3, ln)}};
  const std::size_t m2 = a2.rows(), m3 = a3.rows();
  const Matrix<T> a2pad = vcat(a2, Matrix<T>::zeros(m3, m2));
  const Matrix<T> a3pad = vcat(Matrix<T>::zeros(m2, m3), a3);
  const std::vector<Condition> incl{e.includes("R[A2;0] in R[[0,B2],[A3,B3]]", t3, a2pad),
                                    e.includes("R[0;A3] in R[[A2,B2],[0,B3]]", t2, a3pad)};
  decide(rep, "exists_pd", join({{a2p, a3p}, ranges}), s, ln);
  decide(rep, "forall_pd", {a2p, a3p}, s, ln, forced_pd);
  decide(rep, "exists_nd", join({{a2n, a3n}, ranges}), s, ln);
  decide(rep, "forall_nd", {a2n, a3n}, s, ln, forced_pd);
  decide(rep, "exists_psd", join({{a2p, a3p}, incl}), s, ln);
  decide(rep, "forall_psd", {a2p, a3p}, s, ln, forced);
  decide(rep, "exists_nsd", join({{a2n, a3n}, incl}), s, ln);
  decide(rep, "forall_nsd", {a2n, a3n}, s, ln, forced);
  return out;
}

// ------------------------------------------------ linear constraint ----

namespace {

template <class T>
void check_linear(const LinearInstance<T>& in) {
  require<T>(in.a1.size() == in.b1.rows(), "A1 must be rows(B1) square");
  require<T>(in.b4.cols() == in.b1.cols(), "B4 must have n columns");
  require<T>(in.a4.rows() == in.b4.rows() && in.a4.cols() == in.b4.cols(), "A4 must have the shape of B4");
}

}  // namespace

template <class T>
Analysis extremal_linear_constrained(const LinearInstance<T>& in, const TolerancePolicy& pol) {
  check_linear(in);
  Analysis out;
  const auto sol = linear_hermitian_solve(in.b4, in.a4, pol);
  out.premises = sol.conditions;
  if (!sol.solvable) throw PremiseViolated("B4 X = A4 has no Hermitian solution: " + sol.reason());
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T>& a1 = in.a1;
  const Matrix<T>&b1 = in.b1, &a4 = in.a4, &b4 = in.b4;
  const Matrix<T> a4b1 = a4 * b1.adjoint();
  const long rm = e.r(assemble_at<T>("linear.M", {{a1, b1}, {a4b1, b4}}));
  const Matrix<T> nn = assemble_at<T>(
      "linear.N", {{a1, b1, O}, {b1.adjoint(), O, b4.adjoint()}, {O, b4, Matrix<T>(-(a4 * b4.adjoint()))}});
  const Inertia iN = e.in(nn);
  const long np = static_cast<long>(iN.plus), nm = static_cast<long>(iN.minus), rn = np + nm;
  const long rb4 = e.r(b4);
  const long m1 = static_cast<long>(a1.rows());
  ExtremalSummary& s = out.summary;
  s = {rm - rb4, 2 * rm - rn, np - rb4, rm - nm, nm - rb4, rm - np};

  auto& rep = out.decisions;
  decide(rep, "exists_nonsingular", {cond("r(M) = r(B4) + m1", rm, rb4 + m1)}, s, m1);
  decide(rep, "forall_nonsingular", {cond("2 r(M) = r(N) + m1", 2 * rm, rn + m1)}, s, m1);
  decide(rep, "exists_zero", {e.includes("R[A1; A4 B1*] in R[B1; B4]", vcat(b1, b4), vcat(a1, a4b1))}, s, m1);
  decide(rep, "forall_zero", {cond("r(M) = r(B4)", rm, rb4)}, s, m1);
  decide(rep, "exists_pd", {cond("i+(N) = r(B4) + m1", np, rb4 + m1)}, s, m1);
  decide(rep, "exists_nd", {cond("i-(N) = r(B4) + m1", nm, rb4 + m1)}, s, m1);
  decide(rep, "forall_pd", {cond("r(M) = i-(N) + m1", rm, nm + m1)}, s, m1);
  decide(rep, "forall_nd", {cond("r(M) = i+(N) + m1", rm, np + m1)}, s, m1);
  decide(rep, "exists_psd", {cond("r(M) = i+(N)", rm, np)}, s, m1);
  decide(rep, "exists_nsd", {cond("r(M) = i-(N)", rm, nm)}, s, m1);
  decide(rep, "forall_psd", {cond("i-(N) = r(B4)", nm, rb4)}, s, m1);
  decide(rep, "forall_nsd", {cond("i+(N) = r(B4)", np, rb4)}, s, m1);
  return out;
}

template <class T>
Analysis extremal_linear_psd_constrained(const LinearInstance<T>& in, const TolerancePolicy& pol) {
  check_linear(in);
  Analysis out;
  const auto sol = linear_psd_solve(in.b4, in.a4, pol);
  out.premises = sol.conditions;
  if (!sol.solvable) throw PremiseViolated("B4 X = A4 has no positive semidefinite solution: " + sol.reason());
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T>& a1 = in.a1;
  const Matrix<T>&b1 = in.b1, &a4 = in.a4, &b4 = in.b4;
  const Matrix<T> a4b1 = a4 * b1.adjoint();
  const Matrix<T> a4b4 = a4 * b4.adjoint();
  const long rm1 = e.r(assemble<T>({{a1, b1}, {a4b1, b4}}));
  const Inertia i2 = e.in(assemble<T>({{a1, a4b1.adjoint()}, {a4b1, a4b4}}));
  const Inertia iN = e.in(assemble<T>({{a1, b1, O}, {b1.adjoint(), O, b4.adjoint()}, {O, b4, Matrix<T>(-a4b4)}}));
  const long p2 = static_cast<long>(i2.plus), q2 = static_cast<long>(i2.minus);
  const long nm = static_cast<long>(iN.minus);
  const long rb4 = e.r(b4), ra4 = e.r(a4);
  const long m1 = static_cast<long>(a1.rows());
  ExtremalSummary& s = out.summary;
  s = {rm1 - rb4, rm1 + q2 - nm, p2 - ra4, rm1 - nm, nm - rb4, q2};

  auto& rep = out.decisions;
  decide(rep, "exists_nonsingular", {cond("r(M1) = r(B4) + m1", rm1, rb4 + m1)}, s, m1);
  decide(rep, "forall_nonsingular", {cond("r(M1) + i-(M2) = i-(N) + m1", rm1 + q2, nm + m1)}, s, m1);
  decide(rep, "exists_zero", {cond("r(M1) + i-(M2) = i-(N)", rm1 + q2, nm)}, s, m1);
  decide(rep, "forall_zero", {cond("r(M1) = r(B4)", rm1, rb4)}, s, m1);
  decide(rep, "exists_pd", {cond("i+(M2) = r(A4) + m1", p2, ra4 + m1)}, s, m1);
  decide(rep, "forall_pd", {cond("r(M1) = i-(N) + m1", rm1, nm + m1)}, s, m1);
  decide(rep, "exists_nd", {cond("i-(N) = r(B4) + m1", nm, rb4 + m1)}, s, m1);
  decide(rep, "forall_nd", {cond("i-(M2) = m1", q2, m1)}, s, m1);
  decide(rep, "exists_psd", {cond("M2 >= 0", q2, 0)}, s, m1);
  decide(rep, "forall_psd", {cond("i-(N) = r(B4)", nm, rb4)}, s, m1);
  decide(rep, "exists_nsd", {cond("r(M1) = i-(N)", rm1, nm)}, s, m1);
  decide(rep, "forall_nsd", {cond("i+(M2) = r(A4)", p2, ra4)}, s, m1);
  return out;
}

template <class T>
Analysis solution_shift_extremal(const Matrix<T>& a, const Matrix<T>& b, const Hermitian<T>& ph, bool psd,
                                 const TolerancePolicy& pol) {
  require<T>(a.rows() == b.rows() && a.cols() == b.cols(), "A and B must have the same shape");
  require<T>(ph.size() == a.cols(), "P must be n x n");
  Analysis out;
  const auto sol = psd ? linear_psd_solve(a, b, pol) : linear_hermitian_solve(a, b, pol);
  out.premises = sol.conditions;
  const Ev<T> e{pol};
  if (psd) out.premises.push_back(e.psd("P >= 0", ph));
  require_premises<T>(out.premises, psd ? "A X = B needs a PSD solution and P >= 0" : "A X = B needs a Hermitian solution");
  const Matrix<T>& p = ph;
  const long n = static_cast<long>(a.cols());
  const Matrix<T> bap = b - a * p;
  const Matrix<T> h = b * a.adjoint() - a * p * a.adjoint();
  const long rbap = e.r(bap), ra = e.r(a);
  const Inertia ih = e.in(h);
  const long hp = static_cast<long>(ih.plus), hm = static_cast<long>(ih.minus), rh = hp + hm;
  ExtremalSummary& s = out.summary;
  auto& rep = out.decisions;
  const auto range_bap_a = e.same_range("R(AP - B) = R(A)", Matrix<T>(-bap), a);
  const auto range_h_a = e.same_range("R(BA* - APA*) = R(A)", h, a);
  const auto range_bap_h = e.same_range("R(B - AP) = R(BA* - APA*)", bap, h);
  const Condition hpsd = e.psd("BA* >= APA*", h), hnsd = e.nsd("BA* <= APA*", h);
  const Condition full_bap = cond("r(B - AP) = n", rbap, n);
  if (!psd) {
    s = {rbap - ra + n, 2 * rbap - rh, hp - ra + n, rbap - hm, hm - ra + n, rbap - hp};
    decide(rep, "exists_nonsingular", range_bap_a, s, n);
    decide(rep, "forall_nonsingular", {cond("2 r(B - AP) = r(BA* - APA*) + n", 2 * rbap, rh + n)}, s, n);
    decide(rep, "exists_pd", join({range_h_a, {hpsd}}), s, n);
    decide(rep, "exists_nd", join({range_h_a, {hnsd}}), s, n);
    decide(rep, "forall_pd", {full_bap, hpsd}, s, n);
    decide(rep, "forall_nd", {full_bap, hnsd}, s, n);
    decide(rep, "exists_psd", join({range_bap_h, {hpsd}}), s, n);
    decide(rep, "exists_nsd", join({range_bap_h, {hnsd}}), s, n);
    decide(rep, "forall_psd", {hpsd, cond("r(A) = n", ra, n)}, s, n);
    decide(rep, "forall_nsd", {hnsd, cond("r(A) = n", ra, n)}, s, n);
  } else {
    const std::nullopt_t O = std::nullopt;
    (void)O;
    const Inertia im = e.in(assemble<T>({{Matrix<T>(b * a.adjoint()), b}, {b.adjoint(), p}}));
    const long mp = static_cast<long>(im.plus), mm = static_cast<long>(im.minus);
    const long rb = e.r(b);
    s = {rbap - ra + n, mm + rbap - hp, hp - ra + n, mm, mp - rb, rbap - hp};
    decide(rep, "exists_nonsingular", range_bap_a, s, n);
    decide(rep, "forall_nonsingular", {cond("i-(M) + r(B - AP) = i+(BA* - APA*) + n", mm + rbap, hp + n)}, s, n);
    decide(rep, "exists_pd", join({range_h_a, {hpsd}}), s, n);
    decide(rep, "forall_pd", {cond("i-(M) = n", mm, n)}, s, n);
    decide(rep, "exists_nd", {cond("i+(M) = r(B) + n", mp, rb + n)}, s, n);
    decide(rep, "forall_nd", {full_bap, hnsd}, s, n);
    decide(rep, "exists_psd", join({range_bap_h, {hpsd}}), s, n);
    decide(rep, "forall_psd", {cond("i+(M) = r(B)", mp, rb)}, s, n);
    decide(rep, "exists_nsd", {cond("M >= 0", mm, 0)}, s, n);
    decide(rep, "forall_nsd", {cond("i+(BA* - APA*) + n = r(A)", hp + n, ra)}, s, n);
  }
  return out;
}

template <class T>
Analysis solution_extremal_linear(const Matrix<T>& a, const Matrix<T>& b, const TolerancePolicy& pol) {
  require<T>(a.rows() == b.rows() && a.cols() == b.cols(), "A and B must have the same shape");
  Analysis out;
  const auto sol = linear_hermitian_solve(a, b, pol);
  out.premises = sol.conditions;
  if (!sol.solvable) throw PremiseViolated("A X = B has no Hermitian solution: " + sol.reason());
  const Ev<T> e{pol};
  const long n = static_cast<long>(a.cols());
  const Matrix<T> ab = a * b.adjoint();
  const Inertia iab = e.in(ab);
  const long p = static_cast<long>(iab.plus), q = static_cast<long>(iab.minus), rab = p + q;
  const long ra = e.r(a), rb = e.r(b);
  ExtremalSummary& s = out.summary;
  s = {n + rb - ra, 2 * rb - rab, n + p - ra, rb - q, n + q - ra, rb - p};
  auto& rep = out.decisions;
  const Condition abp = e.psd("AB* >= 0", ab), abn = e.nsd("AB* <= 0", ab);
  decide(rep, "exists_nonsingular", {cond("r(A) = r(B)", ra, rb)}, s, n);
  decide(rep, "exists_pd", {abp, cond("r(AB*) = r(A)", rab, ra)}, s, n);
  decide(rep, "exists_nd", {abn, cond("r(AB*) = r(A)", rab, ra)}, s, n);
  decide(rep, "exists_psd", {abp, cond("r(AB*) = r(B)", rab, rb)}, s, n);
  decide(rep, "exists_nsd", {abn, cond("r(AB*) = r(B)", rab, rb)}, s, n);
  const Condition inv = cond("r(AB*) = r(A) + r(B) - n", rab, ra + rb - n);
  decide(rep, "rank_invariant", {inv}, s, n);
  decide(rep, "ip_invariant", {inv}, s, n);
  decide(rep, "im_invariant", {inv}, s, n);
  return out;
}

template <class T>
SubmatrixAnalysis<T> submatrix_extremal(const PartitionedInstance<T>& in, const TolerancePolicy& pol) {
  const std::size_t m = in.a1.rows();
  require<T>(in.a2.rows() == m && in.b1.rows() == m && in.b2.rows() == m, "all blocks must share rows");
  require<T>(in.b1.cols() == in.a1.cols() && in.b2.cols() == in.a2.cols(), "B_i must have the shape of A_i");
  const Matrix<T> a = hcat(in.a1, in.a2);
  const Matrix<T> b = hcat(in.b1, in.b2);
  SubmatrixAnalysis<T> out;
  const auto sol = linear_hermitian_solve(a, b, pol);
  out.premises = sol.conditions;
  if (!sol.solvable) throw PremiseViolated("[A1, A2] X = [B1, B2] has no Hermitian solution: " + sol.reason());
  const Ev<T> e{pol};
  const std::nullopt_t O = std::nullopt;
  const Matrix<T> ab = a * b.adjoint();
  const long ra = e.r(a);
  auto block = [&](const Matrix<T>& other_a, const Matrix<T>& own_b, long nk, long& r_ab, Inertia& ik) {
    r_ab = e.r(hcat(other_a, own_b));
    ik = e.in(assemble<T>({{ab, other_a}, {other_a.adjoint(), O}}));
    const long kp = static_cast<long>(ik.plus), km = static_cast<long>(ik.minus);
    return ExtremalSummary{nk + r_ab - ra, 2 * r_ab - kp - km, nk + kp - ra, r_ab - km, nk + km - ra, r_ab - kp};
  };
  const long n1 = static_cast<long>(in.a1.cols()), n2 = static_cast<long>(in.a2.cols());
  long r21 = 0, r12 = 0;
  Inertia k1, k3;
  out.x1 = block(in.a2, in.b1, n1, r21, k1);
  out.x3 = block(in.a1, in.b2, n2, r12, k3);

  const ExtremalSummary& s = out.x1;
  const long kp = static_cast<long>(k1.plus), km = static_cast<long>(k1.minus), rk = kp + km;
  auto& rep = out.decisions;
  decide(rep, "exists_nonsingular", {cond("r[A2, B1] = r(A)", r21, ra)}, s, n1);
  decide(rep, "forall_nonsingular", {cond("r(K) = 2 r[A2, B1] - n1", rk, 2 * r21 - n1)}, s, n1);
  decide(rep, "exists_pd", {cond("i+(K) = r(A)", kp, ra)}, s, n1);
  decide(rep, "exists_nd", {cond("i-(K) = r(A)", km, ra)}, s, n1);
  decide(rep, "forall_pd", {cond("i-(K) = r[A2, B1] - n1", km, r21 - n1)}, s, n1);
  decide(rep, "forall_nd", {cond("i+(K) = r[A2, B1] - n1", kp, r21 - n1)}, s, n1);
  decide(rep, "exists_psd", {cond("i+(K) = r[A2, B1]", kp, r21)}, s, n1);
  decide(rep, "exists_nsd", {cond("i-(K) = r[A2, B1]", km, r21)}, s, n1);
  decide(rep, "forall_psd", {cond("i-(K) = r(A) - n1", km, ra - n1)}, s, n1);
  decide(rep, "forall_nsd", {cond("i+(K) = r(A) - n1", kp, ra - n1)}, s, n1);
  decide(rep, "exists_zero", {e.includes("R(B1) in R(A2)", in.a2, in.b1)}, s, n1);
  decide(rep, "forall_zero", {cond("r[A2, B1] = r(A) - n1", r21, ra - n1)}, s, n1);
  const Condition inv = cond("r(K) = r[A2, B1] + r(A) - n1", rk, r21 + ra - n1);
  decide(rep, "rank_invariant", {inv}, s, n1);
  decide(rep, "ip_invariant", {inv}, s, n1);
  decide(rep, "im_invariant", {inv}, s, n1);
  return out;
}

#define HERMEX_INSTANTIATE_EXTREMAL(T)                                                                            \
  template ExtremalSummary extremal_free<T>(const Hermitian<T>&, const Matrix<T>&, const TolerancePolicy&);     \
  template ExtremalSummary extremal_free_psd<T>(const Hermitian<T>&, const Matrix<T>&, Sign,                     \
                                                const TolerancePolicy&);                                         \
  template ExtremalSummary extremal_bxc<T>(const Hermitian<T>&, const Matrix<T>&, const Matrix<T>&,             \
                                           const TolerancePolicy&);                                              \
  template ExtremalSummary extremal_bxc_nested<T>(const Hermitian<T>&, const Matrix<T>&, const Matrix<T>&,      \
                                                  const TolerancePolicy&);                                       \
  template ExtremalSummary extremal_two_var<T>(const Hermitian<T>&, const Matrix<T>&, const Matrix<T>&,         \
                                               const Matrix<T>&, const Matrix<T>&, const TolerancePolicy&);      \
  template ExtremalSummary extremal_pair_constrained<T>(const PairInstance<T>&, const TolerancePolicy&);         \
  template ExtremalSummary extremal_pair_allpairs<T>(const PairInstance<T>&, const TolerancePolicy&);            \
  template TripleDecision<T> triple_common_solvable<T>(const PairInstance<T>&, const TolerancePolicy&);          \
  template DecisionReport lsq_common_condition<T>(const PairInstance<T>&, const TolerancePolicy&);               \
  template Analysis solution_extremal_pair<T>(const Matrix<T>&, const Hermitian<T>&, const Matrix<T>&,          \
                                              const Hermitian<T>&, const TolerancePolicy&);                      \
  template Analysis extremal_linear_constrained<T>(const LinearInstance<T>&, const TolerancePolicy&);           \
  template Analysis extremal_linear_psd_constrained<T>(const LinearInstance<T>&, const TolerancePolicy&);       \
  template Analysis solution_shift_extremal<T>(const Matrix<T>&, const Matrix<T>&, const Hermitian<T>&, bool,   \
                                               const TolerancePolicy&);                                          \
  template Analysis solution_extremal_linear<T>(const Matrix<T>&, const Matrix<T>&, const TolerancePolicy&);    \
  template SubmatrixAnalysis<T> submatrix_extremal<T>(const PartitionedInstance<T>&, const TolerancePolicy&);

HERMEX_INSTANTIATE_EXTREMAL(Gaussian)
HERMEX_INSTANTIATE_EXTREMAL(Complex)

}  // namespace hermex
