#include "hermex/blocks.hpp"

namespace hermex {

template <class T>
Matrix<T> assemble(const BlockGrid<T>& grid) {
  const std::size_t br = grid.size();
  const std::size_t bc = br == 0 ? 0 : grid.front().size();
  std::vector<std::optional<std::size_t>> heights(br), widths(bc);
  for (std::size_t i = 0; i < br; ++i) {
    if (grid[i].size() != bc) throw DimensionMismatch("ragged block grid");
    for (std::size_t j = 0; j < bc; ++j) {
      const auto& cell = grid[i][j];
      if (!cell) continue;
      auto fix = [&](std::optional<std::size_t>& slot, std::size_t v, const char* what) {
        if (slot && *slot != v) {
          throw DimensionMismatch(std::string("block (") + std::to_string(i) + "," + std::to_string(j) + ") has " +
                                  cell->shape() + ", inconsistent " + what);
        }
        slot = v;
      };
      fix(heights[i], cell->rows(), "height");
      fix(widths[j], cell->cols(), "width");
    }
  }
  std::size_t rows = 0, cols = 0;
  for (std::size_t i = 0; i < br; ++i) {
    if (!heights[i]) throw DimensionMismatch("block row " + std::to_string(i) + " has no sized block");
    rows += *heights[i];
  }
  for (std::size_t j = 0; j < bc; ++j) {
    if (!widths[j]) throw DimensionMismatch("block column " + std::to_string(j) + " has no sized block");
    cols += *widths[j];
  }
  Matrix<T> out(rows, cols);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < br; ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < bc; ++j) {
      if (grid[i][j]) out.set_block(r0, c0, *grid[i][j]);
      c0 += *widths[j];
    }
    r0 += *heights[i];
  }
  return out;
}

namespace {

IdentityReport make(std::string id, std::vector<long> left, std::vector<long> right, std::string note = {}) {
  IdentityReport r;
  r.id = std::move(id);
  r.equal = left == right;
  r.left = std::move(left);
  r.right = std::move(right);
  r.note = std::move(note);
  return r;
}

IdentityReport skipped(std::string id, std::string why) {
  IdentityReport r;
  r.id = std::move(id);
  r.skipped = true;
  r.equal = true;
  r.note = std::move(why);
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch(what);
}

}  // namespace

template <class T>
std::vector<IdentityReport> rank_expansion_suite(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                                 const Matrix<T>& p, const Matrix<T>& q,
                                                 const TolerancePolicy& pol) {
  require(a.rows() == b.rows(), "A and B must share rows");
  require(a.cols() == c.cols(), "A and C must share columns");
  require(p.rows() == c.rows(), "P and C must share rows");
  require(q.cols() == b.cols(), "Q and B must share columns");
  const std::nullopt_t O = std::nullopt;
  auto r = [&](const Matrix<T>& m) { return static_cast<long>(rank(m, pol)); };
  const auto pa = projectors(a, pol);
  const auto pb = projectors(b, pol);
  const auto pc = projectors(c, pol);
  const auto pp = projectors(p, pol);
  const auto pq = projectors(q, pol);

  std::vector<IdentityReport> out;
  const long rab = r(hcat(a, b));
  out.push_back(make("row_block", {rab, rab}, {r(a) + r(pa.left * b), r(b) + r(pb.left * a)}));
  const long rac = r(vcat(a, c));
  out.push_back(make("column_block", {rac, rac}, {r(a) + r(c * pa.right), r(c) + r(a * pc.right)}));
  out.push_back(make("bordered", {r(assemble<T>({{a, b}, {c, O}}))}, {r(b) + r(c) + r(pb.left * a * pc.right)}));
  out.push_back(make("bordered_left_projector", {r(assemble<T>({{a, b, O}, {c, O, p}}))},
                     {r(p) + r(assemble<T>({{a, b}, {pp.left * c, O}}))}));
  out.push_back(make("bordered_right_projector", {r(assemble<T>({{a, b}, {c, O}, {O, q}}))},
                     {r(q) + r(assemble<T>({{a, b * pq.right}, {c, O}}))}));
  out.push_back(make("bordered_both_projectors", {r(assemble<T>({{a, b, O}, {c, O, p}, {O, q, O}}))},
                     {r(p) + r(q) + r(assemble<T>({{a, b * pq.right}, {pp.left * c, O}}))}));
  return out;
}

template <class T>
std::vector<IdentityReport> inertia_expansion_suite(const Hermitian<T>& ah, const Matrix<T>& b, const Hermitian<T>& dh,
                                                    const Matrix<T>& p, const TolerancePolicy& pol) {
  const Matrix<T>& a = ah;
  const Matrix<T>& d = dh;
  require(a.rows() == b.rows(), "A and B must share rows");
  require(d.rows() == b.cols(), "D must be square of size cols(B)");
  require(p.cols() == b.cols(), "P must have cols(B) columns");
  const std::nullopt_t O = std::nullopt;
  const Matrix<T> bs = b.adjoint();
  auto r = [&](const Matrix<T>& m) { return static_cast<long>(rank(m, pol)); };
  auto in = [&](const Matrix<T>& m) {
    const Inertia x = inertia(as_hermitian(m), pol);
    return std::pair<long, long>(static_cast<long>(x.plus), static_cast<long>(x.minus));
  };
  const auto pa = projectors(a, pol);
  const auto pb = projectors(b, pol);
  const Matrix<T> u = assemble<T>({{a, b}, {bs, O}});
  const Matrix<T> v = assemble<T>({{a, b}, {bs, d}});
  const auto iu = in(u);
  const auto iv = in(v);
  const auto ia = in(a);
  const long rb = r(b);
  const long rab = r(hcat(a, b));

  std::vector<IdentityReport> out;
  {
    const auto core = in(pb.left * a * pb.left);
    out.push_back(make("bordered_zero_corner", {iu.first, iu.second}, {rb + core.first, rb + core.second}));
  }
  const Matrix<T> schur = d - bs * pinv(a, pol) * b;
  {
    const Matrix<T> eab = pa.left * b;
    const auto core = in(assemble<T>({{Matrix<T>::zeros(a.rows(), a.rows()), eab}, {eab.adjoint(), schur}}));
    out.push_back(
        make("bordered_general", {iv.first, iv.second}, {ia.first + core.first, ia.second + core.second}));
  }
  {
    const long ru = r(u);
    out.push_back(make("rank_of_zero_corner", {ru}, {iu.first + iu.second}));
  }
  if (is_psd(ah, pol)) {
    out.push_back(make("psd_corner", {iu.first, iu.second, r(u)}, {rab, rb, rab + rb}));
  } else {
    out.push_back(skipped("psd_corner", "A is not positive semidefinite"));
  }
  if (is_nsd(ah, pol)) {
    out.push_back(make("nsd_corner", {iu.first, iu.second, r(u)}, {rb, rab, rab + rb}));
  } else {
    out.push_back(skipped("nsd_corner", "A is not negative semidefinite"));
  }
  if (range_includes(a, b, pol)) {
    const auto is = in(schur);
    out.push_back(make("range_nested", {iv.first, iv.second, r(v)},
                       {ia.first + is.first, ia.second + is.second, r(a) + r(schur)}));
  } else {
    out.push_back(skipped("range_nested", "R(B) is not inside R(A)"));
  }
  const bool disjoint_ab = rab == r(a) + rb;
  const bool disjoint_bd = r(hcat(bs, d)) == rb + r(d);
  if (disjoint_ab && disjoint_bd) {
    const auto id = in(d);
    out.push_back(make("range_disjoint", {iv.first, iv.second, r(v)},
                       {ia.first + id.first + rb, ia.second + id.second + rb, r(a) + 2 * rb + r(d)}));
  } else {
    out.push_back(skipped("range_disjoint", "range intersections are not trivial"));
  }
  {
    const Matrix<T> fp = projectors(p, pol).right;
    const Matrix<T> bf = b * fp;
    const Matrix<T> lhs = assemble<T>({{a, bf}, {bf.adjoint(), O}});
    const Matrix<T> rhs = assemble<T>({{a, b, O}, {bs, O, p.adjoint()}, {O, p, O}});
    const auto il = in(lhs);
    const auto ir = in(rhs);
    const long rp = r(p);
    out.push_back(make("projected_border", {il.first, il.second, r(lhs)},
                       {ir.first - rp, ir.second - rp, r(rhs) - 2 * rp}));
  }
  return out;
}

#define HERMEX_INSTANTIATE_BLOCKS(T)                                                                      \
  template Matrix<T> assemble<T>(const BlockGrid<T>&);                                                    \
  template std::vector<IdentityReport> rank_expansion_suite<T>(const Matrix<T>&, const Matrix<T>&,        \
                                                               const Matrix<T>&, const Matrix<T>&,        \
                                                               const Matrix<T>&, const TolerancePolicy&); \
  template std::vector<IdentityReport> inertia_expansion_suite<T>(                                        \
      const Hermitian<T>&, const Matrix<T>&, const Hermitian<T>&, const Matrix<T>&, const TolerancePolicy&);

HERMEX_INSTANTIATE_BLOCKS(Gaussian)
HERMEX_INSTANTIATE_BLOCKS(Complex)

}  // namespace hermex
