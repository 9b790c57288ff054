#include "crn/linalg.hpp"

#include <algorithm>

namespace crn::linalg {

namespace {

std::size_t first_nonzero(const RationalVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return v.size();
}

}  // namespace

RationalVector EchelonBasis::reduce(RationalVector v) const {
  if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "vector dimension differs from basis dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto p = pivots_[r];
    if (v[p] == 0) continue;
    Rational factor = v[p] / rows_[r][p];
    for (std::size_t j = p; j < dim_; ++j) v[j] -= factor * rows_[r][j];
  }
  return v;
}

bool EchelonBasis::insert(const RationalVector& v) {
  RationalVector rem = reduce(v);
  auto p = first_nonzero(rem);
  if (p == dim_) return false;
  RationalVector row = to_rational(primitive_integer(rem));
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

bool EchelonBasis::contains(const RationalVector& v) const {
  auto rem = reduce(v);
  return first_nonzero(rem) == dim_;
}

std::size_t rank(const std::vector<RationalVector>& rows, std::size_t dim) {
  EchelonBasis b(dim);
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t dim) {
  // Reduced row echelon form, then one basis vector per free column.
  std::vector<RationalVector> m = rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < dim; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    RationalVector v(dim, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    basis.push_back(to_rational(primitive_integer(v)));
  }
  return basis;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "difference of vectors of different length");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace crn::linalg
