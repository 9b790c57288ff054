#pragma once

#include <cstddef>
#include <vector>

#include "crn/rational.hpp"

namespace crn::linalg {

// Rows kept in echelon form: distinct pivots, each row zero before its pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the basis; returns the remainder (zero iff v is in the span).
  RationalVector reduce(RationalVector v) const;
  /// Inserts the reduced remainder of v (scaled to a primitive integer vector) if nonzero.
  bool insert(const RationalVector& v);
  bool contains(const RationalVector& v) const;

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<RationalVector>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<RationalVector>& rows, std::size_t dim);

/// Basis of { x : row . x = 0 for every row }.
std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t dim);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);

}  // namespace crn::linalg
