#pragma once

#include <cstddef>
#include <vector>

#include "crn/network.hpp"

namespace crn {

using Point = RationalVector;

// normal . x >= offset for every point of the polytope (inward normal).
struct Facet {
  RationalVector normal;
  Rational offset;
};

// Exact convex hull in dimension <= 3. Lower-dimensional hulls record their affine span
// as equalities; their facets are then relative to that span.
struct Polytope {
  std::size_t dim = 0;
  std::size_t affine_dim = 0;
  std::vector<Point> vertices;
  std::vector<Facet> facets;
  std::vector<Facet> equalities;  // normal . x == offset

  bool is_full_dimensional() const { return affine_dim == dim; }
  /// Closed membership test.
  bool contains(const Point& p) const;
};

Polytope convex_hull(const std::vector<Point>& points);
Polytope convex_hull(const std::vector<Exponent>& points);

/// False for lower-dimensional polytopes, which have no interior in the ambient space.
bool is_strictly_interior(const Polytope& poly, const Point& p);

struct SupportData {
  IntVector direction;
  std::vector<std::size_t> minimizers;  // indices into the input point list
  std::int64_t value = 0;               // min over points of direction . point
};

SupportData support_minimizers(const std::vector<Exponent>& points, const IntVector& u);

using DirectionSet = std::vector<IntVector>;

/// Normals of the hyperplane arrangement that governs the sweep verdicts: pairwise
/// differences of source complexes and reaction vectors, plus the coordinate axes.
/// Primitive, sign-normalised (first nonzero entry positive), deduplicated.
std::vector<IntVector> arrangement_normals(const ReactionNetwork& net);

/// At least one direction in every cell (of every dimension >= 1) of the central
/// arrangement with the given normals. Dimension 1, 2 or 3.
DirectionSet cell_representatives(const std::vector<IntVector>& normals, std::size_t dim);

DirectionSet representative_directions(const ReactionNetwork& net);

/// Sign of u . v for every normal; two directions share a cell iff patterns agree.
std::vector<int> sign_pattern(const std::vector<IntVector>& normals, const IntVector& u);

}  // namespace crn
