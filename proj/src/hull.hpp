#pragma once

#include <vector>

#include "minkval/linalg.hpp"
#include "minkval/polytope.hpp"

namespace minkval::detail {

// normal . y <= offset, tight exactly on the points in `mask`.
struct HalfSpace {
  Vector normal;
  Rational offset;
  VertexMask mask;
};

struct ChartHull {
  std::vector<std::size_t> vertex_ids;  // ascending indices into the input
  std::vector<HalfSpace> facets;        // masks index the input points
};

// Facets and vertices of conv(points) for distinct points affinely spanning
// R^r, r >= 1.
ChartHull hull_full_dim(const std::vector<Vector>& points);

}  // namespace minkval::detail
