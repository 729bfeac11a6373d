#pragma once

#include <bitset>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "minkval/linalg.hpp"

namespace minkval {

inline constexpr std::size_t kMaxAmbientDim = 5;
inline constexpr std::size_t kMaxHullPoints = 256;

// Subset of a polytope's vertex list.
using VertexMask = std::bitset<kMaxHullPoints>;

enum class OriginPosition {
  kInterior,                  // dim P = n and o in int P
  kRelativeBoundary,          // o in relbd P
  kRelativeInteriorLowerDim,  // dim P < n and o in relint P
};

struct FacetData {
  Vector normal;    // exact outer normal, primitive integer vector
  Rational offset;  // h_P(normal)
  // vol_{n-1}(F) * unit normal; exact because it is a sum of generalised
  // cross products over a triangulation of F.
  Vector area_vector;
  Rational squared_measure;
  double measure = 0.0;
  std::vector<double> unit_normal;
  double unit_offset = 0.0;  // h_P(unit_normal)
  bool contains_origin = false;
  std::vector<std::size_t> vertex_indices;
};

struct Face {
  std::vector<std::size_t> vertex_indices;  // into the parent's vertices()
  VertexMask mask;
  int dim = 0;
  bool contains_origin = false;
};

struct FaceLattice {
  // faces[j] lists the j-dimensional faces, 0 <= j <= dim P. faces[dim P]
  // holds P itself.
  std::vector<std::vector<Face>> faces;
};

// A convex polytope in R^n (n <= 5) containing the origin, stored by its
// irredundant vertex list in lexicographic order. Immutable; derived data
// (face lattice, facet data, triangulation) is computed once on first use and
// shared between copies, so instances are safe to share across threads.
class Polytope {
 public:
  // Throws EmptyInput, OriginNotContained, DimensionOutOfRange.
  static Polytope hull(std::span<const Vector> points);
  static Polytope origin(std::size_t n);

  std::size_t ambient_dim() const;
  int dim() const;
  const std::vector<Vector>& vertices() const;
  OriginPosition origin_position() const;
  bool is_full_dimensional() const { return dim() == static_cast<int>(ambient_dim()); }

  Rational support(const Vector& x) const;
  bool contains(const Vector& x) const;
  bool in_linear_hull(const Vector& x) const;
  // Basis of lin P in reduced row echelon form.
  const std::vector<Vector>& linear_basis() const;
  // max{t >= 0 : t x in P}; nullopt for x = 0 or x outside lin P.
  std::optional<Rational> ray_exit(const Vector& x) const;

  const FaceLattice& face_lattice() const;
  const std::vector<Face>& faces(int j) const;
  std::vector<Face> faces_through_origin(int j) const;
  std::vector<Vector> face_vertices(const Face& f) const;

  // One entry per facet for full-dimensional P; empty otherwise.
  const std::vector<FacetData>& facet_data() const;
  // Atoms of the surface area measure as area vectors (measure * unit
  // normal): the facets when dim P = n, the two sides of P when
  // dim P = n - 1, nothing otherwise.
  const std::vector<Vector>& surface_atoms() const;

  // Pulling triangulation into dim P-simplices, as vertex index tuples.
  const std::vector<std::vector<std::size_t>>& triangulation() const;
  // n-dimensional volume (0 when dim P < n).
  Rational volume() const;
  // dim P-dimensional volume in the coordinate chart of lin P. Comparable
  // only between polytopes with the same linear hull.
  Rational chart_volume() const;

  Polytope reflected() const;
  Polytope scaled(const Rational& s) const;

  friend bool operator==(const Polytope& a, const Polytope& b);

  struct Impl;

 private:
  explicit Polytope(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

Polytope convex_hull(std::span<const Vector> points);
inline Polytope convex_hull(const std::vector<Vector>& points) {
  return convex_hull(std::span<const Vector>(points));
}

// Image under an invertible linear map. Throws SingularMap.
Polytope apply_linear(const Polytope& p, const LinearMap& a);
std::vector<std::vector<double>> apply_linear(const Polytope& p, const FloatMap& a);

// The transforms phi_1..phi_4 of the standard simplex split, for 0 < lambda
// < 1 and n >= 3. Kinds 1 and 2 are exact; kinds 3 and 4 carry the factor
// (1/lambda)^(1/n) resp. (1/(1-lambda))^(1/n) and are only available in
// double precision.
LinearMap transform_phi(int kind, const Rational& lambda, std::size_t n);
FloatMap transform_phi_float(int kind, const Rational& lambda, std::size_t n);
// phi_3/phi_4 without the global dilation factor (det != 1).
LinearMap transform_phi_unscaled(int kind, const Rational& lambda, std::size_t n);

// Normal (1 - lambda) e1 - lambda e2 of the hyperplane H_lambda.
Vector h_lambda_normal(const Rational& lambda, std::size_t n);

struct SplitCase {
  Polytope parent;
  Vector normal;
  Polytope plus;   // P cap {x . normal >= 0}
  Polytope minus;  // P cap {x . normal <= 0}
  Polytope cut;    // P cap {x . normal = 0}
  // The hyperplane misses relint P; one piece is P itself.
  bool degenerate = false;
};

SplitCase halfspace_split(const Polytope& p, const Vector& normal);

// s T^d = [o, s e1, ..., s ed] in R^n. Throws DimensionOutOfRange.
Polytope standard_simplex(std::size_t d, std::size_t n, const Rational& s = 1);
// s T-hat^k = [o, s e1, s e3, ..., s e_{k+1}] in R^n (k = d - 1).
Polytope hat_simplex(std::size_t k, std::size_t n, const Rational& s = 1);
// The product of the intervals [lo_i, hi_i].
Polytope box(const std::vector<Rational>& lo, const std::vector<Rational>& hi);

// Orthogonal projection onto span(basis), as a polytope in R^n.
// Throws DegenerateBasis.
Polytope project(const Polytope& p, const std::vector<Vector>& basis);
// x | lin P.
Vector project_vector(const Vector& x, const Polytope& p);
// Exact Gram-Schmidt; returns pairwise orthogonal (unnormalised) vectors.
std::vector<Vector> orthogonalize(const std::vector<Vector>& basis);

// Convexity of K cup L for bodies with disjoint relative interiors (or
// nested bodies): vol(hull) = vol(K) + vol(L) in the chart of the hull.
bool union_is_convex(const Polytope& k, const Polytope& l);

// Double-mode comparison: max over vertices of the distance to the nearest
// vertex of the other list, symmetrised.
double vertex_set_distance(const std::vector<std::vector<double>>& a,
                           const std::vector<std::vector<double>>& b);
std::vector<std::vector<double>> to_double(const std::vector<Vector>& vs);

}  // namespace minkval
