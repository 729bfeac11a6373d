#include "minkval/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <unordered_set>

#include "hull.hpp"
#include "minkval/errors.hpp"

namespace minkval {

struct Polytope::Impl {
  std::size_t n = 0;
  int dim = 0;
  std::vector<Vector> vertices;
  std::vector<std::size_t> pivots;     // chart coordinates of lin P
  std::vector<Vector> lin_basis;       // RREF rows spanning lin P
  std::vector<detail::HalfSpace> facets;  // in chart coordinates, masks over vertices
  OriginPosition origin = OriginPosition::kRelativeInteriorLowerDim;

  mutable std::once_flag lattice_once;
  mutable FaceLattice lattice;
  mutable std::once_flag tri_once;
  mutable std::vector<std::vector<std::size_t>> tri;
  mutable std::once_flag facet_once;
  mutable std::vector<FacetData> facet_data;
  mutable std::once_flag atoms_once;
  mutable std::vector<Vector> atoms;

  Vector chart(const Vector& x) const {
    Vector y(pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) y[k] = x[pivots[k]];
    return y;
  }

  int mask_dim(const VertexMask& mask) const;
  void build_lattice() const;
  std::vector<std::vector<std::size_t>> triangulate(const VertexMask& mask, int d) const;
};

namespace {

Rational factorial(std::size_t k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

std::vector<std::size_t> mask_indices(const VertexMask& m, std::size_t count) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < count; ++i)
    if (m.test(i)) ids.push_back(i);
  return ids;
}

// Generalised cross product of n-1 vectors in R^n: orthogonal to all of them,
// with norm equal to the (n-1)-volume of the parallelotope they span.
Vector cross(const std::vector<Vector>& us, std::size_t n) {
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        minor(i, c++) = us[i][j];
      }
    }
    Rational d = n == 1 ? Rational(1) : determinant(minor);
    out[k] = (k % 2 == 0) ? d : Rational(-d);
  }
  return out;
}

Vector simplex_area_vector(const std::vector<Vector>& verts, std::size_t n) {
  std::vector<Vector> edges;
  for (std::size_t i = 1; i < verts.size(); ++i) edges.push_back(verts[i] - verts[0]);
  Vector c = cross(edges, n);
  return (1 / factorial(n - 1)) * c;
}

}  // namespace

int Polytope::Impl::mask_dim(const VertexMask& mask) const {
  const auto ids = mask_indices(mask, vertices.size());
  if (ids.size() <= 1) return 0;
  std::vector<Vector> rows;
  const Vector base = chart(vertices[ids[0]]);
  for (std::size_t k = 1; k < ids.size(); ++k) rows.push_back(chart(vertices[ids[k]]) - base);
  return static_cast<int>(rank(Matrix::from_rows(rows)));
}

void Polytope::Impl::build_lattice() const {
  lattice.faces.assign(static_cast<std::size_t>(dim) + 1, {});
  VertexMask full;
  for (std::size_t i = 0; i < vertices.size(); ++i) full.set(i);

  std::vector<VertexMask> found;
  std::unordered_set<VertexMask> seen;
  for (const auto& f : facets) {
    if (seen.insert(f.mask).second) found.push_back(f.mask);
  }
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    for (const auto& f : facets) {
      VertexMask meet = found[idx] & f.mask;
      if (meet.none() || meet == found[idx]) continue;
      if (seen.insert(meet).second) found.push_back(meet);
    }
  }
  found.push_back(full);

  for (const auto& mask : found) {
    Face face;
    face.mask = mask;
    face.vertex_indices = mask_indices(mask, vertices.size());
    face.dim = (mask == full) ? dim : mask_dim(mask);
    face.contains_origin = true;
    if (mask != full) {
      for (const auto& f : facets) {
        if ((f.mask & mask) == mask && f.offset != 0) {
          face.contains_origin = false;
          break;
        }
      }
    }
    lattice.faces[static_cast<std::size_t>(face.dim)].push_back(std::move(face));
  }
  for (auto& level : lattice.faces) {
    std::sort(level.begin(), level.end(),
              [](const Face& a, const Face& b) { return a.vertex_indices < b.vertex_indices; });
  }
}

std::vector<std::vector<std::size_t>> Polytope::Impl::triangulate(const VertexMask& mask, int d) const {
  const auto ids = mask_indices(mask, vertices.size());
  if (d == 0) return {{ids.front()}};
  const std::size_t apex = ids.front();
  std::vector<std::vector<std::size_t>> out;
  for (const auto& sub : lattice.faces[static_cast<std::size_t>(d - 1)]) {
    if ((sub.mask & mask) != sub.mask || sub.mask.test(apex)) continue;
    for (auto& s : triangulate(sub.mask, d - 1)) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Polytope Polytope::origin(std::size_t n) {
  std::vector<Vector> pts{Vector(n)};
  return hull(pts);
}

Polytope Polytope::hull(std::span<const Vector> points) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "convex hull of an empty point set");
  const std::size_t n = points[0].size();
  if (n == 0 || n > kMaxAmbientDim) {
    throw Error(ErrorCode::kDimensionOutOfRange, "ambient dimension must be in 1.." + std::to_string(kMaxAmbientDim));
  }
  std::vector<Vector> pts(points.begin(), points.end());
  for (const auto& p : pts) {
    if (p.size() != n) throw Error(ErrorCode::kDimensionMismatch, "points of different dimensions");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto impl = std::make_shared<Impl>();
  impl->n = n;

  if (pts.size() == 1) {
    if (!pts[0].is_zero()) throw Error(ErrorCode::kOriginNotContained, "single point " + pts[0].str());
    impl->vertices = pts;
    impl->dim = 0;
    impl->origin = OriginPosition::kRelativeInteriorLowerDim;
    return Polytope(std::move(impl));
  }

  std::vector<Vector> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - pts[0]);
  Matrix red = Matrix::from_rows(dirs);
  impl->pivots = row_reduce(red);
  const std::size_t r = impl->pivots.size();
  for (std::size_t k = 0; k < r; ++k) impl->lin_basis.push_back(red.row(k));
  impl->dim = static_cast<int>(r);

  // aff P must pass through the origin, i.e. p0 in span(dirs).
  {
    Vector rest = pts[0];
    for (std::size_t k = 0; k < r; ++k) rest -= pts[0][impl->pivots[k]] * impl->lin_basis[k];
    if (!rest.is_zero()) throw Error(ErrorCode::kOriginNotContained, "origin outside the affine hull");
  }

  std::vector<Vector> chart_pts;
  chart_pts.reserve(pts.size());
  for (const auto& p : pts) chart_pts.push_back(impl->chart(p));
  auto ch = detail::hull_full_dim(chart_pts);

  for (const auto& f : ch.facets) {
    if (f.offset < 0) throw Error(ErrorCode::kOriginNotContained, "origin outside the hull");
  }

  std::vector<std::size_t> remap(pts.size(), 0);
  for (std::size_t k = 0; k < ch.vertex_ids.size(); ++k) {
    remap[ch.vertex_ids[k]] = k;
    impl->vertices.push_back(pts[ch.vertex_ids[k]]);
  }
  bool interior = true;
  for (auto& f : ch.facets) {
    VertexMask m;
    for (auto id : ch.vertex_ids)
      if (f.mask.test(id)) m.set(remap[id]);
    f.mask = m;
    if (f.offset == 0) interior = false;
    impl->facets.push_back(std::move(f));
  }
  if (!interior) {
    impl->origin = OriginPosition::kRelativeBoundary;
  } else {
    impl->origin = (r == n) ? OriginPosition::kInterior : OriginPosition::kRelativeInteriorLowerDim;
  }
  return Polytope(std::move(impl));
}

Polytope convex_hull(std::span<const Vector> points) { return Polytope::hull(points); }

std::size_t Polytope::ambient_dim() const { return impl_->n; }
int Polytope::dim() const { return impl_->dim; }
const std::vector<Vector>& Polytope::vertices() const { return impl_->vertices; }
OriginPosition Polytope::origin_position() const { return impl_->origin; }
const std::vector<Vector>& Polytope::linear_basis() const { return impl_->lin_basis; }

Rational Polytope::support(const Vector& x) const {
  if (x.size() != impl_->n) throw Error(ErrorCode::kDimensionMismatch, "support function argument");
  Rational best = dot(x, impl_->vertices[0]);
  for (std::size_t i = 1; i < impl_->vertices.size(); ++i) {
    Rational v = dot(x, impl_->vertices[i]);
    if (v > best) best = v;
  }
  return best;
}

bool Polytope::in_linear_hull(const Vector& x) const {
  if (x.size() != impl_->n) throw Error(ErrorCode::kDimensionMismatch, "membership argument");
  Vector rest = x;
  for (std::size_t k = 0; k < impl_->pivots.size(); ++k) rest -= x[impl_->pivots[k]] * impl_->lin_basis[k];
  return rest.is_zero();
}

bool Polytope::contains(const Vector& x) const {
  if (!in_linear_hull(x)) return false;
  const Vector y = impl_->chart(x);
  for (const auto& f : impl_->facets) {
    if (dot(f.normal, y) > f.offset) return false;
  }
  return true;
}

std::optional<Rational> Polytope::ray_exit(const Vector& x) const {
  if (x.is_zero() || !in_linear_hull(x)) return std::nullopt;
  const Vector y = impl_->chart(x);
  std::optional<Rational> best;
  for (const auto& f : impl_->facets) {
    const Rational s = dot(f.normal, y);
    if (s <= 0) continue;
    Rational t = f.offset / s;
    if (!best || t < *best) best = t;
  }
  return best;
}

const FaceLattice& Polytope::face_lattice() const {
  std::call_once(impl_->lattice_once, [this] { impl_->build_lattice(); });
  return impl_->lattice;
}

const std::vector<Face>& Polytope::faces(int j) const {
  static const std::vector<Face> kNone;
  const auto& lat = face_lattice();
  if (j < 0 || j >= static_cast<int>(lat.faces.size())) return kNone;
  return lat.faces[static_cast<std::size_t>(j)];
}

std::vector<Face> Polytope::faces_through_origin(int j) const {
  std::vector<Face> out;
  if (j < 1 || j > dim() - 1) return out;
  for (const auto& f : faces(j)) {
    if (f.contains_origin) out.push_back(f);
  }
  return out;
}

std::vector<Vector> Polytope::face_vertices(const Face& f) const {
  std::vector<Vector> out;
  for (auto i : f.vertex_indices) out.push_back(impl_->vertices[i]);
  return out;
}

const std::vector<std::vector<std::size_t>>& Polytope::triangulation() const {
  std::call_once(impl_->tri_once, [this] {
    const auto& lat = face_lattice();
    impl_->tri = impl_->triangulate(lat.faces.back().front().mask, impl_->dim);
  });
  return impl_->tri;
}

const std::vector<FacetData>& Polytope::facet_data() const {
  std::call_once(impl_->facet_once, [this] {
    if (!is_full_dimensional()) return;
    const std::size_t n = impl_->n;
    face_lattice();
    for (const auto& f : impl_->facets) {
      FacetData fd;
      fd.normal = f.normal;
      fd.offset = f.offset;
      fd.contains_origin = (f.offset == 0);
      fd.vertex_indices = mask_indices(f.mask, impl_->vertices.size());
      Vector area(n);
      for (const auto& simplex : impl_->triangulate(f.mask, static_cast<int>(n) - 1)) {
        std::vector<Vector> vs;
        for (auto i : simplex) vs.push_back(impl_->vertices[i]);
        Vector a = simplex_area_vector(vs, n);
        if (dot(a, f.normal) < 0) a = -a;
        area += a;
      }
      fd.area_vector = area;
      fd.squared_measure = dot(area, area);
      fd.measure = std::sqrt(fd.squared_measure.get_d());
      const double norm = std::sqrt(dot(f.normal, f.normal).get_d());
      for (std::size_t k = 0; k < n; ++k) fd.unit_normal.push_back(f.normal[k].get_d() / norm);
      fd.unit_offset = f.offset.get_d() / norm;
      impl_->facet_data.push_back(std::move(fd));
    }
  });
  return impl_->facet_data;
}

const std::vector<Vector>& Polytope::surface_atoms() const {
  std::call_once(impl_->atoms_once, [this] {
    const std::size_t n = impl_->n;
    if (is_full_dimensional()) {
      for (const auto& fd : facet_data()) impl_->atoms.push_back(fd.area_vector);
    } else if (impl_->dim + 1 == static_cast<int>(n)) {
      Vector total(n);
      std::optional<Vector> reference;
      for (const auto& simplex : triangulation()) {
        std::vector<Vector> vs;
        for (auto i : simplex) vs.push_back(impl_->vertices[i]);
        Vector a = simplex_area_vector(vs, n);
        if (!reference) reference = a;
        if (dot(a, *reference) < 0) a = -a;
        total += a;
      }
      impl_->atoms.push_back(total);
      impl_->atoms.push_back(-total);
    }
  });
  return impl_->atoms;
}

Rational Polytope::volume() const {
  if (!is_full_dimensional()) return 0;
  const std::size_t n = impl_->n;
  Rational total = 0;
  for (const auto& simplex : triangulation()) {
    std::vector<Vector> rows;
    for (std::size_t k = 1; k < simplex.size(); ++k)
      rows.push_back(impl_->vertices[simplex[k]] - impl_->vertices[simplex[0]]);
    total += abs(determinant(Matrix::from_rows(rows)));
  }
  return total / factorial(n);
}

Rational Polytope::chart_volume() const {
  if (impl_->dim == 0) return 1;
  Rational total = 0;
  for (const auto& simplex : triangulation()) {
    std::vector<Vector> rows;
    const Vector base = impl_->chart(impl_->vertices[simplex[0]]);
    for (std::size_t k = 1; k < simplex.size(); ++k) rows.push_back(impl_->chart(impl_->vertices[simplex[k]]) - base);
    total += abs(determinant(Matrix::from_rows(rows)));
  }
  return total / factorial(static_cast<std::size_t>(impl_->dim));
}

Polytope Polytope::reflected() const {
  std::vector<Vector> vs;
  for (const auto& v : impl_->vertices) vs.push_back(-v);
  return hull(vs);
}

Polytope Polytope::scaled(const Rational& s) const {
  if (s < 0) throw Error(ErrorCode::kDomainViolation, "negative dilation factor");
  std::vector<Vector> vs;
  for (const auto& v : impl_->vertices) vs.push_back(s * v);
  return hull(vs);
}

bool operator==(const Polytope& a, const Polytope& b) {
  return a.ambient_dim() == b.ambient_dim() && a.vertices() == b.vertices();
}

// ---------------------------------------------------------------------------

Polytope apply_linear(const Polytope& p, const LinearMap& a) {
  if (a.dim() != p.ambient_dim()) throw Error(ErrorCode::kDimensionMismatch, "map and polytope dimensions");
  if (a.det() == 0) throw Error(ErrorCode::kSingularMap, "linear image under a singular map");
  std::vector<Vector> vs;
  for (const auto& v : p.vertices()) vs.push_back(a.apply(v));
  return Polytope::hull(vs);
}

std::vector<std::vector<double>> apply_linear(const Polytope& p, const FloatMap& a) {
  if (a.dim() != p.ambient_dim()) throw Error(ErrorCode::kDimensionMismatch, "map and polytope dimensions");
  if (a.det() == 0.0) throw Error(ErrorCode::kSingularMap, "linear image under a singular map");
  std::vector<std::vector<double>> out;
  for (const auto& v : p.vertices()) out.push_back(a.apply(v.to_double()));
  return out;
}

namespace {

void check_phi_args(int kind, const Rational& lambda, std::size_t n) {
  if (kind < 1 || kind > 4) throw Error(ErrorCode::kDomainViolation, "transform kind must be 1..4");
  if (!(lambda > 0 && lambda < 1)) throw Error(ErrorCode::kDomainViolation, "lambda must lie in (0, 1)");
  if (n < 3 || n > kMaxAmbientDim) throw Error(ErrorCode::kDimensionOutOfRange, "transforms need 3 <= n <= 5");
}

}  // namespace

LinearMap transform_phi_unscaled(int kind, const Rational& lambda, std::size_t n) {
  check_phi_args(kind, lambda, n);
  Matrix m = Matrix::identity(n);
  const Rational mu = 1 - lambda;
  // Column j holds the image of e_j.
  if (kind == 1 || kind == 3) {
    m(0, 0) = lambda;
    m(1, 0) = mu;
  } else {
    m(0, 1) = lambda;
    m(1, 1) = mu;
  }
  if (kind == 1) m(n - 1, n - 1) = 1 / lambda;
  if (kind == 2) m(n - 1, n - 1) = 1 / mu;
  return LinearMap(std::move(m));
}

LinearMap transform_phi(int kind, const Rational& lambda, std::size_t n) {
  if (kind == 3 || kind == 4) {
    throw Error(ErrorCode::kDomainViolation, "phi_3 and phi_4 have irrational entries; use transform_phi_float");
  }
  return transform_phi_unscaled(kind, lambda, n);
}

FloatMap transform_phi_float(int kind, const Rational& lambda, std::size_t n) {
  FloatMap base = FloatMap::from(transform_phi_unscaled(kind, lambda, n));
  if (kind == 1 || kind == 2) return base;
  const double l = lambda.get_d();
  const double factor = std::pow(kind == 3 ? 1.0 / l : 1.0 / (1.0 - l), 1.0 / static_cast<double>(n));
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = factor * base(i, j);
  return FloatMap(n, std::move(a));
}

Vector h_lambda_normal(const Rational& lambda, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kDimensionOutOfRange, "H_lambda needs n >= 2");
  Vector u(n);
  u[0] = 1 - lambda;
  u[1] = -lambda;
  return u;
}

SplitCase halfspace_split(const Polytope& p, const Vector& normal) {
  if (normal.size() != p.ambient_dim()) throw Error(ErrorCode::kDimensionMismatch, "split normal");
  if (normal.is_zero()) throw Error(ErrorCode::kDomainViolation, "zero split normal");
  const auto& vs = p.vertices();
  std::vector<Rational> s(vs.size());
  std::vector<Vector> plus, minus, cut;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    s[i] = dot(vs[i], normal);
    const int sg = sgn(s[i]);
    if (sg > 0) plus.push_back(vs[i]);
    else if (sg < 0) minus.push_back(vs[i]);
    else cut.push_back(vs[i]);
  }
  const bool degenerate = plus.empty() || minus.empty();
  if (!degenerate) {
    for (const auto& edge : p.faces(1)) {
      const std::size_t a = edge.vertex_indices[0], b = edge.vertex_indices[1];
      if (sgn(s[a]) * sgn(s[b]) >= 0) continue;
      const Rational t = s[a] / (s[a] - s[b]);
      cut.push_back(vs[a] + t * (vs[b] - vs[a]));
    }
  }
  plus.insert(plus.end(), cut.begin(), cut.end());
  minus.insert(minus.end(), cut.begin(), cut.end());
  return SplitCase{p, normal, Polytope::hull(plus), Polytope::hull(minus), Polytope::hull(cut), degenerate};
}

Polytope standard_simplex(std::size_t d, std::size_t n, const Rational& s) {
  if (d < 1 || d > n) throw Error(ErrorCode::kDimensionOutOfRange, "simplex dimension must be in 1..n");
  if (s <= 0) throw Error(ErrorCode::kDomainViolation, "simplex scale must be positive");
  std::vector<Vector> vs{Vector(n)};
  for (std::size_t i = 0; i < d; ++i) vs.push_back(s * Vector::unit(n, i));
  return Polytope::hull(vs);
}

Polytope hat_simplex(std::size_t k, std::size_t n, const Rational& s) {
  if (k < 1 || k + 1 > n) throw Error(ErrorCode::kDimensionOutOfRange, "hat simplex dimension must be in 1..n-1");
  if (s <= 0) throw Error(ErrorCode::kDomainViolation, "simplex scale must be positive");
  std::vector<Vector> vs{Vector(n), s * Vector::unit(n, 0)};
  for (std::size_t i = 2; i <= k; ++i) vs.push_back(s * Vector::unit(n, i));
  return Polytope::hull(vs);
}

Polytope box(const std::vector<Rational>& lo, const std::vector<Rational>& hi) {
  const std::size_t n = lo.size();
  if (hi.size() != n) throw Error(ErrorCode::kDimensionMismatch, "box bounds");
  std::vector<Vector> vs;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (bits >> i & 1) ? hi[i] : lo[i];
    vs.push_back(std::move(v));
  }
  return Polytope::hull(vs);
}

std::vector<Vector> orthogonalize(const std::vector<Vector>& basis) {
  std::vector<Vector> out;
  for (const auto& b : basis) {
    Vector w = b;
    for (const auto& q : out) w -= (dot(b, q) / dot(q, q)) * q;
    if (w.is_zero()) throw Error(ErrorCode::kDegenerateBasis, "basis vectors are linearly dependent");
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

Vector project_onto(const Vector& x, const std::vector<Vector>& orth) {
  Vector y(x.size());
  for (const auto& q : orth) y += (dot(x, q) / dot(q, q)) * q;
  return y;
}

}  // namespace

Polytope project(const Polytope& p, const std::vector<Vector>& basis) {
  if (basis.empty()) throw Error(ErrorCode::kDegenerateBasis, "empty basis");
  for (const auto& b : basis) {
    if (b.size() != p.ambient_dim()) throw Error(ErrorCode::kDimensionMismatch, "basis vector dimension");
  }
  const auto orth = orthogonalize(basis);
  std::vector<Vector> vs;
  for (const auto& v : p.vertices()) vs.push_back(project_onto(v, orth));
  return Polytope::hull(vs);
}

Vector project_vector(const Vector& x, const Polytope& p) {
  if (x.size() != p.ambient_dim()) throw Error(ErrorCode::kDimensionMismatch, "projected vector");
  if (p.dim() == 0) return Vector(x.size());
  return project_onto(x, orthogonalize(p.linear_basis()));
}

bool union_is_convex(const Polytope& k, const Polytope& l) {
  std::vector<Vector> pts = k.vertices();
  pts.insert(pts.end(), l.vertices().begin(), l.vertices().end());
  const Polytope h = Polytope::hull(pts);
  if (h.dim() == 0) return true;
  Rational parts = 0;
  if (k.dim() == h.dim()) parts += k.chart_volume();
  if (l.dim() == h.dim()) parts += l.chart_volume();
  return parts == h.chart_volume();
}

double vertex_set_distance(const std::vector<std::vector<double>>& a,
                           const std::vector<std::vector<double>>& b) {
  auto one_way = [](const auto& from, const auto& to) {
    double worst = 0.0;
    for (const auto& x : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& y : to) {
        double d2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
        best = std::min(best, std::sqrt(d2));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

std::vector<std::vector<double>> to_double(const std::vector<Vector>& vs) {
  std::vector<std::vector<double>> out;
  for (const auto& v : vs) out.push_back(v.to_double());
  return out;
}

}  // namespace minkval
