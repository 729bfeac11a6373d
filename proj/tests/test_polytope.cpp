#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "minkval/errors.hpp"
#include "minkval/polytope.hpp"

using namespace minkval;

namespace {

// Brute force: every n-subset of points spanning a hyperplane that leaves all
// points on one side defines a facet. Returned as sorted (primitive normal,
// offset) pairs.
std::vector<std::pair<Vector, Rational>> brute_facets(const std::vector<Vector>& pts) {
  const std::size_t n = pts[0].size();
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  std::vector<std::pair<Vector, Rational>> out;
  std::vector<std::size_t> idx(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<Vector> rows;
      for (std::size_t k = 1; k < n; ++k) rows.push_back(pts[idx[k]] - pts[idx[0]]);
      Vector a(n);
      if (n == 1) {
        a[0] = 1;
      } else {
        auto ns = nullspace(Matrix::from_rows(rows));
        if (ns.size() != 1) return;
        a = ns[0];
      }
      for (int sign : {1, -1}) {
        Vector u = primitive(Rational(sign) * a);
        Rational c = dot(u, pts[idx[0]]);
        bool ok = true;
        for (const auto& p : pts) {
          if (dot(u, p) > c) { ok = false; break; }
        }
        if (ok && seen.insert({u.coords(), c}).second) out.push_back({u, c});
      }
      return;
    }
    for (std::size_t i = start; i < pts.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vector> brute_vertices(const std::vector<Vector>& pts) {
  const std::size_t n = pts[0].size();
  auto facets = brute_facets(pts);
  std::set<Vector> out;
  for (const auto& p : pts) {
    std::vector<Vector> normals;
    for (const auto& [u, c] : facets)
      if (dot(u, p) == c) normals.push_back(u);
    if (!normals.empty() && rank(Matrix::from_rows(normals)) == n) out.insert(p);
  }
  return {out.begin(), out.end()};
}

std::vector<Vector> random_points(std::mt19937& rng, std::size_t n, std::size_t count, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Vector> pts;
  // a cross-polytope core keeps the origin interior
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(Vector::unit(n, i));
    pts.push_back(-Vector::unit(n, i));
  }
  for (std::size_t k = 0; k < count; ++k) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = d(rng);
    pts.push_back(v);
  }
  return pts;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Hull, MatchesBruteForceFacetsAndVertices) {
  std::mt19937 rng(7);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      auto pts = random_points(rng, n, n == 4 ? 6 : 9, 3);
      Polytope p = convex_hull(pts);
      ASSERT_EQ(p.dim(), static_cast<int>(n));
      EXPECT_EQ(p.vertices(), brute_vertices(pts));
      auto expected = brute_facets(pts);
      std::vector<std::pair<Vector, Rational>> got;
      for (const auto& f : p.facet_data()) got.push_back({f.normal, f.offset});
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(Hull, IdempotentAndDeterministic) {
  std::mt19937 rng(11);
  auto pts = random_points(rng, 3, 12, 4);
  Polytope p = convex_hull(pts);
  Polytope q = convex_hull(p.vertices());
  EXPECT_EQ(p, q);
  std::shuffle(pts.begin(), pts.end(), rng);
  EXPECT_EQ(convex_hull(pts).vertices(), p.vertices());
}

TEST(Hull, Errors) {
  EXPECT_THROW(convex_hull(std::vector<Vector>{}), Error);
  try {
    convex_hull({Vector{1, 1}, Vector{2, 1}, Vector{1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOriginNotContained);
  }
  try {
    convex_hull({Vector{1, 0}, Vector{0, 1}});  // affine hull misses o
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOriginNotContained);
  }
  try {
    convex_hull({Vector{0, 0, 0, 0, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionOutOfRange);
  }
}

TEST(Hull, LowerDimensionalAndOriginPosition) {
  Polytope seg = convex_hull({Vector{-1, -1, 0}, Vector{2, 2, 0}});
  EXPECT_EQ(seg.dim(), 1);
  EXPECT_EQ(seg.origin_position(), OriginPosition::kRelativeInteriorLowerDim);
  EXPECT_TRUE(seg.contains(Vector{1, 1, 0}));
  EXPECT_FALSE(seg.contains(Vector{1, 0, 0}));
  EXPECT_FALSE(seg.contains(Vector{3, 3, 0}));
  EXPECT_TRUE(seg.facet_data().empty());

  Polytope t = standard_simplex(3, 3);
  EXPECT_EQ(t.origin_position(), OriginPosition::kRelativeBoundary);
  Polytope cube = box({-1, -1, -1}, {1, 1, 1});
  EXPECT_EQ(cube.origin_position(), OriginPosition::kInterior);
  EXPECT_EQ(Polytope::origin(3).dim(), 0);
  EXPECT_EQ(hat_simplex(2, 4).vertices(), (std::vector<Vector>{Vector{0, 0, 0, 0}, Vector{0, 0, 1, 0}, Vector{1, 0, 0, 0}}));
}

TEST(FaceLattice, SimplexFaceCounts) {
  for (std::size_t n = 1; n <= 5; ++n) {
    Polytope t = standard_simplex(n, n);
    for (std::size_t j = 0; j <= n; ++j) {
      EXPECT_EQ(t.faces(static_cast<int>(j)).size(), binom(n + 1, j + 1)) << "n=" << n << " j=" << j;
    }
    // faces through o are spanned by o and j of the e_i
    for (std::size_t j = 1; j + 1 <= n; ++j) {
      EXPECT_EQ(t.faces_through_origin(static_cast<int>(j)).size(), binom(n, j));
    }
  }
}

TEST(FaceLattice, CubeAndEuler) {
  Polytope cube = box({-1, -1, -1}, {1, 1, 1});
  EXPECT_EQ(cube.faces(0).size(), 8u);
  EXPECT_EQ(cube.faces(1).size(), 12u);
  EXPECT_EQ(cube.faces(2).size(), 6u);
  EXPECT_TRUE(cube.faces_through_origin(1).empty());
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    Polytope p = convex_hull(random_points(rng, 4, 8, 3));
    long chi = 0;
    for (int j = 0; j < 4; ++j) chi += (j % 2 ? -1 : 1) * static_cast<long>(p.faces(j).size());
    EXPECT_EQ(chi, 0);  // f0 - f1 + f2 - f3 = 1 - (-1)^4
  }
}

TEST(Measures, VolumesAndAreaVectors) {
  EXPECT_EQ(standard_simplex(3, 3, 2).volume(), Rational(4, 3));
  EXPECT_EQ(box({-1, -1, -1, -1}, {1, 1, 1, 1}).volume(), Rational(16));
  Polytope t = standard_simplex(3, 3);
  // closed surface: area vectors sum to zero
  Vector sum(3);
  for (const auto& f : t.facet_data()) sum += f.area_vector;
  EXPECT_TRUE(sum.is_zero());
  bool found = false;
  for (const auto& f : t.facet_data()) {
    if (f.offset != 0) {
      found = true;
      // slanted facet: area sqrt(3)/2, unit normal (1,1,1)/sqrt(3)
      EXPECT_EQ(f.area_vector, Vector(std::vector<Rational>(3, Rational(1, 2))));
      EXPECT_EQ(f.squared_measure, Rational(3, 4));
    }
  }
  EXPECT_TRUE(found);

  // Divergence theorem: n vol = sum h(u) area = sum offset/|normal| * |A|.
  std::mt19937 rng(5);
  Polytope p = convex_hull(random_points(rng, 3, 10, 3));
  Rational total = 0;
  for (const auto& f : p.facet_data()) total += dot(f.area_vector, f.normal) / dot(f.normal, f.normal) * f.offset;
  EXPECT_EQ(total, 3 * p.volume());

  Polytope flat = standard_simplex(2, 3);
  ASSERT_EQ(flat.surface_atoms().size(), 2u);
  EXPECT_EQ(flat.surface_atoms()[0] + flat.surface_atoms()[1], Vector(3));
  EXPECT_EQ(dot(flat.surface_atoms()[0], flat.surface_atoms()[0]), Rational(1, 4));
  EXPECT_TRUE(standard_simplex(1, 3).surface_atoms().empty());
}

TEST(Triangulation, CoversVolume) {
  std::mt19937 rng(9);
  for (std::size_t n = 2; n <= 4; ++n) {
    Polytope p = convex_hull(random_points(rng, n, 7, 3));
    // every simplex is full-dimensional and simplices cover vol exactly once
    Rational sum = 0;
    for (const auto& s : p.triangulation()) {
      ASSERT_EQ(s.size(), n + 1);
      std::vector<Vector> rows;
      for (std::size_t k = 1; k <= n; ++k) rows.push_back(p.vertices()[s[k]] - p.vertices()[s[0]]);
      Rational d = abs(determinant(Matrix::from_rows(rows)));
      EXPECT_NE(d, 0);
      sum += d;
    }
    // Monte-Carlo-free check: volume via facets (divergence theorem)
    Rational div = 0;
    for (const auto& f : p.facet_data()) div += dot(f.area_vector, f.normal) / dot(f.normal, f.normal) * f.offset;
    Rational fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<long>(k);
    EXPECT_EQ(sum / fact * static_cast<long>(n), div);
  }
}

TEST(Transforms, PhiMapsAndSplit) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (Rational lam : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
      EXPECT_TRUE(transform_phi(1, lam, n).is_sl());
      EXPECT_TRUE(transform_phi(2, lam, n).is_sl());
      EXPECT_NEAR(transform_phi_float(3, lam, n).det(), 1.0, 1e-12);
      EXPECT_NEAR(transform_phi_float(4, lam, n).det(), 1.0, 1e-12);
      Vector u = h_lambda_normal(lam, n);
      for (std::size_t d = 2; d + 1 <= n; ++d) {
        Polytope t = standard_simplex(d, n);
        SplitCase s = halfspace_split(t, u);
        EXPECT_FALSE(s.degenerate);
        EXPECT_EQ(s.minus, apply_linear(t, transform_phi(1, lam, n)));
        EXPECT_EQ(s.plus, apply_linear(t, transform_phi(2, lam, n)));
        EXPECT_TRUE(union_is_convex(s.plus, s.minus));
      }
      Polytope tn = standard_simplex(n, n);
      SplitCase s = halfspace_split(tn, u);
      // T^n cap H^- = phi_3 lambda^(1/n) T^n, i.e. the unscaled phi_3 image
      EXPECT_EQ(s.minus, apply_linear(tn, transform_phi_unscaled(3, lam, n)));
      EXPECT_EQ(s.plus, apply_linear(tn, transform_phi_unscaled(4, lam, n)));
      EXPECT_EQ(s.plus.volume() + s.minus.volume(), tn.volume());
    }
  }
  EXPECT_THROW(transform_phi(1, Rational(1, 2), 2), Error);
  EXPECT_THROW(transform_phi(1, Rational(1), 3), Error);
}

TEST(Split, DegenerateAndNonConvexUnion) {
  Polytope t = standard_simplex(2, 2);
  SplitCase s = halfspace_split(t, Vector{1, 1});
  EXPECT_TRUE(s.degenerate);
  EXPECT_EQ(s.plus, t);
  EXPECT_EQ(s.minus, Polytope::origin(2));
  Polytope a = convex_hull({Vector{0, 0}, Vector{1, 0}, Vector{0, 1}});
  Polytope b = convex_hull({Vector{0, 0}, Vector{-1, 0}, Vector{-1, -1}});
  EXPECT_FALSE(union_is_convex(a, b));
}

TEST(Projection, OntoSubspaces) {
  Polytope cube = box({-1, -1, -1}, {1, 1, 1});
  Polytope sq = project(cube, {Vector{1, 0, 0}, Vector{0, 1, 0}});
  EXPECT_EQ(sq, box({-1, -1, 0}, {1, 1, 0}));
  EXPECT_THROW(project(cube, {Vector{1, 0, 0}, Vector{2, 0, 0}}), Error);
  Polytope seg = convex_hull({Vector{-1, -1, 0}, Vector{1, 1, 0}});
  EXPECT_EQ(project_vector(Vector{1, 0, 5}, seg), Vector(std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0}));
}
