#include "hull.hpp"

#include "minkval/errors.hpp"

namespace minkval::detail {

namespace {

struct Ray {
  Vector w;         // (a, c) in R^{r+1}: the inequality a . y <= c
  VertexMask zero;  // processed constraints tight on this ray
};

}  // namespace

// Double description: the facets of conv(Q) are the extreme rays of the cone
// {(a, c) : c - a . q >= 0 for all q in Q}.
ChartHull hull_full_dim(const std::vector<Vector>& points) {
  const std::size_t m = points.size();
  if (m == 0) throw Error(ErrorCode::kEmptyInput, "hull of no points");
  if (m > kMaxHullPoints) throw Error(ErrorCode::kDomainViolation, "too many hull points");
  const std::size_t r = points[0].size();
  const std::size_t dim = r + 1;

  std::vector<Vector> g(m, Vector(dim));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < r; ++k) g[i][k] = -points[i][k];
    g[i][r] = 1;
  }

  // Pick r + 1 independent constraints: pivot columns of G^T.
  Matrix gt = Matrix::from_columns(g);
  const auto basis_ids = row_reduce(gt);
  if (basis_ids.size() != dim) throw Error(ErrorCode::kDomainViolation, "points do not span the chart");

  std::vector<Vector> brows;
  for (auto i : basis_ids) brows.push_back(g[i]);
  const auto binv = inverse(Matrix::from_rows(brows));
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    Ray ray{primitive(binv->col(k)), {}};
    for (std::size_t j = 0; j < dim; ++j) {
      if (j != k) ray.zero.set(basis_ids[j]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (auto i : basis_ids) processed[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<Rational> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(g[i], rays[k].w);
      const int sg = sgn(s[k]);
      if (sg > 0) pos.push_back(k);
      else if (sg < 0) neg.push_back(k);
      else rays[k].zero.set(i);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    next.reserve(rays.size() + pos.size() * neg.size());
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (sgn(s[k]) >= 0) next.push_back(rays[k]);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        VertexMask common = rays[p].zero & rays[q].zero;
        common.reset(i);
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if ((rays[t].zero & common) == common) adjacent = false;
        }
        if (!adjacent) continue;
        Vector w = s[p] * rays[q].w - s[q] * rays[p].w;
        common.set(i);
        next.push_back(Ray{primitive(w), common});
      }
    }
    rays = std::move(next);
  }

  ChartHull out;
  for (auto& ray : rays) {
    HalfSpace h;
    h.normal = Vector(r);
    for (std::size_t k = 0; k < r; ++k) h.normal[k] = ray.w[k];
    h.offset = ray.w[r];
    h.mask = ray.zero;
    out.facets.push_back(std::move(h));
  }

  for (std::size_t i = 0; i < m; ++i) {
    VertexMask meet;
    meet.set();
    bool on_boundary = false;
    for (const auto& f : out.facets) {
      if (f.mask.test(i)) {
        meet &= f.mask;
        on_boundary = true;
      }
    }
    if (on_boundary && meet.count() == 1) out.vertex_ids.push_back(i);
  }
  return out;
}

}  // namespace minkval::detail
