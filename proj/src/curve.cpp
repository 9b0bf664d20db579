#include "ncurve/curve.hpp"

#include <algorithm>

#include "ncurve/error.hpp"

namespace ncurve {

CurveMap::CurveMap(Field field, std::vector<HomPoly> components)
    : field_(field), components_(std::move(components)) {
  if (components_.size() < 3) {
    throw Error(ErrorCode::DegreeMismatch, "a curve needs at least 3 components (n >= 2)");
  }
  const int e = components_.front().degree();
  if (e < 1) throw Error(ErrorCode::DegreeMismatch, "curve degree must be at least 1");
  for (const auto& c : components_) {
    if (c.degree() != e) throw Error(ErrorCode::DegreeMismatch, "components must share a degree");
  }
  if (std::all_of(components_.begin(), components_.end(),
                  [](const HomPoly& c) { return c.is_zero(); })) {
    throw Error(ErrorCode::DegreeMismatch, "all components are zero");
  }
}

JacobianMatrix jacobian(const CurveMap& f) {
  JacobianMatrix j;
  for (const auto& c : f.components()) {
    j.ds.push_back(partial(c, Var::S));
    j.dt.push_back(partial(c, Var::T));
  }
  return j;
}

bool is_basepoint_free(const CurveMap& f) {
  HomPoly g = f[0];
  bool started = false;
  for (const auto& c : f.components()) {
    if (c.is_zero()) continue;
    g = started ? hom_gcd(g, c) : make_monic(c);
    started = true;
    if (g.degree() == 0) return true;
  }
  return g.degree() == 0;
}

bool is_nondegenerate(const CurveMap& f) {
  const Field& F = f.field();
  Matrix m(F, static_cast<std::size_t>(f.n() + 1), static_cast<std::size_t>(f.e() + 1));
  for (int i = 0; i <= f.n(); ++i) {
    for (int k = 0; k <= f.e(); ++k) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = f[i][k];
  }
  return rank(m) == static_cast<std::size_t>(f.n() + 1);
}

bool is_unramified(const CurveMap& f) {
  const JacobianMatrix j = jacobian(f);
  const int cols = f.n() + 1;
  bool have = false;
  HomPoly g(f.field(), 0);
  for (int a = 0; a < cols; ++a) {
    for (int b = a + 1; b < cols; ++b) {
      const HomPoly minor = poly_sub(poly_mul(j.ds[static_cast<std::size_t>(a)], j.dt[static_cast<std::size_t>(b)]),
                                     poly_mul(j.ds[static_cast<std::size_t>(b)], j.dt[static_cast<std::size_t>(a)]));
      if (minor.is_zero()) continue;
      g = have ? hom_gcd(g, minor) : make_monic(minor);
      have = true;
      if (g.degree() == 0) return true;
    }
  }
  return false;
}

CurveMap apply_ambient(const CurveMap& f, const Matrix& m) {
  const Field& F = f.field();
  const auto N = static_cast<std::size_t>(f.n() + 1);
  if (m.rows() != N || m.cols() != N) {
    throw Error(ErrorCode::DegreeMismatch, "ambient matrix must be (n+1)x(n+1)");
  }
  if (F.is_zero(determinant(m))) throw Error(ErrorCode::SingularMatrix, "ambient transformation");
  std::vector<HomPoly> out;
  out.reserve(N);
  for (std::size_t i = 0; i < N; ++i) {
    HomPoly acc(F, f.e());
    for (std::size_t j = 0; j < N; ++j) {
      if (F.is_zero(m.at(i, j))) continue;
      acc = poly_add(acc, poly_scale(f[static_cast<int>(j)], m.at(i, j)));
    }
    out.push_back(std::move(acc));
  }
  return CurveMap(F, std::move(out));
}

CurveMap apply_reparam(const CurveMap& f, const Mat2& g) {
  std::vector<HomPoly> out;
  out.reserve(f.components().size());
  for (const auto& c : f.components()) out.push_back(reparameterize(c, g));
  return CurveMap(f.field(), std::move(out));
}

CurveMap random_curve(const Field& field, int n, int e, std::mt19937_64& rng) {
  std::vector<HomPoly> comps;
  for (int i = 0; i <= n; ++i) comps.push_back(random_hompoly(field, e, rng));
  return CurveMap(field, std::move(comps));
}

}  // namespace ncurve
