#include "ncurve/strata.hpp"

#include <algorithm>
#include <functional>

#include "ncurve/error.hpp"

namespace ncurve {

namespace {

std::vector<HomPoly> partials_of(const Relation& a, Var v) {
  std::vector<HomPoly> out;
  for (const auto& x : a.entries) out.push_back(partial(x, v));
  return out;
}

bool all_zero(const std::vector<HomPoly>& u) {
  return std::all_of(u.begin(), u.end(), [](const HomPoly& p) { return p.is_zero(); });
}

// u = g v for a single nonzero form g.
bool multiple_of(const std::vector<HomPoly>& u, const std::vector<HomPoly>& v) {
  if (u.size() != v.size() || u.front().degree() < v.front().degree()) return false;
  if (all_zero(u) || all_zero(v)) return false;
  std::optional<HomPoly> g;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    g = exact_divide(u[i], v[i]);
    break;
  }
  if (!g) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(poly_mul(*g, v[i]) == u[i])) return false;
  }
  return true;
}

bool proportional(const std::vector<HomPoly>& u, const std::vector<HomPoly>& v) {
  return multiple_of(u, v) || multiple_of(v, u);
}

Matrix coefficient_rows(const Relation& a) {
  Matrix m(a.field(), static_cast<std::size_t>(a.degree + 1), a.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    for (int k = 0; k <= a.degree; ++k) m.at(static_cast<std::size_t>(k), i) = a.entries[i][k];
  }
  return m;
}

Relation reparam_relation(const Relation& a, const Mat2& g) {
  std::vector<HomPoly> entries;
  for (const auto& x : a.entries) entries.push_back(reparameterize(x, g));
  return Relation{a.degree, std::move(entries)};
}

}  // namespace

long long h1_end(const SplittingType& E) {
  long long total = 0;
  for (int a : E.twists) {
    for (int b : E.twists) {
      if (b - a >= 2) total += b - a - 1;
    }
  }
  return total;
}

long long dim_mor(int n, int e) { return static_cast<long long>(e + 1) * (n + 1) - 1; }

long long expected_codim_dk(int n, int e, int d, int k) {
  if (2 * e < (d + 1) * (n - 1) - k + 2) {
    throw Error(ErrorCode::AssumptionViolated, "need 2e >= (d+1)(n-1) - k + 2");
  }
  if (k < 0 || k > n - 2) throw Error(ErrorCode::AssumptionViolated, "need 0 <= k <= n-2");
  const long long K = k;
  return K * (2LL * e + d - 1 + k) - static_cast<long long>(d + 1) * n * K;
}

long long expected_codim_dk_d2_form(int n, int e, int d, int k) {
  const long long K = k;
  return K * (2LL * e + 1 + k) - static_cast<long long>(d + 1) * n * K;
}

int fiber_nullity(const std::vector<Relation>& relations, int n, int e) {
  if (relations.empty()) return (e + 1) * (n + 1);
  return static_cast<int>(nullity(fiber_matrix(relations, n, e)));
}

int fiber_dim(const std::vector<Relation>& relations, int n, int e) {
  return fiber_nullity(relations, n, e) - 1;
}

bool parameterized_tangency(const Relation& alpha, const Relation& beta) {
  if (alpha.degree < 1 || beta.degree < 1 || alpha.entries.size() != beta.entries.size()) return false;
  return proportional(partials_of(alpha, Var::S), partials_of(beta, Var::T)) ||
         proportional(partials_of(alpha, Var::T), partials_of(beta, Var::S));
}

bool orbit_tangency_smallfield(const Relation& alpha, const Relation& beta) {
  const Field& F = alpha.field();
  if (!F.is_prime_field() || F.modulus() > 31) {
    throw Error(ErrorCode::FieldTooLarge, "exhaustive PGL2 search needs F_p with p <= 31");
  }
  if (parameterized_tangency(alpha, beta)) return true;
  const auto p = static_cast<long long>(F.modulus());
  auto try_g = [&](long long a, long long b, long long c, long long d) {
    const Mat2 g{F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d)};
    if (F.is_zero(mat2_det(F, g))) return false;
    return parameterized_tangency(reparam_relation(alpha, g), reparam_relation(beta, g));
  };
  // One representative per projective class: a = 1, or a = 0 and b = 1.
  for (long long b = 0; b < p; ++b)
    for (long long c = 0; c < p; ++c)
      for (long long d = 0; d < p; ++d)
        if (try_g(1, b, c, d)) return true;
  for (long long c = 0; c < p; ++c)
    for (long long d = 0; d < p; ++d)
      if (try_g(0, 1, c, d)) return true;
  return false;
}

std::string_view plane_intersection_name(PlaneIntersection p) {
  switch (p) {
    case PlaneIntersection::Disjoint: return "Disjoint";
    case PlaneIntersection::Point: return "Point";
    case PlaneIntersection::Line: return "Line";
    case PlaneIntersection::SamePlane: return "SamePlane";
  }
  return "?";
}

PlaneIntersection plane_intersection_type(const Relation& a1, const Relation& a2) {
  if (a1.degree != 2 || a2.degree != 2 || classify_degree2_relation(a1) != ConicClass::SmoothConic ||
      classify_degree2_relation(a2) != ConicClass::SmoothConic) {
    throw Error(ErrorCode::DegenerateConic, "plane intersection needs two smooth conics");
  }
  const Matrix u = coefficient_rows(a1), v = coefficient_rows(a2);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < 3; ++i) rows.push_back(u.row(i));
  for (std::size_t i = 0; i < 3; ++i) rows.push_back(v.row(i));
  const auto joint = rank(Matrix::from_rows(a1.field(), rows, a1.entries.size()));
  return static_cast<PlaneIntersection>(6 - static_cast<int>(joint));
}

TwoConicDims dims_two_conics(int n, int e) {
  if (n < 5 || e < 2 * n - 3) throw Error(ErrorCode::HypothesisViolated, "need n >= 5 and e >= 2n-3");
  return TwoConicDims{static_cast<long long>(e) * (n - 3) + 7LL * n - 6,
                      static_cast<long long>(e) * (n - 2) + 5LL * n - 3};
}

P4ConicDims p4_conics_dim(int e) {
  if (e < 5) throw Error(ErrorCode::HypothesisViolated, "need e >= 5");
  const long long h1 = h1_end(SplittingType::sorted(e, {2, 2, 2 * e - 6}));
  return P4ConicDims{2LL * e + 18, 5LL * (e + 1) - h1, 2LL * e + 17, dim_mor(4, e) - h1};
}

void describe_relations(const std::vector<Relation>& rels, WitnessReport& out) {
  out.relation_count = static_cast<int>(rels.size());
  out.relation_degree = rels.empty() ? 0 : rels.front().degree;
  out.conic_classes.clear();
  out.plane_matrix.clear();
  out.tangency_pairs = 0;
  out.longest_chain = rels.empty() ? 0 : 1;
  const std::size_t m = rels.size();
  std::vector<bool> smooth(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (rels[i].degree == 2) {
      const ConicClass c = classify_degree2_relation(rels[i]);
      out.conic_classes.emplace_back(conic_class_name(c));
      smooth[i] = c == ConicClass::SmoothConic;
    }
  }
  std::vector<std::vector<bool>> tangent(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (parameterized_tangency(rels[i], rels[j])) {
        tangent[i][j] = tangent[j][i] = true;
        ++out.tangency_pairs;
      }
    }
  }
  // Longest simple path in the tangency graph (m is small).
  std::function<int(std::size_t, std::vector<bool>&)> walk = [&](std::size_t v, std::vector<bool>& seen) {
    int best = 1;
    for (std::size_t w = 0; w < m; ++w) {
      if (!tangent[v][w] || seen[w]) continue;
      seen[w] = true;
      best = std::max(best, 1 + walk(w, seen));
      seen[w] = false;
    }
    return best;
  };
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<bool> seen(m, false);
    seen[v] = true;
    out.longest_chain = std::max(out.longest_chain, walk(v, seen));
  }
  if (out.relation_degree == 2) {
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) row.emplace_back("-");
        else if (smooth[i] && smooth[j]) row.emplace_back(plane_intersection_name(plane_intersection_type(rels[i], rels[j])));
        else row.emplace_back("n/a");
      }
      out.plane_matrix.push_back(std::move(row));
    }
  }
}

StratumReport stratum_report(int n, int e, const SplittingType& b, const std::vector<CurveMap>& witnesses,
                             const std::vector<std::string>& ids) {
  StratumReport rep;
  rep.n = n;
  rep.e = e;
  rep.splitting = b;
  rep.dim_mor = dim_mor(n, e);
  rep.expected_codim = h1_end(b);
  rep.expected_dim = rep.dim_mor - rep.expected_codim;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const CurveMap& f = witnesses[i];
    WitnessReport w;
    w.id = i < ids.size() ? ids[i] : "w" + std::to_string(i);
    try {
      w.basepoint_free = is_basepoint_free(f);
      w.nondegenerate = is_nondegenerate(f);
      w.unramified = is_unramified(f);
      w.splitting = normal_splitting(f);
      w.matches = *w.splitting == b;
      const int low = w.splitting->twists.empty() ? 0 : w.splitting->twists.front();
      describe_relations(relation_basis(f, low), w);
      w.ok = w.basepoint_free && w.nondegenerate && w.unramified && w.matches;
    } catch (const Error& ex) {
      w.ok = false;
      w.error = ex.what();
    }
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

}  // namespace ncurve
