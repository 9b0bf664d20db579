#include "ncurve/syzygy.hpp"

#include <algorithm>

#include "ncurve/error.hpp"

namespace ncurve {

namespace {

enum class KernelKind { Normal, Tangent };

std::size_t idx(int entry, int mono, int b) {
  return static_cast<std::size_t>(entry * (b + 1) + mono);
}

// a -> sum a_i f_i on degree-b tuples; rows are the b+e+1 coefficients.
Matrix euler_matrix(const CurveMap& f, int b) {
  const int e = f.e(), N = f.n() + 1;
  Matrix m(f.field(), static_cast<std::size_t>(b + e + 1), static_cast<std::size_t>(N * (b + 1)));
  for (int i = 0; i < N; ++i) {
    for (int l = 0; l <= e; ++l) {
      const FieldElem& c = f[i][l];
      if (f.field().is_zero(c)) continue;
      for (int mono = 0; mono <= b; ++mono) m.at(static_cast<std::size_t>(mono + l), idx(i, mono, b)) = c;
    }
  }
  return m;
}

Vec shift_vector(const Field& F, const Vec& v, int N, int b_from, int t_shift) {
  const int b_to = b_from + 1;
  Vec out(static_cast<std::size_t>(N * (b_to + 1)), F.zero());
  for (int i = 0; i < N; ++i) {
    for (int mono = 0; mono <= b_from; ++mono) {
      out[idx(i, mono + t_shift, b_to)] = v[idx(i, mono, b_from)];
    }
  }
  return out;
}

KernelProfile kernel_profile(const CurveMap& f, KernelKind kind, bool want_generators) {
  if (!is_basepoint_free(f)) {
    throw Error(ErrorCode::DegenerateInput, "the components have a common factor (base point)");
  }
  const Field& F = f.field();
  const int N = f.n() + 1, e = f.e();
  const int target = kind == KernelKind::Normal ? f.n() - 1 : f.n();
  const int bound = kind == KernelKind::Normal ? std::max(2 * e - 2, 1) : e;

  KernelProfile prof;
  std::vector<int> twists;
  std::vector<Vec> prev_basis;
  int count = 0;
  for (int b = 0; b <= bound && count < target; ++b) {
    const Matrix m = kind == KernelKind::Normal ? relation_matrix(f, b) : euler_matrix(f, b);
    std::vector<Vec> basis;
    int r = 0;
    if (want_generators) {
      basis = nullspace(m);
      r = static_cast<int>(basis.size());
    } else {
      r = static_cast<int>(nullity(m));
    }
    prof.dims.push_back(r);
    const int r1 = b >= 1 ? prof.dims[static_cast<std::size_t>(b - 1)] : 0;
    const int r2 = b >= 2 ? prof.dims[static_cast<std::size_t>(b - 2)] : 0;
    const int g = r - 2 * r1 + r2;
    if (kind == KernelKind::Normal && b == 1 && (prof.dims[0] > 0 || r > 0) && !is_nondegenerate(f)) {
      throw Error(ErrorCode::DegenerateInput, "low-degree relations on a degenerate curve");
    }
    if (g < 0) {
      throw Error(ErrorCode::NonFreeProfile, "negative generator count at degree " + std::to_string(b));
    }
    if (want_generators && g > 0) {
      IncrementalBasis span(F, static_cast<std::size_t>(N * (b + 1)));
      for (const Vec& v : prev_basis) {
        span.insert(shift_vector(F, v, N, b - 1, 0));
        span.insert(shift_vector(F, v, N, b - 1, 1));
      }
      int chosen = 0;
      for (const Vec& v : basis) {
        if (chosen == g) break;
        if (span.insert(v)) {
          prof.generators.push_back(vector_to_relation(F, v, f.n(), b));
          ++chosen;
        }
      }
      if (chosen != g) {
        throw Error(ErrorCode::NonFreeProfile, "generator count mismatch at degree " + std::to_string(b));
      }
    }
    for (int k = 0; k < g; ++k) twists.push_back(b);
    count += g;
    if (want_generators) prev_basis = std::move(basis);
  }
  if (count != target) {
    throw Error(ErrorCode::NonFreeProfile, "found " + std::to_string(count) + " generators, expected " +
                                               std::to_string(target));
  }
  prof.splitting = SplittingType::sorted(e, std::move(twists));
  if (kind == KernelKind::Normal && is_unramified(f) && prof.splitting.total() != 2 * e - 2) {
    throw Error(ErrorCode::NonFreeProfile, "twists of an unramified curve must sum to 2e-2");
  }
  if (kind == KernelKind::Tangent && prof.splitting.total() != e) {
    throw Error(ErrorCode::NonFreeProfile, "tangent twists must sum to e");
  }
  return prof;
}

HomPoly pairing(const std::vector<HomPoly>& a, const std::vector<HomPoly>& b) {
  HomPoly acc(a.front().field(), a.front().degree() + b.front().degree());
  for (std::size_t i = 0; i < a.size(); ++i) acc = poly_add(acc, poly_mul(a[i], b[i]));
  return acc;
}

std::vector<HomPoly> partials_of(const Relation& a, Var v) {
  std::vector<HomPoly> out;
  for (const auto& x : a.entries) out.push_back(partial(x, v));
  return out;
}

void check_shape(const CurveMap& f, const Relation& a) {
  if (a.n() != f.n()) throw Error(ErrorCode::DegreeMismatch, "relation length differs from n+1");
  if (!(a.field() == f.field())) throw Error(ErrorCode::DegreeMismatch, "relation over another field");
  for (const auto& x : a.entries) {
    if (x.degree() != a.degree) throw Error(ErrorCode::DegreeMismatch, "relation entries of unequal degree");
  }
}

}  // namespace

Relation Relation::from_entries(std::vector<HomPoly> entries) {
  if (entries.empty()) throw Error(ErrorCode::DegreeMismatch, "empty relation");
  const int b = entries.front().degree();
  bool all_zero = true;
  for (const auto& x : entries) {
    if (x.degree() != b) throw Error(ErrorCode::DegreeMismatch, "relation entries of unequal degree");
    all_zero = all_zero && x.is_zero();
  }
  if (all_zero) throw Error(ErrorCode::DegenerateInput, "zero relation");
  return Relation{b, std::move(entries)};
}

SplittingType SplittingType::sorted(int baseline, std::vector<int> twists) {
  std::sort(twists.begin(), twists.end());
  return SplittingType{baseline, std::move(twists)};
}

int SplittingType::total() const {
  int s = 0;
  for (int b : twists) s += b;
  return s;
}

bool SplittingType::is_balanced() const {
  return twists.empty() || twists.back() - twists.front() <= 1;
}

Vec relation_to_vector(const Relation& a) {
  Vec v;
  v.reserve(a.entries.size() * static_cast<std::size_t>(a.degree + 1));
  for (const auto& x : a.entries) v.insert(v.end(), x.coeffs().begin(), x.coeffs().end());
  return v;
}

Relation vector_to_relation(const Field& field, const Vec& v, int n, int degree) {
  std::vector<HomPoly> entries;
  for (int i = 0; i <= n; ++i) {
    HomPoly p(field, degree);
    for (int m = 0; m <= degree; ++m) p.set(m, v[idx(i, m, degree)]);
    entries.push_back(std::move(p));
  }
  return Relation::from_entries(std::move(entries));
}

Relation shift_relation(const Relation& a, int s_exp, int t_exp) {
  const HomPoly mono = HomPoly::monomial(a.field(), s_exp, t_exp, 1);
  std::vector<HomPoly> entries;
  for (const auto& x : a.entries) entries.push_back(poly_mul(x, mono));
  return Relation{a.degree + s_exp + t_exp, std::move(entries)};
}

Matrix relation_matrix(const CurveMap& f, int b) {
  const int e = f.e(), N = f.n() + 1;
  const JacobianMatrix jac = jacobian(f);
  const auto half = static_cast<std::size_t>(b + e);
  Matrix m(f.field(), 2 * half, static_cast<std::size_t>(N * (b + 1)));
  for (int i = 0; i < N; ++i) {
    const HomPoly& ds = jac.ds[static_cast<std::size_t>(i)];
    const HomPoly& dt = jac.dt[static_cast<std::size_t>(i)];
    for (int l = 0; l < e; ++l) {
      for (int mono = 0; mono <= b; ++mono) {
        const auto row = static_cast<std::size_t>(mono + l);
        m.at(row, idx(i, mono, b)) = ds[l];
        m.at(half + row, idx(i, mono, b)) = dt[l];
      }
    }
  }
  return m;
}

int relation_space_dim(const CurveMap& f, int b) {
  return static_cast<int>(nullity(relation_matrix(f, b)));
}

std::vector<Relation> relation_basis(const CurveMap& f, int b) {
  std::vector<Relation> out;
  for (const Vec& v : nullspace(relation_matrix(f, b))) {
    out.push_back(vector_to_relation(f.field(), v, f.n(), b));
  }
  return out;
}

KernelProfile normal_profile(const CurveMap& f) { return kernel_profile(f, KernelKind::Normal, false); }

SplittingType normal_splitting(const CurveMap& f) { return normal_profile(f).splitting; }

std::vector<Relation> minimal_generators(const CurveMap& f) {
  return kernel_profile(f, KernelKind::Normal, true).generators;
}

KernelProfile tangent_profile(const CurveMap& f) { return kernel_profile(f, KernelKind::Tangent, false); }

SplittingType tangent_splitting(const CurveMap& f) { return tangent_profile(f).splitting; }

bool verify_relation(const CurveMap& f, const Relation& a) {
  check_shape(f, a);
  const JacobianMatrix jac = jacobian(f);
  return pairing(a.entries, jac.ds).is_zero() && pairing(a.entries, jac.dt).is_zero();
}

bool dual_relation_check(const CurveMap& f, const Relation& a) {
  if (!verify_relation(f, a)) {
    throw Error(ErrorCode::HypothesisViolated, "dual_relation_check needs a relation of f");
  }
  if (!pairing(a.entries, f.components()).is_zero()) {
    throw Error(ErrorCode::LemmaViolation, "sum a_i f_i does not vanish");
  }
  if (a.degree == 0) return true;  // partials of constants vanish
  if (!pairing(f.components(), partials_of(a, Var::S)).is_zero() ||
      !pairing(f.components(), partials_of(a, Var::T)).is_zero()) {
    throw Error(ErrorCode::LemmaViolation, "sum f_i d a_i does not vanish");
  }
  return true;
}

std::string_view conic_class_name(ConicClass c) {
  switch (c) {
    case ConicClass::SmoothConic: return "SmoothConic";
    case ConicClass::DoubleLine: return "DoubleLine";
    case ConicClass::CommonRootDegenerate: return "CommonRootDegenerate";
  }
  return "?";
}

Matrix fiber_matrix(const std::vector<Relation>& relations, int n, int e) {
  if (relations.empty()) throw Error(ErrorCode::DegreeMismatch, "no relations given");
  const Field& F = relations.front().field();
  std::size_t rows = 0;
  for (const auto& a : relations) {
    if (a.n() != n) throw Error(ErrorCode::DegreeMismatch, "relation length differs from n+1");
    for (const auto& x : a.entries) {
      if (x.degree() != a.degree) throw Error(ErrorCode::DegreeMismatch, "relation entries of unequal degree");
    }
    rows += 2 * static_cast<std::size_t>(a.degree + e);
  }
  Matrix m(F, rows, static_cast<std::size_t>((n + 1) * (e + 1)));
  std::size_t base = 0;
  for (const auto& a : relations) {
    const auto half = static_cast<std::size_t>(a.degree + e);
    for (int j = 0; j <= n; ++j) {
      const HomPoly& aj = a.entries[static_cast<std::size_t>(j)];
      for (int mono = 0; mono <= a.degree; ++mono) {
        if (F.is_zero(aj[mono])) continue;
        for (int l = 0; l <= e; ++l) {
          const auto col = static_cast<std::size_t>(j * (e + 1) + l);
          // d/ds s^(e-l) t^l lands at index l of degree e-1, d/dt at l-1.
          if (l < e) {
            FieldElem& x = m.at(base + static_cast<std::size_t>(mono + l), col);
            x = F.add(x, F.mul(aj[mono], F.from_int(e - l)));
          }
          if (l > 0) {
            FieldElem& y = m.at(base + half + static_cast<std::size_t>(mono + l - 1), col);
            y = F.add(y, F.mul(aj[mono], F.from_int(l)));
          }
        }
      }
    }
    base += 2 * half;
  }
  return m;
}

int coefficient_span_rank(const Relation& a) {
  const Field& F = a.field();
  Matrix m(F, static_cast<std::size_t>(a.degree + 1), a.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    for (int k = 0; k <= a.degree; ++k) m.at(static_cast<std::size_t>(k), i) = a.entries[i][k];
  }
  return static_cast<int>(rank(m));
}

ConicClass classify_degree2_relation(const Relation& a) {
  if (a.degree != 2) throw Error(ErrorCode::DegreeMismatch, "classification needs a degree-2 relation");
  bool have = false;
  HomPoly g(a.field(), 0);
  for (const auto& x : a.entries) {
    if (x.is_zero()) continue;
    g = have ? hom_gcd(g, x) : make_monic(x);
    have = true;
  }
  if (g.degree() > 0) return ConicClass::CommonRootDegenerate;
  // Without a common root a rank-2 span gives a base-point-free pencil
  // (p1 : p2) of quadrics, i.e. a 2:1 map onto a line.
  return coefficient_span_rank(a) <= 2 ? ConicClass::DoubleLine : ConicClass::SmoothConic;
}

}  // namespace ncurve
