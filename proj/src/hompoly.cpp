#include "ncurve/hompoly.hpp"

#include <algorithm>
#include <cassert>

#include "ncurve/error.hpp"

namespace ncurve {

namespace {

// Univariate helpers over a field, coefficient vector low-to-high, trimmed.
using UPoly = std::vector<FieldElem>;

void trim(const Field& F, UPoly& u) {
  while (!u.empty() && F.is_zero(u.back())) u.pop_back();
}

UPoly urem(const Field& F, UPoly a, const UPoly& b) {
  assert(!b.empty());
  const FieldElem lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const FieldElem factor = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = F.sub(a[shift + i], F.mul(factor, b[i]));
    }
    a.pop_back();
    trim(F, a);
  }
  return a;
}

UPoly ugcd(const Field& F, UPoly a, UPoly b) {
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    UPoly r = urem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Strips s^sv t^tv off a nonzero form and returns the cofactor dehomogenized
// at t = 1 as a univariate polynomial in s.
UPoly strip_and_dehomogenize(const HomPoly& p, int& sv, int& tv) {
  sv = p.s_valuation();
  tv = p.t_valuation();
  const int d = p.degree();
  UPoly u;
  // Coefficient index i in [tv, d - sv] multiplies s^(d-i); after dividing by
  // s^sv that is s^(d-sv-i).
  for (int k = 0; k <= d - sv - tv; ++k) {
    u.push_back(p[d - sv - k]);
  }
  return u;
}

}  // namespace

HomPoly::HomPoly(Field field, int degree) : field_(field) {
  if (degree < 0) throw Error(ErrorCode::DegreeMismatch, "negative degree");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, field_.zero());
}

HomPoly::HomPoly(Field field, std::vector<FieldElem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::DegreeMismatch, "empty coefficient vector");
}

HomPoly HomPoly::monomial(const Field& field, int s_exp, int t_exp, const FieldElem& c) {
  HomPoly p(field, s_exp + t_exp);
  p.set(t_exp, c);
  return p;
}

HomPoly HomPoly::monomial(const Field& field, int s_exp, int t_exp, long long c) {
  return monomial(field, s_exp, t_exp, field.from_int(c));
}

HomPoly HomPoly::constant(const Field& field, const FieldElem& c) {
  return HomPoly(field, std::vector<FieldElem>{c});
}

bool HomPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const FieldElem& c) { return field_.is_zero(c); });
}

int HomPoly::t_valuation() const {
  for (int i = 0; i <= degree(); ++i) {
    if (!field_.is_zero((*this)[i])) return i;
  }
  return degree() + 1;
}

int HomPoly::s_valuation() const {
  for (int i = degree(); i >= 0; --i) {
    if (!field_.is_zero((*this)[i])) return degree() - i;
  }
  return degree() + 1;
}

Mat2 mat2_mul(const Field& F, const Mat2& x, const Mat2& y) {
  return Mat2{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
              F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

FieldElem mat2_det(const Field& F, const Mat2& g) {
  return F.sub(F.mul(g.a, g.d), F.mul(g.b, g.c));
}

HomPoly poly_add(const HomPoly& a, const HomPoly& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "poly_add of degrees " + std::to_string(a.degree()) +
                                               " and " + std::to_string(b.degree()));
  }
  const Field& F = a.field();
  HomPoly r(F, a.degree());
  for (int i = 0; i <= a.degree(); ++i) r.set(i, F.add(a[i], b[i]));
  return r;
}

HomPoly poly_sub(const HomPoly& a, const HomPoly& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "poly_sub of degrees " + std::to_string(a.degree()) +
                                               " and " + std::to_string(b.degree()));
  }
  const Field& F = a.field();
  HomPoly r(F, a.degree());
  for (int i = 0; i <= a.degree(); ++i) r.set(i, F.sub(a[i], b[i]));
  return r;
}

HomPoly poly_scale(const HomPoly& a, const FieldElem& c) {
  const Field& F = a.field();
  HomPoly r(F, a.degree());
  for (int i = 0; i <= a.degree(); ++i) r.set(i, F.mul(a[i], c));
  return r;
}

HomPoly poly_mul(const HomPoly& a, const HomPoly& b) {
  const Field& F = a.field();
  HomPoly r(F, a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      if (F.is_zero(b[j])) continue;
      r.set(i + j, F.add(r[i + j], F.mul(a[i], b[j])));
    }
  }
  return r;
}

HomPoly partial(const HomPoly& p, Var var) {
  const int d = p.degree();
  if (d == 0) throw Error(ErrorCode::DegreeMismatch, "partial derivative of a constant form");
  const Field& F = p.field();
  HomPoly r(F, d - 1);
  for (int i = 0; i <= d; ++i) {
    // term c s^(d-i) t^i
    if (var == Var::S) {
      if (d - i > 0) r.set(i, F.mul(F.from_int(d - i), p[i]));
    } else {
      if (i > 0) r.set(i - 1, F.mul(F.from_int(i), p[i]));
    }
  }
  return r;
}

std::optional<HomPoly> exact_divide(const HomPoly& a, const HomPoly& b) {
  const Field& F = a.field();
  if (b.is_zero()) throw Error(ErrorCode::BothZero, "division by the zero form");
  const int dq = a.degree() - b.degree();
  if (dq < 0) return std::nullopt;
  HomPoly q(F, dq);
  if (a.is_zero()) return q;
  const int tb = b.t_valuation();
  const FieldElem lead_inv = F.inv(b[tb]);
  for (int m = 0; m <= dq; ++m) {
    FieldElem acc = a[m + tb];
    for (int l = tb + 1; l <= b.degree(); ++l) {
      const int k = m + tb - l;
      if (k < 0) break;
      acc = F.sub(acc, F.mul(b[l], q[k]));
    }
    q.set(m, F.mul(acc, lead_inv));
  }
  if (poly_mul(b, q) == a) return q;
  return std::nullopt;
}

bool divides(const HomPoly& divisor, const HomPoly& p) {
  return exact_divide(p, divisor).has_value();
}

HomPoly make_monic(const HomPoly& p) {
  const int tv = p.t_valuation();
  if (tv > p.degree()) return p;
  return poly_scale(p, p.field().inv(p[tv]));
}

HomPoly hom_gcd(const HomPoly& a, const HomPoly& b) {
  const bool az = a.is_zero(), bz = b.is_zero();
  if (az && bz) throw Error(ErrorCode::BothZero, "gcd of two zero forms");
  if (az) return make_monic(b);
  if (bz) return make_monic(a);
  const Field& F = a.field();
  int sa = 0, ta = 0, sb = 0, tb = 0;
  const UPoly ua = strip_and_dehomogenize(a, sa, ta);
  const UPoly ub = strip_and_dehomogenize(b, sb, tb);
  const UPoly g = ugcd(F, ua, ub);
  const int m = static_cast<int>(g.size()) - 1;
  // Rehomogenize: s^k t^(m-k) carries g[k].
  HomPoly G(F, m);
  for (int k = 0; k <= m; ++k) G.set(m - k, g[static_cast<std::size_t>(k)]);
  const int sv = std::min(sa, sb), tv = std::min(ta, tb);
  G = poly_mul(G, HomPoly::monomial(F, sv, tv, 1));
  return make_monic(G);
}

bool is_squarefree(const HomPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  const HomPoly ps = partial(p, Var::S), pt = partial(p, Var::T);
  if (ps.is_zero() && pt.is_zero()) return false;
  return hom_gcd(p, hom_gcd(ps, pt)).degree() == 0;
}

HomPoly random_hompoly(const Field& field, int degree, std::mt19937_64& rng) {
  if (!field.is_prime_field()) {
    throw Error(ErrorCode::UnsupportedField, "random_hompoly requires a prime field");
  }
  HomPoly p(field, degree);
  for (int i = 0; i <= degree; ++i) p.set(i, field.random(rng));
  return p;
}

std::string poly_to_string(const HomPoly& p) {
  const Field& F = p.field();
  const int d = p.degree();
  std::string out;
  for (int i = 0; i <= d; ++i) {
    if (F.is_zero(p[i])) continue;
    std::string c = F.to_string(p[i]);
    bool negative = false;
    // prime-field residues above p/2 read better as negatives
    if (F.is_prime_field() && F.residue(p[i]) > F.modulus() / 2) {
      c = F.to_string(F.neg(p[i]));
      negative = true;
    } else if (!c.empty() && c[0] == '-') {
      c = c.substr(1);
      negative = true;
    }
    std::string mono;
    auto var = [&](const char* v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    var("s", d - i);
    var("t", i);
    std::string term = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

HomPoly reparameterize(const HomPoly& p, const Mat2& g) {
  const Field& F = p.field();
  if (F.is_zero(mat2_det(F, g))) throw Error(ErrorCode::SingularMatrix, "reparameterization");
  const int d = p.degree();
  const HomPoly l1(F, std::vector<FieldElem>{g.a, g.b});
  const HomPoly l2(F, std::vector<FieldElem>{g.c, g.d});
  std::vector<HomPoly> pow1{HomPoly::constant(F, F.one())};
  std::vector<HomPoly> pow2{HomPoly::constant(F, F.one())};
  for (int i = 1; i <= d; ++i) {
    pow1.push_back(poly_mul(pow1.back(), l1));
    pow2.push_back(poly_mul(pow2.back(), l2));
  }
  HomPoly r(F, d);
  for (int i = 0; i <= d; ++i) {
    if (F.is_zero(p[i])) continue;
    r = poly_add(r, poly_scale(poly_mul(pow1[static_cast<std::size_t>(d - i)],
                                        pow2[static_cast<std::size_t>(i)]),
                               p[i]));
  }
  return r;
}

}  // namespace ncurve
