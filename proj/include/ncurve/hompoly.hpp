#ifndef NCURVE_HOMPOLY_HPP
#define NCURVE_HOMPOLY_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncurve/field.hpp"

namespace ncurve {

enum class Var { S, T };

/// Homogeneous form of fixed degree d in s, t. coeffs[i] multiplies
/// s^(d-i) t^i. The zero form keeps its declared degree.
class HomPoly {
 public:
  HomPoly(Field field, int degree);
  HomPoly(Field field, std::vector<FieldElem> coeffs);

  /// c * s^a t^b, of degree a + b.
  static HomPoly monomial(const Field& field, int s_exp, int t_exp, const FieldElem& c);
  static HomPoly monomial(const Field& field, int s_exp, int t_exp, long long c = 1);
  static HomPoly constant(const Field& field, const FieldElem& c);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
  const FieldElem& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  /// Coefficient of s^(d-i) t^i.
  void set(int i, const FieldElem& c) { coeffs_[static_cast<std::size_t>(i)] = c; }

  bool is_zero() const;
  /// Power of t dividing this form (degree + 1 for the zero form).
  int t_valuation() const;
  /// Power of s dividing this form (degree + 1 for the zero form).
  int s_valuation() const;

  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  std::vector<FieldElem> coeffs_;
};

/// 2x2 scalar matrix acting on (s, t) by substitution.
struct Mat2 {
  FieldElem a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 mat2_mul(const Field& F, const Mat2& x, const Mat2& y);
FieldElem mat2_det(const Field& F, const Mat2& g);

HomPoly poly_add(const HomPoly& a, const HomPoly& b);
HomPoly poly_sub(const HomPoly& a, const HomPoly& b);
HomPoly poly_scale(const HomPoly& a, const FieldElem& c);
HomPoly poly_mul(const HomPoly& a, const HomPoly& b);
HomPoly partial(const HomPoly& p, Var var);

/// Exact quotient a / b, or nullopt if b does not divide a. b must be nonzero.
std::optional<HomPoly> exact_divide(const HomPoly& a, const HomPoly& b);
bool divides(const HomPoly& divisor, const HomPoly& p);

/// Normalized so the first nonzero coefficient is 1.
HomPoly make_monic(const HomPoly& p);

/// Monic gcd. Common powers of s and t are split off first; the cofactor is
/// handled by Euclid on the dehomogenization t = 1.
HomPoly hom_gcd(const HomPoly& a, const HomPoly& b);

/// True when no linear form divides p twice. Assumes deg p is nonzero in the field.
bool is_squarefree(const HomPoly& p);

HomPoly random_hompoly(const Field& field, int degree, std::mt19937_64& rng);
/// "3*s^2*t - t^3"; "0" for the zero form.
std::string poly_to_string(const HomPoly& p);

/// p(a s + b t, c s + d t). Throws SingularMatrix if det g = 0.
HomPoly reparameterize(const HomPoly& p, const Mat2& g);

inline HomPoly operator+(const HomPoly& a, const HomPoly& b) { return poly_add(a, b); }
inline HomPoly operator-(const HomPoly& a, const HomPoly& b) { return poly_sub(a, b); }
inline HomPoly operator*(const HomPoly& a, const HomPoly& b) { return poly_mul(a, b); }

}  // namespace ncurve

#endif  // NCURVE_HOMPOLY_HPP
