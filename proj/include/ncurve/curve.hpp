#ifndef NCURVE_CURVE_HPP
#define NCURVE_CURVE_HPP

#include <vector>

#include "ncurve/hompoly.hpp"
#include "ncurve/linalg.hpp"

namespace ncurve {

/// A map P^1 -> P^n given by n+1 forms of a common degree e.
class CurveMap {
 public:
  /// Throws DegreeMismatch unless there are n+1 >= 3 components, all of
  /// degree e >= 1, not all zero.
  CurveMap(Field field, std::vector<HomPoly> components);

  const Field& field() const noexcept { return field_; }
  int n() const noexcept { return static_cast<int>(components_.size()) - 1; }
  int e() const noexcept { return components_.front().degree(); }
  const std::vector<HomPoly>& components() const noexcept { return components_; }
  const HomPoly& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const CurveMap& a, const CurveMap& b) {
    return a.field_ == b.field_ && a.components_ == b.components_;
  }

 private:
  Field field_;
  std::vector<HomPoly> components_;
};

/// Transposed Jacobian: ds[i] = d f_i / ds, dt[i] = d f_i / dt.
struct JacobianMatrix {
  std::vector<HomPoly> ds;
  std::vector<HomPoly> dt;
};

JacobianMatrix jacobian(const CurveMap& f);

bool is_basepoint_free(const CurveMap& f);
/// Coefficient matrix of the components has full rank n+1.
bool is_nondegenerate(const CurveMap& f);
/// The 2x2 minors of the Jacobian have no common root on P^1.
bool is_unramified(const CurveMap& f);

/// Components replaced by M (f_0, ..., f_n)^T. Throws SingularMatrix.
CurveMap apply_ambient(const CurveMap& f, const Matrix& m);
/// Every component reparameterized by g. Throws SingularMatrix.
CurveMap apply_reparam(const CurveMap& f, const Mat2& g);

/// n+1 independent uniform forms of degree e over a prime field; no filtering.
CurveMap random_curve(const Field& field, int n, int e, std::mt19937_64& rng);

}  // namespace ncurve

#endif  // NCURVE_CURVE_HPP
