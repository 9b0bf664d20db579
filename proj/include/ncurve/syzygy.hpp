#ifndef NCURVE_SYZYGY_HPP
#define NCURVE_SYZYGY_HPP

#include <string_view>
#include <vector>

#include "ncurve/curve.hpp"

namespace ncurve {

/// Degree-b tuple (a_0, ..., a_n) of forms. As a relation of f it satisfies
/// sum a_i d_s f_i = sum a_i d_t f_i = 0.
struct Relation {
  int degree = 0;
  std::vector<HomPoly> entries;

  /// Throws DegreeMismatch unless every entry has degree b; throws
  /// DegenerateInput when all entries vanish.
  static Relation from_entries(std::vector<HomPoly> entries);
  const Field& field() const { return entries.front().field(); }
  int n() const { return static_cast<int>(entries.size()) - 1; }
};

/// Sorted twists of a split bundle. For a normal bundle N_f = sum O(e + b_i);
/// for a restricted tangent bundle f*T = sum O(e + c_i).
struct SplittingType {
  int baseline = 0;
  std::vector<int> twists;

  static SplittingType sorted(int baseline, std::vector<int> twists);
  int rank() const { return static_cast<int>(twists.size()); }
  int total() const;
  bool is_balanced() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Dimensions r(b) of the graded pieces of a kernel together with the
/// splitting read off from their second differences.
struct KernelProfile {
  std::vector<int> dims;  // dims[b] = r(b) for b = 0 .. last computed degree
  SplittingType splitting;
  std::vector<Relation> generators;  // filled only by minimal_generators
};

/// Coefficient vector ordering: entry index major, monomial index minor.
Vec relation_to_vector(const Relation& a);
Relation vector_to_relation(const Field& field, const Vec& v, int n, int degree);
/// Multiplies every entry by the monomial s^i t^j.
Relation shift_relation(const Relation& a, int s_exp, int t_exp);

/// Matrix of a -> (sum a_i d_s f_i, sum a_i d_t f_i) on degree-b tuples.
Matrix relation_matrix(const CurveMap& f, int b);
int relation_space_dim(const CurveMap& f, int b);
/// Canonical reduced echelon basis of the degree-b relations.
std::vector<Relation> relation_basis(const CurveMap& f, int b);

/// Splitting of the kernel of the Jacobian (the conormal bundle when f is
/// unramified). Requires a basepoint-free, nondegenerate curve.
SplittingType normal_splitting(const CurveMap& f);
KernelProfile normal_profile(const CurveMap& f);
/// n-1 relations generating the kernel, one per twist.
std::vector<Relation> minimal_generators(const CurveMap& f);

/// Kernel of a -> sum a_i f_i (the Euler sequence); n twists summing to e.
SplittingType tangent_splitting(const CurveMap& f);
KernelProfile tangent_profile(const CurveMap& f);

bool verify_relation(const CurveMap& f, const Relation& a);
/// Checks sum f_i d_s a_i = sum f_i d_t a_i = 0 and sum a_i f_i = 0 for a
/// relation a; throws LemmaViolation if any of them fails.
bool dual_relation_check(const CurveMap& f, const Relation& a);

enum class ConicClass { SmoothConic, DoubleLine, CommonRootDegenerate };
std::string_view conic_class_name(ConicClass c);
ConicClass classify_degree2_relation(const Relation& a);

/// Linear conditions on the (e+1)(n+1) coefficients of a degree-e map f
/// (column j*(e+1)+l is the coefficient of s^(e-l) t^l in f_j) saying that
/// every given tuple is a relation of f.
Matrix fiber_matrix(const std::vector<Relation>& relations, int n, int e);

/// Rank of the scalar span of the coefficient rows of a (at most degree + 1).
int coefficient_span_rank(const Relation& a);

}  // namespace ncurve

#endif  // NCURVE_SYZYGY_HPP
