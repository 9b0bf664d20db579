#ifndef NCURVE_STRATA_HPP
#define NCURVE_STRATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "ncurve/curve.hpp"
#include "ncurve/syzygy.hpp"

namespace ncurve {

/// h^1(End E) = sum over ordered pairs with a_j - a_i >= 2 of (a_j - a_i - 1).
long long h1_end(const SplittingType& E);
/// (e+1)(n+1) - 1.
long long dim_mor(int n, int e);

/// h^1(End) of b(d^k) in closed form: k(2e+d-1+k) - (d+1)nk.
/// Throws AssumptionViolated unless 2e >= (d+1)(n-1) - k + 2.
long long expected_codim_dk(int n, int e, int d, int k);
/// The form k(2e+1+k) - (d+1)nk; agrees with the above only for d = 2.
long long expected_codim_dk_d2_form(int n, int e, int d, int k);

/// Nullity of fiber_matrix(relations, n, e), and that minus one.
int fiber_nullity(const std::vector<Relation>& relations, int n, int e);
int fiber_dim(const std::vector<Relation>& relations, int n, int e);

/// Entrywise: d_s alpha = g d_t beta or d_t beta = g d_s alpha for a nonzero
/// form g, tested in the given coordinates; the roles of s and t may be
/// exchanged (a shared swap of the parameters).
bool parameterized_tangency(const Relation& alpha, const Relation& beta);
/// Same test after every joint reparameterization in PGL2(F_p).
/// Throws FieldTooLarge unless the field is F_p with p <= 31.
bool orbit_tangency_smallfield(const Relation& alpha, const Relation& beta);

enum class PlaneIntersection { Disjoint, Point, Line, SamePlane };
std::string_view plane_intersection_name(PlaneIntersection p);
/// Throws DegenerateConic unless both relations classify as SmoothConic.
PlaneIntersection plane_intersection_type(const Relation& a1, const Relation& a2);

struct TwoConicDims {
  long long dim_g = 0;
  long long dim_pt = 0;
};
/// (e(n-3)+7n-6, e(n-2)+5n-3). Throws HypothesisViolated unless n >= 5 and e >= 2n-3.
TwoConicDims dims_two_conics(int n, int e);

struct P4ConicDims {
  long long dim = 0;            // 2e+18
  long long expected = 0;       // e+23
  long long dim_projective = 0;       // 2e+17
  long long expected_projective = 0;  // dim_mor(4,e) - h1_end = e+22
};
/// Throws HypothesisViolated unless e >= 5.
P4ConicDims p4_conics_dim(int e);

/// Structure of the lowest-degree relations of one witness.
struct WitnessReport {
  std::string id;
  bool ok = false;
  std::string error;
  bool basepoint_free = false;
  bool nondegenerate = false;
  bool unramified = false;
  std::optional<SplittingType> splitting;
  bool matches = false;
  int relation_degree = 0;
  int relation_count = 0;
  std::vector<std::string> conic_classes;
  int tangency_pairs = 0;
  int longest_chain = 0;
  std::vector<std::vector<std::string>> plane_matrix;
};

struct StratumReport {
  int n = 0;
  int e = 0;
  SplittingType splitting;
  long long dim_mor = 0;
  long long expected_codim = 0;
  long long expected_dim = 0;
  std::vector<WitnessReport> witnesses;
};

/// Analyzes the given relations: classification, tangency pairs (with the
/// longest chain of consecutive tangencies) and the plane-intersection matrix.
void describe_relations(const std::vector<Relation>& rels, WitnessReport& out);

/// Per-witness failures are recorded, not thrown.
StratumReport stratum_report(int n, int e, const SplittingType& b, const std::vector<CurveMap>& witnesses,
                             const std::vector<std::string>& ids = {});

}  // namespace ncurve

#endif  // NCURVE_STRATA_HPP
