#ifndef NCURVE_CONSTRUCT_HPP
#define NCURVE_CONSTRUCT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncurve/curve.hpp"
#include "ncurve/syzygy.hpp"

namespace ncurve {

/// A constructed curve with the splitting it was built to have and the
/// explicit relations the construction guarantees.
struct Witness {
  CurveMap curve;
  SplittingType declared;
  std::vector<Relation> relations;
  nlohmann::ordered_json provenance;  // {"builder": ..., "params": {...}}
};

struct QuotRem {
  int q = 0;
  int r = 0;
};

/// 2e-2-dk = q(n-1-k) + r with 0 <= r < n-1-k.
QuotRem balance_split(int n, int e, int d, int k);

/// {d^k, q^(n-1-k-r), (q+1)^r}. Throws AssumptionViolated unless
/// 2e >= (n-1)d + n-k+1 and 0 <= k <= n-2.
SplittingType b_spec_dk(int n, int e, int d, int k);

/// delta_1 = 1, delta_i = b_(i-1) - delta_(i-1) for i <= n-1.
std::vector<int> deltas_from_twists(const std::vector<int>& b);

/// Three-term relations R_i for consecutive pairs of the sequence (R_1..R_(n-2)
/// for n-1 deltas, R_1..R_(n-1) for the n gaps of a monomial map).
std::vector<Relation> delta_relations(const Field& field, int n, const std::vector<int>& deltas);

/// f = (s^k0 p, s^k1 t^(c-k1) p, ..., s^k(n-1) t^(c-k(n-1)) p, t^c q) with p, q
/// of degree e-c drawn from the seed and redrawn (up to 64 times) until they
/// are coprime, squarefree, prime to s t, and f is unramified. Over Q the
/// pair is fixed: p = prod (s - i t), q = prod (s + i t).
Witness sacchiero(const Field& field, int n, int e, const std::vector<int>& b, std::uint64_t seed);

/// Unsorted twists (delta_1+delta_2, ..., delta_(n-2)+delta_(n-1), b_(n-1)).
std::vector<int> twists_from_deltas(int e, const std::vector<int>& deltas);
Witness from_delta_sequence(const Field& field, int n, int e, const std::vector<int>& deltas,
                            std::uint64_t seed);

/// k = (e = k_0 > k_1 > ... > k_n = 0).
CurveMap monomial_curve(const Field& field, const std::vector<int>& k);
/// b_i = k_(i-1) - k_(i+1). Throws Ramified unless k_1 = e-1 and k_(n-1) = 1,
/// or allow_ramified is set.
SplittingType monomial_splitting(const std::vector<int>& k, bool allow_ramified = false);
/// c_i = k_(i-1) - k_i.
SplittingType monomial_tangent(const std::vector<int>& k);

/// Sequence for b(2^k) whose first chain_j conic relations form a tangency
/// chain. For n-k even it is a delta sequence (n-1 entries); for n-k odd it
/// lists the n exponent gaps k_(i-1) - k_i of a monomial map.
std::vector<int> delta_seq_conics(int n, int e, int k, int chain_j);
/// The curve for delta_seq_conics: monomial (n-k odd) or via from_delta_sequence.
Witness conics_witness(const Field& field, int n, int e, int k, int chain_j, std::uint64_t seed);
/// Three-phase delta sequence for b(d^k) realizing the configuration B_j.
std::vector<int> delta_seq_ddk(int n, int e, int d, int k, int j);

/// Conics (s^2, -2st, t^2): chained on (i-1, i, i+1) for i <= j, then on
/// (3i-2j-1, 3i-2j, 3i-2j+1).
std::vector<Relation> bjk_conics(const Field& field, int n, int k, int j);
/// k degree-d relations in pairs; the first j pairs share two coordinates.
std::vector<Relation> bj_degree_d(const Field& field, int n, int d, int k, int j);

enum class MixedVariant { ChainedBlock, SeparatedBlock };
std::string_view mixed_variant_name(MixedVariant v);

/// Curve with relations a_1, a_2 of degrees d_1, d_2 and splitting
/// (d_1, d_2, q^(n-3-r), (q+1)^r). When the block pattern does not fit in
/// n-1 deltas the curve is drawn from the linear space cut out by a_1, a_2
/// (prime fields only) and checked.
Witness witness_mixed(const Field& field, int n, int e, int d1, int d2, MixedVariant variant,
                      std::uint64_t seed);
/// The two relations used by witness_mixed for the given variant.
std::vector<Relation> mixed_relations(const Field& field, int n, int d1, int d2, MixedVariant variant);

}  // namespace ncurve

#endif  // NCURVE_CONSTRUCT_HPP
