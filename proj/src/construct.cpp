#include "ncurve/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ncurve/error.hpp"

namespace ncurve {

namespace {

HomPoly mono(const Field& F, int s_exp, int t_exp, long long c) {
  return HomPoly::monomial(F, s_exp, t_exp, c);
}

Relation place(const Field& F, int n, int degree, int first, const std::vector<HomPoly>& block) {
  std::vector<HomPoly> entries(static_cast<std::size_t>(n + 1), HomPoly(F, degree));
  for (std::size_t i = 0; i < block.size(); ++i) entries[static_cast<std::size_t>(first) + i] = block[i];
  return Relation::from_entries(std::move(entries));
}

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Linear form s - c t.
HomPoly linear(const Field& F, long long c) {
  return HomPoly(F, std::vector<FieldElem>{F.one(), F.from_int(-c)});
}

bool good_pair(const HomPoly& p, const HomPoly& q) {
  for (const HomPoly* x : {&p, &q}) {
    if (x->is_zero()) return false;
    if (x->field().is_zero(x->coeffs().front()) || x->field().is_zero(x->coeffs().back())) return false;
    if (x->degree() >= 2 && !is_squarefree(*x)) return false;
  }
  return hom_gcd(p, q).degree() == 0;
}

CurveMap sacchiero_curve(const Field& F, int n, int c, const std::vector<int>& k, const HomPoly& p,
                         const HomPoly& q) {
  std::vector<HomPoly> comps;
  for (int i = 0; i < n; ++i) {
    comps.push_back(poly_mul(mono(F, k[static_cast<std::size_t>(i)], c - k[static_cast<std::size_t>(i)], 1), p));
  }
  comps.push_back(poly_mul(mono(F, 0, c, 1), q));
  return CurveMap(F, std::move(comps));
}

bool relations_hold(const CurveMap& f, const std::vector<Relation>& rels) {
  for (const auto& a : rels) {
    if (!verify_relation(f, a)) return false;
  }
  return true;
}

}  // namespace

QuotRem balance_split(int n, int e, int d, int k) {
  const int m = n - 1 - k;
  require(m >= 1, ErrorCode::AssumptionViolated, "need k <= n-2");
  const int total = 2 * e - 2 - d * k;
  require(total >= 0, ErrorCode::AssumptionViolated, "2e-2-dk is negative");
  return QuotRem{total / m, total % m};
}

SplittingType b_spec_dk(int n, int e, int d, int k) {
  require(n >= 2 && k >= 0 && k <= n - 2, ErrorCode::AssumptionViolated, "need 0 <= k <= n-2");
  require(2 * e >= (n - 1) * d + n - k + 1, ErrorCode::AssumptionViolated, "need 2e >= (n-1)d + n-k+1");
  const QuotRem qr = balance_split(n, e, d, k);
  std::vector<int> b(static_cast<std::size_t>(k), d);
  for (int i = 0; i < n - 1 - k - qr.r; ++i) b.push_back(qr.q);
  for (int i = 0; i < qr.r; ++i) b.push_back(qr.q + 1);
  return SplittingType::sorted(e, std::move(b));
}

std::vector<int> deltas_from_twists(const std::vector<int>& b) {
  std::vector<int> delta{1};
  for (std::size_t i = 1; i < b.size(); ++i) delta.push_back(b[i - 1] - delta.back());
  return delta;
}

std::vector<Relation> delta_relations(const Field& F, int n, const std::vector<int>& delta) {
  std::vector<Relation> out;
  for (int i = 1; i + 1 <= static_cast<int>(delta.size()) && i <= n - 1; ++i) {
    const int a = delta[static_cast<std::size_t>(i - 1)], b = delta[static_cast<std::size_t>(i)];
    out.push_back(place(F, n, a + b, i - 1, {mono(F, 0, a + b, b), mono(F, a, b, -(a + b)), mono(F, a + b, 0, a)}));
  }
  return out;
}

Witness sacchiero(const Field& F, int n, int e, const std::vector<int>& b, std::uint64_t seed) {
  require(n >= 2 && static_cast<int>(b.size()) == n - 1, ErrorCode::HypothesisViolated,
          "expected n-1 twists");
  require(std::accumulate(b.begin(), b.end(), 0) == 2 * e - 2, ErrorCode::HypothesisViolated,
          "twists must sum to 2e-2");
  const std::vector<int> delta = deltas_from_twists(b);
  for (int x : delta) require(x >= 1, ErrorCode::BadDelta, "nonpositive delta from twists " + join(b));
  if (n >= 3) {
    const int top = *std::max_element(b.begin(), b.end() - 1);
    require(b.back() >= top - 1, ErrorCode::OrderingViolated, "need b_(n-1) >= max b_i - 1");
  }
  const int c = 1 + std::accumulate(delta.begin(), delta.end(), 0);
  require(e >= c, ErrorCode::DegreeTooSmall, "e = " + std::to_string(e) + " < c = " + std::to_string(c));
  F.require_nonvanishing_upto(e, "sacchiero");

  std::vector<int> k{c};
  for (int x : delta) k.push_back(k.back() - x);
  const int m = e - c;

  Witness w{sacchiero_curve(F, n, c, k, HomPoly::constant(F, F.one()), HomPoly::constant(F, F.one())),
            SplittingType::sorted(e, b), delta_relations(F, n, delta), {}};
  w.provenance = {{"builder", "sacchiero"}, {"params", {{"n", n}, {"e", e}, {"b", b}, {"seed", seed}}}};

  if (!F.is_prime_field()) {
    HomPoly p = HomPoly::constant(F, F.one()), q = p;
    for (int i = 1; i <= m; ++i) {
      p = poly_mul(p, linear(F, i));
      q = poly_mul(q, linear(F, -i));
    }
    w.curve = sacchiero_curve(F, n, c, k, p, q);
    require(is_unramified(w.curve), ErrorCode::ResampleExhausted, "fixed rational p, q gave a ramified map");
    return w;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const HomPoly p = random_hompoly(F, m, rng), q = random_hompoly(F, m, rng);
    if (!good_pair(p, q)) continue;
    CurveMap f = sacchiero_curve(F, n, c, k, p, q);
    if (!is_unramified(f)) continue;
    w.curve = std::move(f);
    return w;
  }
  throw Error(ErrorCode::ResampleExhausted, "no admissible p, q in 64 draws");
}

std::vector<int> twists_from_deltas(int e, const std::vector<int>& delta) {
  std::vector<int> b;
  for (std::size_t i = 0; i + 1 < delta.size(); ++i) b.push_back(delta[i] + delta[i + 1]);
  const int sum = std::accumulate(delta.begin(), delta.end(), 0);
  b.push_back(2 * e - 2 - 2 * sum + delta.front() + delta.back());
  return b;
}

Witness from_delta_sequence(const Field& F, int n, int e, const std::vector<int>& delta, std::uint64_t seed) {
  require(n >= 2 && static_cast<int>(delta.size()) == n - 1, ErrorCode::BadDelta, "expected n-1 deltas");
  require(delta.front() == 1, ErrorCode::BadDelta, "delta_1 must be 1");
  for (int x : delta) require(x >= 1, ErrorCode::BadDelta, "deltas must be positive");
  require(e >= n, ErrorCode::HypothesisViolated, "need e >= n");
  const std::vector<int> b = twists_from_deltas(e, delta);
  int top = 0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) top = std::max(top, b[i]);
  require(b.back() >= top - 1, ErrorCode::HypothesisViolated,
          "b_(n-1) = " + std::to_string(b.back()) + " is below max(delta_i + delta_(i+1)) - 1");
  Witness w = sacchiero(F, n, e, b, seed);
  w.provenance = {{"builder", "from_delta_sequence"},
                  {"params", {{"n", n}, {"e", e}, {"deltas", delta}, {"seed", seed}}}};
  return w;
}

CurveMap monomial_curve(const Field& F, const std::vector<int>& k) {
  require(k.size() >= 3, ErrorCode::NotDecreasing, "need at least three exponents");
  require(k.back() == 0, ErrorCode::NotDecreasing, "last exponent must be 0");
  for (std::size_t i = 1; i < k.size(); ++i) {
    require(k[i] < k[i - 1], ErrorCode::NotDecreasing, "exponents must strictly decrease");
  }
  const int e = k.front();
  std::vector<HomPoly> comps;
  for (int x : k) comps.push_back(mono(F, x, e - x, 1));
  return CurveMap(F, std::move(comps));
}

SplittingType monomial_splitting(const std::vector<int>& k, bool allow_ramified) {
  (void)monomial_curve(Field::prime(), k);
  const int e = k.front(), n = static_cast<int>(k.size()) - 1;
  if (!allow_ramified) {
    require(k[1] == e - 1 && k[static_cast<std::size_t>(n - 1)] == 1, ErrorCode::Ramified,
            "monomial map is ramified (need k_1 = e-1 and k_(n-1) = 1)");
  }
  std::vector<int> b;
  for (int i = 1; i <= n - 1; ++i) b.push_back(k[static_cast<std::size_t>(i - 1)] - k[static_cast<std::size_t>(i + 1)]);
  return SplittingType::sorted(e, std::move(b));
}

SplittingType monomial_tangent(const std::vector<int>& k) {
  (void)monomial_curve(Field::prime(), k);
  std::vector<int> c;
  for (std::size_t i = 1; i < k.size(); ++i) c.push_back(k[i - 1] - k[i]);
  return SplittingType::sorted(k.front(), std::move(c));
}

std::vector<int> delta_seq_conics(int n, int e, int k, int j) {
  require(k >= 1 && j >= 1 && j <= k, ErrorCode::HypothesisViolated, "need 1 <= chain_j <= k");
  require(n >= 3 * k - 1 && n - k - 1 >= 1, ErrorCode::HypothesisViolated, "need n >= 3k-1");
  require(2 * e - 2 - 2 * k >= 0, ErrorCode::HypothesisViolated, "degree too small");
  const QuotRem qr{(2 * e - 2 - 2 * k) / (n - k - 1), (2 * e - 2 - 2 * k) % (n - k - 1)};
  require(qr.q >= 2, ErrorCode::HypothesisViolated, "need q >= 2");
  const bool odd = (n - k) % 2 != 0;
  const int twice_m = odd ? n - 3 * k + 2 * j - 1 : n - 3 * k + 2 * j - 2;
  require(twice_m >= 0 && twice_m % 2 == 0, ErrorCode::HypothesisViolated, "sequence does not fit");
  int used = 0;
  auto next_x = [&] { return used++ < qr.r / 2 ? qr.q : qr.q - 1; };
  std::vector<int> s(static_cast<std::size_t>(j + 1), 1);
  for (int i = 0; i < k - j; ++i) {
    s.push_back(next_x());
    s.push_back(1);
    s.push_back(1);
  }
  for (int i = 0; i < twice_m / 2; ++i) {
    s.push_back(next_x());
    s.push_back(1);
  }
  if (odd) {
    // Exponent gaps of a monomial map: n entries summing to e.
    require(static_cast<int>(s.size()) == n, ErrorCode::HypothesisViolated, "sequence length mismatch");
    require(std::accumulate(s.begin(), s.end(), 0) == e, ErrorCode::HypothesisViolated, "gaps must sum to e");
    std::vector<int> b;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) b.push_back(s[i] + s[i + 1]);
    std::sort(b.begin(), b.end());
    require(b == b_spec_dk(n, e, 2, k).twists, ErrorCode::HypothesisViolated,
            "gaps " + join(s) + " do not realize b(2^k)");
    return s;
  }
  require(static_cast<int>(s.size()) == n - 1, ErrorCode::HypothesisViolated, "sequence length mismatch");
  std::vector<int> b = twists_from_deltas(e, s);
  int top = 0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) top = std::max(top, b[i]);
  require(b.back() >= top - 1, ErrorCode::HypothesisViolated, "ordering hypothesis fails for " + join(s));
  std::sort(b.begin(), b.end());
  require(b == b_spec_dk(n, e, 2, k).twists, ErrorCode::HypothesisViolated,
          "sequence " + join(s) + " does not realize b(2^k)");
  return s;
}

Witness conics_witness(const Field& F, int n, int e, int k, int j, std::uint64_t seed) {
  const std::vector<int> s = delta_seq_conics(n, e, k, j);
  const nlohmann::ordered_json params = {{"n", n}, {"e", e}, {"k", k}, {"chain_j", j}, {"seed", seed}};
  if (static_cast<int>(s.size()) == n) {
    std::vector<int> exps{e};
    for (int x : s) exps.push_back(exps.back() - x);
    F.require_nonvanishing_upto(e, "conics_witness");
    Witness w{monomial_curve(F, exps), b_spec_dk(n, e, 2, k), delta_relations(F, n, s), {}};
    w.provenance = {{"builder", "conics"}, {"construction", "monomial"}, {"gaps", s}, {"params", params}};
    return w;
  }
  Witness w = from_delta_sequence(F, n, e, s, seed);
  w.provenance = {{"builder", "conics"}, {"construction", "delta-sequence"}, {"deltas", s}, {"params", params}};
  return w;
}

std::vector<int> delta_seq_ddk(int n, int e, int d, int k, int j) {
  require(k >= 2 && k % 2 == 0, ErrorCode::HypothesisViolated, "k must be even and positive");
  require(j >= 0 && 2 * j <= k, ErrorCode::HypothesisViolated, "need 0 <= j <= k/2");
  require(4 * j <= 3 * k - 2 * j && 3 * k - 2 * j <= n - 1, ErrorCode::HypothesisViolated,
          "need 4j <= 3k-2j <= n-1");
  require(d >= 2, ErrorCode::HypothesisViolated, "need d >= 2");
  const QuotRem qr = balance_split(n, e, d, k);
  require(qr.q >= d, ErrorCode::HypothesisViolated, "need q >= d");
  int used = 0;
  auto next_x = [&] { return used++ < qr.r / 2 ? qr.q : qr.q - 1; };
  std::vector<int> s;
  for (int i = 0; i < j; ++i) {
    for (int v : {1, d - 1, 1}) s.push_back(v);
    s.push_back(next_x());
  }
  while (static_cast<int>(s.size()) < 3 * k - 2 * j) {
    s.push_back(1);
    s.push_back(d - 1);
    s.push_back(next_x() - (d - 2));
    s.push_back(d - 1);
    s.push_back(1);
    s.push_back(next_x());
  }
  while (static_cast<int>(s.size()) < n - 1) {
    s.push_back(1);
    if (static_cast<int>(s.size()) < n - 1) s.push_back(next_x());
  }
  for (int x : s) require(x >= 1, ErrorCode::HypothesisViolated, "nonpositive entry in " + join(s));
  std::vector<int> b = twists_from_deltas(e, s);
  int top = 0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) top = std::max(top, b[i]);
  require(b.back() >= top - 1, ErrorCode::HypothesisViolated, "ordering hypothesis fails for " + join(s));
  std::sort(b.begin(), b.end());
  require(b == b_spec_dk(n, e, d, k).twists, ErrorCode::HypothesisViolated,
          "sequence " + join(s) + " does not realize b(d^k)");
  return s;
}

std::vector<Relation> bjk_conics(const Field& F, int n, int k, int j) {
  require(k >= 1 && j >= 1 && j <= k, ErrorCode::IndexOutOfRange, "need 1 <= j <= k");
  const int top = j < k ? 3 * k - 2 * j + 1 : k + 1;
  require(top <= n, ErrorCode::IndexOutOfRange, "needs coordinates up to " + std::to_string(top));
  const std::vector<HomPoly> conic{mono(F, 2, 0, 1), mono(F, 1, 1, -2), mono(F, 0, 2, 1)};
  std::vector<Relation> out;
  for (int i = 1; i <= k; ++i) out.push_back(place(F, n, 2, i <= j ? i - 1 : 3 * i - 2 * j - 1, conic));
  return out;
}

std::vector<Relation> bj_degree_d(const Field& F, int n, int d, int k, int j) {
  require(k % 2 == 0, ErrorCode::OddK, "k must be even");
  require(k >= 2 && d >= 2 && j >= 0 && 2 * j <= k, ErrorCode::IndexOutOfRange, "need 0 <= j <= k/2");
  const int top = 2 * j < k ? 3 * k - 2 * j - 1 : 4 * j - 1;
  require(top <= n, ErrorCode::IndexOutOfRange, "needs coordinates up to " + std::to_string(top));
  const HomPoly z(F, d);
  std::vector<Relation> out;
  for (int i = 1; i <= k / 2; ++i) {
    if (i <= j) {
      const int u = 4 * i - 4;
      out.push_back(place(F, n, d, u, {mono(F, 0, d, d - 1), mono(F, 1, d - 1, -d), mono(F, d, 0, 1), z}));
      out.push_back(place(F, n, d, u, {z, mono(F, 0, d, 1), mono(F, d - 1, 1, -d), mono(F, d, 0, d - 1)}));
    } else {
      const int u = 6 * i - 2 * j - 6;
      out.push_back(place(F, n, d, u, {mono(F, 0, d, 1), mono(F, d - 1, 1, -d), mono(F, d, 0, d - 1)}));
      out.push_back(place(F, n, d, u + 3, {mono(F, 0, d, d - 1), mono(F, 1, d - 1, -d), mono(F, d, 0, 1)}));
    }
  }
  return out;
}

std::string_view mixed_variant_name(MixedVariant v) {
  return v == MixedVariant::ChainedBlock ? "ChainedBlock" : "SeparatedBlock";
}

std::vector<Relation> mixed_relations(const Field& F, int n, int d1, int d2, MixedVariant v) {
  const int first2 = v == MixedVariant::ChainedBlock ? 1 : 3;
  require(first2 + 2 <= n, ErrorCode::IndexOutOfRange, "not enough coordinates");
  return {place(F, n, d1, 0, {mono(F, 0, d1, d1 - 1), mono(F, 1, d1 - 1, -d1), mono(F, d1, 0, 1)}),
          place(F, n, d2, first2,
                {mono(F, 0, d2, d2 - d1 + 1), mono(F, d1 - 1, d2 - d1 + 1, -d2), mono(F, d2, 0, d1 - 1)})};
}

Witness witness_mixed(const Field& F, int n, int e, int d1, int d2, MixedVariant variant, std::uint64_t seed) {
  require(d2 >= d1 && d1 >= 2, ErrorCode::HypothesisViolated, "need d2 >= d1 >= 2");
  require(n >= 5, ErrorCode::HypothesisViolated, "need n >= 5");
  require(e >= (n + 1) * (d1 + d2 + 2) - d1, ErrorCode::HypothesisViolated, "need e >= (n+1)(d1+d2+2)-d1");
  F.require_nonvanishing_upto(e, "witness_mixed");
  const int total = 2 * e - 2 - d1 - d2;
  const QuotRem qr{total / (n - 3), total % (n - 3)};
  std::vector<int> target{d1, d2};
  for (int i = 0; i < n - 3 - qr.r; ++i) target.push_back(qr.q);
  for (int i = 0; i < qr.r; ++i) target.push_back(qr.q + 1);
  const SplittingType declared = SplittingType::sorted(e, target);
  const std::vector<Relation> rels = mixed_relations(F, n, d1, d2, variant);
  const nlohmann::ordered_json params = {{"n", n}, {"e", e}, {"d1", d1}, {"d2", d2},
                                         {"variant", std::string(mixed_variant_name(variant))}, {"seed", seed}};

  const int gap = d2 - d1 + 1;
  int used = 0;
  std::vector<int> s;
  if (variant == MixedVariant::ChainedBlock) {
    auto next_x = [&] { return used++ < qr.r / 2 ? qr.q - d2 + d1 : qr.q - d2 + d1 - 1; };
    s = {1, d1 - 1, gap};
    while (static_cast<int>(s.size()) < n - 1) {
      s.push_back(next_x());
      if (static_cast<int>(s.size()) < n - 1) s.push_back(gap);
    }
  } else {
    auto next_x = [&] { return used++ < qr.r / 2 ? qr.q - d2 + d1 : qr.q - d2 + d1 - 1; };
    s = {1, d1 - 1, qr.q - d1 + 1, d1 - 1, gap};
    while (static_cast<int>(s.size()) < n - 1) {
      s.push_back(next_x());
      if (static_cast<int>(s.size()) < n - 1) s.push_back(gap);
    }
    s.resize(static_cast<std::size_t>(n - 1));
  }
  bool pattern_ok = std::all_of(s.begin(), s.end(), [](int x) { return x >= 1; });
  if (pattern_ok) {
    std::vector<int> b = twists_from_deltas(e, s);
    std::sort(b.begin(), b.end());
    pattern_ok = b == declared.twists;
  }
  if (pattern_ok) {
    try {
      Witness w = from_delta_sequence(F, n, e, s, seed);
      if (relations_hold(w.curve, rels)) {
        w.declared = declared;
        w.relations = rels;
        w.provenance = {{"builder", "witness_mixed"}, {"construction", "delta-sequence"},
                        {"deltas", s}, {"params", params}};
        return w;
      }
    } catch (const Error&) {
      // fall through to sampling
    }
  }

  require(F.is_prime_field(), ErrorCode::HypothesisViolated,
          "block pattern does not fit in n-1 deltas; sampling the fiber needs a prime field");
  const std::vector<Vec> basis = nullspace(fiber_matrix(rels, n, e));
  require(!basis.empty(), ErrorCode::HypothesisViolated, "no curve satisfies both relations");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec coeffs(static_cast<std::size_t>((n + 1) * (e + 1)), F.zero());
    for (const Vec& v : basis) {
      const FieldElem c = F.random(rng);
      for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = F.add(coeffs[i], F.mul(c, v[i]));
    }
    std::vector<HomPoly> comps;
    for (int j = 0; j <= n; ++j) {
      comps.emplace_back(F, std::vector<FieldElem>(coeffs.begin() + j * (e + 1), coeffs.begin() + (j + 1) * (e + 1)));
    }
    bool all_zero = std::all_of(comps.begin(), comps.end(), [](const HomPoly& p) { return p.is_zero(); });
    if (all_zero) continue;
    CurveMap f(F, std::move(comps));
    if (!is_basepoint_free(f) || !is_nondegenerate(f) || !is_unramified(f)) continue;
    if (!(normal_splitting(f) == declared)) continue;
    Witness w{std::move(f), declared, rels, {}};
    w.provenance = {{"builder", "witness_mixed"}, {"construction", "fiber-sample"}, {"params", params}};
    return w;
  }
  throw Error(ErrorCode::ResampleExhausted, "no admissible curve among 64 fiber samples");
}

}  // namespace ncurve
