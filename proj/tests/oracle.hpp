#pragma once

// Independent reference for relation counts and splittings. Works mod p on
// plain residues and imposes relations by evaluation at points (x : 1)
// instead of comparing coefficients, so it shares no code path with the
// library's coefficient matrices.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Form = std::vector<u64>;  // c[l] multiplies s^(d-l) t^l

inline constexpr u64 kP = 2147483647ULL;

inline u64 mulm(u64 a, u64 b) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % kP); }
inline u64 addm(u64 a, u64 b) { return (a + b) % kP; }
inline u64 powm(u64 a, u64 k) {
  u64 r = 1;
  while (k) {
    if (k & 1) r = mulm(r, a);
    a = mulm(a, a);
    k >>= 1;
  }
  return r;
}
inline u64 invm(u64 a) { return powm(a, kP - 2); }
inline u64 reduce(long long v) {
  long long m = v % static_cast<long long>(kP);
  return static_cast<u64>(m < 0 ? m + static_cast<long long>(kP) : m);
}

inline u64 eval(const Form& f, u64 x) {
  const int d = static_cast<int>(f.size()) - 1;
  u64 acc = 0;
  for (int l = 0; l <= d; ++l) acc = addm(acc, mulm(f[static_cast<std::size_t>(l)], powm(x, static_cast<u64>(d - l))));
  return acc;
}

// d/ds and d/dt evaluated at (x : 1)
inline u64 eval_ds(const Form& f, u64 x) {
  const int d = static_cast<int>(f.size()) - 1;
  u64 acc = 0;
  for (int l = 0; l < d; ++l)
    acc = addm(acc, mulm(mulm(f[static_cast<std::size_t>(l)], static_cast<u64>(d - l)), powm(x, static_cast<u64>(d - l - 1))));
  return acc;
}
inline u64 eval_dt(const Form& f, u64 x) {
  const int d = static_cast<int>(f.size()) - 1;
  u64 acc = 0;
  for (int l = 1; l <= d; ++l)
    acc = addm(acc, mulm(mulm(f[static_cast<std::size_t>(l)], static_cast<u64>(l)), powm(x, static_cast<u64>(d - l))));
  return acc;
}

inline int rank_mod_p(std::vector<std::vector<u64>> m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(piv)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    const u64 inv = invm(pr[static_cast<std::size_t>(c)]);
    for (auto& v : pr) v = mulm(v, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      const u64 k = row[static_cast<std::size_t>(c)];
      if (!k) continue;
      for (int j = c; j < cols; ++j)
        row[static_cast<std::size_t>(j)] = addm(row[static_cast<std::size_t>(j)], kP - mulm(k, pr[static_cast<std::size_t>(j)]));
    }
    ++r;
  }
  return r;
}

// Tuples (a_0..a_n) of degree-b forms with sum a_i d_s f_i = sum a_i d_t f_i = 0.
inline int normal_r(const std::vector<Form>& f, int b) {
  if (b < 0) return 0;
  const int n = static_cast<int>(f.size()) - 1;
  const int e = static_cast<int>(f[0].size()) - 1;
  const int cols = (n + 1) * (b + 1);
  std::vector<std::vector<u64>> m;
  for (u64 x = 1; x <= static_cast<u64>(b + e); ++x) {
    std::vector<u64> rs(static_cast<std::size_t>(cols)), rt(static_cast<std::size_t>(cols));
    for (int i = 0; i <= n; ++i) {
      const u64 ds = eval_ds(f[static_cast<std::size_t>(i)], x), dt = eval_dt(f[static_cast<std::size_t>(i)], x);
      for (int l = 0; l <= b; ++l) {
        const u64 mono = powm(x, static_cast<u64>(b - l));
        rs[static_cast<std::size_t>(i * (b + 1) + l)] = mulm(mono, ds);
        rt[static_cast<std::size_t>(i * (b + 1) + l)] = mulm(mono, dt);
      }
    }
    m.push_back(rs);
    m.push_back(rt);
  }
  return cols - rank_mod_p(m);
}

// Tuples with sum a_i f_i = 0.
inline int tangent_r(const std::vector<Form>& f, int b) {
  if (b < 0) return 0;
  const int n = static_cast<int>(f.size()) - 1;
  const int e = static_cast<int>(f[0].size()) - 1;
  const int cols = (n + 1) * (b + 1);
  std::vector<std::vector<u64>> m;
  for (u64 x = 1; x <= static_cast<u64>(b + e + 1); ++x) {
    std::vector<u64> row(static_cast<std::size_t>(cols));
    for (int i = 0; i <= n; ++i) {
      const u64 v = eval(f[static_cast<std::size_t>(i)], x);
      for (int l = 0; l <= b; ++l) row[static_cast<std::size_t>(i * (b + 1) + l)] = mulm(powm(x, static_cast<u64>(b - l)), v);
    }
    m.push_back(row);
  }
  return cols - rank_mod_p(m);
}

// Twists of a free kernel with `rank` summands, read off from r(b).
template <class R>
std::vector<int> twists(R r, int rank, int max_b) {
  std::vector<int> out;
  int prev2 = 0, prev1 = 0;
  for (int b = 0; b <= max_b && static_cast<int>(out.size()) < rank; ++b) {
    const int cur = r(b);
    const int g = cur - 2 * prev1 + prev2;
    for (int i = 0; i < g; ++i) out.push_back(b);
    prev2 = prev1;
    prev1 = cur;
  }
  return out;
}

inline std::vector<int> normal_twists(const std::vector<Form>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const int e = static_cast<int>(f[0].size()) - 1;
  return twists([&](int b) { return normal_r(f, b); }, n - 1, 2 * e);
}

inline std::vector<int> tangent_twists(const std::vector<Form>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const int e = static_cast<int>(f[0].size()) - 1;
  return twists([&](int b) { return tangent_r(f, b); }, n, e + 1);
}

// (s^k_0, s^k_1 t^(e-k_1), ...) for decreasing exponents
inline std::vector<Form> monomial(const std::vector<int>& k) {
  const int e = k.front();
  std::vector<Form> f;
  for (int ki : k) {
    Form c(static_cast<std::size_t>(e + 1), 0);
    c[static_cast<std::size_t>(e - ki)] = 1;
    f.push_back(c);
  }
  return f;
}

}  // namespace oracle
