#include "ncurve/linalg.hpp"

#include <utility>

#include "ncurve/error.hpp"

namespace ncurve {

namespace {

struct ModOps {
  using T = std::uint64_t;
  std::uint64_t p;
  T add(T a, T b) const { T r = a + b; return r >= p ? r - p : r; }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T mul(T a, T b) const { return (a * b) % p; }
  T inv(T a) const {
    std::uint64_t base = a, e = p - 2, r = 1;
    while (e > 0) {
      if (e & 1) r = (r * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    return r;
  }
  bool is_zero(T a) const { return a == 0; }
  T zero() const { return 0; }
};

struct RatOps {
  using T = mpq_class;
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T zero() const { return 0; }
};

// In-place Gauss-Jordan on a row-major array. Returns pivot columns; rows
// beyond pivots.size() are zero afterwards.
template <class Ops>
std::vector<std::size_t> gauss_jordan(std::vector<typename Ops::T>& a, std::size_t rows,
                                      std::size_t cols, const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ops.is_zero(a[i * cols + c])) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    }
    const auto inv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(a[i * cols + c])) continue;
      const auto f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        if (ops.is_zero(a[r * cols + j])) continue;
        a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(f, a[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Ops>
typename Ops::T det_elim(std::vector<typename Ops::T>& a, std::size_t n, const Ops& ops,
                         typename Ops::T one) {
  typename Ops::T det = one;
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!ops.is_zero(a[i * n + c])) {
        piv = i;
        break;
      }
    }
    if (piv == n) return ops.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      negate = !negate;
    }
    det = ops.mul(det, a[c * n + c]);
    const auto inv = ops.inv(a[c * n + c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (ops.is_zero(a[i * n + c])) continue;
      const auto f = ops.mul(a[i * n + c], inv);
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = ops.sub(a[i * n + j], ops.mul(f, a[c * n + j]));
    }
  }
  return negate ? ops.sub(ops.zero(), det) : det;
}

}  // namespace

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

EchelonForm row_reduce(const Matrix& m) {
  const Field& F = m.field();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  Matrix out(F, 0, C);
  if (F.is_prime_field()) {
    std::vector<std::uint64_t> a(R * C);
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) a[i * C + j] = F.residue(m.at(i, j));
    pivots = gauss_jordan(a, R, C, ModOps{F.modulus()});
    out = Matrix(F, pivots.size(), C);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < C; ++j) out.at(i, j) = F.from_residue(a[i * C + j]);
  } else {
    std::vector<mpq_class> a(R * C);
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) a[i * C + j] = F.rational(m.at(i, j));
    pivots = gauss_jordan(a, R, C, RatOps{});
    out = Matrix(F, pivots.size(), C);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < C; ++j) out.at(i, j) = F.from_rational(a[i * C + j]);
  }
  return EchelonForm{std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

std::vector<Vec> nullspace(const Matrix& m) {
  const Field& F = m.field();
  const std::size_t C = m.cols();
  const EchelonForm ef = row_reduce(m);
  std::vector<bool> is_pivot(C, false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    Vec v(C, F.zero());
    v[f] = F.one();
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
      v[ef.pivots[r]] = F.neg(ef.rref.at(r, f));
    }
    basis.push_back(std::move(v));
  }
  return echelon_basis(F, basis, C);
}

std::vector<Vec> echelon_basis(const Field& field, const std::vector<Vec>& vectors,
                               std::size_t dim) {
  if (vectors.empty()) return {};
  const EchelonForm ef = row_reduce(Matrix::from_rows(field, vectors, dim));
  std::vector<Vec> out;
  out.reserve(ef.pivots.size());
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) out.push_back(ef.rref.row(i));
  return out;
}

FieldElem determinant(const Matrix& m) {
  const Field& F = m.field();
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::DegreeMismatch, "determinant of a non-square matrix");
  if (F.is_prime_field()) {
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = F.residue(m.at(i / n, i % n));
    return F.from_residue(det_elim(a, n, ModOps{F.modulus()}, std::uint64_t{1}));
  }
  std::vector<mpq_class> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = F.rational(m.at(i / n, i % n));
  return F.from_rational(det_elim(a, n, RatOps{}, mpq_class(1)));
}

Vec apply(const Matrix& m, const Vec& x) {
  const Field& F = m.field();
  Vec y(m.rows(), F.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (F.is_zero(m.at(i, j)) || F.is_zero(x[j])) continue;
      y[i] = F.add(y[i], F.mul(m.at(i, j), x[j]));
    }
  }
  return y;
}

Vec IncrementalBasis::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (field_.is_zero(v[p])) continue;
    const FieldElem f = v[p];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (field_.is_zero(rows_[r][j])) continue;
      v[j] = field_.sub(v[j], field_.mul(f, rows_[r][j]));
    }
  }
  return v;
}

bool IncrementalBasis::contains(const Vec& v) const {
  const Vec w = reduce(v);
  for (const auto& x : w) {
    if (!field_.is_zero(x)) return false;
  }
  return true;
}

bool IncrementalBasis::insert(const Vec& v) {
  Vec w = reduce(v);
  std::size_t p = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!field_.is_zero(w[j])) {
      p = j;
      break;
    }
  }
  if (p == dim_) return false;
  const FieldElem inv = field_.inv(w[p]);
  for (auto& x : w) x = field_.mul(x, inv);
  // Keep existing rows reduced against the new pivot so reduce() stays a
  // single pass.
  for (auto& row : rows_) {
    if (field_.is_zero(row[p])) continue;
    const FieldElem f = row[p];
    for (std::size_t j = 0; j < dim_; ++j) row[j] = field_.sub(row[j], field_.mul(f, w[j]));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace ncurve
