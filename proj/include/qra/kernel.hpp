#ifndef QRA_KERNEL_HPP
#define QRA_KERNEL_HPP

// Exact arithmetic over a prime field F_p and dense matrices over it.
//
// The modulus is a process-wide setting (default 32003).  Every Scalar carries
// a residue in [0, p).  Matrices are row-major and may have zero rows or zero
// columns; such matrices behave as zero maps.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qra {

/// Error raised by every module of the library.  `kind` is a short stable tag
/// used in machine-readable reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace field {

inline std::uint32_t& modulus_ref() {
  static std::uint32_t p = 32003;
  return p;
}

inline std::uint32_t modulus() { return modulus_ref(); }

inline void set_modulus(std::uint32_t p) {
  if (!is_prime(p)) throw Error("non_prime_modulus", "modulus " + std::to_string(p) + " is not prime");
  if (p > 2147483647u) throw Error("modulus_too_large", "modulus must fit in 31 bits");
  modulus_ref() = p;
}

}  // namespace field

class Scalar {
 public:
  constexpr Scalar() = default;
  Scalar(std::int64_t v) {  // NOLINT(google-explicit-constructor)
    const std::int64_t p = field::modulus();
    v %= p;
    if (v < 0) v += p;
    v_ = static_cast<std::uint32_t>(v);
  }
  static Scalar raw(std::uint32_t r) {
    Scalar s;
    s.v_ = r;
    return s;
  }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  /// Signed representative in (-p/2, p/2], used for printing.
  std::int64_t signed_value() const {
    const std::uint32_t p = field::modulus();
    return v_ > p / 2 ? static_cast<std::int64_t>(v_) - p : v_;
  }

  friend Scalar operator+(Scalar a, Scalar b) {
    std::uint32_t r = a.v_ + b.v_;
    if (r >= field::modulus()) r -= field::modulus();
    return raw(r);
  }
  friend Scalar operator-(Scalar a, Scalar b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + field::modulus() - b.v_);
  }
  Scalar operator-() const { return v_ == 0 ? *this : raw(field::modulus() - v_); }
  friend Scalar operator*(Scalar a, Scalar b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % field::modulus()));
  }
  Scalar& operator+=(Scalar b) { return *this = *this + b; }
  Scalar& operator-=(Scalar b) { return *this = *this - b; }
  Scalar& operator*=(Scalar b) { return *this = *this * b; }

  Scalar pow(std::uint64_t e) const {
    Scalar base = *this, acc = raw(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  Scalar inverse() const {
    if (v_ == 0) throw Error("division_by_zero", "inverse of zero");
    return pow(field::modulus() - 2);
  }
  friend Scalar operator/(Scalar a, Scalar b) { return a * b.inverse(); }

  friend bool operator==(Scalar a, Scalar b) { return a.v_ == b.v_; }
  friend bool operator!=(Scalar a, Scalar b) { return a.v_ != b.v_; }

 private:
  std::uint32_t v_ = 0;
};

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("shape_mismatch", "ragged matrix literal");
      for (auto v : row) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::raw(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  Vec col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_row(std::size_t r, const Vec& v) { std::copy(v.begin(), v.end(), data_.begin() + r * cols_); }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("shape_mismatch", "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    const std::uint64_t p = field::modulus();
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a(i, k).value();
        if (!aik) continue;
        const Scalar* brow = &b.data_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) {
          acc[j] += aik * brow[j].value();
          if (acc[j] >= (1ull << 62)) acc[j] %= p;
        }
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = Scalar::raw(static_cast<std::uint32_t>(acc[j] % p));
    }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("shape_mismatch", "matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("shape_mismatch", "matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(Scalar s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }

  const std::vector<Scalar>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("shape_mismatch", "hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("shape_mismatch", "vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

/// Reduced row echelon form.  The pivot in each column is the first row (from
/// the top of the unreduced part) holding a nonzero entry, so results are
/// reproducible.
inline Echelon rref(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar f = m(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Columns form a basis of {x : a x = 0}.  One basis vector per non-pivot
/// column j, with x_j = 1 and the other free coordinates zero.
inline Matrix nullspace(const Matrix& a) {
  const Echelon e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n);
    x[f] = Scalar::raw(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(x));
  }
  return Matrix::from_columns(basis, n);
}

/// Some x with a x = b, or nothing when the system is inconsistent.  Free
/// variables are set to zero.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("shape_mismatch", "solve: a.rows != b.rows");
  const Echelon e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  }
  return x;
}

/// Row-vector solve: some x with x a = b.
inline std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  auto t = solve(a.transpose(), b.transpose());
  if (!t) return std::nullopt;
  return t->transpose();
}

/// Rows form a basis of {x : x a = 0}.
inline Matrix left_nullspace(const Matrix& a) { return nullspace(a.transpose()).transpose(); }

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  const Echelon e = rref(hstack(a, Matrix::identity(n)));
  if (e.pivots.size() < n || (n && e.pivots[n - 1] >= n)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

/// Basis (as rows, in reduced echelon form) of the row space.
inline Matrix row_basis(const Matrix& m) {
  const Echelon e = rref(m);
  return e.reduced.block(0, 0, e.pivots.size(), m.cols());
}

/// Rows of `sub` extended by standard basis vectors to a basis of the whole
/// space; returns only the added rows.  `sub` must have independent rows.
inline Matrix complement_rows(const Matrix& sub, std::size_t n) {
  const Echelon e = rref(sub);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(n);
    v[j] = Scalar::raw(1);
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(rows, n);
}

inline Scalar trace(const Matrix& m) {
  Scalar t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

inline Matrix power(const Matrix& m, std::size_t e) {
  Matrix acc = Matrix::identity(m.rows()), base = m;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// Characteristic polynomial det(tI - m), coefficients low degree first.
/// Hessenberg reduction followed by the standard recurrence.
inline Vec charpoly(Matrix m) {
  const std::size_t n = m.rows();
  for (std::size_t k = 1; k + 1 < n + 1 && k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k - 1).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, piv), m(i, k));
    }
    const Scalar inv = m(k, k - 1).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar f = m(i, k - 1) * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
      for (std::size_t j = 0; j < n; ++j) m(j, k) += f * m(j, i);
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = Vec{Scalar::raw(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    // p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_{i,k} (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    Vec next(k + 1);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= m(k - 1, k - 1) * p[k - 1][d];
    }
    Scalar prod = Scalar::raw(1);
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= m(i + 1, i);
      const Scalar coef = m(i, k - 1) * prod;
      if (coef.is_zero()) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coef * p[i][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

inline Scalar eval_poly(const Vec& c, Scalar x) {
  Scalar acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// All roots in F_p of a nonzero polynomial, by exhaustive evaluation.
inline std::vector<Scalar> roots(const Vec& c) {
  std::vector<Scalar> r;
  const std::uint32_t p = field::modulus();
  for (std::uint32_t x = 0; x < p; ++x)
    if (eval_poly(c, Scalar::raw(x)).is_zero()) r.push_back(Scalar::raw(x));
  return r;
}

/// Single seeded generator; every randomized routine draws from it.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240601);
  return engine;
}
inline void set_seed(std::uint64_t seed) { rng().seed(seed); }
inline Scalar random_scalar() {
  std::uniform_int_distribution<std::uint32_t> d(0, field::modulus() - 1);
  return Scalar::raw(d(rng()));
}

}  // namespace qra

#endif  // QRA_KERNEL_HPP
