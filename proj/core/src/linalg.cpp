#include "repwild/linalg.hpp"

#include <algorithm>

namespace repwild {

Matrix Matrix::identity(int n, const Field& f) {
  Matrix m = zero(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

std::vector<Scalar> Matrix::col(int j) const {
  std::vector<Scalar> v;
  v.reserve(rows);
  for (int i = 0; i < rows; ++i) v.push_back(at(i, j));
  return v;
}

std::vector<Scalar> Matrix::row(int i) const {
  return std::vector<Scalar>(a.begin() + (size_t)i * cols, a.begin() + (size_t)(i + 1) * cols);
}

void Matrix::set_col(int j, const std::vector<Scalar>& v) {
  for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

Matrix mat_mul(const Field& f, const Matrix& x, const Matrix& y) {
  check(x.cols == y.rows, "matrix product shape mismatch");
  Matrix r = Matrix::zero(x.rows, y.cols, f);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Scalar& xv = x.at(i, k);
      if (f.is_zero(xv)) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Scalar& yv = y.at(k, j);
        if (f.is_zero(yv)) continue;
        r.at(i, j) = f.add(r.at(i, j), f.mul(xv, yv));
      }
    }
  return r;
}

std::vector<Scalar> mat_vec(const Field& f, const Matrix& x, const std::vector<Scalar>& v) {
  check((int)v.size() == x.cols, "matrix-vector shape mismatch");
  std::vector<Scalar> r(x.rows, f.zero());
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (f.is_zero(x.at(i, k)) || f.is_zero(v[k])) continue;
      r[i] = f.add(r[i], f.mul(x.at(i, k), v[k]));
    }
  return r;
}

Matrix mat_add(const Field& f, const Matrix& x, const Matrix& y) {
  check(x.rows == y.rows && x.cols == y.cols, "matrix sum shape mismatch");
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(r.a[i], y.a[i]);
  return r;
}

Matrix mat_sub(const Field& f, const Matrix& x, const Matrix& y) {
  check(x.rows == y.rows && x.cols == y.cols, "matrix diff shape mismatch");
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(r.a[i], y.a[i]);
  return r;
}

Matrix mat_scale(const Field& f, const Matrix& x, const Scalar& s) {
  Matrix r = x;
  for (auto& e : r.a) e = f.mul(e, s);
  return r;
}

Matrix transpose(const Matrix& x) {
  Matrix r;
  r.rows = x.cols;
  r.cols = x.rows;
  r.a.resize(x.a.size());
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.a[(size_t)j * r.cols + i] = x.at(i, j);
  return r;
}

Matrix hcat(const Matrix& x, const Matrix& y) {
  check(x.rows == y.rows, "hcat shape mismatch");
  Matrix r;
  r.rows = x.rows;
  r.cols = x.cols + y.cols;
  r.a.reserve((size_t)r.rows * r.cols);
  for (int i = 0; i < r.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.a.push_back(x.at(i, j));
    for (int j = 0; j < y.cols; ++j) r.a.push_back(y.at(i, j));
  }
  return r;
}

Matrix vcat(const Matrix& x, const Matrix& y) {
  check(x.cols == y.cols, "vcat shape mismatch");
  Matrix r = x;
  r.rows = x.rows + y.rows;
  r.a.insert(r.a.end(), y.a.begin(), y.a.end());
  return r;
}

bool mat_eq(const Matrix& x, const Matrix& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

bool is_zero_matrix(const Field& f, const Matrix& x) {
  for (const auto& e : x.a)
    if (!f.is_zero(e)) return false;
  return true;
}

namespace {

// Prime-field fast path: int64 residues, Gauss-Jordan.
Echelon echelon_prime(const Field& f, const Matrix& m) {
  const int64_t p = f.descriptor().p;
  const int rows = m.rows, cols = m.cols;
  std::vector<int64_t> a((size_t)rows * cols);
  for (size_t i = 0; i < a.size(); ++i) a[i] = std::get<int64_t>(m.a[i].v);

  auto inv_mod = [&](int64_t x) {
    int64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };

  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[(size_t)i * cols + c] != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(a[(size_t)pr * cols + j], a[(size_t)r * cols + j]);
    int64_t pi = inv_mod(a[(size_t)r * cols + c]);
    for (int j = c; j < cols; ++j) a[(size_t)r * cols + j] = a[(size_t)r * cols + j] * pi % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      int64_t v = a[(size_t)i * cols + c];
      if (v == 0) continue;
      for (int j = c; j < cols; ++j) {
        int64_t t = a[(size_t)i * cols + j] - v * a[(size_t)r * cols + j] % p;
        if (t < 0) t += p;
        a[(size_t)i * cols + j] = t;
      }
    }
    pivots.push_back(c);
    ++r;
  }

  Echelon e;
  e.rank = r;
  e.pivots = std::move(pivots);
  e.rref = Matrix::zero(rows, cols, f);
  for (size_t i = 0; i < a.size(); ++i) e.rref.a[i] = Scalar((int64_t)a[i]);
  return e;
}

// Generic exact Gauss-Jordan with pivot normalization. Deterministic:
// first nonzero column, smallest row index.
Echelon echelon_generic(const Field& f, Matrix m) {
  const int rows = m.rows, cols = m.cols;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!f.is_zero(m.at(i, c))) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    Scalar pi = f.inv(m.at(r, c));
    for (int j = c; j < cols; ++j)
      if (!f.is_zero(m.at(r, j))) m.at(r, j) = f.mul(m.at(r, j), pi);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar v = m.at(i, c);
      if (f.is_zero(v)) continue;
      for (int j = c; j < cols; ++j) {
        if (f.is_zero(m.at(r, j))) continue;
        m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.rank = r;
  e.pivots = std::move(pivots);
  e.rref = std::move(m);
  return e;
}

}  // namespace

Echelon echelon(const Field& f, Matrix m) {
  if (f.kind() == FieldKind::prime) return echelon_prime(f, m);
  return echelon_generic(f, std::move(m));
}

int rank_of(const Field& f, Matrix m) { return echelon(f, std::move(m)).rank; }

NullspaceSupport nullspace_with_support(const Field& f, const Matrix& m) {
  Echelon e = echelon(f, m);
  const int cols = m.cols;
  std::vector<int> is_pivot(cols, -1);
  for (int k = 0; k < e.rank; ++k) is_pivot[e.pivots[k]] = k;
  NullspaceSupport out;
  for (int c = 0; c < cols; ++c)
    if (is_pivot[c] < 0) out.free_cols.push_back(c);

  out.basis = Matrix::zero(cols, (int)out.free_cols.size(), f);
  for (size_t j = 0; j < out.free_cols.size(); ++j) {
    int fc = out.free_cols[j];
    out.basis.at(fc, (int)j) = f.one();
    for (int k = 0; k < e.rank; ++k)
      out.basis.at(e.pivots[k], (int)j) = f.neg(e.rref.at(k, fc));
  }
  return out;
}

Matrix nullspace(const Field& f, const Matrix& m) { return nullspace_with_support(f, m).basis; }

Matrix row_space(const Field& f, const Matrix& m) {
  Echelon e = echelon(f, m);
  Matrix r = Matrix::zero(e.rank, m.cols, f);
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = e.rref.at(i, j);
  return r;
}

Matrix column_space(const Field& f, const Matrix& m) { return transpose(row_space(f, transpose(m))); }

std::optional<std::vector<Scalar>> solve(const Field& f, const Matrix& A, const std::vector<Scalar>& b) {
  Matrix bm(A.rows, 1, f.zero());
  for (int i = 0; i < A.rows; ++i) bm.at(i, 0) = b[i];
  auto X = solve_many(f, A, bm);
  if (!X) return std::nullopt;
  return X->col(0);
}

std::optional<Matrix> solve_many(const Field& f, const Matrix& A, const Matrix& B) {
  check(A.rows == B.rows, "solve shape mismatch");
  Echelon e = echelon(f, hcat(A, B));
  for (int c : e.pivots)
    if (c >= A.cols) return std::nullopt;
  Matrix X = Matrix::zero(A.cols, B.cols, f);
  for (int k = 0; k < e.rank; ++k)
    for (int j = 0; j < B.cols; ++j) X.at(e.pivots[k], j) = e.rref.at(k, A.cols + j);
  return X;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
  check(m.rows == m.cols, "inverse of non-square matrix");
  const int n = m.rows;
  Echelon e = echelon(f, hcat(m, Matrix::identity(n, f)));
  if (e.rank != n) return std::nullopt;
  for (int c : e.pivots)
    if (c >= n) return std::nullopt;
  Matrix X = Matrix::zero(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) X.at(i, j) = e.rref.at(i, n + j);
  return X;
}

bool in_row_space(const Field& f, const Echelon& e, const std::vector<Scalar>& v) {
  auto r = reduce_mod_rows(f, e, v);
  for (const auto& x : r)
    if (!f.is_zero(x)) return false;
  return true;
}

std::vector<Scalar> reduce_mod_rows(const Field& f, const Echelon& e, std::vector<Scalar> v) {
  check((int)v.size() == e.rref.cols, "reduce shape mismatch");
  for (int k = 0; k < e.rank; ++k) {
    int p = e.pivots[k];
    if (f.is_zero(v[p])) continue;
    Scalar c = v[p];
    for (int j = p; j < e.rref.cols; ++j) {
      if (f.is_zero(e.rref.at(k, j))) continue;
      v[j] = f.sub(v[j], f.mul(c, e.rref.at(k, j)));
    }
  }
  return v;
}

}  // namespace repwild
