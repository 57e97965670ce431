#include <algorithm>

#include "repwild/algebra.hpp"

namespace repwild {

namespace {

// Characteristic polynomial of det(lambda*I - M) by the division-free
// Berkowitz algorithm; coefficients returned leading-first (c[0] = 1).
std::vector<Scalar> charpoly(const Field& f, const Matrix& M) {
  const int n = M.rows;
  std::vector<Scalar> C = {f.one()};
  for (int r = 1; r <= n; ++r) {
    // Toeplitz column t_0..t_r for the r-th principal submatrix
    std::vector<Scalar> t(r + 1, f.zero());
    t[0] = f.one();
    t[1] = f.neg(M.at(r - 1, r - 1));
    if (r >= 2) {
      // v_k = B^k S with B the (r-1) principal block, S the right column
      std::vector<Scalar> v(r - 1);
      for (int i = 0; i < r - 1; ++i) v[i] = M.at(i, r - 1);
      for (int k = 2; k <= r; ++k) {
        // t_k = -(R . v)
        Scalar acc = f.zero();
        for (int j = 0; j < r - 1; ++j)
          if (!f.is_zero(M.at(r - 1, j)) && !f.is_zero(v[j]))
            acc = f.add(acc, f.mul(M.at(r - 1, j), v[j]));
        t[k] = f.neg(acc);
        if (k < r) {
          std::vector<Scalar> nv(r - 1, f.zero());
          for (int i = 0; i < r - 1; ++i)
            for (int j = 0; j < r - 1; ++j)
              if (!f.is_zero(M.at(i, j)) && !f.is_zero(v[j]))
                nv[i] = f.add(nv[i], f.mul(M.at(i, j), v[j]));
          v = std::move(nv);
        }
      }
    }
    std::vector<Scalar> C2(r + 1, f.zero());
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < (int)C.size() && j <= i; ++j) {
        if (i - j > r) continue;
        if (f.is_zero(t[i - j]) || f.is_zero(C[j])) continue;
        C2[i] = f.add(C2[i], f.mul(t[i - j], C[j]));
      }
    C = std::move(C2);
  }
  return C;
}

// trace of L_{e_k} straight from the structure constants
std::vector<Scalar> basis_traces(const AlgebraTable& A) {
  const Field& f = A.k();
  std::vector<Scalar> t(A.dim, f.zero());
  for (int k = 0; k < A.dim; ++k)
    for (int j = 0; j < A.dim; ++j)
      for (const auto& [idx, c] : A.sc[(size_t)k * A.dim + j])
        if (idx == j) t[k] = f.add(t[k], c);
  return t;
}

// kernel of the trace Gram form G[i][j] = tr(L_{e_i e_j}), rows canonical
Matrix trace_form_kernel(const AlgebraTable& A) {
  const Field& f = A.k();
  auto tr = basis_traces(A);
  Matrix G = Matrix::zero(A.dim, A.dim, f);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      Scalar acc = f.zero();
      for (const auto& [k, c] : A.sc[(size_t)i * A.dim + j])
        if (!f.is_zero(tr[k])) acc = f.add(acc, f.mul(c, tr[k]));
      G.at(i, j) = acc;
    }
  return transpose(nullspace(f, G));
}

// inverse Frobenius applied i times on F_{p^e}
Scalar frob_inv(const Field& f, const Scalar& x, int i) {
  long p = f.characteristic();
  int e = f.degree();
  int r = ((e - (i % e)) % e + e) % e;
  // x^(p^r)
  Scalar y = x;
  for (int step = 0; step < r; ++step) y = f.pow(y, p);
  return y;
}

// Friedl-Ronyai chain over finite fields: refine the trace-form kernel by
// vanishing of the p^i-th characteristic coefficients of left multiplications.
Matrix radical_subspace_finite(const AlgebraTable& A) {
  const Field& f = A.k();
  const long p = f.characteristic();
  const int n = A.dim;

  Matrix R = trace_form_kernel(A);
  long pi = p;
  for (int level = 1; pi <= n && R.rows > 0; ++level, pi *= p) {
    const int s = R.rows;
    // V[a][b] = coefficient of lambda^(n - p^level) in charpoly(L_{ra rb})
    Matrix sys = Matrix::zero(s, s, f);  // sys[b][a] = twisted V[a][b]
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) {
        auto prod = A.multiply(R.row(a), R.row(b));
        Matrix L = A.left_mult(prod);
        auto cp = charpoly(f, L);
        Scalar coeff = cp[(size_t)pi];  // index j holds lambda^{n-j}
        sys.at(b, a) = frob_inv(f, coeff, level);
      }
    Matrix ker = nullspace(f, sys);  // columns: xi coefficient vectors
    Matrix next = Matrix::zero(ker.cols, A.dim, f);
    for (int c = 0; c < ker.cols; ++c)
      for (int a = 0; a < s; ++a) {
        if (f.is_zero(ker.at(a, c))) continue;
        for (int j = 0; j < A.dim; ++j)
          next.at(c, j) = f.add(next.at(c, j), f.mul(ker.at(a, c), R.at(a, j)));
      }
    R = row_space(f, next);
  }
  return R;
}

Matrix radical_subspace(const AlgebraTable& A) {
  if (A.k().characteristic() == 0) return trace_form_kernel(A);
  return radical_subspace_finite(A);
}

// products of two row-span spaces, as a canonical row space
Matrix span_products(const AlgebraTable& A, const Matrix& U, const Matrix& V) {
  const Field& f = A.k();
  if (U.rows == 0 || V.rows == 0) return Matrix::zero(0, A.dim, f);
  Matrix all = Matrix::zero(U.rows * V.rows, A.dim, f);
  int r = 0;
  for (int i = 0; i < U.rows; ++i)
    for (int j = 0; j < V.rows; ++j) {
      auto prod = A.multiply(U.row(i), V.row(j));
      for (int t = 0; t < A.dim; ++t) all.at(r, t) = prod[t];
      ++r;
    }
  return row_space(f, all);
}

}  // namespace

RadicalResult radical(const AlgebraTable& A) {
  const Field& f = A.k();
  Matrix J = row_space(f, radical_subspace(A));

  // certification: two-sided ideal
  Echelon e = echelon(f, J);
  for (const auto& g : A.generating_set()) {
    for (int i = 0; i < J.rows; ++i) {
      auto lv = A.multiply(g, J.row(i));
      auto rv = A.multiply(J.row(i), g);
      check(in_row_space(f, e, lv), "radical candidate not a left ideal");
      check(in_row_space(f, e, rv), "radical candidate not a right ideal");
    }
  }

  // certification: nilpotent, J^m = 0 with m <= dim
  int nilpotency = 0;
  if (J.rows > 0) {
    Matrix cur = J;
    nilpotency = 1;
    while (cur.rows > 0) {
      check(nilpotency <= A.dim, "radical candidate is not nilpotent");
      cur = span_products(A, cur, J);
      ++nilpotency;
    }
  }

  RadicalResult out;
  out.radical = Ideal{J};
  out.nilpotency_degree = J.rows == 0 ? 0 : nilpotency;
  out.semisimple_quotient = quotient_by_ideal(A, out.radical);

  // certification: the quotient has zero radical
  Matrix qr = radical_subspace(*out.semisimple_quotient.table);
  check(qr.rows == 0, "quotient by radical candidate is not semisimple");
  return out;
}

}  // namespace repwild
