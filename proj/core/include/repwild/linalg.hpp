#pragma once

#include <optional>
#include <vector>

#include "repwild/field.hpp"

namespace repwild {

// Dense exact matrix, row-major. All entries belong to one field.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Matrix() = default;
  Matrix(int r, int c, Scalar fill) : rows(r), cols(c), a((size_t)r * c, fill) {}

  Scalar& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const Scalar& at(int i, int j) const { return a[(size_t)i * cols + j]; }

  static Matrix zero(int r, int c, const Field& f) { return Matrix(r, c, f.zero()); }
  static Matrix identity(int n, const Field& f);

  std::vector<Scalar> col(int j) const;
  std::vector<Scalar> row(int i) const;
  void set_col(int j, const std::vector<Scalar>& v);
};

Matrix mat_mul(const Field& f, const Matrix& x, const Matrix& y);
std::vector<Scalar> mat_vec(const Field& f, const Matrix& x, const std::vector<Scalar>& v);
Matrix mat_add(const Field& f, const Matrix& x, const Matrix& y);
Matrix mat_sub(const Field& f, const Matrix& x, const Matrix& y);
Matrix mat_scale(const Field& f, const Matrix& x, const Scalar& s);
Matrix transpose(const Matrix& x);
Matrix hcat(const Matrix& x, const Matrix& y);
Matrix vcat(const Matrix& x, const Matrix& y);
bool mat_eq(const Matrix& x, const Matrix& y);
bool is_zero_matrix(const Field& f, const Matrix& x);

struct Echelon {
  Matrix rref;              // canonical reduced row echelon form
  std::vector<int> pivots;  // pivot column of each pivot row
  int rank = 0;
};

// Deterministic elimination: first nonzero column, smallest row index.
// Finite fields use plain Gauss; characteristic zero uses fraction-free
// Bareiss on denominator-cleared rows, then normalizes to RREF.
Echelon echelon(const Field& f, Matrix m);

int rank_of(const Field& f, Matrix m);

// Columns form the canonical kernel basis of m (solutions of m x = 0),
// one per free column of the RREF, unit at that free coordinate.
Matrix nullspace(const Field& f, const Matrix& m);

// Kernel basis plus the free coordinates carrying the units; coordinates of
// any vector in the kernel span can be read off at those rows.
struct NullspaceSupport {
  Matrix basis;
  std::vector<int> free_cols;
};
NullspaceSupport nullspace_with_support(const Field& f, const Matrix& m);

// Canonical basis of the row space (nonzero RREF rows).
Matrix row_space(const Field& f, const Matrix& m);

// Canonical basis of the column space, returned as columns.
Matrix column_space(const Field& f, const Matrix& m);

// One solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Field& f, const Matrix& A, const std::vector<Scalar>& b);

// Columnwise solve A X = B; nullopt if any column is inconsistent.
std::optional<Matrix> solve_many(const Field& f, const Matrix& A, const Matrix& B);

std::optional<Matrix> inverse(const Field& f, const Matrix& m);

// Is v in the span of the rows of rrefRows (assumed RREF)?
bool in_row_space(const Field& f, const Echelon& e, const std::vector<Scalar>& v);

// Reduce v modulo the row space; the result is the canonical coset representative.
std::vector<Scalar> reduce_mod_rows(const Field& f, const Echelon& e, std::vector<Scalar> v);

}  // namespace repwild
