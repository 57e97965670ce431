#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "repwild/linalg.hpp"

namespace repwild {

// Finite dimensional associative algebra with unit, given by exact structure
// constants over a basis: e_i e_j = sum_k c_{ij}^k e_k.
struct AlgebraTable {
  FieldPtr field;
  int dim = 0;
  std::vector<std::string> basis;
  // sc[i*dim+j] = sparse product vector, entries (k, c) sorted by k
  std::vector<std::vector<std::pair<int, Scalar>>> sc;
  std::vector<Scalar> unit;
  std::optional<std::vector<Scalar>> augmentation;
  // coefficient vectors generating the algebra together with 1 (may be empty)
  std::vector<std::vector<Scalar>> generators;
  std::string name;
  std::string family;  // zoo family tag; empty for user-supplied tables

  const Field& k() const { return *field; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  std::vector<Scalar> basis_product(int i, int j) const;
  Matrix left_mult_basis(int i) const;   // L_{e_i}
  Matrix right_mult_basis(int i) const;  // R_{e_i}
  Matrix left_mult(const std::vector<Scalar>& a) const;
  Matrix right_mult(const std::vector<Scalar>& a) const;
  Scalar aug_of(const std::vector<Scalar>& a) const;  // requires augmentation
  std::vector<Scalar> basis_vector(int i) const;

  // generator coefficient vectors, or all basis vectors when no hint is set
  std::vector<std::vector<Scalar>> generating_set() const;
};

using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

struct Diagnostics {
  bool pass = true;
  std::vector<std::string> violations;
};

// Checks associativity (exhaustive for dim <= 40, seeded random triples above),
// unit axioms, augmentation multiplicativity, and the generator hint.
Diagnostics validate(const AlgebraTable& A);

AlgebraTable opposite(const AlgebraTable& A);
AlgebraTable enveloping(const AlgebraTable& A);  // A tensor A^op
AlgebraTable tensor_product(const AlgebraTable& A, const AlgebraTable& B);

// Canonical basis (rows) of {z : z a = a z for all a}.
Matrix center(const AlgebraTable& A);

struct Ideal {
  Matrix basis;  // rows span the ideal, RREF canonical
  int dim() const { return basis.rows; }
};

// A/I data with projection and section maps for transporting structures.
struct QuotientAlgebra {
  AlgebraPtr table;
  Matrix projection;  // dim(A/I) x dim(A)
  Matrix section;     // dim(A) x dim(A/I), projection * section = id
};

QuotientAlgebra quotient_by_ideal(const AlgebraTable& A, const Ideal& I);

struct RadicalResult {
  Ideal radical;
  QuotientAlgebra semisimple_quotient;
  int nilpotency_degree = 0;  // smallest m with J^m = 0 (0 when J = 0)
};

// Jacobson radical: trace-form kernel in characteristic zero, iterated
// character-coefficient chain over finite fields. The result is certified
// (nilpotent ideal, semisimple quotient) before returning.
RadicalResult radical(const AlgebraTable& A);

bool is_semisimple(const AlgebraTable& A);

struct Block {
  std::vector<Scalar> idempotent;  // central primitive idempotent of A
  AlgebraPtr table;
  Matrix basis;  // rows: basis of the block inside A (RREF canonical)
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::optional<int> principal;  // index with aug(e_i) = 1, when augmented
};

BlockDecomposition block_decomposition(const AlgebraPtr& A);

struct SelfInjectivity {
  bool value = false;
  int dual_dim = 0;
  int cover_dim = 0;
  std::vector<int> top_multiplicities;  // of the dual regular module
  std::string note;
};

// A is self-injective iff the dual A* of the regular module is projective,
// tested by comparing it against its projective cover.
SelfInjectivity is_self_injective(const AlgebraPtr& A);

// Deterministic RNG seed used for all randomized checks; settable once from
// the CLI, constant during a run.
uint64_t& randomized_check_seed();
inline constexpr uint64_t kDefaultSeed = 0x5eed5eedULL;

}  // namespace repwild
