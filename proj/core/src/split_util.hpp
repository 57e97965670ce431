#pragma once

// Internal helpers for splitting idempotents inside (sub)algebras via minimal
// polynomials, root finding, and CRT projectors. Not installed.

#include <vector>

#include "repwild/algebra.hpp"

namespace repwild::detail {

using Poly = std::vector<Scalar>;  // low degree first, monic unless noted

Poly poly_trim(const Field& f, Poly p);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
void poly_divmod(const Field& f, const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly poly_gcd(const Field& f, Poly a, Poly b);  // monic or zero
struct PolyXgcd {
  Poly g, u, v;  // u*a + v*b = g, g monic
};
PolyXgcd poly_xgcd(const Field& f, Poly a, Poly b);
Scalar poly_eval(const Field& f, const Poly& p, const Scalar& x);
Poly poly_derivative(const Field& f, const Poly& p);

// All roots in the base field that the deterministic candidate search finds:
// exhaustive for finite fields; rational-root theorem over Q; torsion units
// and rational candidates over cyclotomic fields. Returns (root, multiplicity)
// pairs and the unfactored remainder.
struct RootSplit {
  std::vector<std::pair<Scalar, int>> roots;
  Poly leftover;  // monic; degree 0 when the polynomial split completely
};
RootSplit find_roots(const Field& f, Poly p);

// Element arithmetic relative to an idempotent unit e inside a table.
std::vector<Scalar> elem_power(const AlgebraTable& A, const std::vector<Scalar>& e,
                               const std::vector<Scalar>& u, int k);
std::vector<Scalar> poly_eval_elem(const AlgebraTable& A, const Poly& p,
                                   const std::vector<Scalar>& e, const std::vector<Scalar>& u);

// Minimal monic polynomial of u in the unital algebra (span of e,u,u^2,.., unit e).
Poly min_poly_rel(const AlgebraTable& A, const std::vector<Scalar>& e,
                  const std::vector<Scalar>& u);

// Try to split idempotent e using the element u (which must satisfy eu = ue = u).
// Returns >= 2 orthogonal idempotents summing to e, or empty when u gives no split.
std::vector<std::vector<Scalar>> split_by_element(const AlgebraTable& A,
                                                  const std::vector<Scalar>& e,
                                                  const std::vector<Scalar>& u);

// Newton lifting of an idempotent along a nil ideal: x <- 3x^2 - 2x^3 until exact.
std::vector<Scalar> newton_idempotent(const AlgebraTable& A, std::vector<Scalar> x);

// Table of a multiplicatively closed span inside A (rows = basis).
AlgebraPtr subalgebra_table(const AlgebraTable& A, const Matrix& rows,
                            const std::vector<Scalar>& unit_coords, const std::string& name);

// Decompose the unit into primitive orthogonal idempotents by CRT splitting
// along the candidates; enforces the count when expected_count > 0.
std::vector<std::vector<Scalar>> split_unit_completely(
    const AlgebraTable& C, const std::vector<std::vector<Scalar>>& candidates, int expected_count,
    const std::string& what);

}  // namespace repwild::detail
