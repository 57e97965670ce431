#pragma once

#include "repwild/module.hpp"

namespace repwild {

// k[X]/(X^ell) with augmentation X -> 0.
AlgebraPtr truncated_poly(long ell, FieldPtr F);

// k[(Z/p)^r] in characteristic p, built as an r-fold tensor power of
// k[x]/(x^p) via x_i = g_i - 1.
AlgebraPtr elementary_abelian(long p, int rank, FieldPtr F);

// Restricted Lie algebra data: brackets, p-power map and a linear form, all
// over the basis x_0..x_{n-1}.
struct RestrictedLieData {
  int n = 0;
  // bracket[i][j] = coefficients of [x_i, x_j] over the basis
  std::vector<std::vector<std::vector<Scalar>>> bracket;
  // p_power[i] = coefficients of x_i^{[p]}
  std::vector<std::vector<Scalar>> p_power;
  std::vector<Scalar> chi;  // linear form
  std::vector<std::string> labels;
};

RestrictedLieData sl2_data(const FieldPtr& F, bool chi_zero = true);
RestrictedLieData abelian_lie_data(const FieldPtr& F, int n, bool toral,
                                   const std::vector<Scalar>& chi);

// u(g, chi): PBW basis x^a, 0 <= a_i < p, relations
// x_i x_j - x_j x_i = [x_i, x_j] and x_i^p = x_i^{[p]} + chi(x_i)^p.
// Augmented exactly when chi = 0.
AlgebraPtr restricted_enveloping(const RestrictedLieData& data, FieldPtr F,
                                 long dim_budget = 4096);

enum class QuantumType { A1, A1xA1, A2 };

// Nilpotent part of the small quantum group for the given type at an odd
// ell-th root of unity q taken from the field.
AlgebraPtr quantum_nilpotent(QuantumType type, long ell, FieldPtr F);

// Skew group algebra R # kG for a finite abelian G = prod Z/n_t acting by
// algebra automorphisms; multiplication (r g)(s h) = r (g.s) g h.
AlgebraPtr smash_group(const AlgebraPtr& R, const std::vector<long>& invariant_factors,
                       const std::vector<Matrix>& action_of_generators);

// Hecke algebra of the symmetric group S_n with parameter q:
// T_s T_w = T_{sw} when the length goes up, else q T_{sw} + (q-1) T_w.
AlgebraPtr hecke_typeA(int strands, const Scalar& q, FieldPtr F);

enum class FgStatus { certified, asserted, unknown };

struct FgCertificate {
  FgStatus status = FgStatus::unknown;
  std::string citation;
};

// Finiteness certificate for the cohomology hypotheses, keyed by the zoo
// family tag and the characteristic.
FgCertificate fg_certificate(const std::string& family, long characteristic);

const char* fg_status_name(FgStatus s);

}  // namespace repwild
