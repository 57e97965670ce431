#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace repwild {

// Partition with weakly decreasing positive parts.
struct Partition {
  std::vector<long> parts;
  long size() const;
  bool operator==(const Partition&) const = default;
  std::string str() const;  // "(3,2,1)" or "()"
};

Partition make_partition(std::vector<long> parts);  // validates

std::vector<Partition> partitions_of(long r);

// Core after removing all rim ell-hooks, on the beta-number abacus.
// Order independence is asserted with seeded reshuffles on every call.
Partition ell_core(const Partition& lam, long ell);

long ell_weight(const Partition& lam, long ell);  // (|lam| - |core|) / ell

// no part repeated ell or more times
bool is_ell_regular(const Partition& lam, long ell);

struct HeckeBlock {
  Partition core;
  long weight = 0;
  std::vector<Partition> members;  // ell-regular partitions sharing the core
  std::string verdict;             // "wild ..." or "criterion silent"
};

struct HeckeBlockReport {
  long r = 0, ell = 0;
  bool semisimple = false;  // ell > r
  std::vector<HeckeBlock> blocks;
};

// Group the ell-regular partitions of r by core; weight w from
// |core| + ell w = r; blocks of weight >= 3 are wild.
HeckeBlockReport hecke_blocks_typeA(long r, long ell);

struct BDVerdict {
  long r = 0, ell = 0;
  std::string verdict;  // wild / representation-finite / undetermined-by-these-rules
};

// Principal block rule for types B and D at odd ell: wild when r >= 3 ell,
// representation-finite exactly when r < 2 ell.
BDVerdict principal_block_BD_verdict(long r, long ell);

// Pointed datum (G, (g_i), (chi_i), (a_ij)): finite abelian G by invariant
// factors, group elements and characters by exponent vectors, finite-type
// Cartan matrix.
struct PointedDatum {
  int theta = 0;
  std::vector<long> group;                     // invariant factors n_1..n_m
  std::vector<std::vector<long>> elements;     // g_i as exponent vectors
  std::vector<std::vector<long>> characters;   // chi_i(gen_j) = zeta_{n_j}^{c_ij}
  std::vector<std::vector<long>> cartan;       // (a_ij), finite type
};

struct PointedVerdict {
  bool applicable = false;
  std::string verdict;  // "wild ..." or "criterion inapplicable"
  std::vector<int> witness;  // nonzero solution vector when inapplicable
  std::vector<long> orders;  // N_i of chi_i(g_i)
  long vectors_checked = 0;
};

// Checks chi_i(g_i) != 1, compatibility chi_j(g_i) chi_i(g_j) = chi_i(g_i)^{a_ij},
// the order hypotheses on N_i, triviality of chi_i^{N_i}, then brute-forces all
// 2^theta candidate vectors over the group generators.
PointedVerdict pointed_datum_check(const PointedDatum& D);

}  // namespace repwild
