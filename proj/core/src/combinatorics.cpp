#include "repwild/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "repwild/errors.hpp"
#include "repwild/field.hpp"

namespace repwild {

long Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

Partition make_partition(std::vector<long> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) fail(Errc::SchemaError, "partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      fail(Errc::SchemaError, "partition parts must be weakly decreasing");
  }
  return Partition{std::move(parts)};
}

std::vector<Partition> partitions_of(long r) {
  std::vector<Partition> out;
  std::vector<long> cur;
  // descending lexicographic enumeration
  auto rec = [&](auto&& self, long rest, long maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (long p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

namespace {

// beta-numbers: strictly decreasing first-column hook lengths with N beads
std::vector<long> beta_set(const Partition& lam, long N) {
  std::vector<long> beta;
  for (long i = 0; i < N; ++i) {
    long part = i < (long)lam.parts.size() ? lam.parts[i] : 0;
    beta.push_back(part + (N - 1 - i));
  }
  return beta;  // strictly decreasing
}

Partition from_beta(std::vector<long> beta) {
  std::sort(beta.rbegin(), beta.rend());
  long N = (long)beta.size();
  std::vector<long> parts;
  for (long i = 0; i < N; ++i) {
    long p = beta[i] - (N - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition{std::move(parts)};
}

// remove rim ell-hooks: repeatedly replace some beta by beta - ell when free;
// the abacus makes the result order independent
Partition core_once(const Partition& lam, long ell, uint64_t seed) {
  long N = (long)lam.parts.size() + ell;  // enough beads
  auto beta = beta_set(lam, N);
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<size_t> movable;
    for (size_t i = 0; i < beta.size(); ++i) {
      long b = beta[i];
      if (b >= ell && std::find(beta.begin(), beta.end(), b - ell) == beta.end())
        movable.push_back(i);
    }
    if (movable.empty()) break;
    size_t pick = movable[rng() % movable.size()];
    beta[pick] -= ell;
  }
  return from_beta(std::move(beta));
}

}  // namespace

Partition ell_core(const Partition& lam, long ell) {
  check(ell >= 2, "ell must be at least 2");
  Partition core = core_once(lam, ell, 1);
  // order independence: reshuffled removals agree
  for (uint64_t seed = 2; seed <= 4; ++seed)
    check(core_once(lam, ell, seed) == core, "rim hook removal must be order independent");
  check((lam.size() - core.size()) % ell == 0, "removed cells must come in ell-hooks");
  return core;
}

long ell_weight(const Partition& lam, long ell) {
  return (lam.size() - ell_core(lam, ell).size()) / ell;
}

bool is_ell_regular(const Partition& lam, long ell) {
  long run = 1;
  for (size_t i = 1; i < lam.parts.size(); ++i) {
    run = (lam.parts[i] == lam.parts[i - 1]) ? run + 1 : 1;
    if (run >= ell) return false;
  }
  return !lam.parts.empty() ? run < ell : true;
}

HeckeBlockReport hecke_blocks_typeA(long r, long ell) {
  check(ell >= 2, "ell must be at least 2");
  check(r >= 1, "r must be positive");
  HeckeBlockReport rep;
  rep.r = r;
  rep.ell = ell;
  rep.semisimple = ell > r;

  std::map<std::vector<long>, HeckeBlock> by_core;
  long regular_count = 0;
  for (const auto& lam : partitions_of(r)) {
    if (!is_ell_regular(lam, ell)) continue;
    ++regular_count;
    Partition core = ell_core(lam, ell);
    auto& blk = by_core[core.parts];
    if (blk.members.empty()) {
      blk.core = core;
      blk.weight = (r - core.size()) / ell;
      check(core.size() + ell * blk.weight == r, "core size plus ell times weight must equal r");
    }
    blk.members.push_back(lam);
  }
  long members_total = 0;
  for (auto& [corep, blk] : by_core) {
    blk.verdict = blk.weight >= 3 ? "wild: block weight >= 3 (type A, characteristic zero)"
                                  : "criterion silent";
    members_total += (long)blk.members.size();
    rep.blocks.push_back(std::move(blk));
  }
  check(members_total == regular_count, "blocks must partition the ell-regular partitions");
  return rep;
}

BDVerdict principal_block_BD_verdict(long r, long ell) {
  if (ell <= 1 || ell % 2 == 0) fail(Errc::EvenEll, "the rule needs odd ell > 1");
  BDVerdict v;
  v.r = r;
  v.ell = ell;
  if (r >= 3 * ell)
    v.verdict = "wild: r >= 3 ell (principal block, types B and D)";
  else if (r < 2 * ell)
    v.verdict = "representation-finite: r < 2 ell";
  else
    v.verdict = "undetermined-by-these-rules (2 ell <= r < 3 ell)";
  return v;
}

namespace {

// order of zeta_N^e in the cyclic group of order N
long order_mod(long e, long N) {
  long g = std::gcd(((e % N) + N) % N, N);
  return N / g;
}

}  // namespace

PointedVerdict pointed_datum_check(const PointedDatum& D) {
  const int th = D.theta, m = (int)D.group.size();
  check(th >= 2, "theta must be at least 2");
  check((int)D.elements.size() == th && (int)D.characters.size() == th &&
            (int)D.cartan.size() == th,
        "datum arrays must have length theta");
  for (long n : D.group) check(n >= 1, "invariant factors must be positive");

  // common exponent modulus
  long N = 1;
  for (long n : D.group) N = std::lcm(N, n);

  // chi_i(g_j) as an exponent mod N
  auto chi_at = [&](int i, const std::vector<long>& g) {
    long e = 0;
    for (int t = 0; t < m; ++t) {
      long c = ((D.characters[i][t] % D.group[t]) + D.group[t]) % D.group[t];
      long gt = ((g[t] % D.group[t]) + D.group[t]) % D.group[t];
      e = (e + (N / D.group[t]) * c % N * gt) % N;
    }
    return e;  // value zeta_N^e
  };

  // Cartan matrix of finite type: a_ii = 2, a_ij <= 0 off diagonal, symmetric
  // zero pattern, a_ij a_ji <= 3, and positive definite symmetrization
  for (int i = 0; i < th; ++i) {
    check(D.cartan[i][i] == 2, "Cartan diagonal must be 2");
    for (int j = 0; j < th; ++j) {
      if (i == j) continue;
      check(D.cartan[i][j] <= 0, "off-diagonal Cartan entries must be <= 0");
      check((D.cartan[i][j] == 0) == (D.cartan[j][i] == 0), "Cartan zero pattern must be symmetric");
      check(D.cartan[i][j] * D.cartan[j][i] <= 3, "a_ij a_ji must be at most 3 for finite type");
    }
  }
  {
    // symmetrizer d_i by propagation along edges, then leading minors > 0
    std::vector<Rat> dsym(th, Rat(0));
    for (int root = 0; root < th; ++root) {
      if (!(dsym[root] == Rat(0))) continue;
      dsym[root] = Rat(1);
      std::vector<int> stack = {root};
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < th; ++j) {
          if (i == j || D.cartan[i][j] == 0) continue;
          Rat want = dsym[i] * Rat(D.cartan[i][j]) / Rat(D.cartan[j][i]);
          if (dsym[j] == Rat(0)) {
            dsym[j] = want;
            stack.push_back(j);
          } else {
            check(dsym[j] == want, "Cartan matrix is not symmetrizable");
          }
        }
      }
    }
    // leading principal minors of (d_i a_ij) by fraction elimination
    std::vector<std::vector<Rat>> S(th, std::vector<Rat>(th, Rat(0)));
    for (int i = 0; i < th; ++i)
      for (int j = 0; j < th; ++j) S[i][j] = dsym[i] * Rat(D.cartan[i][j]);
    for (int k = 1; k <= th; ++k) {
      std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M[i][j] = S[i][j];
      Rat det(1);
      for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r < k; ++r)
          if (!(M[r][c] == Rat(0))) { piv = r; break; }
        check(piv >= 0, "Cartan symmetrization must be positive definite");
        if (piv != c) {
          std::swap(M[piv], M[c]);
          det = -det;
        }
        det = det * M[c][c];
        for (int r = c + 1; r < k; ++r) {
          Rat t = M[r][c] / M[c][c];
          for (int cc = c; cc < k; ++cc) M[r][cc] = M[r][cc] - t * M[c][cc];
        }
      }
      check(Rat(0) < det, "Cartan symmetrization must be positive definite");
    }
  }

  PointedVerdict out;

  // invariant: chi_i(g_i) != 1, compatibility with the Cartan matrix
  for (int i = 0; i < th; ++i) {
    long eii = chi_at(i, D.elements[i]);
    if (eii % N == 0) fail(Errc::SchemaError, "datum requires chi_i(g_i) != 1");
    out.orders.push_back(order_mod(eii, N));
    for (int j = 0; j < th; ++j) {
      long lhs = (chi_at(j, D.elements[i]) + chi_at(i, D.elements[j])) % N;
      long rhs = ((eii * ((D.cartan[i][j] % N) + N)) % N + N) % N;
      check(lhs == rhs % N, "datum compatibility chi_j(g_i) chi_i(g_j) = chi_i(g_i)^{a_ij} fails");
    }
  }

  // order hypotheses: N_i odd; prime to 3 on G2 components (a_ij a_ji = 3 edges)
  for (int i = 0; i < th; ++i) {
    if (out.orders[i] % 2 == 0)
      fail(Errc::BadOrderHypothesis, "N_" + std::to_string(i) + " must be odd");
    bool g2_component = false;
    for (int j = 0; j < th; ++j)
      if (i != j && D.cartan[i][j] * D.cartan[j][i] == 3) g2_component = true;
    if (g2_component && out.orders[i] % 3 == 0)
      fail(Errc::BadOrderHypothesis, "N_" + std::to_string(i) + " must be prime to 3 on G2");
  }

  // chi_i^{N_i} trivial: N_i c_ij = 0 mod n_j for all j
  for (int i = 0; i < th; ++i)
    for (int t = 0; t < m; ++t) {
      long c = ((D.characters[i][t] % D.group[t]) + D.group[t]) % D.group[t];
      if ((c * out.orders[i]) % D.group[t] != 0) {
        out.applicable = false;
        out.verdict = "criterion inapplicable: chi_" + std::to_string(i) +
                      "^{N_i} is not the trivial character";
        return out;
      }
    }

  // brute force c in {0,1}^theta \ {0}: prod chi_i(g)^{c_i} = 1 for all g
  // iff it holds on every generator
  for (long mask = 1; mask < (1L << th); ++mask) {
    ++out.vectors_checked;
    bool solves_all = true;
    for (int t = 0; t < m && solves_all; ++t) {
      std::vector<long> gen(m, 0);
      gen[t] = 1;
      long e = 0;
      for (int i = 0; i < th; ++i)
        if (mask & (1L << i)) e = (e + chi_at(i, gen)) % N;
      if (e % N != 0) solves_all = false;
    }
    if (solves_all) {
      out.applicable = false;
      out.verdict = "criterion inapplicable: nonzero solution vector exists";
      for (int i = 0; i < th; ++i) out.witness.push_back((mask >> i) & 1);
      return out;
    }
  }
  ++out.vectors_checked;  // the zero vector, trivially a solution
  out.applicable = true;
  out.verdict =
      "wild: pointed datum with trivial character powers and only the zero solution "
      "(Nichols algebra and its bosonization)";
  return out;
}

}  // namespace repwild
