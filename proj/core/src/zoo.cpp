#include "repwild/zoo.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace repwild {

AlgebraPtr truncated_poly(long ell, FieldPtr F) {
  check(ell >= 2, "truncated polynomial algebra needs ell >= 2");
  const Field& f = *F;
  auto A = std::make_shared<AlgebraTable>();
  A->field = F;
  A->dim = (int)ell;
  A->name = "truncated_poly(" + std::to_string(ell) + ")";
  A->family = "truncated_poly";
  for (long i = 0; i < ell; ++i) A->basis.push_back(i == 0 ? "1" : "X^" + std::to_string(i));
  A->sc.assign((size_t)ell * ell, {});
  for (long i = 0; i < ell; ++i)
    for (long j = 0; j < ell; ++j)
      if (i + j < ell) A->sc[(size_t)i * ell + j].emplace_back((int)(i + j), f.one());
  A->unit.assign(ell, f.zero());
  A->unit[0] = f.one();
  std::vector<Scalar> aug(ell, f.zero());
  aug[0] = f.one();
  A->augmentation = std::move(aug);
  std::vector<Scalar> x(ell, f.zero());
  x[1] = f.one();
  A->generators.push_back(std::move(x));
  return A;
}

AlgebraPtr elementary_abelian(long p, int rank, FieldPtr F) {
  if (F->characteristic() != p)
    fail(Errc::CharacteristicMismatch,
         "k[(Z/p)^r] needs characteristic p = " + std::to_string(p));
  check(rank >= 1, "rank must be positive");
  auto A = truncated_poly(p, F);
  AlgebraTable acc = *A;
  for (int r = 1; r < rank; ++r) acc = tensor_product(acc, *A);
  acc.name = "elementary_abelian(" + std::to_string(p) + "," + std::to_string(rank) + ")";
  acc.family = "elementary_abelian";
  return std::make_shared<AlgebraTable>(std::move(acc));
}

// ---------- restricted enveloping algebras ----------

namespace {

using Mono = std::vector<int>;  // exponent vector, entries in [0, p)
using Elem = std::map<Mono, Scalar>;

struct PbwCtx {
  const Field* f;
  const RestrictedLieData* data;
  long p;
  std::vector<Scalar> chi_p;  // chi(x_i)^p
};

void elem_add(const PbwCtx& c, Elem& e, const Mono& m, const Scalar& s) {
  if (c.f->is_zero(s)) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, s);
  } else {
    it->second = c.f->add(it->second, s);
    if (c.f->is_zero(it->second)) e.erase(it);
  }
}

// mono * x_i, straightened
void mono_times_gen(const PbwCtx& c, const Mono& m, int i, const Scalar& coeff, Elem& out);

void elem_times_gen(const PbwCtx& c, const Elem& e, int i, Elem& out) {
  for (const auto& [m, s] : e) mono_times_gen(c, m, i, s, out);
}

// mono * (linear combination of generators and 1)
void mono_times_combo(const PbwCtx& c, const Mono& m, const std::vector<Scalar>& combo,
                      const Scalar& constant, const Scalar& coeff, Elem& out) {
  for (int t = 0; t < c.data->n; ++t) {
    if (c.f->is_zero(combo[t])) continue;
    mono_times_gen(c, m, t, c.f->mul(coeff, combo[t]), out);
  }
  if (!c.f->is_zero(constant)) elem_add(c, out, m, c.f->mul(coeff, constant));
}

void mono_times_gen(const PbwCtx& c, const Mono& m, int i, const Scalar& coeff, Elem& out) {
  const Field& f = *c.f;
  int top = -1;
  for (int j = c.data->n - 1; j > i; --j)
    if (m[j] > 0) { top = j; break; }
  if (top < 0) {
    Mono m2 = m;
    m2[i] += 1;
    if (m2[i] < c.p) {
      elem_add(c, out, m2, coeff);
      return;
    }
    // x_i^p = x_i^{[p]} + chi(x_i)^p
    m2[i] = 0;
    mono_times_combo(c, m2, c.data->p_power[i], c.chi_p[i], coeff, out);
    return;
  }
  // m = m' x_top with top > i:   m' x_top x_i = m' x_i x_top + m' [x_top, x_i]
  Mono mp = m;
  mp[top] -= 1;
  Elem tmp;
  mono_times_gen(c, mp, i, coeff, tmp);
  elem_times_gen(c, tmp, top, out);
  mono_times_combo(c, mp, c.data->bracket[top][i], f.zero(), coeff, out);
}

void validate_restricted(const RestrictedLieData& d, const Field& f) {
  const int n = d.n;
  auto vec_is_zero = [&](const std::vector<Scalar>& v) {
    for (const auto& x : v)
      if (!f.is_zero(x)) return false;
    return true;
  };
  auto bracket_vec = [&](const std::vector<Scalar>& a, int j) {
    std::vector<Scalar> r(n, f.zero());
    for (int i = 0; i < n; ++i) {
      if (f.is_zero(a[i])) continue;
      for (int t = 0; t < n; ++t) r[t] = f.add(r[t], f.mul(a[i], d.bracket[i][j][t]));
    }
    return r;
  };
  for (int i = 0; i < n; ++i) {
    if (!vec_is_zero(d.bracket[i][i]))
      fail(Errc::InvalidRestrictedData, "[x_i, x_i] must vanish");
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < n; ++t)
        if (!f.eq(d.bracket[i][j][t], f.neg(d.bracket[j][i][t])))
          fail(Errc::InvalidRestrictedData, "bracket must be antisymmetric");
    }
  }
  // Jacobi on basis triples
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Scalar> s(n, f.zero());
        auto acc = [&](const std::vector<Scalar>& v) {
          for (int t = 0; t < n; ++t) s[t] = f.add(s[t], v[t]);
        };
        acc(bracket_vec(d.bracket[i][j], k));
        acc(bracket_vec(d.bracket[j][k], i));
        acc(bracket_vec(d.bracket[k][i], j));
        if (!vec_is_zero(s)) fail(Errc::InvalidRestrictedData, "Jacobi identity fails");
      }
  // restricted axiom: ad(x_i^{[p]}) = ad(x_i)^p on the basis
  long p = f.characteristic();
  for (int i = 0; i < n; ++i) {
    Matrix ad_i = Matrix::zero(n, n, f);
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < n; ++t) ad_i.at(t, j) = d.bracket[i][j][t];
    Matrix adp = Matrix::identity(n, f);
    for (long e = 0; e < p; ++e) adp = mat_mul(f, ad_i, adp);
    Matrix ad_pi = Matrix::zero(n, n, f);
    for (int j = 0; j < n; ++j) {
      auto v = bracket_vec(d.p_power[i], j);
      for (int t = 0; t < n; ++t) ad_pi.at(t, j) = v[t];
    }
    if (!mat_eq(adp, ad_pi))
      fail(Errc::InvalidRestrictedData, "p-power map incompatible with ad^p");
  }
}

}  // namespace

RestrictedLieData sl2_data(const FieldPtr& F, bool chi_zero) {
  const Field& f = *F;
  RestrictedLieData d;
  d.n = 3;
  d.labels = {"e", "h", "f"};
  auto zero = std::vector<Scalar>(3, f.zero());
  d.bracket.assign(3, std::vector<std::vector<Scalar>>(3, zero));
  auto set = [&](int i, int j, int t, long c) {
    d.bracket[i][j][t] = f.from_int(c);
    d.bracket[j][i][t] = f.from_int(-c);
  };
  // [e,h] = -2e, [e,f] = h, [h,f] = -2f
  set(0, 1, 0, -2);
  set(0, 2, 1, 1);
  set(1, 2, 2, -2);
  d.p_power.assign(3, zero);
  d.p_power[1][1] = f.one();  // h^[p] = h; e, f have vanishing p-power
  d.chi.assign(3, f.zero());
  (void)chi_zero;
  return d;
}

RestrictedLieData abelian_lie_data(const FieldPtr& F, int n, bool toral,
                                   const std::vector<Scalar>& chi) {
  const Field& f = *F;
  RestrictedLieData d;
  d.n = n;
  auto zero = std::vector<Scalar>(n, f.zero());
  d.bracket.assign(n, std::vector<std::vector<Scalar>>(n, zero));
  d.p_power.assign(n, zero);
  if (toral)
    for (int i = 0; i < n; ++i) d.p_power[i][i] = f.one();
  d.chi = chi.empty() ? std::vector<Scalar>(n, f.zero()) : chi;
  for (int i = 0; i < n; ++i) d.labels.push_back("x" + std::to_string(i));
  return d;
}

AlgebraPtr restricted_enveloping(const RestrictedLieData& data, FieldPtr F, long dim_budget) {
  const Field& f = *F;
  long p = f.characteristic();
  if (p == 0) fail(Errc::UnsupportedCharacteristic, "u(g,chi) needs prime characteristic");
  validate_restricted(data, f);

  long dim = 1;
  for (int i = 0; i < data.n; ++i) {
    if (dim > dim_budget / p)
      fail(Errc::ResourceBudgetExceeded, "dim u(g,chi) = p^n exceeds the budget");
    dim *= p;
  }

  PbwCtx ctx{&f, &data, p, {}};
  for (int i = 0; i < data.n; ++i) ctx.chi_p.push_back(f.pow(data.chi[i], p));

  auto mono_of_index = [&](long idx) {
    Mono m(data.n, 0);
    for (int i = 0; i < data.n; ++i) {
      m[i] = (int)(idx % p);
      idx /= p;
    }
    return m;
  };
  auto index_of_mono = [&](const Mono& m) {
    long idx = 0;
    for (int i = data.n - 1; i >= 0; --i) idx = idx * p + m[i];
    return idx;
  };
  auto label_of = [&](const Mono& m) {
    std::string s;
    for (int i = 0; i < data.n; ++i) {
      if (m[i] == 0) continue;
      std::string gl = i < (int)data.labels.size() ? data.labels[i] : "x" + std::to_string(i);
      s += (s.empty() ? "" : " ") + gl;
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? std::string("1") : s;
  };

  auto A = std::make_shared<AlgebraTable>();
  A->field = F;
  A->dim = (int)dim;
  A->name = "u(g,chi) n=" + std::to_string(data.n) + " p=" + std::to_string(p);
  A->family = "restricted_enveloping";
  for (long i = 0; i < dim; ++i) A->basis.push_back(label_of(mono_of_index(i)));
  A->sc.assign((size_t)dim * dim, {});

  for (long bi = 0; bi < dim; ++bi) {
    Mono b = mono_of_index(bi);
    for (long ai = 0; ai < dim; ++ai) {
      Mono a = mono_of_index(ai);
      // e_a * e_b: multiply e_a by the generator word of b, in PBW order
      Elem acc;
      acc.emplace(a, f.one());
      for (int g = 0; g < data.n; ++g)
        for (int rep = 0; rep < b[g]; ++rep) {
          Elem next;
          elem_times_gen(ctx, acc, g, next);
          acc = std::move(next);
        }
      auto& out = A->sc[(size_t)ai * dim + bi];
      for (const auto& [m, s] : acc) out.emplace_back((int)index_of_mono(m), s);
      std::sort(out.begin(), out.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  }

  A->unit.assign(dim, f.zero());
  A->unit[0] = f.one();

  bool chi_zero = true;
  for (const auto& c : data.chi)
    if (!f.is_zero(c)) chi_zero = false;
  if (chi_zero) {
    std::vector<Scalar> aug(dim, f.zero());
    aug[0] = f.one();
    A->augmentation = std::move(aug);
  }
  for (int g = 0; g < data.n; ++g) {
    Mono m(data.n, 0);
    m[g] = 1;
    std::vector<Scalar> v(dim, f.zero());
    v[index_of_mono(m)] = f.one();
    A->generators.push_back(std::move(v));
  }
  return A;
}

// ---------- quantum nilpotent algebras ----------

namespace {

// monomials E1^a E12^b E2^c with straightening
// E2 E1 = q E1 E2 - q E12,  E12 E1 = q^{-1} E1 E12,  E2 E12 = q^{-1} E12 E2
struct QCtx {
  const Field* f;
  long ell;
  Scalar q, qinv;
};

using QMono = std::array<int, 3>;
using QElem = std::map<QMono, Scalar>;

void q_add(const QCtx& c, QElem& e, const QMono& m, const Scalar& s) {
  if (c.f->is_zero(s)) return;
  auto it = e.find(m);
  if (it == e.end())
    e.emplace(m, s);
  else {
    it->second = c.f->add(it->second, s);
    if (c.f->is_zero(it->second)) e.erase(it);
  }
}

// gen: 0 = E1, 1 = E12, 2 = E2
void q_mono_times_gen(const QCtx& c, const QMono& m, int gen, const Scalar& coeff, QElem& out) {
  const Field& f = *c.f;
  auto [a, b, cc] = m;
  switch (gen) {
    case 2: {
      if (cc + 1 < c.ell) q_add(c, out, {a, b, cc + 1}, coeff);
      return;
    }
    case 1: {
      if (cc > 0) {
        // strip one E2: m' E2 E12 = q^{-1} (m' E12) E2
        QMono mp{a, b, cc - 1};
        QElem tmp;
        q_mono_times_gen(c, mp, 1, f.mul(coeff, c.qinv), tmp);
        for (const auto& [mm, ss] : tmp) q_mono_times_gen(c, mm, 2, ss, out);
        return;
      }
      if (b + 1 < c.ell) q_add(c, out, {a, b + 1, cc}, coeff);
      return;
    }
    case 0: {
      if (cc > 0) {
        // m' E2 E1 = q (m' E1) E2 - q (m' E12)
        QMono mp{a, b, cc - 1};
        QElem tmp;
        q_mono_times_gen(c, mp, 0, f.mul(coeff, c.q), tmp);
        for (const auto& [mm, ss] : tmp) q_mono_times_gen(c, mm, 2, ss, out);
        q_mono_times_gen(c, mp, 1, f.neg(f.mul(coeff, c.q)), out);
        return;
      }
      if (b > 0) {
        // m' E12 E1 = q^{-1} (m' E1) E12
        QMono mp{a, b - 1, cc};
        QElem tmp;
        q_mono_times_gen(c, mp, 0, f.mul(coeff, c.qinv), tmp);
        for (const auto& [mm, ss] : tmp) q_mono_times_gen(c, mm, 1, ss, out);
        return;
      }
      if (a + 1 < c.ell) q_add(c, out, {a + 1, b, cc}, coeff);
      return;
    }
  }
}

}  // namespace

AlgebraPtr quantum_nilpotent(QuantumType type, long ell, FieldPtr F) {
  if (ell <= 1 || ell % 2 == 0)
    fail(Errc::EvenEll, "quantum nilpotent algebras need odd ell > 1");
  const Field& f = *F;
  Scalar q = primitive_root_of_unity(f, ell);

  if (type == QuantumType::A1) {
    auto A = truncated_poly(ell, F);
    auto B = std::make_shared<AlgebraTable>(*A);
    B->name = "u_q>0(A1) ell=" + std::to_string(ell);
    B->family = "quantum_nilpotent";
    for (long i = 1; i < ell; ++i) B->basis[i] = "E^" + std::to_string(i);
    return B;
  }
  if (type == QuantumType::A1xA1) {
    auto A = truncated_poly(ell, F);
    auto T = std::make_shared<AlgebraTable>(tensor_product(*A, *A));
    T->name = "u_q>0(A1xA1) ell=" + std::to_string(ell);
    T->family = "quantum_nilpotent";
    return T;
  }

  // A2: PBW basis E1^a E12^b E2^c
  QCtx ctx{&f, ell, q, f.inv(q)};
  const long dim = ell * ell * ell;
  auto idx = [&](const QMono& m) { return m[0] + ell * (m[1] + ell * m[2]); };
  auto mono_at = [&](long i) {
    QMono m;
    m[0] = (int)(i % ell);
    m[1] = (int)((i / ell) % ell);
    m[2] = (int)(i / (ell * ell));
    return m;
  };
  auto label_of = [&](const QMono& m) {
    std::string s;
    auto part = [&](const char* g, int e) {
      if (e == 0) return;
      s += (s.empty() ? "" : " ") + std::string(g);
      if (e > 1) s += "^" + std::to_string(e);
    };
    part("E1", m[0]);
    part("E12", m[1]);
    part("E2", m[2]);
    return s.empty() ? std::string("1") : s;
  };

  auto A = std::make_shared<AlgebraTable>();
  A->field = F;
  A->dim = (int)dim;
  A->name = "u_q>0(A2) ell=" + std::to_string(ell);
  A->family = "quantum_nilpotent";
  for (long i = 0; i < dim; ++i) A->basis.push_back(label_of(mono_at(i)));
  A->sc.assign((size_t)dim * dim, {});
  for (long bi = 0; bi < dim; ++bi) {
    QMono b = mono_at(bi);
    for (long ai = 0; ai < dim; ++ai) {
      QElem acc;
      acc.emplace(mono_at(ai), f.one());
      auto mul_gen_power = [&](int gen, int count) {
        for (int r = 0; r < count; ++r) {
          QElem next;
          for (const auto& [m, s] : acc) q_mono_times_gen(ctx, m, gen, s, next);
          acc = std::move(next);
        }
      };
      mul_gen_power(0, b[0]);
      mul_gen_power(1, b[1]);
      mul_gen_power(2, b[2]);
      auto& out = A->sc[(size_t)ai * dim + bi];
      for (const auto& [m, s] : acc) out.emplace_back((int)idx(m), s);
      std::sort(out.begin(), out.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  }
  A->unit.assign(dim, f.zero());
  A->unit[0] = f.one();
  std::vector<Scalar> aug(dim, f.zero());
  aug[0] = f.one();
  A->augmentation = std::move(aug);
  for (int g : {0, 2}) {  // E1 and E2 generate; E12 is a commutator
    QMono m{0, 0, 0};
    m[g == 0 ? 0 : 2] = 1;
    std::vector<Scalar> v(dim, f.zero());
    v[idx(m)] = f.one();
    A->generators.push_back(std::move(v));
  }
  return A;
}

// ---------- smash products ----------

AlgebraPtr smash_group(const AlgebraPtr& R, const std::vector<long>& invariant_factors,
                       const std::vector<Matrix>& action_of_generators) {
  const Field& f = R->k();
  check(invariant_factors.size() == action_of_generators.size(),
        "one action matrix per group generator");
  long order = 1;
  for (long n : invariant_factors) {
    check(n >= 1, "invariant factors must be positive");
    order *= n;
  }
  long p = f.characteristic();
  if (p != 0 && order % p == 0)
    fail(Errc::BadOrder, "the characteristic divides |G| = " + std::to_string(order));

  // each generator must be an algebra automorphism of the right order and
  // the generators must commute
  const int d = R->dim;
  for (size_t t = 0; t < action_of_generators.size(); ++t) {
    const Matrix& phi = action_of_generators[t];
    check(phi.rows == d && phi.cols == d, "action matrix has wrong shape");
    if (!inverse(f, phi)) fail(Errc::NotAutomorphism, "action matrix is singular");
    if (!(mat_vec(f, phi, R->unit) == R->unit))
      fail(Errc::NotAutomorphism, "action does not fix the unit");
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        auto lhs = mat_vec(f, phi, R->basis_product(i, j));
        auto rhs = R->multiply(phi.col(i), phi.col(j));
        if (!(lhs == rhs)) fail(Errc::NotAutomorphism, "action is not multiplicative");
      }
    Matrix pw = Matrix::identity(d, f);
    for (long e = 0; e < invariant_factors[t]; ++e) pw = mat_mul(f, phi, pw);
    if (!mat_eq(pw, Matrix::identity(d, f)))
      fail(Errc::NotAutomorphism, "action order does not divide the invariant factor");
    for (size_t u = 0; u < t; ++u) {
      Matrix ab = mat_mul(f, phi, action_of_generators[u]);
      Matrix ba = mat_mul(f, action_of_generators[u], phi);
      if (!mat_eq(ab, ba)) fail(Errc::NotAutomorphism, "group actions must commute");
    }
  }

  const int m = (int)invariant_factors.size();
  auto g_count = order;
  auto g_at = [&](long idx) {
    std::vector<int> g(m);
    for (int i = 0; i < m; ++i) {
      g[i] = (int)(idx % invariant_factors[i]);
      idx /= invariant_factors[i];
    }
    return g;
  };
  auto g_index = [&](const std::vector<int>& g) {
    long idx = 0;
    for (int i = m - 1; i >= 0; --i) idx = idx * invariant_factors[i] + g[i];
    return idx;
  };
  // action matrix of each group element (product of generator powers)
  std::vector<Matrix> act_of(g_count, Matrix::identity(d, f));
  for (long gi = 0; gi < g_count; ++gi) {
    auto g = g_at(gi);
    Matrix a = Matrix::identity(d, f);
    for (int t = 0; t < m; ++t)
      for (int e = 0; e < g[t]; ++e) a = mat_mul(f, action_of_generators[t], a);
    act_of[gi] = std::move(a);
  }

  const long dim = (long)d * g_count;
  auto idx = [&](int r, long gi) { return (long)r + (long)d * gi; };

  auto A = std::make_shared<AlgebraTable>();
  A->field = R->field;
  A->dim = (int)dim;
  A->name = R->name + "#kG";
  A->family = "smash_group";
  for (long gi = 0; gi < g_count; ++gi) {
    auto g = g_at(gi);
    std::string gl = "g(";
    for (int i = 0; i < m; ++i) gl += (i ? "," : "") + std::to_string(g[i]);
    gl += ")";
    for (int r = 0; r < d; ++r) A->basis.push_back(R->basis[r] + "*" + gl);
  }
  A->sc.assign((size_t)dim * dim, {});
  for (long gi = 0; gi < g_count; ++gi)
    for (long hi = 0; hi < g_count; ++hi) {
      auto g = g_at(gi), h = g_at(hi);
      std::vector<int> gh(m);
      for (int i = 0; i < m; ++i) gh[i] = (int)((g[i] + h[i]) % invariant_factors[i]);
      long ghi = g_index(gh);
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) {
          // (r g)(s h) = r (g.s) gh
          auto gs = act_of[gi].col(s);
          auto rs = R->multiply(R->basis_vector(r), gs);
          auto& out = A->sc[(size_t)idx(r, gi) * dim + idx(s, hi)];
          for (int t = 0; t < d; ++t)
            if (!f.is_zero(rs[t])) out.emplace_back((int)idx(t, ghi), rs[t]);
          std::sort(out.begin(), out.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
        }
    }
  A->unit.assign(dim, f.zero());
  for (int r = 0; r < d; ++r) A->unit[idx(r, 0)] = R->unit[r];

  if (R->augmentation) {
    bool preserved = true;
    for (const auto& phi : action_of_generators) {
      for (int j = 0; j < d && preserved; ++j)
        if (!f.eq(R->aug_of(phi.col(j)), (*R->augmentation)[j])) preserved = false;
    }
    if (preserved) {
      std::vector<Scalar> aug(dim, f.zero());
      for (long gi = 0; gi < g_count; ++gi)
        for (int r = 0; r < d; ++r) aug[idx(r, gi)] = (*R->augmentation)[r];
      A->augmentation = std::move(aug);
    }
  }
  // generators: R generators in the identity component, plus group generators
  for (const auto& gr : R->generators) {
    std::vector<Scalar> v(dim, f.zero());
    for (int r = 0; r < d; ++r) v[idx(r, 0)] = gr[r];
    A->generators.push_back(std::move(v));
  }
  for (int t = 0; t < m; ++t) {
    std::vector<int> g(m, 0);
    g[t] = 1;
    long gi = g_index(g);
    std::vector<Scalar> v(dim, f.zero());
    for (int r = 0; r < d; ++r) v[idx(r, gi)] = R->unit[r];
    A->generators.push_back(std::move(v));
  }
  return A;
}

// ---------- Hecke algebras of type A ----------

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

int inversions(const std::vector<int>& w) {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

}  // namespace

AlgebraPtr hecke_typeA(int strands, const Scalar& q, FieldPtr F) {
  const Field& f = *F;
  if (f.is_zero(q)) fail(Errc::BadOrder, "Hecke parameter q must be nonzero");
  if (strands < 2 || strands > 5)
    fail(Errc::ResourceBudgetExceeded, "strand count limited to 2..5 (dim n!)");
  const int n = strands;

  auto perms = all_permutations(n);  // lex order; identity first
  const int dim = (int)perms.size();
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < dim; ++i) index_of[perms[i]] = i;
  std::vector<int> len(dim);
  for (int i = 0; i < dim; ++i) len[i] = inversions(perms[i]);

  // right multiplication by s_i swaps entries at positions i, i+1
  auto right_s = [&](int w, int s) {
    auto v = perms[w];
    std::swap(v[s], v[s + 1]);
    return index_of[v];
  };

  // reduced word for each permutation via BFS from the identity
  std::vector<int> parent(dim, -1), parent_gen(dim, -1);
  {
    std::vector<int> order = {0};
    std::vector<bool> seen(dim, false);
    seen[0] = true;
    for (size_t h = 0; h < order.size(); ++h) {
      int w = order[h];
      for (int s = 0; s + 1 < n; ++s) {
        int u = right_s(w, s);
        if (!seen[u] && len[u] == len[w] + 1) {
          seen[u] = true;
          parent[u] = w;
          parent_gen[u] = s;
          order.push_back(u);
        }
      }
    }
  }
  auto reduced_word = [&](int w) {
    std::vector<int> word;
    while (parent[w] >= 0) {
      word.push_back(parent_gen[w]);
      w = parent[w];
    }
    std::reverse(word.begin(), word.end());
    return word;
  };

  // sparse element: perm index -> coefficient
  using HElem = std::map<int, Scalar>;
  Scalar qm1 = f.sub(q, f.one());
  auto mul_by_s = [&](const HElem& e, int s) {
    HElem out;
    for (const auto& [w, c] : e) {
      int ws = right_s(w, s);
      if (len[ws] > len[w]) {
        auto it = out.find(ws);
        if (it == out.end()) out[ws] = c;
        else it->second = f.add(it->second, c);
      } else {
        // T_w T_s = q T_{ws} + (q-1) T_w
        auto& a = out[ws];
        a = f.add(a, f.mul(q, c));
        auto& b = out[w];
        b = f.add(b, f.mul(qm1, c));
      }
    }
    for (auto it = out.begin(); it != out.end();)
      it = f.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
  };

  auto A = std::make_shared<AlgebraTable>();
  A->field = F;
  A->dim = dim;
  A->name = "hecke_A(n=" + std::to_string(n) + ")";
  A->family = "hecke_typeA";
  for (int i = 0; i < dim; ++i) {
    std::string lbl = "T[";
    for (int j = 0; j < n; ++j) lbl += std::to_string(perms[i][j] + 1);
    A->basis.push_back(lbl + "]");
  }
  A->sc.assign((size_t)dim * dim, {});
  for (int b = 0; b < dim; ++b) {
    auto word = reduced_word(b);
    for (int a = 0; a < dim; ++a) {
      HElem acc;
      acc[a] = f.one();
      for (int s : word) acc = mul_by_s(acc, s);
      auto& out = A->sc[(size_t)a * dim + b];
      for (const auto& [w, c] : acc) out.emplace_back(w, c);
    }
  }
  A->unit.assign(dim, f.zero());
  A->unit[0] = f.one();
  // index representation T_w -> q^{len(w)}
  std::vector<Scalar> aug(dim, f.zero());
  for (int i = 0; i < dim; ++i) aug[i] = f.pow(q, len[i]);
  A->augmentation = std::move(aug);
  for (int s = 0; s + 1 < n; ++s) {
    std::vector<Scalar> v(dim, f.zero());
    v[right_s(0, s)] = f.one();
    A->generators.push_back(std::move(v));
  }
  return A;
}

// ---------- finiteness certificates ----------

const char* fg_status_name(FgStatus s) {
  switch (s) {
    case FgStatus::certified: return "certified";
    case FgStatus::asserted: return "asserted";
    case FgStatus::unknown: return "unknown";
  }
  return "unknown";
}

FgCertificate fg_certificate(const std::string& family, long characteristic) {
  if (family == "hecke_typeA") {
    if (characteristic == 0)
      return {FgStatus::certified,
              "even Hochschild cohomology of Hecke algebras of classical type in "
              "characteristic zero is finitely generated and acts finitely on Ext "
              "(Linckelmann)"};
    return {FgStatus::unknown, "no finiteness certificate in positive characteristic"};
  }
  if (family == "restricted_enveloping")
    return {FgStatus::certified,
            "reduced enveloping algebras carry a finitely generated commutative "
            "cohomology subalgebra acting finitely on Ext (via Friedlander-Suslin)"};
  if (family == "quantum_nilpotent")
    return {FgStatus::certified,
            "nilpotent parts of small quantum groups at odd roots of unity have "
            "finitely generated even cohomology acting finitely on Ext (Drupieski)"};
  if (family == "elementary_abelian")
    return {FgStatus::asserted, "group algebra cohomology is finitely generated (Evens-Venkov)"};
  if (family == "truncated_poly")
    return {FgStatus::certified,
            "truncated polynomial algebras have explicitly periodic resolutions; "
            "their cohomology is finitely generated (classical)"};
  if (family == "smash_group")
    return {FgStatus::asserted,
            "smash products with groups of invertible order inherit cohomological "
            "finiteness from the base algebra (classical transfer)"};
  return {FgStatus::unknown, "user-supplied algebra without a certificate"};
}

}  // namespace repwild
