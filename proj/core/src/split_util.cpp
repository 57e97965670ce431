#include "split_util.hpp"

#include <algorithm>

namespace repwild::detail {

Poly poly_trim(const Field& f, Poly p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
  return p;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, f.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!f.is_zero(b[j])) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return poly_trim(f, r);
}

void poly_divmod(const Field& f, const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  check(!b.empty(), "polynomial division by zero");
  rem = poly_trim(f, a);
  quo.clear();
  const size_t db = b.size() - 1;
  Scalar li = f.inv(b.back());
  while (rem.size() > db) {
    size_t shift = rem.size() - 1 - db;
    Scalar c = f.mul(rem.back(), li);
    if (quo.size() <= shift) quo.resize(shift + 1, f.zero());
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b[i]));
    rem = poly_trim(f, rem);
    if (rem.empty()) break;
  }
  quo = poly_trim(f, quo);
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  a = poly_trim(f, std::move(a));
  b = poly_trim(f, std::move(b));
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(f, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar li = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, li);
  }
  return a;
}

PolyXgcd poly_xgcd(const Field& f, Poly a, Poly b) {
  Poly u0 = {f.one()}, v0 = {}, u1 = {}, v1 = {f.one()};
  a = poly_trim(f, std::move(a));
  b = poly_trim(f, std::move(b));
  auto sub = [&](const Poly& x, const Poly& y) {
    Poly r = x;
    if (r.size() < y.size()) r.resize(y.size(), f.zero());
    for (size_t i = 0; i < y.size(); ++i) r[i] = f.sub(r[i], y[i]);
    return poly_trim(f, r);
  };
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(f, a, b, q, r);
    Poly u2 = sub(u0, poly_mul(f, q, u1));
    Poly v2 = sub(v0, poly_mul(f, q, v1));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!a.empty()) {
    Scalar li = f.inv(a.back());
    auto scale = [&](Poly& p) {
      for (auto& c : p) c = f.mul(c, li);
    };
    scale(a);
    scale(u0);
    scale(v0);
  }
  return {a, u0, v0};
}

Scalar poly_eval(const Field& f, const Poly& p, const Scalar& x) {
  Scalar r = f.zero();
  for (size_t i = p.size(); i-- > 0;) r = f.add(f.mul(r, x), p[i]);
  return r;
}

Poly poly_derivative(const Field& f, const Poly& p) {
  Poly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(f.mul(p[i], f.from_int((long)i)));
  return poly_trim(f, r);
}

namespace {

// deterministic rational root candidates by the rational root theorem
std::vector<Rat> rational_root_candidates(const std::vector<Rat>& coeffs) {
  // clear denominators to an integer polynomial
  mpz_class denlcm = 1;
  for (const auto& c : coeffs) {
    mpz_class d = c.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), denlcm.get_mpz_t(), d.get_mpz_t());
    denlcm = denlcm / g * d;
  }
  std::vector<mpz_class> ic;
  ic.reserve(coeffs.size());
  for (const auto& c : coeffs) ic.push_back(mpz_class(c.num() * (denlcm / c.den())));
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  if (ic.empty()) return {Rat(0)};

  // strip powers of t
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  std::vector<Rat> out;
  if (low > 0) out.push_back(Rat(0));
  if (low >= ic.size() - 1) return out;

  mpz_class a0 = abs(ic[low]), an = abs(ic.back());
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    if (n == 0) return ds;
    mpz_class bound = 1000000;
    for (mpz_class d = 1; d * d <= n && d <= bound; ++d) {
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
  };
  auto ps = divisors(a0), qs = divisors(an);
  for (const auto& q : qs)
    for (const auto& p : ps) {
      Rat r(mpq_class(p, q));
      out.push_back(r);
      out.push_back(-r);
    }
  return out;
}

}  // namespace

RootSplit find_roots(const Field& f, Poly p) {
  p = poly_trim(f, std::move(p));
  RootSplit out;
  if (p.empty()) {
    out.leftover = p;
    return out;
  }
  // normalize monic
  Scalar li = f.inv(p.back());
  for (auto& c : p) c = f.mul(c, li);

  std::vector<Scalar> candidates;
  switch (f.kind()) {
    case FieldKind::prime:
    case FieldKind::finite_extension: {
      auto sz = f.size();
      check(sz && *sz <= 65536, "finite field too large for root enumeration");
      for (long i = 0; i < *sz; ++i) candidates.push_back(f.element_at(i));
      break;
    }
    case FieldKind::rationals: {
      std::vector<Rat> coeffs;
      for (const auto& c : p) coeffs.push_back(std::get<Rat>(c.v));
      candidates.push_back(f.zero());
      for (const auto& r : rational_root_candidates(coeffs)) candidates.push_back(Scalar(r));
      break;
    }
    case FieldKind::cyclotomic: {
      // zero, torsion units, and rational candidates from the constant slice
      candidates.push_back(f.zero());
      long m = f.descriptor().ell;
      Scalar z = f.generator();
      Scalar x = f.one();
      for (long j = 0; j < m; ++j) {
        candidates.push_back(x);
        candidates.push_back(f.neg(x));
        x = f.mul(x, z);
      }
      std::vector<Rat> slice0;
      for (const auto& c : p) slice0.push_back(std::get<CycElem>(c.v).c[0]);
      for (const auto& r : rational_root_candidates(slice0)) {
        CycElem e;
        e.c.assign(f.degree(), Rat(0));
        e.c[0] = r;
        candidates.push_back(Scalar(std::move(e)));
      }
      break;
    }
  }

  for (const auto& c : candidates) {
    if (p.size() <= 1) break;
    int mult = 0;
    while (p.size() > 1 && f.is_zero(poly_eval(f, p, c))) {
      Poly lin = {f.neg(c), f.one()};
      Poly q, r;
      poly_divmod(f, p, lin, q, r);
      check(poly_trim(f, r).empty(), "root division must be exact");
      p = std::move(q);
      ++mult;
    }
    if (mult > 0) {
      // skip duplicates from the candidate list
      bool seen = false;
      for (auto& [rc, rm] : out.roots)
        if (f.eq(rc, c)) {
          rm += mult;
          seen = true;
        }
      if (!seen) out.roots.emplace_back(c, mult);
    }
  }
  out.leftover = p;
  return out;
}

std::vector<Scalar> elem_power(const AlgebraTable& A, const std::vector<Scalar>& e,
                               const std::vector<Scalar>& u, int k) {
  std::vector<Scalar> r = e;
  for (int i = 0; i < k; ++i) r = A.multiply(r, u);
  return r;
}

std::vector<Scalar> poly_eval_elem(const AlgebraTable& A, const Poly& p,
                                   const std::vector<Scalar>& e, const std::vector<Scalar>& u) {
  const Field& f = A.k();
  std::vector<Scalar> r(A.dim, f.zero());
  std::vector<Scalar> pw = e;
  for (size_t i = 0; i < p.size(); ++i) {
    if (!f.is_zero(p[i]))
      for (int j = 0; j < A.dim; ++j) r[j] = f.add(r[j], f.mul(p[i], pw[j]));
    if (i + 1 < p.size()) pw = A.multiply(pw, u);
  }
  return r;
}

Poly min_poly_rel(const AlgebraTable& A, const std::vector<Scalar>& e,
                  const std::vector<Scalar>& u) {
  const Field& f = A.k();
  // stack powers e, u, u^2, ... until dependent
  std::vector<std::vector<Scalar>> powers = {e};
  for (;;) {
    Matrix m((int)powers.size(), A.dim, f.zero());
    for (size_t i = 0; i < powers.size(); ++i)
      for (int j = 0; j < A.dim; ++j) m.at((int)i, j) = powers[i][j];
    if (rank_of(f, m) < (int)powers.size()) {
      // u^k depends on lower powers: solve transpose system
      int k = (int)powers.size() - 1;
      Matrix lower(A.dim, k, f.zero());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < A.dim; ++j) lower.at(j, i) = powers[i][j];
      auto sol = solve(f, lower, powers[k]);
      check(sol.has_value(), "dependent power must be expressible");
      Poly mp(k + 1, f.zero());
      for (int i = 0; i < k; ++i) mp[i] = f.neg((*sol)[i]);
      mp[k] = f.one();
      return mp;
    }
    powers.push_back(A.multiply(powers.back(), u));
    check((int)powers.size() <= A.dim + 2, "minimal polynomial search exceeded dimension");
  }
}

std::vector<std::vector<Scalar>> split_by_element(const AlgebraTable& A,
                                                  const std::vector<Scalar>& e,
                                                  const std::vector<Scalar>& u) {
  const Field& f = A.k();
  Poly mu = min_poly_rel(A, e, u);
  if (mu.size() <= 2) return {};  // constant or linear: no split from u
  RootSplit rs = find_roots(f, mu);

  std::vector<Poly> pieces;
  for (auto& [c, m] : rs.roots) {
    Poly lin = {f.neg(c), f.one()};
    Poly piece = {f.one()};
    for (int i = 0; i < m; ++i) piece = poly_mul(f, piece, lin);
    pieces.push_back(std::move(piece));
  }
  if (rs.leftover.size() > 1) pieces.push_back(rs.leftover);
  if (pieces.size() < 2) return {};

  std::vector<std::vector<Scalar>> idems;
  for (const auto& g : pieces) {
    // G = mu / g; projector = (b*G)(u) with a*g + b*G = 1
    Poly G, rem;
    poly_divmod(f, mu, g, G, rem);
    check(poly_trim(f, rem).empty(), "piece must divide the minimal polynomial");
    auto xg = poly_xgcd(f, g, G);
    check(xg.g.size() == 1, "pieces must be coprime");
    Poly proj = poly_mul(f, xg.v, G);
    idems.push_back(poly_eval_elem(A, proj, e, u));
  }
  return idems;
}

std::vector<Scalar> newton_idempotent(const AlgebraTable& A, std::vector<Scalar> x) {
  const Field& f = A.k();
  for (int iter = 0; iter < 64; ++iter) {
    auto x2 = A.multiply(x, x);
    bool idem = true;
    for (int j = 0; j < A.dim && idem; ++j)
      if (!f.eq(x2[j], x[j])) idem = false;
    if (idem) return x;
    // x <- 3x^2 - 2x^3
    auto x3 = A.multiply(x2, x);
    for (int j = 0; j < A.dim; ++j) {
      Scalar t = f.sub(f.mul(f.from_int(3), x2[j]), f.mul(f.from_int(2), x3[j]));
      x[j] = t;
    }
  }
  fail(Errc::InternalInvariant, "idempotent lifting did not converge");
}

}  // namespace repwild::detail
