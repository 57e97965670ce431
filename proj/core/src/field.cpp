#include "repwild/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace repwild {

// ---------- Rat ----------

Rat::Rat(long n, long d) {
  if (d == 0) fail(Errc::InternalInvariant, "rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) fail(Errc::InternalInvariant, "division by zero rational");
  return Rat(mpq_class(q_ / o.q_));
}

Rat Rat::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(Errc::SchemaError, "bad rational literal '" + s + "'");
  q.canonicalize();
  return Rat(q);
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// ---------- small number theory ----------

bool is_prime_long(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

int64_t mod_norm(int64_t a, int64_t p) {
  a %= p;
  if (a < 0) a += p;
  return a;
}

int64_t mod_pow(int64_t a, int64_t e, int64_t p) {
  int64_t r = 1 % p;
  a = mod_norm(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

int64_t mod_inv(int64_t a, int64_t p) {
  // p prime
  a = mod_norm(a, p);
  if (a == 0) fail(Errc::InternalInvariant, "inverse of zero in prime field");
  return mod_pow(a, p - 2, p);
}

using FpPoly = std::vector<int64_t>;  // low degree first, entries in [0,p)

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

// remainder of a mod f, f monic
FpPoly fp_rem(FpPoly a, const FpPoly& f, int64_t p) {
  fp_trim(a);
  const size_t df = f.size() - 1;
  while (a.size() > df) {
    int64_t lead = a.back();
    size_t shift = a.size() - 1 - df;
    if (lead != 0) {
      for (size_t i = 0; i < f.size(); ++i) {
        size_t k = shift + i;
        a[k] = mod_norm(a[k] - lead * f[i] % p, p);
      }
    }
    a.pop_back();
    fp_trim(a);
    if (a.size() <= df) break;
  }
  fp_trim(a);
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, int64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    // make b monic for fp_rem
    int64_t li = mod_inv(b.back(), p);
    FpPoly bm = b;
    for (auto& c : bm) c = c * li % p;
    FpPoly r = fp_rem(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    int64_t li = mod_inv(a.back(), p);
    for (auto& c : a) c = c * li % p;
  }
  return a;
}

// x^(p^k) mod f by repeated p-power squaring
FpPoly fp_xq_power(const FpPoly& f, int64_t p, int k) {
  FpPoly x = {0, 1};
  FpPoly r = fp_rem(x, f, p);
  mpz_class e = 1;
  for (int i = 0; i < k; ++i) e *= p;
  // binary powering of x^e mod f
  FpPoly acc = {1};
  FpPoly base = r;
  mpz_class ee = e;
  while (ee > 0) {
    if (mpz_odd_p(ee.get_mpz_t())) acc = fp_rem(fp_mul(acc, base, p), f, p);
    base = fp_rem(fp_mul(base, base, p), f, p);
    ee >>= 1;
  }
  return acc;
}

// Rabin irreducibility test for monic f over F_p.
bool fp_irreducible(const FpPoly& f, int64_t p) {
  int n = (int)f.size() - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  // x^(p^n) == x mod f
  FpPoly xq = fp_xq_power(f, p, n);
  FpPoly x = fp_rem({0, 1}, f, p);
  if (xq != x) return false;
  // gcd(x^(p^(n/r)) - x, f) == 1 for each prime r | n
  std::vector<int> primes;
  int m = n;
  for (int d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      if (primes.empty() || primes.back() != d) primes.push_back(d);
      m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (int r : primes) {
    FpPoly g = fp_xq_power(f, p, n / r);
    // g - x
    FpPoly diff = g;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod_norm(diff[1] - 1, p);
    fp_trim(diff);
    FpPoly gc = fp_gcd(diff, f, p);
    if (!(gc.size() == 1)) return false;
  }
  return true;
}

using QPoly = std::vector<Rat>;  // low degree first

void q_trim(QPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  q_trim(r);
  return r;
}

// a mod f, f monic
QPoly q_rem(QPoly a, const QPoly& f) {
  q_trim(a);
  const size_t df = f.size() - 1;
  while (a.size() > df) {
    Rat lead = a.back();
    size_t shift = a.size() - 1 - df;
    if (!lead.is_zero()) {
      for (size_t i = 0; i < f.size(); ++i) a[shift + i] = a[shift + i] - lead * f[i];
    }
    a.pop_back();
    q_trim(a);
    if (a.size() <= df) break;
  }
  q_trim(a);
  return a;
}

// extended euclid over Q[t]: returns (g, u, v) with u*a + v*b = g, g monic or zero
struct QXgcd {
  QPoly g, u, v;
};

QPoly q_scale(const QPoly& a, const Rat& s) {
  QPoly r = a;
  for (auto& c : r) c = c * s;
  q_trim(r);
  return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  q_trim(r);
  return r;
}

// division with remainder: a = q*b + r
void q_divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  rem = a;
  q_trim(rem);
  quo.clear();
  if (b.empty()) fail(Errc::InternalInvariant, "poly division by zero");
  size_t db = b.size() - 1;
  Rat lb = b.back();
  if (rem.size() > db) quo.assign(rem.size() - db, Rat(0));
  while (rem.size() > db || (rem.size() == b.size() && !rem.empty())) {
    if (rem.size() < b.size()) break;
    size_t shift = rem.size() - b.size();
    Rat c = rem.back() / lb;
    if (quo.size() <= shift) quo.resize(shift + 1, Rat(0));
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] = rem[shift + i] - c * b[i];
    q_trim(rem);
    if (rem.empty()) break;
  }
  q_trim(quo);
}

QXgcd q_xgcd(QPoly a, QPoly b) {
  QPoly u0 = {Rat(1)}, v0 = {}, u1 = {}, v1 = {Rat(1)};
  q_trim(a);
  q_trim(b);
  while (!b.empty()) {
    QPoly quo, rem;
    q_divmod(a, b, quo, rem);
    QPoly u2 = q_sub(u0, q_mul(quo, u1));
    QPoly v2 = q_sub(v0, q_mul(quo, v1));
    a = std::move(b);
    b = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!a.empty()) {
    Rat s = Rat(1) / a.back();
    a = q_scale(a, s);
    u0 = q_scale(u0, s);
    v0 = q_scale(v0, s);
  }
  return {a, u0, v0};
}

}  // namespace

// ---------- cyclotomic polynomials ----------

std::vector<mpz_class> cyclotomic_polynomial(long ell) {
  // Phi_ell = (x^ell - 1) / prod_{d | ell, d < ell} Phi_d, exact integer division
  std::vector<std::vector<mpz_class>> phi(ell + 1);
  for (long n = 1; n <= ell; ++n) {
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      // divide num by phi[d]
      const auto& g = phi[d];
      std::vector<mpz_class> quo(num.size() - g.size() + 1, 0);
      std::vector<mpz_class> rem = num;
      for (long i = (long)quo.size() - 1; i >= 0; --i) {
        mpz_class c = rem[i + g.size() - 1] / g.back();
        quo[i] = c;
        if (c != 0)
          for (size_t j = 0; j < g.size(); ++j) rem[i + j] -= c * g[j];
      }
      num = std::move(quo);
    }
    phi[n] = std::move(num);
  }
  return phi[ell];
}

// ---------- FieldDescriptor ----------

FieldDescriptor FieldDescriptor::prime(long p) {
  if (!is_prime_long(p)) fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p));
  FieldDescriptor d;
  d.kind = FieldKind::prime;
  d.p = p;
  return d;
}

FieldDescriptor FieldDescriptor::finite_extension(long p, std::vector<long> modulus) {
  if (!is_prime_long(p)) fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p));
  FieldDescriptor d;
  d.kind = FieldKind::finite_extension;
  d.p = p;
  d.modulus = std::move(modulus);
  return d;
}

FieldDescriptor FieldDescriptor::cyclotomic(long ell) {
  if (ell < 2) fail(Errc::SchemaError, "cyclotomic order must be >= 2");
  FieldDescriptor d;
  d.kind = FieldKind::cyclotomic;
  d.ell = ell;
  return d;
}

long FieldDescriptor::characteristic() const {
  switch (kind) {
    case FieldKind::rationals:
    case FieldKind::cyclotomic: return 0;
    case FieldKind::prime:
    case FieldKind::finite_extension: return p;
  }
  return 0;
}

// ---------- Field ----------

Field::Field(FieldDescriptor d) : desc_(std::move(d)) {
  switch (desc_.kind) {
    case FieldKind::rationals: break;
    case FieldKind::prime:
      if (!is_prime_long(desc_.p)) fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(desc_.p));
      break;
    case FieldKind::finite_extension: {
      if (!is_prime_long(desc_.p)) fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(desc_.p));
      auto& m = desc_.modulus;
      if (m.size() < 2) fail(Errc::ReducibleModulus, "modulus must have degree >= 1");
      for (auto& c : m) c = mod_norm(c, desc_.p);
      if (m.back() != 1) {
        // normalize to monic
        int64_t li = mod_inv(m.back(), desc_.p);
        for (auto& c : m) c = c * li % desc_.p;
      }
      FpPoly f(m.begin(), m.end());
      if (!fp_irreducible(f, desc_.p))
        fail(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(desc_.p));
      degree_ = (int)m.size() - 1;
      break;
    }
    case FieldKind::cyclotomic: {
      if (desc_.ell < 2) fail(Errc::SchemaError, "cyclotomic order must be >= 2");
      auto phi = cyclotomic_polynomial(desc_.ell);
      cyc_mod_.reserve(phi.size());
      for (auto& c : phi) cyc_mod_.push_back(Rat(mpq_class(c)));
      degree_ = (int)phi.size() - 1;
      break;
    }
  }
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long n) const {
  switch (desc_.kind) {
    case FieldKind::rationals: return Scalar(Rat(n));
    case FieldKind::prime: return Scalar((int64_t)mod_norm(n, desc_.p));
    case FieldKind::finite_extension: {
      FFElem e;
      e.c.assign(degree_, 0);
      e.c[0] = mod_norm(n, desc_.p);
      return Scalar(std::move(e));
    }
    case FieldKind::cyclotomic: {
      CycElem e;
      e.c.assign(degree_, Rat(0));
      e.c[0] = Rat(n);
      return Scalar(std::move(e));
    }
  }
  return Scalar(Rat(0));
}

bool Field::is_zero(const Scalar& a) const {
  switch (desc_.kind) {
    case FieldKind::rationals: return std::get<Rat>(a.v).is_zero();
    case FieldKind::prime: return std::get<int64_t>(a.v) == 0;
    case FieldKind::finite_extension: {
      for (auto c : std::get<FFElem>(a.v).c)
        if (c != 0) return false;
      return true;
    }
    case FieldKind::cyclotomic: {
      for (auto& c : std::get<CycElem>(a.v).c)
        if (!c.is_zero()) return false;
      return true;
    }
  }
  return false;
}

bool Field::is_one(const Scalar& a) const { return a == one(); }

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  switch (desc_.kind) {
    case FieldKind::rationals: return Scalar(std::get<Rat>(a.v) + std::get<Rat>(b.v));
    case FieldKind::prime: {
      int64_t r = std::get<int64_t>(a.v) + std::get<int64_t>(b.v);
      if (r >= desc_.p) r -= desc_.p;
      return Scalar(r);
    }
    case FieldKind::finite_extension: {
      FFElem r = std::get<FFElem>(a.v);
      const auto& bb = std::get<FFElem>(b.v);
      for (int i = 0; i < degree_; ++i) {
        r.c[i] += bb.c[i];
        if (r.c[i] >= desc_.p) r.c[i] -= desc_.p;
      }
      return Scalar(std::move(r));
    }
    case FieldKind::cyclotomic: {
      CycElem r = std::get<CycElem>(a.v);
      const auto& bb = std::get<CycElem>(b.v);
      for (int i = 0; i < degree_; ++i) r.c[i] = r.c[i] + bb.c[i];
      return Scalar(std::move(r));
    }
  }
  return a;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
  switch (desc_.kind) {
    case FieldKind::rationals: return Scalar(-std::get<Rat>(a.v));
    case FieldKind::prime: {
      int64_t r = std::get<int64_t>(a.v);
      return Scalar(r == 0 ? (int64_t)0 : desc_.p - r);
    }
    case FieldKind::finite_extension: {
      FFElem r = std::get<FFElem>(a.v);
      for (auto& c : r.c) c = (c == 0) ? 0 : desc_.p - c;
      return Scalar(std::move(r));
    }
    case FieldKind::cyclotomic: {
      CycElem r = std::get<CycElem>(a.v);
      for (auto& c : r.c) c = -c;
      return Scalar(std::move(r));
    }
  }
  return a;
}

FFElem Field::ff_reduce_mul(const FFElem& a, const FFElem& b) const {
  FpPoly pa(a.c.begin(), a.c.end()), pb(b.c.begin(), b.c.end());
  FpPoly prod = fp_mul(pa, pb, desc_.p);
  FpPoly f(desc_.modulus.begin(), desc_.modulus.end());
  FpPoly rem = fp_rem(prod, f, desc_.p);
  FFElem r;
  r.c.assign(degree_, 0);
  for (size_t i = 0; i < rem.size(); ++i) r.c[i] = rem[i];
  return r;
}

CycElem Field::cyc_reduce_mul(const CycElem& a, const CycElem& b) const {
  QPoly pa(a.c.begin(), a.c.end()), pb(b.c.begin(), b.c.end());
  q_trim(pa);
  q_trim(pb);
  QPoly prod = q_mul(pa, pb);
  QPoly rem = q_rem(prod, cyc_mod_);
  CycElem r;
  r.c.assign(degree_, Rat(0));
  for (size_t i = 0; i < rem.size(); ++i) r.c[i] = rem[i];
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  switch (desc_.kind) {
    case FieldKind::rationals: return Scalar(std::get<Rat>(a.v) * std::get<Rat>(b.v));
    case FieldKind::prime:
      return Scalar((int64_t)(std::get<int64_t>(a.v) * std::get<int64_t>(b.v) % desc_.p));
    case FieldKind::finite_extension:
      return Scalar(ff_reduce_mul(std::get<FFElem>(a.v), std::get<FFElem>(b.v)));
    case FieldKind::cyclotomic:
      return Scalar(cyc_reduce_mul(std::get<CycElem>(a.v), std::get<CycElem>(b.v)));
  }
  return a;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) fail(Errc::InternalInvariant, "inverse of zero");
  switch (desc_.kind) {
    case FieldKind::rationals: return Scalar(Rat(1) / std::get<Rat>(a.v));
    case FieldKind::prime: return Scalar(mod_inv(std::get<int64_t>(a.v), desc_.p));
    case FieldKind::finite_extension: {
      // extended euclid over F_p[t]
      const auto& av = std::get<FFElem>(a.v);
      FpPoly f(desc_.modulus.begin(), desc_.modulus.end());
      FpPoly r0 = f, r1(av.c.begin(), av.c.end());
      fp_trim(r1);
      FpPoly s0 = {}, s1 = {1};
      while (!r1.empty()) {
        // divide r0 by r1
        int64_t li = mod_inv(r1.back(), desc_.p);
        FpPoly quo;
        FpPoly rem = r0;
        fp_trim(rem);
        while (rem.size() >= r1.size() && !rem.empty()) {
          size_t shift = rem.size() - r1.size();
          int64_t c = rem.back() * li % desc_.p;
          if (quo.size() <= shift) quo.resize(shift + 1, 0);
          quo[shift] = c;
          for (size_t i = 0; i < r1.size(); ++i)
            rem[shift + i] = mod_norm(rem[shift + i] - c * r1[i] % desc_.p, desc_.p);
          fp_trim(rem);
        }
        FpPoly s2 = s0;
        // s2 = s0 - quo*s1
        FpPoly qs = fp_mul(quo, s1, desc_.p);
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = mod_norm(s2[i] - qs[i], desc_.p);
        fp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // r0 = gcd (degree 0 since modulus irreducible), s0 * a = r0 mod f
      check(r0.size() == 1, "gcd with irreducible modulus must be constant");
      int64_t gi = mod_inv(r0[0], desc_.p);
      FFElem r;
      r.c.assign(degree_, 0);
      for (size_t i = 0; i < s0.size(); ++i) r.c[i] = s0[i] * gi % desc_.p;
      return Scalar(std::move(r));
    }
    case FieldKind::cyclotomic: {
      const auto& av = std::get<CycElem>(a.v);
      QPoly pa(av.c.begin(), av.c.end());
      q_trim(pa);
      auto xg = q_xgcd(pa, cyc_mod_);
      check(xg.g.size() == 1, "gcd with cyclotomic modulus must be constant");
      // u * a + v * phi = 1  =>  inverse is u
      QPoly u = q_scale(xg.u, Rat(1) / xg.g[0]);
      u = q_rem(u, cyc_mod_);
      CycElem r;
      r.c.assign(degree_, Rat(0));
      for (size_t i = 0; i < u.size(); ++i) r.c[i] = u[i];
      return Scalar(std::move(r));
    }
  }
  return a;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  Scalar acc = one(), base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long Field::order_of(const Scalar& a, long bound) const {
  if (is_zero(a)) return 0;
  Scalar x = a;
  for (long k = 1; k <= bound; ++k) {
    if (is_one(x)) return k;
    x = mul(x, a);
  }
  return 0;
}

Scalar Field::generator() const {
  switch (desc_.kind) {
    case FieldKind::finite_extension: {
      FFElem e;
      e.c.assign(degree_, 0);
      if (degree_ >= 2) e.c[1] = 1;
      else e.c[0] = 1;
      return Scalar(std::move(e));
    }
    case FieldKind::cyclotomic: {
      CycElem e;
      e.c.assign(degree_, Rat(0));
      if (degree_ >= 2) e.c[1] = Rat(1);
      else {
        // ell = 2: z = -1
        e.c[0] = Rat(-1);
      }
      return Scalar(std::move(e));
    }
    default: fail(Errc::InternalInvariant, "generator() only for extension fields");
  }
}

std::optional<long> Field::size() const {
  switch (desc_.kind) {
    case FieldKind::prime: return desc_.p;
    case FieldKind::finite_extension: {
      long s = 1;
      for (int i = 0; i < degree_; ++i) {
        if (s > (1L << 40) / desc_.p) return std::nullopt;
        s *= desc_.p;
      }
      return s;
    }
    default: return std::nullopt;
  }
}

Scalar Field::element_at(long idx) const {
  switch (desc_.kind) {
    case FieldKind::prime: return Scalar((int64_t)mod_norm(idx, desc_.p));
    case FieldKind::finite_extension: {
      FFElem e;
      e.c.assign(degree_, 0);
      for (int i = 0; i < degree_; ++i) {
        e.c[i] = idx % desc_.p;
        idx /= desc_.p;
      }
      return Scalar(std::move(e));
    }
    default: fail(Errc::InternalInvariant, "element_at only for finite fields");
  }
}

std::string Field::to_string(const Scalar& a) const {
  switch (desc_.kind) {
    case FieldKind::rationals: return std::get<Rat>(a.v).str();
    case FieldKind::prime: return std::to_string(std::get<int64_t>(a.v));
    case FieldKind::finite_extension: {
      std::string s = "[";
      const auto& c = std::get<FFElem>(a.v).c;
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
      }
      return s + "]";
    }
    case FieldKind::cyclotomic: {
      std::string s = "[";
      const auto& c = std::get<CycElem>(a.v).c;
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += c[i].str();
      }
      return s + "]";
    }
  }
  return "?";
}

FieldPtr make_field(FieldDescriptor d) { return std::make_shared<Field>(std::move(d)); }

// ---------- primitive roots of unity ----------

namespace {

bool has_exact_order(const Field& f, const Scalar& a, long ell) {
  if (f.is_zero(a)) return false;
  if (!f.is_one(f.pow(a, ell))) return false;
  for (long k = 1; k < ell; ++k)
    if (ell % k == 0 && f.is_one(f.pow(a, k))) return false;
  return true;
}

}  // namespace

Scalar primitive_root_of_unity(const Field& f, long ell) {
  if (ell < 1) fail(Errc::NoSuchRoot, "order must be positive");
  if (ell == 1) return f.one();
  switch (f.kind()) {
    case FieldKind::rationals: {
      if (ell == 2) return f.from_int(-1);
      fail(Errc::NoSuchRoot, "Q contains only 1 and -1 as roots of unity");
    }
    case FieldKind::prime: {
      long p = f.descriptor().p;
      if ((p - 1) % ell != 0)
        fail(Errc::NoSuchRoot,
             std::to_string(ell) + " does not divide |F_" + std::to_string(p) + "^x| = " +
                 std::to_string(p - 1));
      for (long a = 1; a < p; ++a) {
        Scalar s = f.from_int(a);
        if (has_exact_order(f, s, ell)) return s;
      }
      fail(Errc::NoSuchRoot, "no element of order " + std::to_string(ell));
    }
    case FieldKind::finite_extension: {
      auto sz = f.size();
      if (!sz) fail(Errc::NoSuchRoot, "field too large to search");
      long q = *sz;
      if ((q - 1) % ell != 0)
        fail(Errc::NoSuchRoot, std::to_string(ell) + " does not divide q-1 = " + std::to_string(q - 1));
      for (long i = 0; i < q; ++i) {
        Scalar s = f.element_at(i);
        if (has_exact_order(f, s, ell)) return s;
      }
      fail(Errc::NoSuchRoot, "no element of order " + std::to_string(ell));
    }
    case FieldKind::cyclotomic: {
      long m = f.descriptor().ell;
      // torsion units are {z^j} and {-z^j}; prefer +z^j, smallest power
      Scalar z = f.generator();
      Scalar x = f.one();
      for (long j = 0; j < m; ++j) {
        if (has_exact_order(f, x, ell)) return x;
        x = f.mul(x, z);
      }
      x = f.from_int(-1);
      for (long j = 0; j < m; ++j) {
        if (has_exact_order(f, x, ell)) return x;
        x = f.mul(x, z);
      }
      fail(Errc::NoSuchRoot, "Q(zeta_" + std::to_string(m) + ") has no element of order " +
                                 std::to_string(ell));
    }
  }
  fail(Errc::NoSuchRoot, "unsupported field kind");
}

}  // namespace repwild
