#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "repwild/errors.hpp"

namespace repwild {

// Arbitrary-precision rational, always reduced with positive denominator.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}
  Rat(long n, long d);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  static Rat from_string(const std::string& s);  // "a" or "a/b"

  Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
  Rat operator/(const Rat& o) const;
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  bool operator==(const Rat& o) const { return q_ == o.q_; }
  bool operator!=(const Rat& o) const { return q_ != o.q_; }
  bool operator<(const Rat& o) const { return q_ < o.q_; }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  std::string str() const;

private:
  mpq_class q_;
};

enum class FieldKind { rationals, prime, finite_extension, cyclotomic };

struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  long p = 0;                  // characteristic for prime / finite_extension
  std::vector<long> modulus;   // finite_extension: monic poly over F_p, low degree first
  long ell = 0;                // cyclotomic order

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor prime(long p);
  static FieldDescriptor finite_extension(long p, std::vector<long> modulus);
  static FieldDescriptor cyclotomic(long ell);

  long characteristic() const;
  bool operator==(const FieldDescriptor&) const = default;
};

// Residue in a finite extension F_p[t]/(f): coefficients of degree < deg f.
struct FFElem {
  std::vector<int64_t> c;
  bool operator==(const FFElem&) const = default;
};

// Residue in Q[z]/(Phi_ell): rational coefficients of degree < deg Phi_ell.
struct CycElem {
  std::vector<Rat> c;
  bool operator==(const CycElem&) const = default;
};

struct Scalar {
  std::variant<Rat, int64_t, FFElem, CycElem> v;
  Scalar() : v(Rat()) {}
  explicit Scalar(Rat r) : v(std::move(r)) {}
  explicit Scalar(int64_t r) : v(r) {}
  explicit Scalar(FFElem e) : v(std::move(e)) {}
  explicit Scalar(CycElem e) : v(std::move(e)) {}
  bool operator==(const Scalar&) const = default;
};

// Exact arithmetic handle for one of the supported base fields.
// Scalars are dumb canonical values; all operations go through the field.
class Field {
public:
  explicit Field(FieldDescriptor d);

  const FieldDescriptor& descriptor() const { return desc_; }
  FieldKind kind() const { return desc_.kind; }
  long characteristic() const { return desc_.characteristic(); }
  // degree of the residue representation (1 for rationals/prime)
  int degree() const { return degree_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, long e) const;

  // multiplicative order (finite ones only make sense here); 0 if infinite
  long order_of(const Scalar& a, long bound) const;

  // class of t (finite extension) or z (cyclotomic)
  Scalar generator() const;

  // number of elements for finite fields
  std::optional<long> size() const;
  // deterministic enumeration of a finite field, idx in [0, size)
  Scalar element_at(long idx) const;

  std::string to_string(const Scalar& a) const;

private:
  FieldDescriptor desc_;
  int degree_ = 1;
  std::vector<Rat> cyc_mod_;  // Phi_ell, monic, low degree first (cyclotomic only)

  FFElem ff_reduce_mul(const FFElem& a, const FFElem& b) const;
  CycElem cyc_reduce_mul(const CycElem& a, const CycElem& b) const;
};

using FieldPtr = std::shared_ptr<const Field>;
FieldPtr make_field(FieldDescriptor d);

// q with q^ell = 1 and q^m != 1 for 0 < m < ell; deterministic choice.
Scalar primitive_root_of_unity(const Field& f, long ell);

// Phi_ell over Z, monic, low degree first.
std::vector<mpz_class> cyclotomic_polynomial(long ell);

bool is_prime_long(long n);

}  // namespace repwild
