#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace dblgrp {

// p = 0 means the rationals. m is the order of the designated root of unity zeta:
// over Q only m = 1 (zeta = 1) and m = 2 (zeta = -1) exist; over F_p, m | p - 1.
struct FieldSpec {
  long p = 0;
  int m = 1;
  long zeta = 1;

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(long n);

// Validates and fills in zeta; the default is the smallest element of exact order m.
// Throws MathError when m does not embed, StructuralError for a bad p or zeta.
FieldSpec make_field_spec(long p, int m = 1, std::optional<long> zeta = std::nullopt);

using Scalar = mpq_class;

// Exact arithmetic in Q or F_p. Prime-field elements are kept as integers in [0, p).
class Field {
 public:
  explicit Field(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  long characteristic() const { return spec_.p; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return reduce(Scalar(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  // zeta^k for any integer k
  Scalar root_power(long k) const;
  std::string str(const Scalar& a) const { return a.get_str(); }

 private:
  Scalar reduce(Scalar a) const;
  FieldSpec spec_;
  mpz_class p_;
};

}  // namespace dblgrp
