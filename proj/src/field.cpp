#include "dblgrp/field.hpp"

#include "dblgrp/errors.hpp"

namespace dblgrp {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

long pow_mod(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((__int128)r * b % p);
    b = static_cast<long>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

bool has_exact_order(long z, int m, long p) {
  if (pow_mod(z, m, p) != 1) return false;
  for (int d = 1; d < m; ++d)
    if (pow_mod(z, d, p) == 1) return false;
  return true;
}

}  // namespace

FieldSpec make_field_spec(long p, int m, std::optional<long> zeta) {
  if (m < 1) throw StructuralError("root-of-unity order must be positive");
  FieldSpec fs;
  fs.p = p;
  fs.m = m;
  if (p == 0) {
    if (m > 2) throw MathError("the rationals contain no root of unity of order " + std::to_string(m));
    const long want = m == 1 ? 1 : -1;
    if (zeta && *zeta != want) throw StructuralError("zeta does not have order m in Q");
    fs.zeta = want;
    return fs;
  }
  if (!is_prime(p)) throw StructuralError("characteristic is not prime: " + std::to_string(p));
  if ((p - 1) % m != 0) throw MathError("modulus " + std::to_string(m) + " does not divide p - 1");
  if (zeta) {
    const long z = ((*zeta % p) + p) % p;
    if (!has_exact_order(z, m, p)) throw StructuralError("zeta does not have exact order m");
    fs.zeta = z;
    return fs;
  }
  for (long z = 1; z < p; ++z)
    if (has_exact_order(z, m, p)) {
      fs.zeta = z;
      return fs;
    }
  throw MathError("no element of exact order m");
}

Field::Field(const FieldSpec& spec) : spec_(spec), p_(spec.p) {}

Scalar Field::reduce(Scalar a) const {
  if (spec_.p == 0) {
    a.canonicalize();
    return a;
  }
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class r;
  if (den != 1) {
    mpz_class di;
    if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0)
      throw MathError("denominator divisible by the characteristic");
    num *= di;
  }
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t());
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw MathError("division by zero");
  if (spec_.p == 0) return Scalar(1) / a;
  mpz_class r, x = a.get_num();
  mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p_.get_mpz_t());
  return Scalar(r);
}

Scalar Field::root_power(long k) const {
  const long m = spec_.m;
  const long e = ((k % m) + m) % m;
  if (spec_.p == 0) return Scalar(e == 0 ? 1 : spec_.zeta);
  return Scalar(pow_mod(spec_.zeta, e, spec_.p));
}

}  // namespace dblgrp
