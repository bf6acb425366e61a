#include "reeskit/field.hpp"

namespace reeskit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 61)) throw Error("prime modulus must be below 2^61");
  if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "Fp " + std::to_string(p_); }

FieldElem Field::normalize(FieldElem a) const {
  a.canonicalize();
  if (p_ == 0) return a;
  mpz_class p;
  mpz_import(p.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = a.get_den() % p;
  if (den == 0) throw Error("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class di;
    mpz_invert(di.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * di) % p;
  }
  return FieldElem(num);
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  return p_ == 0 ? FieldElem(a + b) : normalize(a + b);
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  return p_ == 0 ? FieldElem(a - b) : normalize(a - b);
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  return p_ == 0 ? FieldElem(a * b) : normalize(a * b);
}

FieldElem Field::neg(const FieldElem& a) const { return p_ == 0 ? FieldElem(-a) : normalize(-a); }

FieldElem Field::inv(const FieldElem& a) const {
  if (is_zero(a)) throw Error("division by zero");
  return p_ == 0 ? FieldElem(1 / a) : normalize(FieldElem(1) / a);
}

}  // namespace reeskit
