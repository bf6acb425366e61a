#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace reeskit {

// Coefficients are stored as mpq_class for both supported fields. Over F_p the
// value is an integer in [0, p) with denominator 1.
using FieldElem = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
};

class Field {
 public:
  Field() = default;  // QQ
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  FieldElem from_int(long v) const { return normalize(FieldElem(v)); }
  FieldElem normalize(FieldElem a) const;
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem inv(const FieldElem& a) const;
  static bool is_zero(const FieldElem& a) { return sgn(a) == 0; }
  static bool is_one(const FieldElem& a) { return a == 1; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace reeskit
