#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ulrich/errors.hpp"

namespace ulrich {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Exact rational number over checked 64-bit integers, kept normalized with
// den > 0 and gcd(num, den) = 1. Only the handful of operations the
// half-integer formulas need.
class Rat {
 public:
  Rat() = default;
  Rat(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(Int n, Int d) : num_(n), den_(d) {
    if (den_ == 0) throw CalcError("rational with zero denominator");
    normalize();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // The exact integer value; ParityError if the value is not integral.
  Int as_integer() const {
    if (den_ != 1) throw ParityError("expected integral value, got " + str());
    return num_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
               checked_mul(a.den_, b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
               checked_mul(a.den_, b.den_));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rat operator-(const Rat& a) { return Rat(checked_neg(a.num_), a.den_); }

  friend bool operator==(const Rat& a, const Rat& b) = default;

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    const Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace ulrich
