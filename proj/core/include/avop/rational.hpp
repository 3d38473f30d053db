#pragma once

#include <gmpxx.h>

#include <string>

namespace avop {

/// Exact rational with arbitrary-precision integer parts. Wraps mpq_class
/// so every value is canonical (positive denominator, coprime parts) --
/// raw mpq_class does not canonicalize on construction.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
  Rat(long n, long d) : v_(n, d) { v_.canonicalize(); }
  Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) { v_.canonicalize(); }
  static Rat parse(const std::string& n, const std::string& d) {
    return Rat(mpz_class(n), mpz_class(d));
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // invariant: canonical
};

}  // namespace avop
