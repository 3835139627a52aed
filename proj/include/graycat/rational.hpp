#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graycat {

// Exact rational over 64-bit integers. Values in this project are tiny
// (roots of unity times small rationals), but intermediate products are
// widened to 128 bits and overflow of the final result is a hard error.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat::from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const { return Rat(-num_, den_); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  Rat inverse() const {
    if (num_ == 0) throw std::domain_error("Rat: inverse of zero");
    return Rat(den_, num_);
  }

  double to_double() const { return double(num_) / double(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using i128 = __int128;

  static Rat from128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rat: overflow");
    Rat r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_;
  long long den_;
};

} // namespace graycat
