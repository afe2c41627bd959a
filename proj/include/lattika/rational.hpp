#pragma once
// Small exact rationals over int64; every operation widens to __int128 and
// throws on overflow instead of wrapping.
#include <cstdint>
#include <numeric>
#include <string>

#include "lattika/error.hpp"

namespace lattika {

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT implicit on purpose
  Rational(std::int64_t p, std::int64_t q) { set(p, q); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::int64_t floor() const;

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  // "p/q", or "p" when integral.
  std::string str() const;
  static Rational parse(const std::string& s);

 private:
  void set(__int128 p, __int128 q);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace lattika
