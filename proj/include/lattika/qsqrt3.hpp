#pragma once
// Elements p + q*sqrt(3) of Q(sqrt 3).
#include <string>

#include "lattika/rational.hpp"

namespace lattika {

class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(Rational p) : p_(p) {}  // NOLINT
  QSqrt3(std::int64_t p) : p_(p) {}  // NOLINT
  QSqrt3(Rational p, Rational q) : p_(p), q_(q) {}

  static QSqrt3 sqrt3() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt3_part() const { return q_; }
  bool is_rational() const { return q_.sign() == 0; }

  int sign() const;
  double to_double() const;
  QSqrt3 conj() const { return {p_, -q_}; }
  Rational norm() const { return p_ * p_ - Rational(3) * q_ * q_; }

  QSqrt3 operator-() const { return {-p_, -q_}; }
  QSqrt3& operator+=(const QSqrt3& o) { p_ += o.p_; q_ += o.q_; return *this; }
  QSqrt3& operator-=(const QSqrt3& o) { p_ -= o.p_; q_ -= o.q_; return *this; }
  QSqrt3& operator*=(const QSqrt3& o);
  QSqrt3& operator/=(const QSqrt3& o);

  friend QSqrt3 operator+(QSqrt3 a, const QSqrt3& b) { return a += b; }
  friend QSqrt3 operator-(QSqrt3 a, const QSqrt3& b) { return a -= b; }
  friend QSqrt3 operator*(QSqrt3 a, const QSqrt3& b) { return a *= b; }
  friend QSqrt3 operator/(QSqrt3 a, const QSqrt3& b) { return a /= b; }

  friend bool operator==(const QSqrt3& a, const QSqrt3& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const QSqrt3& a, const QSqrt3& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const;

 private:
  Rational p_, q_;
};

}  // namespace lattika
