#include "lattika/rational.hpp"

#include <cmath>
#include <limits>

#include "lattika/qsqrt3.hpp"

namespace lattika {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonIntegerN: return "NonIntegerN";
    case ErrorCode::NoReduction: return "NoReduction";
    case ErrorCode::OracleAccuracy: return "OracleAccuracy";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::UnknownTag: return "UnknownTag";
    case ErrorCode::NoSubstitution: return "NoSubstitution";
    case ErrorCode::IndexOutsideCone: return "IndexOutsideCone";
    case ErrorCode::NegativeBracket: return "NegativeBracket";
    case ErrorCode::SampleCountMismatch: return "SampleCountMismatch";
    case ErrorCode::NotMultipleOf3: return "NotMultipleOf3";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
  }
  return "Error";
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorCode::Overflow, "rational component exceeds int64");
  return static_cast<std::int64_t>(v);
}

}  // namespace

void Rational::set(__int128 p, __int128 q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  if (q < 0) { p = -p; q = -q; }
  __int128 g = gcd128(p, q);
  if (g > 1) { p /= g; q /= g; }
  num_ = narrow(p);
  den_ = narrow(q);
}

Rational& Rational::operator+=(const Rational& o) {
  __int128 p = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 q = static_cast<__int128>(den_) * o.den_;
  set(p, q);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  set(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  set(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long p = std::stoll(s, &used);
      if (used != s.size()) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
      return Rational(p);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    long long p = std::stoll(a, &used);
    if (used != a.size()) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
    long long q = std::stoll(b, &used);
    if (used != b.size() || q == 0) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
  }
}

// ---- QSqrt3

int QSqrt3::sign() const {
  int sp = p_.sign(), sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // opposite signs: compare p^2 with 3 q^2
  Rational d = p_ * p_ - Rational(3) * q_ * q_;
  return d.sign() > 0 ? sp : sq;
}

double QSqrt3::to_double() const {
  return p_.to_double() + q_.to_double() * std::sqrt(3.0);
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
  Rational p = p_ * o.p_ + Rational(3) * q_ * o.q_;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = p;
  q_ = q;
  return *this;
}

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
  Rational nm = o.norm();
  if (nm.sign() == 0) throw std::domain_error("QSqrt3 division by zero");
  *this *= o.conj();
  p_ /= nm;
  q_ /= nm;
  return *this;
}

std::string QSqrt3::str() const {
  if (q_.sign() == 0) return p_.str();
  std::string s = p_.sign() == 0 ? "" : p_.str() + (q_.sign() > 0 ? "+" : "");
  return s + q_.str() + "*sqrt3";
}

}  // namespace lattika
