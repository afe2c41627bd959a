#include <random>

#include "doctest.h"
#include "lattika/lattice.hpp"

using namespace lattika;

TEST_CASE("qsqrt3 arithmetic") {
  QSqrt3 a(Rational(1, 2), Rational(3, 4));
  QSqrt3 b(Rational(-2), Rational(1, 3));
  CHECK((a * b) / b == a);
  CHECK(a - a == QSqrt3(0));
  CHECK(QSqrt3::sqrt3() * QSqrt3::sqrt3() == QSqrt3(3));
  // 1 - sqrt3 < 0 < 2 - sqrt3
  CHECK(QSqrt3(Rational(1), Rational(-1)).sign() == -1);
  CHECK(QSqrt3(Rational(2), Rational(-1)).sign() == 1);
  CHECK(QSqrt3(Rational(-7), Rational(4)).sign() == -1);  // 4*1.732 = 6.93 < 7

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50), q(1, 30);
  for (int i = 0; i < 100; ++i) {
    Rational p(d(rng), q(rng)), r(d(rng), q(rng));
    QSqrt3 x(p, r);
    CHECK(x * x.conj() == QSqrt3(p * p - Rational(3) * r * r));
    // float conversion is monotone
    QSqrt3 y(Rational(d(rng), q(rng)), Rational(d(rng), q(rng)));
    if (x < y) CHECK(x.to_double() <= y.to_double());
  }
}

TEST_CASE("rational parse and overflow") {
  CHECK(Rational::parse("6/-4") == Rational(-3, 2));
  CHECK(Rational::parse("5").str() == "5");
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
  Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, Error);
}

TEST_CASE("generator matrices") {
  for (int n = 1; n <= 8; ++n) {
    auto ss = generator_matrices({CaseTag::SquareSquare, n});
    CHECK(ss.N == std::array<std::int64_t, 4>{2 * n, 0, 0, 2 * n});
    CHECK(ss.abs_det_N() == 4 * n * n);
    auto hht = generator_matrices({CaseTag::HexHexTranspose, n});
    CHECK(hht.N == std::array<std::int64_t, 4>{n, 0, 0, n});
    auto hh = generator_matrices({CaseTag::HexHex, n});
    CHECK(hh.N == std::array<std::int64_t, 4>{2 * n, -n, -n, 2 * n});
    CHECK(hh.abs_det_N() == 3 * n * n);
    for (CaseTag t : kAllCases) {
      auto g = generator_matrices({t, n});
      CHECK(g.B.transpose() * g.A == Mat2{{g.N[0], g.N[1], g.N[2], g.N[3]}});
    }
  }
  CHECK_THROWS_AS(generator_matrices({CaseTag::HexHex, 0}), Error);
}

TEST_CASE("homogeneous coordinates") {
  auto t = to_homogeneous(Point2{0, 0});
  CHECK(t.t1 == 0.0);
  Vec2q x{QSqrt3(Rational(0), Rational(2, 3)), QSqrt3(0)};  // (2/sqrt3, 0)
  CHECK(to_homogeneous(x) == HomoExact{1, 0, -1});
  CHECK(to_homogeneous(Vec2q{QSqrt3(0), QSqrt3(1)}) == HomoExact{Rational(-1, 2), 1, Rational(-1, 2)});
  HomoExact h{Rational(1, 3), Rational(-5, 7), Rational(8, 21)};
  CHECK(to_homogeneous(from_homogeneous(h)) == h);
  auto p = to_homogeneous(Point2{0.3, -0.7});
  CHECK(std::abs(p.t1 + p.t2 + p.t3) < 1e-15);
}

TEST_CASE("domain membership and reduction") {
  LatticeCase hh{CaseTag::HexHex, 1}, ss{CaseTag::SquareSquare, 1};
  CHECK(domain_contains(hh, HomoExact{0, 0, 0}));
  CHECK(domain_contains(hh, HomoExact{-1, 0, 1}));
  CHECK_FALSE(domain_contains(hh, HomoExact{1, 0, -1}));
  CHECK_FALSE(domain_contains(ss, Vec2q{QSqrt3(Rational(1, 2)), QSqrt3(0)}));

  Vec2q r = reduce_mod_lattice(ss, Vec2q{QSqrt3(Rational(7, 10)), QSqrt3(Rational(-3, 5))});
  CHECK(r == Vec2q{QSqrt3(Rational(-3, 10)), QSqrt3(Rational(2, 5))});
  CHECK(reduce_mod_lattice(hh, HomoExact{1, 0, -1}) == HomoExact{0, -1, 1});

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (CaseTag tag : kAllCases) {
    LatticeCase c{tag, 1};
    auto Ai = generator_matrices(c).A.inverse();
    for (int i = 0; i < 50; ++i) {
      Vec2q x{QSqrt3(Rational(static_cast<std::int64_t>(u(rng) * 1000), 1000)),
              QSqrt3(Rational(static_cast<std::int64_t>(u(rng) * 1000), 1000))};
      Vec2q y = reduce_mod_lattice(c, x);
      CHECK(domain_contains(c, y));
      CHECK(reduce_mod_lattice(c, y) == y);
      Vec2q d = Ai * (x - y);
      CHECK(d.x.is_rational());
      CHECK(d.x.rational_part().is_integer());
      CHECK(d.y.rational_part().is_integer());
    }
  }
}

TEST_CASE("tiling") {
  for (CaseTag tag : kAllCases) {
    auto rep = verify_tiling({tag, 1}, 10000, 11);
    INFO(case_name(tag));
    CHECK(rep.samples == 10000);
    CHECK(rep.max_cover_deviation == 0);
  }
  CHECK(verify_tiling({CaseTag::SquareSquare, 1}, 2000, 5, Rational(9, 10)).max_cover_deviation == 1);
  CHECK(verify_tiling({CaseTag::HexH1, 1}, 2000, 5, Rational(9, 10)).max_cover_deviation == 1);
}

TEST_CASE("domain polygons") {
  CHECK(omega_A(CaseTag::HexHex).polygon().size() == 6);
  CHECK(omega_A(CaseTag::HexH1).polygon().size() == 6);
  CHECK(omega_A(CaseTag::HexH2).polygon().size() == 6);
  CHECK(omega_A(CaseTag::RhombicSquare).polygon().size() == 4);
}
