#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "qschur/qrootq.hpp"

using namespace qschur;

namespace {

QRootQ rand_value(const QRing& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  return R.make(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("qpow basic values") {
  QRing r2(2);
  CHECK(r2.qpow(2) == r2.from_int(2));  // sqrt(q)^2 = q
  QRing r5(5);
  CHECK(r5.qpow(0) == r5.one());
  // sqrt(2)^-1 = sqrt(2)/2: components (0, 1/2), and (0,1/2)*(0,1) = 1
  QRootQ inv_root = r2.qpow(-1);
  CHECK(inv_root.a == 0);
  CHECK(inv_root.b == mpq_class(1, 2));
  CHECK(r2.mul(inv_root, r2.qpow(1)) == r2.one());
}

TEST_CASE("qpow multiplicativity") {
  for (long q : {2L, 3L, 5L, 4L, 9L}) {
    QRing R(q);
    for (long k = -8; k <= 8; ++k)
      for (long m = -8; m <= 8; ++m)
        CHECK(R.mul(R.qpow(k), R.qpow(m)) == R.qpow(k + m));
  }
}

TEST_CASE("arithmetic examples") {
  QRing r2(2);
  // (1 + sqrt2)(1 - sqrt2) = -1
  QRootQ a = r2.make(1, 1), b = r2.make(1, -1);
  CHECK(r2.mul(a, b) == r2.from_int(-1));
  QRing r3(3);
  QRootQ root3 = r3.qpow(1);
  CHECK(r3.div(root3, root3) == r3.one());
  // sqrt2 - 1/sqrt2 = (q-1)/sqrt(q) = (0, 1/2) at q = 2
  QRootQ diff = r2.sub(r2.qpow(1), r2.qpow(-1));
  CHECK(diff.a == 0);
  CHECK(diff.b == mpq_class(1, 2));
  const double lhs = r2.to_double(diff);
  const double rhs = (2.0 - 1.0) / std::sqrt(2.0);
  CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
}

TEST_CASE("field axioms on randomized triples, exact") {
  std::mt19937_64 rng(20240811);
  for (long q : {2L, 3L, 7L}) {
    QRing R(q);
    for (int iter = 0; iter < 200; ++iter) {
      QRootQ x = rand_value(R, rng), y = rand_value(R, rng), z = rand_value(R, rng);
      CHECK(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
      CHECK(R.add(R.add(x, y), z) == R.add(x, R.add(y, z)));
      CHECK(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
      CHECK(R.mul(x, y) == R.mul(y, x));
      if (!y.is_zero()) CHECK(R.mul(R.div(x, y), y) == x);
    }
  }
}

TEST_CASE("numerical shadow within 1e-12 relative") {
  std::mt19937_64 rng(7);
  for (long q : {2L, 3L, 5L, 13L}) {
    QRing R(q);
    for (int iter = 0; iter < 200; ++iter) {
      QRootQ x = rand_value(R, rng), y = rand_value(R, rng);
      QRootQ prod = R.mul(x, y);
      const double approx = R.to_double(x) * R.to_double(y);
      const double exact = R.to_double(prod);
      const double scale = std::max({1.0, std::abs(exact), std::abs(approx)});
      CHECK(std::abs(exact - approx) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("perfect square q collapses into the rationals") {
  QRing r4(4);
  CHECK(r4.collapses());
  CHECK(r4.qpow(1) == r4.from_int(2));
  CHECK(r4.qpow(-1).a == mpq_class(1, 2));
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    QRootQ x = rand_value(r4, rng), y = rand_value(r4, rng);
    CHECK(r4.mul(x, y).b == 0);
    CHECK(r4.add(x, y).b == 0);
  }
}

TEST_CASE("division by zero is fatal") {
  QRing R(2);
  CHECK_THROWS_AS(R.div(R.one(), R.zero()), ArithmeticError);
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(QRing(1), UsageError);
  CHECK_THROWS_AS(QRing(0), UsageError);
}

TEST_CASE("json serialization shape") {
  QRing R(2);
  QRootQ x = R.make(mpq_class(1, 3), mpq_class(-2, 7));
  CHECK(R.to_json_string(x) == "{\"a\": \"1/3\", \"b\": \"-2/7\", \"q\": 2}");
}

TEST_CASE("log_qpow inverts qpow") {
  for (long q : {2L, 3L, 4L}) {
    QRing R(q);
    for (long k = -9; k <= 9; ++k) {
      auto e = R.log_qpow(R.qpow(k));
      REQUIRE(e.has_value());
      if (!R.collapses()) CHECK(*e == k);
      CHECK(R.qpow(*e) == R.qpow(k));
    }
    CHECK(!R.log_qpow(R.make(5, 1)).has_value());
  }
}
