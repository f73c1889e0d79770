#ifndef QSCHUR_QROOTQ_HPP
#define QSCHUR_QROOTQ_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "qschur/errors.hpp"

namespace qschur {

/// Exact element a + b*sqrt(q) of the real quadratic ring Q(sqrt q).
/// The modulus q is not stored per value; arithmetic goes through QRing.
struct QRootQ {
  mpq_class a{0};
  mpq_class b{0};

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool operator==(const QRootQ& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QRootQ& o) const { return !(*this == o); }
};

/// Arithmetic context for Q(sqrt q), q >= 2 fixed. When q is a perfect
/// square the ring collapses into Q and every value keeps b = 0.
class QRing {
 public:
  explicit QRing(long q);

  long q() const { return q_; }
  bool collapses() const { return square_; }

  QRootQ zero() const { return {}; }
  QRootQ one() const { return from_int(1); }
  QRootQ from_int(long n) const { return make(mpq_class(n), 0); }
  QRootQ make(mpq_class a, mpq_class b) const;

  /// sqrt(q)^k for any integer k (negative exponents via 1/sqrt(q) = sqrt(q)/q).
  QRootQ qpow(long k) const;

  /// Inverse of qpow: recognizes an exact power of sqrt(q), if any.
  std::optional<long> log_qpow(const QRootQ& x) const;

  QRootQ add(const QRootQ& x, const QRootQ& y) const;
  QRootQ sub(const QRootQ& x, const QRootQ& y) const;
  QRootQ neg(const QRootQ& x) const;
  QRootQ mul(const QRootQ& x, const QRootQ& y) const;
  QRootQ div(const QRootQ& x, const QRootQ& y) const;  // throws ArithmeticError on zero divisor
  QRootQ inv(const QRootQ& x) const { return div(one(), x); }

  double to_double(const QRootQ& x) const;

  /// {"a": "p/r", "b": "s/t", "q": n} with decimal-string rationals.
  std::string to_json_string(const QRootQ& x) const;

 private:
  long q_;
  bool square_ = false;
  long root_ = 0;  // exact sqrt(q) when square_
};

/// q^k as an exact rational, k any integer.
mpq_class rational_pow(long base, long k);

}  // namespace qschur

#endif
