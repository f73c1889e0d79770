#include "qschur/qrootq.hpp"

#include <cmath>
#include <sstream>

namespace qschur {

mpq_class rational_pow(long base, long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return mpq_class(p);
  mpq_class r(1, 1);
  r /= mpq_class(p);
  return r;
}

QRing::QRing(long q) : q_(q) {
  if (q < 2) throw UsageError("QRing: q must be >= 2");
  long r = std::lround(std::sqrt(static_cast<double>(q)));
  for (long c = r - 1; c <= r + 1; ++c) {
    if (c >= 0 && c * c == q) {
      square_ = true;
      root_ = c;
    }
  }
}

QRootQ QRing::make(mpq_class a, mpq_class b) const {
  a.canonicalize();
  b.canonicalize();
  if (square_ && sgn(b) != 0) {
    // sqrt(q) is rational here; fold b*sqrt(q) into the rational part.
    a += b * root_;
    b = 0;
  }
  return {std::move(a), std::move(b)};
}

QRootQ QRing::qpow(long k) const {
  if (square_) {
    mpq_class r = (root_ == 1) ? mpq_class(1) : rational_pow(root_, k);
    return {std::move(r), 0};
  }
  if (k % 2 == 0) return {rational_pow(q_, k / 2), 0};
  // odd k: sqrt(q)^k = q^((k-1)/2) * sqrt(q); k-1 is even so the division is exact
  return {0, rational_pow(q_, (k - 1) / 2)};
}

std::optional<long> QRing::log_qpow(const QRootQ& x) const {
  if (x.is_zero()) return std::nullopt;
  auto log_rational = [](const mpq_class& v, long base) -> std::optional<long> {
    if (sgn(v) <= 0) return std::nullopt;
    if (v == 1) return 0;
    long e = 0;
    if (v.get_den() == 1) {
      mpz_class n = v.get_num();
      while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(base))) {
        n /= base;
        ++e;
      }
      if (n == 1 && e > 0) return e;
      return std::nullopt;
    }
    if (v.get_num() == 1) {
      mpz_class den = v.get_den();
      while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(base))) {
        den /= base;
        ++e;
      }
      if (den == 1 && e > 0) return -e;
      return std::nullopt;
    }
    return std::nullopt;
  };
  if (square_) {
    if (sgn(x.b) != 0) return std::nullopt;  // cannot happen for canonical values
    if (root_ == 1) return x.a == 1 ? std::optional<long>(0) : std::nullopt;
    return log_rational(x.a, root_);
  }
  if (sgn(x.b) == 0) {
    auto e = log_rational(x.a, q_);
    if (e) return 2 * *e;
    return std::nullopt;
  }
  if (sgn(x.a) != 0) return std::nullopt;
  auto e = log_rational(x.b, q_);
  if (e) return 2 * *e + 1;
  return std::nullopt;
}

QRootQ QRing::add(const QRootQ& x, const QRootQ& y) const {
  return {x.a + y.a, x.b + y.b};
}

QRootQ QRing::sub(const QRootQ& x, const QRootQ& y) const {
  return {x.a - y.a, x.b - y.b};
}

QRootQ QRing::neg(const QRootQ& x) const { return {-x.a, -x.b}; }

QRootQ QRing::mul(const QRootQ& x, const QRootQ& y) const {
  // (a + b s)(c + e s) = (ac + be q) + (ae + bc) s,  s = sqrt(q)
  mpq_class a = x.a * y.a + x.b * y.b * q_;
  mpq_class b = x.a * y.b + x.b * y.a;
  return make(std::move(a), std::move(b));
}

QRootQ QRing::div(const QRootQ& x, const QRootQ& y) const {
  if (y.is_zero()) throw ArithmeticError("QRing::div: division by zero");
  // Multiply by the conjugate; c^2 - e^2 q != 0 for y != 0 since sqrt(q) is
  // irrational whenever b can be nonzero.
  mpq_class denom = y.a * y.a - y.b * y.b * q_;
  mpq_class a = (x.a * y.a - x.b * y.b * q_) / denom;
  mpq_class b = (x.b * y.a - x.a * y.b) / denom;
  return make(std::move(a), std::move(b));
}

double QRing::to_double(const QRootQ& x) const {
  return x.a.get_d() + x.b.get_d() * std::sqrt(static_cast<double>(q_));
}

std::string QRing::to_json_string(const QRootQ& x) const {
  std::ostringstream os;
  os << "{\"a\": \"" << x.a.get_str() << "\", \"b\": \"" << x.b.get_str()
     << "\", \"q\": " << q_ << "}";
  return os.str();
}

}  // namespace qschur
