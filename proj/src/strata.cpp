#include "qschur/strata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qschur {

namespace {

void check_shape(const DimVector& nu, const std::vector<int>& c, int m) {
  if (static_cast<int>(nu.size()) != m + 2)
    throw UsageError("stratum formulas: nu must have m + 2 entries");
  if (static_cast<int>(c.size()) != m)
    throw UsageError("stratum formulas: c must have m entries");
  for (int x : nu)
    if (x < 0) throw UsageError("stratum formulas: nu must be nonnegative");
  for (int x : c)
    if (x < 0) throw UsageError("stratum formulas: c must be nonnegative");
}

long nu_j(const DimVector& nu, int m, int d, int beta) {
  return beta == m + 1 ? d : nu[1 + beta];
}

long c_at(const std::vector<int>& c, int m, int beta) {
  return beta == m + 1 ? 0 : c[beta - 1];
}

}  // namespace

long dim_x_stratum(const DimVector& nu, const std::vector<int>& c, int m, int d) {
  check_shape(nu, c, m);
  long dim = 0;
  for (int a : {0, 1}) dim += static_cast<long>(nu[a]) * (nu[2] - nu[a]);
  for (int b = 1; b <= m; ++b)
    dim += nu_j(nu, m, d, b) * (nu_j(nu, m, d, b + 1) - nu_j(nu, m, d, b));
  return dim - fiber_dim(nu, c, m, d);
}

long fiber_dim(const DimVector& nu, const std::vector<int>& c, int m, int d) {
  check_shape(nu, c, m);
  long dim = 0;
  for (int b = 1; b <= m; ++b) {
    const long dc = c_at(c, m, b) - c_at(c, m, b + 1);
    dim += dc * (nu_j(nu, m, d, b + 1) - nu_j(nu, m, d, b) - c_at(c, m, b + 1) +
                 c_at(c, m, b));
  }
  return dim;
}

std::vector<std::vector<int>> enumerate_strata(const DimVector& nu, int m, int d) {
  if (static_cast<int>(nu.size()) != m + 2)
    throw UsageError("enumerate_strata: nu must have m + 2 entries");
  std::vector<std::vector<int>> out;
  const int cap = std::min(nu[0], nu[1]);
  std::vector<int> c(m, 0);
  auto admissible = [&]() {
    long prev_u = std::max(nu[0], nu[1]);
    for (int t = 0; t < m; ++t) {
      const long u = nu[2 + t] - c[t];
      if (u < prev_u) return false;
      if (t + 1 < m && c[t + 1] > c[t]) return false;
      prev_u = u;
    }
    return prev_u <= d && c[0] <= cap;
  };
  for (;;) {
    if (admissible()) out.push_back(c);
    int t = 0;
    while (t < m && ++c[t] > cap) c[t++] = 0;
    if (t == m) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

DimYResult dim_y(const DimVector& nu, int m, int d) {
  DimYResult res;
  auto cs = enumerate_strata(nu, m, d);
  if (cs.empty()) throw UsageError("dim_y: empty Y_nu (no admissible c)");
  bool first = true;
  for (const auto& c : cs) {
    const long dx = dim_x_stratum(nu, c, m, d);
    const long fb = fiber_dim(nu, c, m, d);
    res.table.emplace_back(c, dx, fb);
    if (first) {
      res.dim = dx + fb;
      first = false;
    } else if (res.dim != dx + fb) {
      // algebraically impossible: the subtracted term of dim_x cancels fiber_dim
      throw ArithmeticError("dim_y: c-dependence detected");
    }
  }
  return res;
}

long CountPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0) return i;
  return -1;
}

mpz_class CountPolynomial::eval(long q) const {
  mpz_class r = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) r = r * q + coeffs[i];
  return r;
}

CountPolynomial interpolate_integer_samples(
    std::vector<std::pair<long, mpz_class>> samples) {
  CountPolynomial cp;
  cp.samples = std::move(samples);
  // Newton divided differences over exact rationals, then expansion into the
  // monomial basis with an integrality check.
  const size_t n = cp.samples.size();
  std::vector<mpq_class> coef(n);
  for (size_t i = 0; i < n; ++i) coef[i] = mpq_class(cp.samples[i].second);
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) /
                mpq_class(cp.samples[i].first - cp.samples[i - level].first);
      if (i == level) break;
    }
  std::vector<mpq_class> poly{coef[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    // poly <- poly * (x - x_i) + coef[i]
    std::vector<mpq_class> next(poly.size() + 1);
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * cp.samples[i].first;
    }
    next[0] += coef[i];
    poly = std::move(next);
  }
  for (const mpq_class& x : poly) {
    if (x.get_den() != 1)
      throw ArithmeticError(
          "interpolate_count_polynomial: count not polynomial over sampled primes");
    cp.coeffs.push_back(x.get_num());
  }
  while (!cp.coeffs.empty() && cp.coeffs.back() == 0) cp.coeffs.pop_back();
  return cp;
}

namespace {

mpz_class stratum_sample(const FlagIndexedSet& fs, const DimVector& nu,
                         const std::vector<int>& c) {
  auto it = fs.by_stratum.find(std::make_pair(nu, c));
  return it == fs.by_stratum.end() ? mpz_class(0)
                                   : mpz_class(it->second.second - it->second.first);
}

void check_primes(const std::vector<long>& primes) {
  if (primes.empty()) throw UsageError("interpolation: no primes given");
  if (std::set<long>(primes.begin(), primes.end()).size() != primes.size())
    throw UsageError("interpolation: primes must be distinct");
}

}  // namespace

CountPolynomial interpolate_count_polynomial(const DimVector& nu,
                                             const std::vector<int>& c, int m,
                                             int d, const std::vector<long>& primes,
                                             long max_flags) {
  check_primes(primes);
  check_shape(nu, c, m);
  std::vector<std::pair<long, mpz_class>> samples;
  for (long p : primes) {
    FlagIndexedSet fs = enumerate_fork_flags(m, d, p, max_flags);
    samples.emplace_back(p, stratum_sample(fs, nu, c));
  }
  return interpolate_samples(std::move(samples));
}

std::string strata_csv(int m, int d, const std::vector<long>& primes,
                       long max_flags) {
  check_primes(primes);
  std::ostringstream os;
  os << "nu,c,dim_X,fiber_dim,dim_Y,count_polynomial\n";
  std::vector<FlagIndexedSet> varieties;
  for (long p : primes) varieties.push_back(enumerate_fork_flags(m, d, p, max_flags));
  const std::vector<DimVector> nus = realizable_dimvectors(m, d);
  auto join = [](const std::vector<int>& v, bool reversed) {
    std::ostringstream s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s << ';';
      s << (reversed ? v[v.size() - 1 - i] : v[i]);
    }
    return s.str();
  };
  for (const DimVector& d_nu : nus) {
    for (const auto& c : enumerate_strata(d_nu, m, d)) {
      const long dx = dim_x_stratum(d_nu, c, m, d);
      const long fb = fiber_dim(d_nu, c, m, d);
      std::vector<std::pair<long, mpz_class>> samples;
      for (size_t i = 0; i < primes.size(); ++i)
        samples.emplace_back(primes[i], stratum_sample(varieties[i], d_nu, c));
      CountPolynomial cp = interpolate_samples(std::move(samples));
      os << join(d_nu, false) << "," << join(c, true) << "," << dx << "," << fb
         << "," << (dx + fb) << ",";
      for (size_t i = 0; i < cp.coeffs.size(); ++i)
        os << (i ? ";" : "") << cp.coeffs[i].get_str();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace qschur
