#ifndef QSCHUR_STRATA_HPP
#define QSCHUR_STRATA_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qschur/flags.hpp"

namespace qschur {

/// Dimension of the stratum with dimension vector nu and inner chain
/// dimensions c (indexed by beta; c[t] = dim V_{j_{t+1}}), with the boundary
/// conventions nu_{j_{m+1}} = d and c_{m+1} = 0:
///   sum_{a=i,k} nu_a (nu_{j_1} - nu_a)
///   + sum_b nu_{j_b} (nu_{j_{b+1}} - nu_{j_b})
///   - sum_b (c_b - c_{b+1}) (nu_{j_{b+1}} - nu_{j_b} - c_{b+1} + c_b).
/// Evaluated as a formula on any well-formed (nu, c); labels of empty strata
/// are legal inputs.
long dim_x_stratum(const DimVector& nu, const std::vector<int>& c, int m, int d);

/// Fiber dimension sum_b (c_b - c_{b+1})(nu_{j_{b+1}} - nu_{j_b} - c_{b+1} + c_b);
/// equals sum_b (dim V_{j_b} - dim V_{j_{b+1}})(dim U_{j_{b+1}} - dim U_{j_b}).
long fiber_dim(const DimVector& nu, const std::vector<int>& c, int m, int d);

struct DimYResult {
  long dim = 0;
  // per admissible c: (c, dim_x, fiber)
  std::vector<std::tuple<std::vector<int>, long, long>> table;
};

/// dim_x_stratum + fiber_dim over every admissible c; the sum is the same
/// for all of them and is returned with the per-c table. Throws UsageError
/// when no c is admissible ("empty Y_nu").
DimYResult dim_y(const DimVector& nu, int m, int d);

/// All admissible inner-dimension labels for nu (indexed by beta), i.e.
/// 0 <= c_m <= ... <= c_1 <= min(nu_i, nu_k) and
/// max(nu_i, nu_k) <= u_1 <= ... <= u_m <= d for u_b = nu_{j_b} - c_b.
std::vector<std::vector<int>> enumerate_strata(const DimVector& nu, int m, int d);

/// Point-count polynomial with its sample provenance.
struct CountPolynomial {
  std::vector<mpz_class> coeffs;  // ascending powers of q
  std::vector<std::pair<long, mpz_class>> samples;

  long degree() const;
  mpz_class eval(long q) const;
};

/// Exact Newton interpolation through integer samples (x, value). Throws
/// ArithmeticError when the fit has non-integral coefficients ("count not
/// polynomial over sampled primes").
CountPolynomial interpolate_integer_samples(
    std::vector<std::pair<long, mpz_class>> samples);

/// Interpolates |X_{nu,c}(F_p)| through samples obtained by enumerating the
/// variety at each prime. Throws UsageError on repeated primes.
CountPolynomial interpolate_count_polynomial(const DimVector& nu,
                                             const std::vector<int>& c, int m,
                                             int d, const std::vector<long>& primes,
                                             long max_flags = 1000000);

/// CSV table over all realizable nu at the given size: columns
/// nu (semicolon-joined), c (semicolon-joined, outermost first),
/// dim_X, fiber_dim, dim_Y, count polynomial coefficients.
std::string strata_csv(int m, int d, const std::vector<long>& primes,
                       long max_flags = 1000000);

}  // namespace qschur

#endif
