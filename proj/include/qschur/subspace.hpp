#ifndef QSCHUR_SUBSPACE_HPP
#define QSCHUR_SUBSPACE_HPP

#include <gmpxx.h>

#include <compare>
#include <vector>

#include "qschur/gfp.hpp"

namespace qschur {

/// A subspace of F_p^d in canonical form: the basis is the unique RREF
/// matrix with no zero rows, so equality of subspaces is equality of bases.
class Subspace {
 public:
  Subspace(int ambient, int p);  // zero subspace
  explicit Subspace(const GFMatrix& rows);

  static Subspace full(int ambient, int p);

  int ambient() const { return basis_.cols; }
  int p() const { return basis_.p; }
  int dim() const { return basis_.rows; }
  const GFMatrix& basis() const { return basis_; }

  bool contains(std::span<const uint8_t> v) const;
  bool contains(const Subspace& other) const;

  /// Deterministic ordering key: (dim, RREF entries row-major).
  const std::vector<uint8_t>& key() const { return key_; }

  bool operator==(const Subspace& o) const { return key_ == o.key_; }
  std::strong_ordering operator<=>(const Subspace& o) const {
    return key_ <=> o.key_;
  }

 private:
  GFMatrix basis_;
  std::vector<uint8_t> key_;
  void rebuild_key();
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// All k-dimensional subspaces of F_q^d, each once, in ascending key order.
std::vector<Subspace> enumerate_subspaces(int d, int k, int p);

/// All subspaces W with A <= W <= B and dim W = k, ascending key order.
std::vector<Subspace> enumerate_between(const Subspace& a, const Subspace& b, int k);

/// Gaussian binomial [n choose k]_q, exact; 0 when k is out of range.
mpz_class gaussian_binomial(long n, long k, long q);

}  // namespace qschur

#endif
