#ifndef QSCHUR_GFP_HPP
#define QSCHUR_GFP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

bool is_prime(long n);

/// Dense matrix over the prime field F_p, entries reduced into [0, p).
/// Dimensions here are tiny (flag ambients <= ~6), so everything is plain
/// Gauss-Jordan with no pivot strategy beyond first-nonzero.
struct GFMatrix {
  int p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> e;  // row-major

  GFMatrix() = default;
  GFMatrix(int p_, int rows_, int cols_);

  uint8_t& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
  uint8_t at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const GFMatrix& o) const = default;
};

int inverse_mod(int a, int p);

/// Unique reduced row echelon form (leading ones, zeros above and below
/// pivots, zero rows last); second member is the rank.
std::pair<GFMatrix, int> rref(const GFMatrix& m);

int rank(const GFMatrix& m);

/// True iff v lies in the row space. Rows must already be in RREF.
bool solve_membership(const GFMatrix& rref_rows, std::span<const uint8_t> v);

/// RREF basis of the right kernel {x : M x = 0}, one row per basis vector.
GFMatrix kernel_basis(const GFMatrix& m);

}  // namespace qschur

#endif
