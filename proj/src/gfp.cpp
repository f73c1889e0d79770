#include "qschur/gfp.hpp"

#include <algorithm>

namespace qschur {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

GFMatrix::GFMatrix(int p_, int rows_, int cols_) : p(p_), rows(rows_), cols(cols_) {
  if (!is_prime(p_) || p_ > 251)
    throw UsageError("GFMatrix: modulus must be a prime <= 251");
  if (rows_ < 0 || cols_ < 0) throw UsageError("GFMatrix: negative dimensions");
  e.assign(static_cast<size_t>(rows_) * cols_, 0);
}

int inverse_mod(int a, int p) {
  // Fermat: a^(p-2) mod p
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw ArithmeticError("inverse_mod: zero has no inverse");
  long r = 1, base = a, exp = p - 2;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

std::pair<GFMatrix, int> rref(const GFMatrix& m) {
  GFMatrix a = m;
  const int p = a.p;
  int pivot_row = 0;
  for (int c = 0; c < a.cols && pivot_row < a.rows; ++c) {
    int sel = -1;
    for (int r = pivot_row; r < a.rows; ++r)
      if (a.at(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
    const int inv = inverse_mod(a.at(pivot_row, c), p);
    for (int j = 0; j < a.cols; ++j)
      a.at(pivot_row, j) = static_cast<uint8_t>(a.at(pivot_row, j) * inv % p);
    for (int r = 0; r < a.rows; ++r) {
      if (r == pivot_row || a.at(r, c) == 0) continue;
      const int f = a.at(r, c);
      for (int j = 0; j < a.cols; ++j) {
        int v = (a.at(r, j) - f * a.at(pivot_row, j)) % p;
        if (v < 0) v += p;
        a.at(r, j) = static_cast<uint8_t>(v);
      }
    }
    ++pivot_row;
  }
  return {std::move(a), pivot_row};
}

int rank(const GFMatrix& m) { return rref(m).second; }

bool solve_membership(const GFMatrix& rref_rows, std::span<const uint8_t> v) {
  if (static_cast<int>(v.size()) != rref_rows.cols)
    throw UsageError("solve_membership: vector length does not match column count");
  const int p = rref_rows.p;
  std::vector<int> w(v.begin(), v.end());
  for (int r = 0; r < rref_rows.rows; ++r) {
    int pc = -1;
    for (int c = 0; c < rref_rows.cols; ++c)
      if (rref_rows.at(r, c) != 0) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    const int f = w[pc] % p;
    if (f == 0) continue;
    for (int c = 0; c < rref_rows.cols; ++c) {
      int x = (w[c] - f * rref_rows.at(r, c)) % p;
      if (x < 0) x += p;
      w[c] = x;
    }
  }
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

GFMatrix kernel_basis(const GFMatrix& m) {
  auto [r, rk] = rref(m);
  std::vector<int> pivot_col_of_row(rk, -1);
  std::vector<bool> is_pivot(r.cols, false);
  for (int row = 0; row < rk; ++row)
    for (int c = 0; c < r.cols; ++c)
      if (r.at(row, c) != 0) {
        pivot_col_of_row[row] = c;
        is_pivot[c] = true;
        break;
      }
  GFMatrix k(m.p, r.cols - rk, r.cols);
  int out = 0;
  for (int free_c = 0; free_c < r.cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    k.at(out, free_c) = 1;
    for (int row = 0; row < rk; ++row) {
      int v = (m.p - r.at(row, free_c)) % m.p;
      k.at(out, pivot_col_of_row[row]) = static_cast<uint8_t>(v);
    }
    ++out;
  }
  return rref(k).first;
}

}  // namespace qschur
