#include "qschur/subspace.hpp"

#include <algorithm>

namespace qschur {

namespace {

void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || a.p() != b.p())
    throw UsageError("subspace operation: ambient space mismatch");
}

}  // namespace

Subspace::Subspace(int ambient, int p) : basis_(p, 0, ambient) { rebuild_key(); }

Subspace::Subspace(const GFMatrix& rows) {
  auto [r, rk] = rref(rows);
  basis_ = GFMatrix(rows.p, rk, rows.cols);
  std::copy(r.e.begin(), r.e.begin() + static_cast<size_t>(rk) * rows.cols,
            basis_.e.begin());
  rebuild_key();
}

Subspace Subspace::full(int ambient, int p) {
  GFMatrix id(p, ambient, ambient);
  for (int i = 0; i < ambient; ++i) id.at(i, i) = 1;
  return Subspace(id);
}

void Subspace::rebuild_key() {
  key_.clear();
  key_.reserve(basis_.e.size() + 1);
  key_.push_back(static_cast<uint8_t>(basis_.rows));
  key_.insert(key_.end(), basis_.e.begin(), basis_.e.end());
}

bool Subspace::contains(std::span<const uint8_t> v) const {
  return solve_membership(basis_, v);
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(*this, other);
  for (int r = 0; r < other.dim(); ++r) {
    std::span<const uint8_t> row(other.basis_.e.data() + static_cast<size_t>(r) * ambient(),
                                 static_cast<size_t>(ambient()));
    if (!contains(row)) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  GFMatrix stacked(a.p(), a.dim() + b.dim(), a.ambient());
  std::copy(a.basis().e.begin(), a.basis().e.end(), stacked.e.begin());
  std::copy(b.basis().e.begin(), b.basis().e.end(),
            stacked.e.begin() + static_cast<size_t>(a.dim()) * a.ambient());
  return Subspace(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  // Zassenhaus: RREF of [A|A ; B|0]; rows with zero left block carry the
  // intersection in their right block.
  const int d = a.ambient();
  GFMatrix z(a.p(), a.dim() + b.dim(), 2 * d);
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < d; ++c) {
      z.at(r, c) = a.basis().at(r, c);
      z.at(r, c + d) = a.basis().at(r, c);
    }
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < d; ++c) z.at(a.dim() + r, c) = b.basis().at(r, c);
  auto [zr, rk] = rref(z);
  GFMatrix out(a.p(), 0, d);
  std::vector<uint8_t> rows;
  int n_out = 0;
  for (int r = 0; r < rk; ++r) {
    bool left_zero = true;
    for (int c = 0; c < d && left_zero; ++c)
      if (zr.at(r, c) != 0) left_zero = false;
    if (!left_zero) continue;
    for (int c = 0; c < d; ++c) rows.push_back(zr.at(r, c + d));
    ++n_out;
  }
  out.rows = n_out;
  out.e = std::move(rows);
  return Subspace(out);
}

std::vector<Subspace> enumerate_subspaces(int d, int k, int p) {
  if (k < 0 || k > d) throw UsageError("enumerate_subspaces: k out of range");
  if (!is_prime(p)) throw UsageError("enumerate_subspaces: p must be prime");
  std::vector<Subspace> out;
  if (k == 0) {
    out.emplace_back(d, p);
    return out;
  }
  // Walk over pivot column sets; fill free positions (right of the own pivot,
  // excluding later pivot columns) with all residue tuples.
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  auto advance_pivots = [&]() -> bool {
    int i = k - 1;
    while (i >= 0 && piv[i] == d - k + i) --i;
    if (i < 0) return false;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    return true;
  };
  do {
    std::vector<bool> is_piv(d, false);
    for (int i = 0; i < k; ++i) is_piv[piv[i]] = true;
    std::vector<std::pair<int, int>> free_pos;  // (row, col)
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < d; ++c)
        if (!is_piv[c]) free_pos.emplace_back(r, c);
    std::vector<uint8_t> vals(free_pos.size(), 0);
    for (;;) {
      GFMatrix m(p, k, d);
      for (int r = 0; r < k; ++r) m.at(r, piv[r]) = 1;
      for (size_t t = 0; t < free_pos.size(); ++t)
        m.at(free_pos[t].first, free_pos[t].second) = vals[t];
      out.emplace_back(m);
      // odometer
      size_t t = 0;
      while (t < vals.size() && ++vals[t] == p) vals[t++] = 0;
      if (t == vals.size()) break;
    }
  } while (advance_pivots());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> enumerate_between(const Subspace& a, const Subspace& b, int k) {
  check_compatible(a, b);
  if (!b.contains(a)) throw UsageError("enumerate_between: A is not contained in B");
  if (k < a.dim() || k > b.dim())
    throw UsageError("enumerate_between: k out of [dim A, dim B]");
  const int t = b.dim() - a.dim();
  const int kk = k - a.dim();
  // Complement of A in B: rows of B's basis that extend A's.
  GFMatrix ext = a.basis();
  std::vector<std::vector<uint8_t>> comp;
  for (int r = 0; r < b.dim(); ++r) {
    std::vector<uint8_t> row(b.basis().e.begin() + static_cast<size_t>(r) * b.ambient(),
                             b.basis().e.begin() + static_cast<size_t>(r + 1) * b.ambient());
    GFMatrix trial(a.p(), ext.rows + 1, a.ambient());
    std::copy(ext.e.begin(), ext.e.end(), trial.e.begin());
    std::copy(row.begin(), row.end(), trial.e.begin() + ext.e.size());
    auto [red, rk] = rref(trial);
    if (rk > ext.rows) {
      comp.push_back(row);
      red.rows = rk;
      red.e.resize(static_cast<size_t>(rk) * red.cols);
      ext = std::move(red);
    }
  }
  std::vector<Subspace> out;
  for (const Subspace& wbar : enumerate_subspaces(t, kk, a.p())) {
    GFMatrix lifted(a.p(), a.dim() + wbar.dim(), a.ambient());
    std::copy(a.basis().e.begin(), a.basis().e.end(), lifted.e.begin());
    for (int r = 0; r < wbar.dim(); ++r)
      for (int s = 0; s < t; ++s) {
        const int coef = wbar.basis().at(r, s);
        if (coef == 0) continue;
        for (int c = 0; c < a.ambient(); ++c) {
          int v = (lifted.at(a.dim() + r, c) + coef * comp[s][c]) % a.p();
          lifted.at(a.dim() + r, c) = static_cast<uint8_t>(v);
        }
      }
    out.emplace_back(lifted);
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class gaussian_binomial(long n, long k, long q) {
  if (q < 2) throw UsageError("gaussian_binomial: q must be >= 2");
  if (n < 0) throw UsageError("gaussian_binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  mpz_class qz(q), r(1);
  // r <- r * (q^(n-i) - 1) / (q^(i+1) - 1); each division is exact.
  for (long i = 0; i < k; ++i) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n - i));
    num -= 1;
    mpz_pow_ui(den.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(i + 1));
    den -= 1;
    r *= num;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
  }
  return r;
}

}  // namespace qschur
