#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qschur/gfp.hpp"

using namespace qschur;

namespace {

GFMatrix make(int p, int rows, int cols, std::initializer_list<int> vals) {
  GFMatrix m(p, rows, cols);
  int i = 0;
  for (int v : vals) m.e[i++] = static_cast<uint8_t>(v % p);
  return m;
}

GFMatrix random_matrix(int p, int rows, int cols, std::mt19937_64& rng) {
  GFMatrix m(p, rows, cols);
  std::uniform_int_distribution<int> dist(0, p - 1);
  for (auto& x : m.e) x = static_cast<uint8_t>(dist(rng));
  return m;
}

// Brute-force rank oracle: largest size of a square minor with nonzero
// determinant (cofactor expansion over F_p).
int det_mod(const GFMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  const int p = m.p;
  if (rows.empty()) return 1 % p;
  int sign_flip = 0;
  int result = 0;
  for (size_t j = 0; j < cols.size(); ++j) {
    int a = m.at(rows[0], cols[j]);
    if (a != 0) {
      std::vector<int> sub_rows(rows.begin() + 1, rows.end());
      std::vector<int> sub_cols;
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != j) sub_cols.push_back(cols[t]);
      int minor = det_mod(m, sub_rows, sub_cols);
      int term = a * minor % p;
      if (j % 2 == 1) term = (p - term) % p;
      result = (result + term) % p;
    }
    (void)sign_flip;
  }
  return result;
}

int minor_rank_oracle(const GFMatrix& m) {
  const int n = std::min(m.rows, m.cols);
  for (int size = n; size >= 1; --size) {
    std::vector<int> rsel(size), csel(size);
    for (int i = 0; i < size; ++i) rsel[i] = i;
    auto next_combo = [](std::vector<int>& sel, int limit) {
      int i = static_cast<int>(sel.size()) - 1;
      while (i >= 0 && sel[i] == limit - static_cast<int>(sel.size()) + i) --i;
      if (i < 0) return false;
      ++sel[i];
      for (size_t j = i + 1; j < sel.size(); ++j) sel[j] = sel[j - 1] + 1;
      return true;
    };
    do {
      for (int i = 0; i < size; ++i) csel[i] = i;
      do {
        if (det_mod(m, rsel, csel) != 0) return size;
      } while (next_combo(csel, m.cols));
    } while (next_combo(rsel, m.rows));
  }
  return 0;
}

}  // namespace

TEST_CASE("rref of the identity") {
  GFMatrix id(2, 3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  auto [r, rk] = rref(id);
  CHECK(r == id);
  CHECK(rk == 3);
}

TEST_CASE("duplicate rows collapse") {
  GFMatrix m = make(2, 2, 2, {1, 1, 1, 1});
  auto [r, rk] = rref(m);
  CHECK(rk == 1);
  CHECK(r == make(2, 2, 2, {1, 1, 0, 0}));
}

TEST_CASE("rank matches the minor oracle on random matrices") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 40; ++iter) {
    GFMatrix m = random_matrix(3, 4, 6, rng);
    CHECK(rank(m) == minor_rank_oracle(m));
  }
  for (int iter = 0; iter < 40; ++iter) {
    GFMatrix m = random_matrix(5, 3, 4, rng);
    CHECK(rank(m) == minor_rank_oracle(m));
  }
}

TEST_CASE("rref is idempotent and unique across row-equivalent matrices") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 50; ++iter) {
    GFMatrix m = random_matrix(3, 3, 5, rng);
    auto [r, rk] = rref(m);
    CHECK(rref(r).first == r);
    // random row operations preserve the canonical form
    GFMatrix shuffled = m;
    std::uniform_int_distribution<int> row(0, m.rows - 1), coef(0, 2);
    for (int ops = 0; ops < 6; ++ops) {
      int a = row(rng), b = row(rng);
      if (a == b) continue;
      int c = coef(rng);
      for (int j = 0; j < m.cols; ++j)
        shuffled.at(a, j) =
            static_cast<uint8_t>((shuffled.at(a, j) + c * shuffled.at(b, j)) % 3);
    }
    CHECK(rref(shuffled).first == r);
  }
}

TEST_CASE("rank plus nullity equals the column count") {
  std::mt19937_64 rng(44);
  for (int iter = 0; iter < 30; ++iter) {
    GFMatrix m = random_matrix(7, 3, 5, rng);
    GFMatrix k = kernel_basis(m);
    CHECK(rank(m) + k.rows == m.cols);
    // kernel rows really lie in the kernel
    for (int r = 0; r < k.rows; ++r)
      for (int i = 0; i < m.rows; ++i) {
        int dot = 0;
        for (int j = 0; j < m.cols; ++j) dot += m.at(i, j) * k.at(r, j);
        CHECK(dot % 7 == 0);
      }
  }
}

TEST_CASE("membership") {
  GFMatrix rows = make(2, 1, 3, {1, 0, 1});
  std::vector<uint8_t> zero{0, 0, 0}, first{1, 0, 1}, other{0, 1, 0};
  CHECK(solve_membership(rows, zero));
  CHECK(solve_membership(rows, first));
  // row space of {(1,0,1)} over F_2 is {000, 101}
  CHECK(!solve_membership(rows, other));
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(GFMatrix(4, 2, 2), UsageError);
  CHECK_THROWS_AS(GFMatrix(1, 2, 2), UsageError);
  GFMatrix rows = make(2, 1, 3, {1, 0, 1});
  std::vector<uint8_t> short_vec{1, 0};
  CHECK_THROWS_AS(solve_membership(rows, short_vec), UsageError);
}
