#include "qschur/weights.hpp"

#include <algorithm>
#include <deque>

namespace qschur {

namespace {

// Exact positive-definiteness via leading principal minors (rationals).
bool positive_definite(const std::vector<std::vector<int>>& C) {
  const int n = static_cast<int>(C.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = C[i][j];
  for (int k = 0; k < n; ++k) {
    if (sgn(a[k][k]) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      mpq_class f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

std::vector<int> cartan_apply(const std::vector<std::vector<int>>& C,
                              const std::vector<int>& v) {
  const int n = static_cast<int>(C.size());
  std::vector<int> r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += C[i][j] * v[j];
  return r;
}

std::vector<std::vector<int>> generate_positive_roots(
    const std::vector<std::vector<int>>& C) {
  // Reflection closure of the simple roots inside the positive cone.
  const int n = static_cast<int>(C.size());
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> queue;
  for (int a = 0; a < n; ++a) {
    std::vector<int> e(n, 0);
    e[a] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> alpha = std::move(queue.front());
    queue.pop_front();
    std::vector<int> pairing = cartan_apply(C, alpha);
    for (int a = 0; a < n; ++a) {
      std::vector<int> beta = alpha;
      beta[a] -= pairing[a];
      if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; })) continue;
      if (std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; })) continue;
      if (roots.insert(beta).second) queue.push_back(beta);
    }
  }
  return {roots.begin(), roots.end()};
}

// Componentwise upper bound for nu with dvec - C nu >= 0: nu <= C^{-1} dvec
// (C^{-1} is entrywise nonnegative in finite type). Exact rational solve.
std::vector<long> nu_search_bound(const std::vector<std::vector<int>>& C,
                                  const std::vector<int>& dvec) {
  const int n = static_cast<int>(C.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = C[i][j];
    a[i][n] = dvec[i];
  }
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (sgn(a[r][k]) != 0) {
        piv = r;
        break;
      }
    std::swap(a[k], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == k || sgn(a[r][k]) == 0) continue;
      mpq_class f = a[r][k] / a[k][k];
      for (int j = k; j <= n; ++j) a[r][j] -= f * a[k][j];
    }
  }
  std::vector<long> bound(n, 0);
  for (int i = 0; i < n; ++i) {
    mpq_class x = a[i][n] / a[i][i];
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    bound[i] = std::max(0L, c.get_si());
  }
  return bound;
}

void check_dominant(const Weight& lambda) {
  for (int x : lambda)
    if (x < 0) throw UsageError("weight must be dominant");
}

}  // namespace

CartanData CartanData::from_shape(const QuiverShape& shape) {
  std::vector<std::string> labels;
  for (int a = 0; a < shape.rank(); ++a) labels.push_back(shape.node_label(a));
  return from_matrix(std::move(labels), shape.cartan());
}

CartanData CartanData::from_matrix(std::vector<std::string> labels,
                                   std::vector<std::vector<int>> C) {
  const int n = static_cast<int>(C.size());
  if (n == 0 || static_cast<int>(labels.size()) != n)
    throw UsageError("CartanData: empty matrix or mismatched labels");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(C[i].size()) != n) throw UsageError("CartanData: not square");
    if (C[i][i] != 2) throw UsageError("CartanData: diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (C[i][j] != C[j][i]) throw UsageError("CartanData: not symmetric");
      if (i != j && C[i][j] != 0 && C[i][j] != -1)
        throw UsageError("CartanData: off-diagonal entries must be 0 or -1");
    }
  }
  if (!positive_definite(C))
    throw UsageError("CartanData: matrix is not of finite type");
  CartanData cd;
  cd.labels = std::move(labels);
  cd.C = std::move(C);
  cd.positive_roots = generate_positive_roots(cd.C);
  return cd;
}

std::vector<PiEntry> pi_set(const CartanData& cd, const std::vector<int>& dvec) {
  const int n = cd.rank();
  if (static_cast<int>(dvec.size()) != n)
    throw UsageError("pi_set: dvec has wrong length");
  for (int x : dvec)
    if (x < 0) throw UsageError("pi_set: dvec must be nonnegative");
  std::vector<long> bound = nu_search_bound(cd.C, dvec);
  std::vector<PiEntry> out;
  std::vector<int> nu(n, 0);
  for (;;) {
    std::vector<int> cnu = cartan_apply(cd.C, nu);
    Weight lambda(n);
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      lambda[i] = dvec[i] - cnu[i];
      if (lambda[i] < 0) ok = false;
    }
    if (ok) out.push_back({std::move(lambda), nu});
    int t = 0;
    while (t < n && ++nu[t] > bound[t]) nu[t++] = 0;
    if (t == n) break;
  }
  std::sort(out.begin(), out.end(),
            [](const PiEntry& a, const PiEntry& b) { return a.nu < b.nu; });
  return out;
}

bool feasibility_inequality(const CartanData& cd, const std::vector<int>& dvec,
                            const std::vector<int>& nu) {
  const int n = cd.rank();
  if (static_cast<int>(dvec.size()) != n || static_cast<int>(nu.size()) != n)
    throw UsageError("feasibility_inequality: wrong vector length");
  for (int a = 0; a < n; ++a) {
    long s = dvec[a] - 2L * nu[a];
    for (int b = 0; b < n; ++b)
      if (b != a && cd.C[a][b] == -1) s += nu[b];
    if (s < 0) return false;
  }
  return true;
}

mpz_class weyl_dim(const CartanData& cd, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != cd.rank())
    throw UsageError("weyl_dim: weight has wrong length");
  check_dominant(lambda);
  mpz_class num = 1, den = 1;
  for (const auto& alpha : cd.positive_roots) {
    long up = 0, lo = 0;
    for (int b = 0; b < cd.rank(); ++b) {
      up += static_cast<long>(lambda[b] + 1) * alpha[b];
      lo += alpha[b];
    }
    num *= up;
    den *= lo;
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

mpz_class schur_dimension(const CartanData& cd, const std::vector<PiEntry>& pi) {
  mpz_class total = 0;
  for (const PiEntry& e : pi) {
    mpz_class dl = weyl_dim(cd, e.lambda);
    total += dl * dl;
  }
  return total;
}

std::set<Weight> weyl_orbit(const CartanData& cd, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != cd.rank())
    throw UsageError("weyl_orbit: weight has wrong length");
  check_dominant(lambda);
  std::set<Weight> orbit{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight mu = std::move(queue.front());
    queue.pop_front();
    for (int a = 0; a < cd.rank(); ++a) {
      if (mu[a] == 0) continue;
      Weight nu = mu;  // s_a(mu) = mu - mu_a * (a-th column of C)
      for (int b = 0; b < cd.rank(); ++b) nu[b] -= mu[a] * cd.C[b][a];
      if (orbit.insert(nu).second) queue.push_back(std::move(nu));
    }
  }
  return orbit;
}

bool check_saturation(const CartanData& cd, const std::vector<int>& dvec,
                      const std::vector<PiEntry>& pi) {
  std::set<Weight> have;
  for (const PiEntry& e : pi) {
    std::vector<int> cnu = cartan_apply(cd.C, e.nu);
    for (int i = 0; i < cd.rank(); ++i)
      if (e.lambda[i] != dvec[i] - cnu[i])
        throw UsageError("check_saturation: pi entry inconsistent with dvec");
    have.insert(e.lambda);
  }
  for (const PiEntry& e : pi) {
    // every dominant mu = lambda - C nu' must already belong to pi
    std::vector<long> bound = nu_search_bound(cd.C, e.lambda);
    const int n = cd.rank();
    std::vector<int> nu(n, 0);
    for (;;) {
      std::vector<int> cnu = cartan_apply(cd.C, nu);
      Weight mu(n);
      bool dominant = true;
      for (int i = 0; i < n; ++i) {
        mu[i] = e.lambda[i] - cnu[i];
        if (mu[i] < 0) dominant = false;
      }
      if (dominant && !have.count(mu)) return false;
      int t = 0;
      while (t < n && ++nu[t] > bound[t]) nu[t++] = 0;
      if (t == n) break;
    }
  }
  return true;
}

}  // namespace qschur
