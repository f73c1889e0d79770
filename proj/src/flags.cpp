#include "qschur/flags.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qschur {

namespace {

constexpr int kCacheVersion = 1;

// Gaussian binomial that treats any out-of-range argument as an empty count.
mpz_class gb0(long n, long k, long q) {
  if (n < 0 || k < 0 || k > n) return 0;
  return gaussian_binomial(n, k, q);
}

// Total number of subspaces of F_q^n.
mpz_class subspace_total(long n, long q) {
  mpz_class t = 0;
  for (long k = 0; k <= n; ++k) t += gb0(n, k, q);
  return t;
}

void check_fork_nu(const DimVector& nu, int m) {
  if (static_cast<int>(nu.size()) != m + 2)
    throw UsageError("dimension vector must have m + 2 entries");
}

}  // namespace

std::vector<uint8_t> Flag::key() const {
  std::vector<uint8_t> k;
  for (const Subspace& s : parts) {
    const auto& pk = s.key();
    k.insert(k.end(), pk.begin(), pk.end());
  }
  return k;
}

int FlagIndexedSet::find(const Flag& f) const {
  auto it = index.find(f.key());
  return it == index.end() ? -1 : it->second;
}

DimVector flag_dims(const QuiverShape& shape, const Flag& f) {
  DimVector nu(shape.rank(), 0);
  if (shape.kind == QuiverShape::Kind::TypeA) {
    for (int t = 0; t < shape.m; ++t) nu[t] = f.parts[t].dim();
    return nu;
  }
  const int m = shape.m;
  nu[0] = f.parts[m].dim();      // U_i
  nu[1] = f.parts[m + 1].dim();  // U_k
  for (int b = 1; b <= m; ++b)
    nu[1 + b] = f.parts[m + 1 + b].dim() + f.parts[m - b].dim();
  return nu;
}

std::vector<int> flag_inner_dims(const QuiverShape& shape, const Flag& f) {
  if (shape.kind != QuiverShape::Kind::TypeD) return {};
  const int m = shape.m;
  std::vector<int> c(m);
  for (int b = 1; b <= m; ++b) c[b - 1] = f.parts[m - b].dim();
  return c;
}

bool necessary_condition(const DimVector& nu, int m, int d) {
  check_fork_nu(nu, m);
  for (int v : nu)
    if (v < 0) return false;
  if (nu[0] + nu[1] > nu[2]) return false;
  for (int b = 1; b < m; ++b)
    if (nu[1 + b] > nu[2 + b]) return false;
  return nu[m + 1] <= d;
}

bool dims_realizable(const DimVector& nu, int m, int d) {
  check_fork_nu(nu, m);
  for (int v : nu)
    if (v < 0) return false;
  const int hi = std::max(nu[0], nu[1]);
  const int lo = std::min(nu[0], nu[1]);
  // scan admissible c_1 >= c_2 >= ... with u_b = nu_{j_b} - c_b nondecreasing
  std::vector<int> c(m, 0);
  for (;;) {
    bool ok = c[0] <= lo;
    long prev_u = hi;
    for (int t = 0; t < m && ok; ++t) {
      if (t + 1 < m && c[t + 1] > c[t]) ok = false;
      const long u = nu[2 + t] - c[t];
      if (u < prev_u) ok = false;
      prev_u = u;
    }
    if (ok && prev_u <= d) return true;
    int t = 0;
    while (t < m && ++c[t] > nu[2 + t]) c[t++] = 0;
    if (t == m) break;
  }
  return false;
}

std::vector<DimVector> realizable_dimvectors(int m, int d) {
  std::vector<DimVector> out;
  DimVector nu(m + 2, 0);
  std::vector<int> cap(m + 2, 2 * d);
  cap[0] = cap[1] = d;
  for (;;) {
    if (dims_realizable(nu, m, d)) out.push_back(nu);
    int t = 0;
    while (t < m + 2 && ++nu[t] > cap[t]) nu[t++] = 0;
    if (t == m + 2) break;
  }
  return out;
}

mpz_class stratum_count(const DimVector& nu, const std::vector<int>& c, int m,
                        int d, long q) {
  check_fork_nu(nu, m);
  if (static_cast<int>(c.size()) != m)
    throw UsageError("stratum label must have m entries");
  std::vector<long> u(m);
  for (int t = 0; t < m; ++t) u[t] = nu[2 + t] - c[t];
  mpz_class r = gb0(d, u[m - 1], q);
  for (int t = m - 1; t >= 1; --t) r *= gb0(u[t], u[t - 1], q);
  r *= gb0(u[0], c[0], q);
  for (int t = 0; t + 1 < m; ++t) r *= gb0(c[t], c[t + 1], q);
  r *= gb0(u[0] - c[0], nu[0] - c[0], q);
  r *= gb0(u[0] - c[0], nu[1] - c[0], q);
  return r;
}

mpz_class count_flags_nu(const DimVector& nu, int m, int d, long q) {
  check_fork_nu(nu, m);
  mpz_class total = 0;
  std::vector<int> c(m, 0);
  for (;;) {
    total += stratum_count(nu, c, m, d, q);
    int t = 0;
    while (t < m && ++c[t] > nu[2 + t]) c[t++] = 0;
    if (t == m) break;
  }
  return total;
}

mpz_class count_chain_flags_nu(const DimVector& nu, int n, int d, long q) {
  if (static_cast<int>(nu.size()) != n)
    throw UsageError("dimension vector must have n entries");
  mpz_class r = gb0(d, nu[n - 1], q);
  for (int t = n - 1; t >= 1; --t) r *= gb0(nu[t], nu[t - 1], q);
  return r;
}

mpz_class predict_fork_total(int m, int d, long q) {
  // Sum over u_1 <= ... <= u_m <= d and c_m <= ... <= c_1 <= u_1 of the
  // chain counts, times the square of the number of middle choices.
  mpz_class total = 0;
  std::vector<int> u(m), c(m);
  auto walk_c = [&](auto&& self, int t, int lo, int hi, mpz_class acc) -> void {
    // choosing c_{t+1} in [lo, hi] descending along beta; acc carries the
    // V-chain Gaussian product so far
    if (t == m) {
      total += acc * subspace_total(u[0] - c[0], q) * subspace_total(u[0] - c[0], q);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      c[t] = v;
      mpz_class next = acc * (t == 0 ? gb0(u[0], v, q) : gb0(c[t - 1], v, q));
      self(self, t + 1, 0, v, std::move(next));
    }
  };
  auto walk_u = [&](auto&& self, int t, int hi, mpz_class acc) -> void {
    // u indices walked from the outside in: t = m-1 .. 0
    if (t < 0) {
      walk_c(walk_c, 0, 0, u[0], std::move(acc));
      return;
    }
    for (int v = 0; v <= hi; ++v) {
      u[t] = v;
      mpz_class next = acc * (t == m - 1 ? gb0(d, v, q) : gb0(u[t + 1], v, q));
      self(self, t - 1, v, std::move(next));
    }
  };
  walk_u(walk_u, m - 1, d, 1);
  return total;
}

mpz_class predict_chain_total(int n, int d, long q) {
  mpz_class total = 0;
  DimVector nu(n, 0);
  for (;;) {
    total += count_chain_flags_nu(nu, n, d, q);
    int t = 0;
    while (t < n && ++nu[t] > d) nu[t++] = 0;
    if (t == n) break;
  }
  return total;
}

namespace {

void finalize(FlagIndexedSet& fs, std::vector<Flag>&& raw) {
  struct Entry {
    DimVector nu;
    std::vector<int> c;
    std::vector<uint8_t> key;
    Flag flag;
  };
  std::vector<Entry> entries;
  entries.reserve(raw.size());
  for (Flag& f : raw) {
    Entry e;
    e.nu = flag_dims(fs.shape, f);
    e.c = flag_inner_dims(fs.shape, f);
    e.key = f.key();
    e.flag = std::move(f);
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.nu != b.nu) return a.nu < b.nu;
    if (a.c != b.c) return a.c < b.c;
    return a.key < b.key;
  });
  fs.flags.clear();
  fs.nu.clear();
  fs.c_inner.clear();
  fs.by_nu.clear();
  fs.by_stratum.clear();
  fs.index.clear();
  for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
    Entry& e = entries[i];
    fs.index.emplace(e.key, i);
    auto [nit, fresh_nu] = fs.by_nu.try_emplace(e.nu, std::make_pair(i, i + 1));
    if (!fresh_nu) nit->second.second = i + 1;
    auto skey = std::make_pair(e.nu, e.c);
    auto [sit, fresh_s] = fs.by_stratum.try_emplace(skey, std::make_pair(i, i + 1));
    if (!fresh_s) sit->second.second = i + 1;
    fs.flags.push_back(std::move(e.flag));
    fs.nu.push_back(std::move(e.nu));
    fs.c_inner.push_back(std::move(e.c));
  }
}

}  // namespace

FlagIndexedSet enumerate_fork_flags(int m, int d, long q, long max_flags) {
  if (d < 0) throw UsageError("enumerate_fork_flags: d must be >= 0");
  if (!is_prime(q)) throw UsageError("enumerate_fork_flags: q must be prime");
  FlagIndexedSet fs;
  fs.shape = QuiverShape::type_d(m);
  fs.d = d;
  fs.q = q;
  mpz_class predicted = predict_fork_total(m, d, q);
  if (predicted > max_flags) {
    std::ostringstream os;
    os << "enumerate_fork_flags: predicted flag count " << predicted.get_str()
       << " exceeds cap " << max_flags;
    throw ResourceError(os.str());
  }
  const int p = static_cast<int>(q);
  const Subspace full = Subspace::full(d, p);
  std::vector<Flag> raw;
  // V-chain inside-out (V_{j_m} first), the two middle subspaces, then the
  // U-chain outward. Every level runs over all admissible dimensions.
  std::vector<Subspace> vs;  // V_{j_m}, ..., V_{j_1}
  std::vector<Subspace> us;  // U_{j_1}, ..., U_{j_m}
  auto pick_u = [&](auto&& self, const Subspace& below, int level, Flag& f) -> void {
    if (level == m) {
      raw.push_back(f);
      return;
    }
    for (int k = below.dim(); k <= d; ++k)
      for (const Subspace& w : enumerate_between(below, full, k)) {
        f.parts.push_back(w);
        self(self, w, level + 1, f);
        f.parts.pop_back();
      }
  };
  auto pick_mid = [&](const Subspace& v1, Flag& f) {
    for (int ki = v1.dim(); ki <= d; ++ki)
      for (const Subspace& ui : enumerate_between(v1, full, ki)) {
        f.parts.push_back(ui);
        for (int kk = v1.dim(); kk <= d; ++kk)
          for (const Subspace& uk : enumerate_between(v1, full, kk)) {
            f.parts.push_back(uk);
            pick_u(pick_u, sum(ui, uk), 0, f);
            f.parts.pop_back();
          }
        f.parts.pop_back();
      }
  };
  auto pick_v = [&](auto&& self, const Subspace& inside, int level, Flag& f) -> void {
    if (level == m) {
      pick_mid(f.parts.back(), f);
      return;
    }
    for (int k = inside.dim(); k <= d; ++k)
      for (const Subspace& w : enumerate_between(inside, full, k)) {
        f.parts.push_back(w);
        self(self, w, level + 1, f);
        f.parts.pop_back();
      }
  };
  Flag f;
  const Subspace zero(d, p);
  // innermost V_{j_m} ranges over all subspaces of D
  for (int k = 0; k <= d; ++k)
    for (const Subspace& vm : enumerate_between(zero, full, k)) {
      f.parts.push_back(vm);
      pick_v(pick_v, vm, 1, f);
      f.parts.pop_back();
    }
  finalize(fs, std::move(raw));
  return fs;
}

FlagIndexedSet enumerate_chain_flags(int n, int d, long q, long max_flags) {
  if (d < 0) throw UsageError("enumerate_chain_flags: d must be >= 0");
  if (!is_prime(q)) throw UsageError("enumerate_chain_flags: q must be prime");
  FlagIndexedSet fs;
  fs.shape = QuiverShape::type_a(n);
  fs.d = d;
  fs.q = q;
  mpz_class predicted = predict_chain_total(n, d, q);
  if (predicted > max_flags) {
    std::ostringstream os;
    os << "enumerate_chain_flags: predicted flag count " << predicted.get_str()
       << " exceeds cap " << max_flags;
    throw ResourceError(os.str());
  }
  const int p = static_cast<int>(q);
  const Subspace full = Subspace::full(d, p);
  const Subspace zero(d, p);
  std::vector<Flag> raw;
  Flag f;
  auto pick = [&](auto&& self, const Subspace& below, int level) -> void {
    if (level == n) {
      raw.push_back(f);
      return;
    }
    for (int k = below.dim(); k <= d; ++k)
      for (const Subspace& w : enumerate_between(below, full, k)) {
        f.parts.push_back(w);
        self(self, w, level + 1);
        f.parts.pop_back();
      }
  };
  pick(pick, zero, 0);
  finalize(fs, std::move(raw));
  return fs;
}

std::string flagset_to_json(const FlagIndexedSet& fs) {
  nlohmann::json j;
  j["format"] = "qschur-flagset";
  j["version"] = kCacheVersion;
  j["kind"] = fs.shape.kind == QuiverShape::Kind::TypeD ? "D" : "A";
  j["m"] = fs.shape.m;
  j["d"] = fs.d;
  j["q"] = fs.q;
  nlohmann::json flags = nlohmann::json::array();
  for (const Flag& f : fs.flags) {
    nlohmann::json parts = nlohmann::json::array();
    for (const Subspace& s : f.parts) {
      nlohmann::json rows = nlohmann::json::array();
      for (int r = 0; r < s.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < s.ambient(); ++c) row.push_back(int(s.basis().at(r, c)));
        rows.push_back(std::move(row));
      }
      parts.push_back(std::move(rows));
    }
    flags.push_back(std::move(parts));
  }
  j["flags"] = std::move(flags);
  return j.dump(1);
}

FlagIndexedSet flagset_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("format", "") != "qschur-flagset" || j.value("version", -1) != kCacheVersion)
    throw UsageError("flagset_from_json: unknown format or version");
  FlagIndexedSet fs;
  const std::string kind = j.at("kind").get<std::string>();
  const int m = j.at("m").get<int>();
  fs.shape = kind == "D" ? QuiverShape::type_d(m) : QuiverShape::type_a(m);
  fs.d = j.at("d").get<int>();
  fs.q = j.at("q").get<long>();
  const int p = static_cast<int>(fs.q);
  std::vector<Flag> raw;
  for (const auto& jf : j.at("flags")) {
    Flag f;
    for (const auto& jp : jf) {
      const int rows = static_cast<int>(jp.size());
      GFMatrix mrows(p, rows, fs.d);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < fs.d; ++c) mrows.at(r, c) = jp[r][c].get<int>();
      f.parts.emplace_back(mrows);
    }
    raw.push_back(std::move(f));
  }
  std::vector<std::vector<uint8_t>> order;
  order.reserve(raw.size());
  for (const Flag& f : raw) order.push_back(f.key());
  finalize(fs, std::move(raw));
  // A cache produced by this code is already in canonical order; anything
  // else is treated as stale.
  for (size_t i = 0; i < order.size(); ++i)
    if (fs.flags[i].key() != order[i])
      throw UsageError("flagset_from_json: flags not in canonical order");
  return fs;
}

std::string flagset_cache_name(const QuiverShape& shape, int d, long q) {
  std::ostringstream os;
  os << "flags_" << (shape.kind == QuiverShape::Kind::TypeD ? "D" : "A") << "_m"
     << shape.m << "_d" << d << "_q" << q << "_v" << kCacheVersion << ".json";
  return os.str();
}

std::optional<FlagIndexedSet> load_cached_flagset(const std::string& dir,
                                                  const QuiverShape& shape, int d,
                                                  long q) {
  namespace fsys = std::filesystem;
  const fsys::path path = fsys::path(dir) / flagset_cache_name(shape, d, q);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    FlagIndexedSet fs = flagset_from_json(buf.str());
    if (fs.shape == shape && fs.d == d && fs.q == q) return fs;
  } catch (const std::exception&) {
    // fall through: stale or corrupt cache is simply re-enumerated
  }
  return std::nullopt;
}

void store_cached_flagset(const std::string& dir, const FlagIndexedSet& fs) {
  namespace fsys = std::filesystem;
  fsys::create_directories(dir);
  const fsys::path path = fsys::path(dir) / flagset_cache_name(fs.shape, fs.d, fs.q);
  std::ofstream out(path);
  out << flagset_to_json(fs);
}

}  // namespace qschur
