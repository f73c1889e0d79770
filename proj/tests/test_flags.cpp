#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <set>

#include "doctest.h"
#include "qschur/flags.hpp"
#include "qschur/strata.hpp"

using namespace qschur;

namespace {

// Chain-poset oracle for d = 1: every subspace of F_q^1 is 0 or the full
// line, so a fork flag is a tuple of booleans respecting the containments.
long boolean_fork_oracle(int m) {
  long count = 0;
  const int slots = 2 * m + 2;
  std::vector<int> bit(slots, 0);
  for (;;) {
    // slot order: V_m..V_1, Ui, Uk, U_1..U_m
    bool ok = true;
    for (int t = 0; t + 1 < m; ++t)
      if (bit[t] > bit[t + 1]) ok = false;  // V chain inward containments
    if (m >= 1) {
      if (bit[m - 1] > bit[m] || bit[m - 1] > bit[m + 1]) ok = false;  // V_1 in Ui, Uk
      if (bit[m] > bit[m + 2] || bit[m + 1] > bit[m + 2]) ok = false;  // Ui, Uk in U_1
    }
    for (int t = 0; t + 1 < m; ++t)
      if (bit[m + 2 + t] > bit[m + 3 + t]) ok = false;  // U chain outward
    if (ok) ++count;
    int t = 0;
    while (t < slots && ++bit[t] == 2) bit[t++] = 0;
    if (t == slots) break;
  }
  return count;
}

// Direct count of a stratum by brute force over explicit subspace tuples.
long brute_stratum_count_m1(const DimVector& nu, int c1, int d, int p) {
  long count = 0;
  std::vector<Subspace> all;
  for (int k = 0; k <= d; ++k)
    for (auto& s : enumerate_subspaces(d, k, p)) all.push_back(s);
  for (const auto& v1 : all) {
    if (v1.dim() != c1) continue;
    for (const auto& ui : all) {
      if (ui.dim() != nu[0] || !ui.contains(v1)) continue;
      for (const auto& uk : all) {
        if (uk.dim() != nu[1] || !uk.contains(v1)) continue;
        for (const auto& u1 : all) {
          if (u1.dim() + c1 != nu[2]) continue;
          if (u1.contains(ui) && u1.contains(uk)) ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("flag counts at d = 1 match the boolean-chain oracle") {
  for (int m : {1, 2, 3}) {
    for (long q : {2L, 3L}) {
      FlagIndexedSet fs = enumerate_fork_flags(m, 1, q);
      CHECK(fs.size() == boolean_fork_oracle(m));
    }
  }
  CHECK(enumerate_fork_flags(1, 1, 2).size() == 6);
  CHECK(enumerate_fork_flags(2, 1, 5).size() == 8);
}

TEST_CASE("d = 0 gives the single zero flag") {
  FlagIndexedSet fs = enumerate_fork_flags(2, 0, 3);
  CHECK(fs.size() == 1);
  CHECK(fs.by_nu.size() == 1);
  CHECK(fs.by_nu.begin()->first == DimVector{0, 0, 0, 0});
}

TEST_CASE("stratum counts against direct enumeration") {
  // m=1, d=2, nu=(1,1,2): c=(0) gives (q+1)^2, c=(1) gives q+1
  CHECK(stratum_count({1, 1, 2}, {0}, 1, 2, 2) == 9);
  CHECK(stratum_count({1, 1, 2}, {0}, 1, 2, 3) == 16);
  CHECK(stratum_count({1, 1, 2}, {1}, 1, 2, 3) == 4);
  CHECK(brute_stratum_count_m1({1, 1, 2}, 0, 2, 2) == 9);
  CHECK(brute_stratum_count_m1({1, 1, 2}, 1, 2, 3) == 4);
  for (long q : {2L, 3L}) {
    for (const DimVector& nu : realizable_dimvectors(1, 2)) {
      for (int c1 = 0; c1 <= nu[2]; ++c1) {
        CHECK(stratum_count(nu, {c1}, 1, 2, q) ==
              brute_stratum_count_m1(nu, c1, 2, static_cast<int>(q)));
      }
    }
  }
  // empty stratum: c_1 beyond min(nu_i, nu_k)
  CHECK(stratum_count({0, 1, 2}, {1}, 1, 2, 2) == 0);
}

TEST_CASE("count_flags_nu sums the strata and matches enumeration") {
  CHECK(count_flags_nu({1, 1, 2}, 1, 2, 2) == 12);  // 9 + 3
  for (long q : {2L, 3L}) {
    FlagIndexedSet fs = enumerate_fork_flags(1, 2, q);
    for (const auto& [nu, range] : fs.by_nu)
      CHECK(count_flags_nu(nu, 1, 2, q) == range.second - range.first);
  }
  CHECK(count_flags_nu({0, 0, 0}, 1, 2, 2) == 1);
  // genuinely unrealizable: nu_i exceeds every possible dim U_{j_1}
  CHECK(count_flags_nu({1, 0, 0}, 1, 2, 2) == 0);
  CHECK(count_flags_nu({2, 2, 1}, 1, 2, 2) == 0);
}

TEST_CASE("enumerated strata match the closed form on the desk grid") {
  for (int m : {1, 2})
    for (int d : {1, 2})
      for (long q : {2L, 3L}) {
        FlagIndexedSet fs = enumerate_fork_flags(m, d, q);
        // every enumerated stratum matches its closed form
        std::map<std::pair<DimVector, std::vector<int>>, long> seen;
        for (const auto& [key, range] : fs.by_stratum)
          seen[key] = range.second - range.first;
        for (const auto& [key, count] : seen)
          CHECK(stratum_count(key.first, key.second, m, d, q) == count);
        // and every admissible stratum label is realized with the right count
        for (const DimVector& nu : realizable_dimvectors(m, d))
          for (const auto& c : enumerate_strata(nu, m, d)) {
            auto it = seen.find(std::make_pair(nu, c));
            const long enumerated = it == seen.end() ? 0 : it->second;
            CHECK(stratum_count(nu, c, m, d, q) == enumerated);
            CHECK(enumerated > 0);
          }
      }
}

TEST_CASE("nonemptiness: the inequality chain is sufficient, not necessary") {
  // sufficiency (exhaustive over the box): chain holds => flags exist
  for (int m : {1, 2})
    for (int d : {1, 2}) {
      FlagIndexedSet fs = enumerate_fork_flags(m, d, 2);
      for (const DimVector& nu : realizable_dimvectors(m, d)) {
        CHECK(fs.by_nu.count(nu) == 1);
      }
      std::vector<int> box(m + 2, 0);
      for (;;) {
        const bool realized = fs.by_nu.count(box) == 1;
        CHECK(realized == dims_realizable(box, m, d));
        if (necessary_condition(box, m, d)) CHECK(realized);
        int t = 0;
        while (t < m + 2 && ++box[t] > 2 * d + 1) box[t++] = 0;
        if (t == m + 2) break;
      }
    }
  // the counterexample direction: a realized nu violating the chain
  DimVector full_flag_nu{1, 1, 2};
  CHECK(dims_realizable(full_flag_nu, 1, 1));
  CHECK(!necessary_condition(full_flag_nu, 1, 1));
  FlagIndexedSet fs = enumerate_fork_flags(1, 1, 2);
  CHECK(fs.by_nu.count(full_flag_nu) == 1);
}

TEST_CASE("deterministic ordering across runs") {
  FlagIndexedSet a = enumerate_fork_flags(2, 1, 3);
  FlagIndexedSet b = enumerate_fork_flags(2, 1, 3);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) CHECK(a.flags[i] == b.flags[i]);
  CHECK(flagset_to_json(a) == flagset_to_json(b));
}

TEST_CASE("chain flags") {
  // n=1, d=2: flags are the subspaces of F_2^2
  CHECK(enumerate_chain_flags(1, 2, 2).size() == 5);
  CHECK(enumerate_chain_flags(2, 0, 2).size() == 1);
  FlagIndexedSet fs = enumerate_chain_flags(2, 2, 3);
  for (const auto& [nu, range] : fs.by_nu) {
    mpz_class expect = gaussian_binomial(2, nu[1], 3) * gaussian_binomial(nu[1], nu[0], 3);
    CHECK(expect == range.second - range.first);
    CHECK(count_chain_flags_nu(nu, 2, 2, 3) == expect);
  }
}

TEST_CASE("resource guard") {
  CHECK_THROWS_AS(enumerate_fork_flags(2, 2, 5, /*max_flags=*/10), ResourceError);
  CHECK_THROWS_AS(enumerate_chain_flags(3, 3, 5, /*max_flags=*/10), ResourceError);
  CHECK(predict_fork_total(1, 1, 2) == 6);
  CHECK(predict_fork_total(2, 1, 2) == 8);
  CHECK(predict_chain_total(1, 2, 2) == 5);
}

TEST_CASE("cache round trip") {
  namespace fsys = std::filesystem;
  const std::string dir =
      (fsys::temp_directory_path() / "qschur_test_cache").string();
  fsys::remove_all(dir);
  FlagIndexedSet fs = enumerate_fork_flags(2, 1, 2);
  store_cached_flagset(dir, fs);
  auto loaded = load_cached_flagset(dir, fs.shape, 1, 2);
  REQUIRE(loaded.has_value());
  CHECK(loaded->size() == fs.size());
  for (int i = 0; i < fs.size(); ++i) CHECK(loaded->flags[i] == fs.flags[i]);
  CHECK(loaded->by_nu == fs.by_nu);
  CHECK(flagset_to_json(*loaded) == flagset_to_json(fs));
  // wrong parameters miss the cache
  CHECK(!load_cached_flagset(dir, fs.shape, 2, 2).has_value());
  fsys::remove_all(dir);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(enumerate_fork_flags(1, -1, 2), UsageError);
  CHECK_THROWS_AS(enumerate_fork_flags(1, 1, 4), UsageError);
  CHECK_THROWS_AS(enumerate_fork_flags(0, 1, 2), UsageError);
  CHECK_THROWS_AS(count_flags_nu({1, 1}, 1, 2, 2), UsageError);
}
