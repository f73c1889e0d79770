#ifndef QSCHUR_FLAGS_HPP
#define QSCHUR_FLAGS_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qschur/quiver.hpp"
#include "qschur/subspace.hpp"

namespace qschur {

using DimVector = std::vector<int>;  // indexed by quiver node

/// One point of the flag variety. Parts are stored inner to outer:
///   fork model:  [V_{j_m}, ..., V_{j_1}, U_i, U_k, U_{j_1}, ..., U_{j_m}]
///   chain model: [W_1, ..., W_n]
struct Flag {
  std::vector<Subspace> parts;

  std::vector<uint8_t> key() const;
  bool operator==(const Flag& o) const { return parts == o.parts; }
};

/// The enumerated variety with its canonical ordering and partitions.
/// Flags are grouped by dimension vector, then (fork model) by the inner
/// chain dimensions c = (dim V_{j_1}, ..., dim V_{j_m}), then ordered
/// lexicographically on the canonical part matrices, inner to outer.
struct FlagIndexedSet {
  QuiverShape shape;
  int d = 0;
  long q = 2;
  std::vector<Flag> flags;
  std::vector<DimVector> nu;              // parallel to flags
  std::vector<std::vector<int>> c_inner;  // parallel; empty vectors for chain model
  std::map<DimVector, std::pair<int, int>> by_nu;  // [begin, end)
  std::map<std::pair<DimVector, std::vector<int>>, std::pair<int, int>> by_stratum;
  std::map<std::vector<uint8_t>, int> index;

  int size() const { return static_cast<int>(flags.size()); }
  int find(const Flag& f) const;  // -1 when absent

  // Part slot accessors for the fork model (beta in 1..m).
  int slot_v(int beta) const { return shape.m - beta; }
  int slot_ui() const { return shape.m; }
  int slot_uk() const { return shape.m + 1; }
  int slot_u(int beta) const { return shape.m + 1 + beta; }
};

/// Dimension vector of a flag under the given shape.
DimVector flag_dims(const QuiverShape& shape, const Flag& f);
/// Inner chain dimensions (dim V_{j_1}, ..., dim V_{j_m}); fork model only.
std::vector<int> flag_inner_dims(const QuiverShape& shape, const Flag& f);

/// The inequality chain nu_i + nu_k <= nu_{j_1} <= ... <= nu_{j_m} <= d.
/// It is necessary for d*omega_{j_m} - C nu to stay dominant and sufficient
/// for X_nu to be nonempty; it does not characterize nonemptiness (a flag
/// with V_{j_1} = U_i = U_k = U_{j_1} = D already violates it).
bool necessary_condition(const DimVector& nu, int m, int d);

/// True iff X_nu is nonempty, i.e. some stratum label (u, c) exists with
/// c_m <= ... <= c_1 <= min(nu_i, nu_k) and max(nu_i, nu_k) <= u_1 <= ...
/// <= u_m <= d, where u_b + c_b = nu_{j_b}.
bool dims_realizable(const DimVector& nu, int m, int d);

/// All realizable dimension vectors in lexicographic order.
std::vector<DimVector> realizable_dimvectors(int m, int d);

/// |X_{nu,c}(F_q)| in closed form (product of Gaussian binomials).
/// c is indexed by beta: c[t] = dim V_{j_{t+1}}. Invalid labels count 0.
mpz_class stratum_count(const DimVector& nu, const std::vector<int>& c, int m,
                        int d, long q);

/// |X_nu(F_q)| = sum of stratum_count over admissible inner dimensions.
mpz_class count_flags_nu(const DimVector& nu, int m, int d, long q);

/// Chain model: number of flags with the given step dimensions.
mpz_class count_chain_flags_nu(const DimVector& nu, int n, int d, long q);

/// Closed-form totals, used as the pre-enumeration resource estimate.
mpz_class predict_fork_total(int m, int d, long q);
mpz_class predict_chain_total(int n, int d, long q);

/// Enumerate the full variety. Throws ResourceError when the predicted
/// flag count exceeds max_flags, UsageError on bad parameters.
FlagIndexedSet enumerate_fork_flags(int m, int d, long q, long max_flags = 1000000);
FlagIndexedSet enumerate_chain_flags(int n, int d, long q, long max_flags = 1000000);

/// Disk cache. The JSON carries a version tag, the parameters and every
/// flag as lists of RREF row matrices in canonical order.
std::string flagset_to_json(const FlagIndexedSet& fs);
FlagIndexedSet flagset_from_json(const std::string& text);
std::string flagset_cache_name(const QuiverShape& shape, int d, long q);
std::optional<FlagIndexedSet> load_cached_flagset(const std::string& dir,
                                                  const QuiverShape& shape, int d,
                                                  long q);
void store_cached_flagset(const std::string& dir, const FlagIndexedSet& fs);

}  // namespace qschur

#endif
