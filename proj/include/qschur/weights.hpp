#ifndef QSCHUR_WEIGHTS_HPP
#define QSCHUR_WEIGHTS_HPP

#include <gmpxx.h>

#include <set>
#include <string>
#include <vector>

#include "qschur/quiver.hpp"

namespace qschur {

/// Weight in fundamental-weight coordinates; dominant iff all entries >= 0.
using Weight = std::vector<int>;

/// Cartan matrix of a simply-laced finite type together with its positive
/// roots (in simple-root coordinates, generated by reflection closure).
struct CartanData {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> C;
  std::vector<std::vector<int>> positive_roots;

  int rank() const { return static_cast<int>(C.size()); }

  static CartanData from_shape(const QuiverShape& shape);
  /// Validates: symmetric, diagonal 2, off-diagonal in {0,-1}, positive
  /// definite. Throws UsageError otherwise.
  static CartanData from_matrix(std::vector<std::string> labels,
                                std::vector<std::vector<int>> C);
};

struct PiEntry {
  Weight lambda;
  std::vector<int> nu;
};

/// The saturated set generated by dvec: all (lambda, nu) with
/// lambda = dvec - C nu componentwise >= 0, nu in N^rank.
std::vector<PiEntry> pi_set(const CartanData& cd, const std::vector<int>& dvec);

/// Node-wise inequality d_a + sum_{b ~ a} nu_b - 2 nu_a >= 0 for all a;
/// equivalent to dvec - C nu >= 0 componentwise.
bool feasibility_inequality(const CartanData& cd, const std::vector<int>& dvec,
                            const std::vector<int>& nu);

/// Weyl dimension formula over the stored positive roots; exact integers.
mpz_class weyl_dim(const CartanData& cd, const Weight& lambda);

/// Sum of squared simple dimensions over the saturated set.
mpz_class schur_dimension(const CartanData& cd, const std::vector<PiEntry>& pi);

std::set<Weight> weyl_orbit(const CartanData& cd, const Weight& lambda);

/// True iff pi is closed under passing to dominant weights obtained by
/// subtracting nonnegative root combinations.
bool check_saturation(const CartanData& cd, const std::vector<int>& dvec,
                      const std::vector<PiEntry>& pi);

}  // namespace qschur

#endif
