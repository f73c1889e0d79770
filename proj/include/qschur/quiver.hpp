#ifndef QSCHUR_QUIVER_HPP
#define QSCHUR_QUIVER_HPP

#include <string>
#include <utility>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

/// Simply-laced Dynkin shape of the flag model.
///
/// TypeD with tail length m is the diagram D_{m+2}: two fork nodes i, k
/// joined to a chain j_1 - ... - j_m. Node indices: 0 = i, 1 = k,
/// 2+t = j_{t+1}. TypeA with n nodes is the chain w_1 - ... - w_n.
struct QuiverShape {
  enum class Kind { TypeD, TypeA };

  Kind kind = Kind::TypeD;
  int m = 1;  // tail length (TypeD) or chain length n (TypeA)

  static QuiverShape type_d(int m);
  static QuiverShape type_a(int n);

  int rank() const { return kind == Kind::TypeD ? m + 2 : m; }
  std::string node_label(int idx) const;
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::vector<int>> cartan() const;

  /// Node whose fundamental weight carries the ambient dimension d:
  /// j_m for TypeD (adjacent to the full space), the last node for TypeA.
  int weight_node() const { return rank() - 1; }

  /// For TypeD: index of node j_beta, 1 <= beta <= m.
  int spine_node(int beta) const { return 1 + beta; }

  bool operator==(const QuiverShape&) const = default;
};

}  // namespace qschur

#endif
