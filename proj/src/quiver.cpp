#include "qschur/quiver.hpp"

namespace qschur {

QuiverShape QuiverShape::type_d(int m) {
  if (m < 1) throw UsageError("QuiverShape::type_d: tail length m must be >= 1");
  return {Kind::TypeD, m};
}

QuiverShape QuiverShape::type_a(int n) {
  if (n < 1) throw UsageError("QuiverShape::type_a: chain length n must be >= 1");
  return {Kind::TypeA, n};
}

std::string QuiverShape::node_label(int idx) const {
  if (idx < 0 || idx >= rank()) throw UsageError("QuiverShape: node index out of range");
  if (kind == Kind::TypeA) return "w" + std::to_string(idx + 1);
  if (idx == 0) return "i";
  if (idx == 1) return "k";
  return "j" + std::to_string(idx - 1);
}

std::vector<std::pair<int, int>> QuiverShape::edges() const {
  std::vector<std::pair<int, int>> e;
  if (kind == Kind::TypeA) {
    for (int t = 0; t + 1 < m; ++t) e.emplace_back(t, t + 1);
    return e;
  }
  e.emplace_back(0, 2);  // i - j_1
  e.emplace_back(1, 2);  // k - j_1
  for (int b = 1; b < m; ++b) e.emplace_back(1 + b, 2 + b);  // j_b - j_{b+1}
  return e;
}

std::vector<std::vector<int>> QuiverShape::cartan() const {
  const int n = rank();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) c[a][a] = 2;
  for (auto [a, b] : edges()) {
    c[a][b] = -1;
    c[b][a] = -1;
  }
  return c;
}

}  // namespace qschur
