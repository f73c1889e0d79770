#include "qschur/convolution.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qschur {

namespace {

const char* kContextMismatch = "convolution: operator context mismatch";

// --- dimension views with the boundary conventions U_{j_{m+1}} = D,
// --- V_{j_{m+1}} = 0 (fork) and W_0 = 0, W_{n+1} = D (chain)

long vdim(const FlagModel& M, const Flag& f, int beta) {
  if (beta == M.shape().m + 1) return 0;
  return f.parts[M.flags.slot_v(beta)].dim();
}

long udim(const FlagModel& M, const Flag& f, int beta) {
  if (beta == M.shape().m + 1) return M.d();
  return f.parts[M.flags.slot_u(beta)].dim();
}

long uidim(const FlagModel& M, const Flag& f) { return f.parts[M.flags.slot_ui()].dim(); }
long ukdim(const FlagModel& M, const Flag& f) { return f.parts[M.flags.slot_uk()].dim(); }

long wdim(const FlagModel& M, const Flag& f, int t) {
  if (t == 0) return 0;
  if (t == M.shape().m + 1) return M.d();
  return f.parts[t - 1].dim();
}

// --- generator exponents, read off the defining formulas; the flag passed
// --- in is always the second argument of the entry being filled

long e_exponent(const FlagModel& M, const Flag& big, int node, bool v_move) {
  if (M.shape().kind == QuiverShape::Kind::TypeA) {
    const int a = node + 1;
    return -(wdim(M, big, a + 1) - wdim(M, big, a));
  }
  if (node == 0) return -(udim(M, big, 1) - uidim(M, big));
  if (node == 1) return -(udim(M, big, 1) - ukdim(M, big));
  const int beta = node - 1;
  if (v_move) {
    if (beta == 1)
      return -(uidim(M, big) + ukdim(M, big) - vdim(M, big, 1) - vdim(M, big, 2));
    return -(udim(M, big, beta - 1) - vdim(M, big, beta) - vdim(M, big, beta + 1));
  }
  if (beta == 1) return -(udim(M, big, 2) + 2 * vdim(M, big, 1) - udim(M, big, 1));
  return -(udim(M, big, beta + 1) + 2 * vdim(M, big, beta) - udim(M, big, beta) -
           vdim(M, big, beta - 1));
}

long f_exponent(const FlagModel& M, const Flag& small, int node, bool v_move) {
  if (M.shape().kind == QuiverShape::Kind::TypeA) {
    const int a = node + 1;
    return -(wdim(M, small, a) - wdim(M, small, a - 1));
  }
  if (node == 0) return -(uidim(M, small) - vdim(M, small, 1));
  if (node == 1) return -(ukdim(M, small) - vdim(M, small, 1));
  const int beta = node - 1;
  if (v_move) {
    if (beta == 1)
      return -(udim(M, small, 2) - 2 * udim(M, small, 1) + vdim(M, small, 1));
    return -(udim(M, small, beta + 1) - 2 * udim(M, small, beta) +
             vdim(M, small, beta) + vdim(M, small, beta - 1));
  }
  if (beta == 1)
    return -(udim(M, small, 1) - uidim(M, small) - ukdim(M, small) - vdim(M, small, 2));
  return -(-vdim(M, small, beta + 1) + udim(M, small, beta) - udim(M, small, beta - 1));
}

long k_exponent(const FlagModel& M, const Flag& f, int node) {
  if (M.shape().kind == QuiverShape::Kind::TypeA) {
    const int a = node + 1;
    return wdim(M, f, a + 1) + wdim(M, f, a - 1) - 2 * wdim(M, f, a);
  }
  if (node == 0) return udim(M, f, 1) + vdim(M, f, 1) - 2 * uidim(M, f);
  if (node == 1) return udim(M, f, 1) + vdim(M, f, 1) - 2 * ukdim(M, f);
  const int beta = node - 1;
  if (beta == 1)
    return udim(M, f, 2) + vdim(M, f, 2) + uidim(M, f) + ukdim(M, f) -
           2 * udim(M, f, 1) - 2 * vdim(M, f, 1);
  return udim(M, f, beta + 1) + vdim(M, f, beta + 1) + udim(M, f, beta - 1) +
         vdim(M, f, beta - 1) - 2 * udim(M, f, beta) - 2 * vdim(M, f, beta);
}

// All flags one step above f at the given node: (bigger flag, was a V move).
std::vector<std::pair<Flag, bool>> raising_moves(const FlagModel& M, const Flag& f,
                                                 int node) {
  std::vector<std::pair<Flag, bool>> out;
  const FlagIndexedSet& fs = M.flags;
  const int p = static_cast<int>(M.flags.q);
  auto raise_slot = [&](int slot, const Subspace& upper, bool v_move) {
    const Subspace& cur = f.parts[slot];
    if (cur.dim() >= upper.dim()) return;
    for (const Subspace& w : enumerate_between(cur, upper, cur.dim() + 1)) {
      Flag g = f;
      g.parts[slot] = w;
      out.emplace_back(std::move(g), v_move);
    }
  };
  if (M.shape().kind == QuiverShape::Kind::TypeA) {
    const int n = M.shape().m;
    const Subspace upper =
        node + 1 < n ? f.parts[node + 1] : Subspace::full(M.d(), p);
    raise_slot(node, upper, false);
    return out;
  }
  const int m = M.shape().m;
  if (node == 0 || node == 1) {
    raise_slot(node == 0 ? fs.slot_ui() : fs.slot_uk(), f.parts[fs.slot_u(1)], false);
    return out;
  }
  const int beta = node - 1;
  const Subspace upper_v = beta == 1
                               ? intersect(f.parts[fs.slot_ui()], f.parts[fs.slot_uk()])
                               : f.parts[fs.slot_v(beta - 1)];
  raise_slot(fs.slot_v(beta), upper_v, true);
  const Subspace upper_u =
      beta == m ? Subspace::full(M.d(), p) : f.parts[fs.slot_u(beta + 1)];
  raise_slot(fs.slot_u(beta), upper_u, false);
  return out;
}

void check_node(const FlagModel& M, int node) {
  if (node < 0 || node >= M.shape().rank())
    throw UsageError("build_generator: unknown node");
}

}  // namespace

FlagModel make_fork_model(int m, int d, long q, long max_flags,
                          const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    if (auto fs = load_cached_flagset(cache_dir, QuiverShape::type_d(m), d, q))
      return FlagModel(std::move(*fs));
  }
  FlagModel model(enumerate_fork_flags(m, d, q, max_flags));
  if (!cache_dir.empty()) store_cached_flagset(cache_dir, model.flags);
  return model;
}

FlagModel make_chain_model(int n, int d, long q, long max_flags,
                           const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    if (auto fs = load_cached_flagset(cache_dir, QuiverShape::type_a(n), d, q))
      return FlagModel(std::move(*fs));
  }
  FlagModel model(enumerate_chain_flags(n, d, q, max_flags));
  if (!cache_dir.empty()) store_cached_flagset(cache_dir, model.flags);
  return model;
}

void ConvOp::set(int r, int c, QRootQ v) {
  if (r < 0 || c < 0 || r >= model_->size() || c >= model_->size())
    throw UsageError("ConvOp::set: index outside X x X");
  if (v.is_zero()) {
    auto it = rows_.find(r);
    if (it != rows_.end()) {
      it->second.erase(c);
      if (it->second.empty()) rows_.erase(it);
    }
    return;
  }
  rows_[r][c] = std::move(v);
}

void ConvOp::add_at(int r, int c, const QRootQ& v) {
  if (v.is_zero()) return;
  auto& row = rows_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
    return;
  }
  it->second = model_->ring.add(it->second, v);
  if (it->second.is_zero()) {
    row.erase(it);
    if (row.empty()) rows_.erase(r);
  }
}

const QRootQ* ConvOp::get(int r, int c) const {
  auto it = rows_.find(r);
  if (it == rows_.end()) return nullptr;
  auto jt = it->second.find(c);
  return jt == it->second.end() ? nullptr : &jt->second;
}

size_t ConvOp::nnz() const {
  size_t n = 0;
  for (const auto& [r, row] : rows_) n += row.size();
  return n;
}

ConvOp identity_op(const FlagModel& model) {
  ConvOp op(&model);
  for (int t = 0; t < model.size(); ++t) op.set(t, t, model.ring.one());
  return op;
}

ConvOp one_nu(const FlagModel& model, const DimVector& nu) {
  ConvOp op(&model);
  auto it = model.flags.by_nu.find(nu);
  if (it == model.flags.by_nu.end()) return op;
  for (int t = it->second.first; t < it->second.second; ++t)
    op.set(t, t, model.ring.one());
  return op;
}

ConvOp build_generator(const FlagModel& model, GenKind kind, int node) {
  check_node(model, node);
  ConvOp op(&model);
  const QRing& R = model.ring;
  if (kind == GenKind::KPlus || kind == GenKind::KMinus) {
    const long sign = kind == GenKind::KPlus ? 1 : -1;
    for (int t = 0; t < model.size(); ++t)
      op.set(t, t, R.qpow(sign * k_exponent(model, model.flags.flags[t], node)));
    return op;
  }
  for (int si = 0; si < model.size(); ++si) {
    for (auto& [big, v_move] : raising_moves(model, model.flags.flags[si], node)) {
      const int bi = model.flags.find(big);
      if (bi < 0) throw ArithmeticError("build_generator: raised flag not in X");
      if (kind == GenKind::E)
        op.set(si, bi, R.qpow(e_exponent(model, model.flags.flags[bi], node, v_move)));
      else
        op.set(bi, si, R.qpow(f_exponent(model, model.flags.flags[si], node, v_move)));
    }
  }
  return op;
}

GeneratorSet build_generators(const FlagModel& model) {
  GeneratorSet g;
  for (int a = 0; a < model.shape().rank(); ++a) {
    g.E.push_back(build_generator(model, GenKind::E, a));
    g.F.push_back(build_generator(model, GenKind::F, a));
    g.Kp.push_back(build_generator(model, GenKind::KPlus, a));
    g.Km.push_back(build_generator(model, GenKind::KMinus, a));
  }
  return g;
}

ConvOp compose(const ConvOp& f, const ConvOp& g) {
  if (f.model() != g.model()) throw UsageError(kContextMismatch);
  const QRing& R = f.model()->ring;
  ConvOp out(f.model());
  for (const auto& [r, frow] : f.rows()) {
    for (const auto& [u, fv] : frow) {
      auto git = g.rows().find(u);
      if (git == g.rows().end()) continue;
      for (const auto& [c, gv] : git->second) out.add_at(r, c, R.mul(fv, gv));
    }
  }
  return out;
}

ConvOp op_add(const ConvOp& f, const ConvOp& g) {
  if (f.model() != g.model()) throw UsageError(kContextMismatch);
  ConvOp out = f;
  for (const auto& [r, row] : g.rows())
    for (const auto& [c, v] : row) out.add_at(r, c, v);
  return out;
}

ConvOp op_sub(const ConvOp& f, const ConvOp& g) {
  if (f.model() != g.model()) throw UsageError(kContextMismatch);
  const QRing& R = f.model()->ring;
  ConvOp out = f;
  for (const auto& [r, row] : g.rows())
    for (const auto& [c, v] : row) out.add_at(r, c, R.neg(v));
  return out;
}

ConvOp op_scale(const QRootQ& s, const ConvOp& f) {
  const QRing& R = f.model()->ring;
  ConvOp out(f.model());
  if (s.is_zero()) return out;
  for (const auto& [r, row] : f.rows())
    for (const auto& [c, v] : row) out.set(r, c, R.mul(s, v));
  return out;
}

std::string convop_to_json(const ConvOp& f) {
  const QRing& R = f.model()->ring;
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [r, row] : f.rows())
    for (const auto& [c, v] : row) {
      if (!first) os << ", ";
      first = false;
      os << "[" << r << ", " << c << ", " << R.to_json_string(v) << "]";
    }
  os << "]";
  return os.str();
}

namespace {

// First differing entry in row-major order, if any: (row, col, lhs, rhs).
struct EntryDiff {
  int row, col;
  QRootQ lhs, rhs;
};

std::optional<EntryDiff> first_diff(const ConvOp& lhs, const ConvOp& rhs) {
  ConvOp d = op_sub(lhs, rhs);
  if (d.is_zero()) return std::nullopt;
  const auto& [r, row] = *d.rows().begin();
  const int c = row.begin()->first;
  const QRootQ* lv = lhs.get(r, c);
  const QRootQ* rv = rhs.get(r, c);
  return EntryDiff{r, c, lv ? *lv : QRootQ{}, rv ? *rv : QRootQ{}};
}

}  // namespace

std::vector<RelationViolation> check_relations(const FlagModel& model,
                                               const GeneratorSet& g) {
  const QRing& R = model.ring;
  const auto& C = model.cartan.C;
  const int n = model.shape().rank();
  std::vector<RelationViolation> out;
  const ConvOp id = identity_op(model);
  const ConvOp zero(&model);
  auto label = [&](int a) { return model.shape().node_label(a); };
  auto record = [&](const char* family, int a, int b, const ConvOp& lhs,
                    const ConvOp& rhs) {
    if (auto diff = first_diff(lhs, rhs))
      out.push_back({family, label(a), label(b), diff->row, diff->col,
                     R.to_json_string(diff->lhs), R.to_json_string(diff->rhs)});
  };
  for (int a = 0; a < n; ++a)
    record("k_invertibility", a, a, compose(g.Kp[a], g.Km[a]), id);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      record("k_commutativity", a, b, compose(g.Kp[a], g.Kp[b]),
             compose(g.Kp[b], g.Kp[a]));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      record("k_e", a, b, compose(g.Kp[a], g.E[b]),
             op_scale(R.qpow(C[a][b]), compose(g.E[b], g.Kp[a])));
      record("k_f", a, b, compose(g.Kp[a], g.F[b]),
             op_scale(R.qpow(-C[a][b]), compose(g.F[b], g.Kp[a])));
    }
  const QRootQ ef_den = R.sub(R.qpow(1), R.qpow(-1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ConvOp lhs = op_sub(compose(g.E[a], g.F[b]), compose(g.F[b], g.E[a]));
      const ConvOp rhs = a == b
                             ? op_scale(R.inv(ef_den), op_sub(g.Kp[a], g.Km[a]))
                             : zero;
      record("e_f_commutator", a, b, lhs, rhs);
    }
  const QRootQ serre_mid = R.add(R.qpow(1), R.qpow(-1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || C[a][b] != -1) continue;
      {
        const ConvOp aa = compose(g.E[a], g.E[a]);
        const ConvOp aba = compose(g.E[a], compose(g.E[b], g.E[a]));
        const ConvOp lhs = op_add(op_sub(compose(aa, g.E[b]), op_scale(serre_mid, aba)),
                                  compose(g.E[b], aa));
        record("serre_e", a, b, lhs, zero);
      }
      {
        const ConvOp aa = compose(g.F[a], g.F[a]);
        const ConvOp aba = compose(g.F[a], compose(g.F[b], g.F[a]));
        const ConvOp lhs = op_add(op_sub(compose(aa, g.F[b]), op_scale(serre_mid, aba)),
                                  compose(g.F[b], aa));
        record("serre_f", a, b, lhs, zero);
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (C[a][b] != 0) continue;
      record("distant_e", a, b, compose(g.E[a], g.E[b]), compose(g.E[b], g.E[a]));
      record("distant_f", a, b, compose(g.F[a], g.F[b]), compose(g.F[b], g.F[a]));
    }
  return out;
}

long count_relation_instances(const FlagModel& model) {
  const auto& C = model.cartan.C;
  const int n = model.shape().rank();
  long edges = 0, distant = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      (C[a][b] == -1 ? edges : distant) += 1;
  // K inv + K comm + K-E + K-F + E-F + two Serre families + two distant
  return n + n * (n - 1) / 2 + 2L * n * n + 1L * n * n + 2 * (2 * edges) + 2 * distant;
}

long weight_exponent(const FlagModel& model, int node, const DimVector& nu) {
  check_node(model, node);
  if (static_cast<int>(nu.size()) != model.shape().rank())
    throw UsageError("weight_exponent: dimension vector has wrong length");
  long e = node == model.shape().weight_node() ? model.d() : 0;
  for (int b = 0; b < model.shape().rank(); ++b)
    e -= static_cast<long>(model.cartan.C[node][b]) * nu[b];
  return e;
}

std::vector<WeightViolation> weight_action_check(const FlagModel& model,
                                                 const GeneratorSet& g) {
  const QRing& R = model.ring;
  std::vector<WeightViolation> out;
  const int n = model.shape().rank();
  for (int a = 0; a < n; ++a) {
    for (int t = 0; t < model.size(); ++t) {
      const QRootQ expected = R.qpow(weight_exponent(model, a, model.flags.nu[t]));
      const QRootQ* actual = g.Kp[a].get(t, t);
      if (!actual || !(*actual == expected)) {
        std::ostringstream os;
        os << "K diagonal " << (actual ? R.to_json_string(*actual) : "0")
           << " != " << R.to_json_string(expected);
        out.push_back({"k_scaling", model.shape().node_label(a), t, t, os.str()});
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (const auto& [nu, range] : model.flags.by_nu) {
      const ConvOp idem = one_nu(model, nu);
      DimVector lowered = nu, raised = nu;
      lowered[a] -= 1;
      raised[a] += 1;
      const ConvOp pe = compose(g.E[a], idem);
      for (const auto& [r, row] : pe.rows())
        for (const auto& [c, v] : row) {
          if (model.flags.nu[r] != lowered || model.flags.nu[c] != nu)
            out.push_back({"e_support", model.shape().node_label(a), r, c,
                           "entry outside X_{nu - a} x X_nu"});
        }
      const ConvOp pf = compose(g.F[a], idem);
      for (const auto& [r, row] : pf.rows())
        for (const auto& [c, v] : row) {
          if (model.flags.nu[r] != raised || model.flags.nu[c] != nu)
            out.push_back({"f_support", model.shape().node_label(a), r, c,
                           "entry outside X_{nu + a} x X_nu"});
        }
    }
  }
  return out;
}

IdempotentExtraction extract_idempotents(const FlagModel& model,
                                         const GeneratorSet& g, long max_box) {
  const QRing& R = model.ring;
  const int rank = model.shape().rank();
  std::vector<DimVector> realized;
  for (const auto& [nu, range] : model.flags.by_nu) realized.push_back(nu);
  const int r = static_cast<int>(realized.size());
  // diagonal exponents of each K generator on each block, read off the
  // built operators
  std::vector<std::vector<long>> b(r, std::vector<long>(rank, 0));
  for (int i = 0; i < r; ++i) {
    const int t0 = model.flags.by_nu.at(realized[i]).first;
    for (int a = 0; a < rank; ++a) {
      const QRootQ* val = g.Kp[a].get(t0, t0);
      auto e = val ? R.log_qpow(*val) : std::nullopt;
      if (!e) throw ArithmeticError("extract_idempotents: K entry is not a power");
      b[i][a] = *e;
    }
  }
  // find a separating integer vector, enlarging the box until one appears
  std::vector<long> nvec(rank, 0);
  std::vector<long> w(r, 0);
  auto separates = [&](const std::vector<long>& cand) {
    for (int i = 0; i < r; ++i) {
      w[i] = 0;
      for (int a = 0; a < rank; ++a) w[i] += cand[a] * b[i][a];
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (w[i] == w[j]) return false;
    return true;
  };
  bool found = false;
  for (long box = 0; box <= max_box && !found; box = box == 0 ? 1 : box * 2) {
    std::vector<long> cand(rank, -box);
    for (;;) {
      if (separates(cand)) {
        nvec = cand;
        found = true;
        break;
      }
      int t = 0;
      while (t < rank && ++cand[t] > box) cand[t++] = -box;
      if (t == rank) break;
    }
  }
  if (!found) {
    // balanced-base fallback: digits are the K exponents, so distinct
    // exponent vectors get distinct weights
    long maxabs = 1;
    for (const auto& row : b)
      for (long x : row) maxabs = std::max(maxabs, std::abs(x));
    const long base = 2 * maxabs + 1;
    long pw = 1;
    for (int a = 0; a < rank; ++a) {
      nvec[a] = pw;
      pw *= base;
    }
    if (!separates(nvec))
      throw ResourceError("extract_idempotents: no separating vector found");
    found = true;
  }
  // M^c is diagonal with entry sqrt(q)^(c * w_nu) on X_nu
  std::vector<ConvOp> powers;
  for (int c = 0; c < r; ++c) {
    ConvOp mc(&model);
    for (int i = 0; i < r; ++i) {
      const auto range = model.flags.by_nu.at(realized[i]);
      const QRootQ val = R.qpow(static_cast<long>(c) * w[i]);
      for (int t = range.first; t < range.second; ++t) mc.set(t, t, val);
    }
    powers.push_back(std::move(mc));
  }
  IdempotentExtraction res;
  res.certificate.n_vector = nvec;
  for (int i = 0; i < r; ++i) res.certificate.exponents.emplace_back(realized[i], w[i]);
  std::vector<QRootQ> x(r);
  for (int i = 0; i < r; ++i) x[i] = R.qpow(w[i]);
  for (int i = 0; i < r; ++i) {
    // Lagrange: prod_{j != i} (M - x_j) / (x_i - x_j), expanded in powers of M
    std::vector<QRootQ> poly{R.one()};
    QRootQ den = R.one();
    for (int j = 0; j < r; ++j) {
      if (j == i) continue;
      std::vector<QRootQ> next(poly.size() + 1);
      for (size_t t = 0; t < poly.size(); ++t) {
        next[t + 1] = R.add(next[t + 1], poly[t]);
        next[t] = R.sub(next[t], R.mul(poly[t], x[j]));
      }
      poly = std::move(next);
      den = R.mul(den, R.sub(x[i], x[j]));
    }
    for (auto& cfr : poly) cfr = R.div(cfr, den);
    ConvOp rec(&model);
    for (size_t c = 0; c < poly.size(); ++c)
      rec = op_add(rec, op_scale(poly[c], powers[c]));
    res.certificate.coefficients.emplace_back(realized[i], poly);
    res.reconstructed.emplace_back(realized[i], std::move(rec));
  }
  return res;
}

// ---------------------------------------------------------------------------
// closure

namespace {

using Coord = int64_t;
using SVec = std::vector<std::pair<Coord, QRootQ>>;  // sorted by coordinate

SVec vec_of(const ConvOp& op, int n) {
  SVec v;
  v.reserve(op.nnz());
  for (const auto& [r, row] : op.rows())
    for (const auto& [c, val] : row)
      v.emplace_back(static_cast<Coord>(r) * n + c, val);
  return v;
}

// v - s * w, merged
SVec axpy_sub(const QRing& R, const SVec& v, const QRootQ& s, const SVec& w) {
  SVec out;
  out.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j >= w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i >= v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, R.neg(R.mul(s, w[j].second)));
      ++j;
    } else {
      QRootQ nv = R.sub(v[i].second, R.mul(s, w[j].second));
      if (!nv.is_zero()) out.emplace_back(v[i].first, std::move(nv));
      ++i;
      ++j;
    }
  }
  return out;
}

struct OpAdj {
  std::vector<std::vector<std::pair<int, QRootQ>>> row, col;
};

}  // namespace

long closure_dimension(const FlagModel& model, const std::vector<ConvOp>& generators,
                       const std::vector<ConvOp>& known_members,
                       const ClosureOptions& opts) {
  for (const ConvOp& g : generators)
    if (g.model() != &model) throw UsageError(kContextMismatch);
  for (const ConvOp& g : known_members)
    if (g.model() != &model) throw UsageError(kContextMismatch);
  const QRing& R = model.ring;
  const int n = model.size();
  std::vector<OpAdj> adj(generators.size());
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    adj[gi].row.resize(n);
    adj[gi].col.resize(n);
    for (const auto& [r, row] : generators[gi].rows())
      for (const auto& [c, val] : row) {
        adj[gi].row[r].emplace_back(c, val);
        adj[gi].col[c].emplace_back(r, val);
      }
  }
  std::map<Coord, SVec> basis;  // pivot -> monic vector, reduced form
  std::deque<SVec> work;
  auto reduce = [&](SVec v) {
    size_t i = 0;
    while (i < v.size()) {
      auto it = basis.find(v[i].first);
      if (it == basis.end()) {
        ++i;
        continue;
      }
      const QRootQ coef = v[i].second;
      v = axpy_sub(R, v, coef, it->second);
      // entries before position i are untouched: every basis pivot is the
      // lowest coordinate of its vector
    }
    return v;
  };
  auto insert = [&](SVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    const QRootQ lead = v.front().second;
    if (!(lead == R.one())) {
      const QRootQ inv = R.inv(lead);
      for (auto& [c, val] : v) val = R.mul(inv, val);
    }
    const Coord pivot = v.front().first;
    for (auto& [bp, bv] : basis) {
      auto pos = std::lower_bound(
          bv.begin(), bv.end(), pivot,
          [](const std::pair<Coord, QRootQ>& a, Coord c) { return a.first < c; });
      if (pos != bv.end() && pos->first == pivot) {
        const QRootQ coef = pos->second;
        bv = axpy_sub(R, bv, coef, v);
      }
    }
    work.push_back(v);
    basis.emplace(pivot, std::move(v));
    if (basis.size() > opts.max_basis) {
      std::ostringstream os;
      os << "closure_dimension: basis exceeded cap " << opts.max_basis;
      throw ResourceError(os.str());
    }
  };
  insert(vec_of(identity_op(model), n));
  for (const ConvOp& m : known_members) insert(vec_of(m, n));
  for (const ConvOp& g : generators) insert(vec_of(g, n));
  while (!work.empty()) {
    SVec v = std::move(work.front());
    work.pop_front();
    for (size_t gi = 0; gi < adj.size(); ++gi) {
      std::map<Coord, QRootQ> acc;
      auto accumulate = [&](Coord coord, QRootQ val) {
        if (val.is_zero()) return;
        auto [it, fresh] = acc.emplace(coord, val);
        if (!fresh) {
          it->second = R.add(it->second, val);
          if (it->second.is_zero()) acc.erase(it);
        }
      };
      // left product g . v
      for (const auto& [coord, val] : v) {
        const int u = static_cast<int>(coord / n);
        const int c = static_cast<int>(coord % n);
        for (const auto& [x, gv] : adj[gi].col[u])
          accumulate(static_cast<Coord>(x) * n + c, R.mul(gv, val));
      }
      insert(SVec(acc.begin(), acc.end()));
      acc.clear();
      // right product v . g
      for (const auto& [coord, val] : v) {
        const int rr = static_cast<int>(coord / n);
        const int u = static_cast<int>(coord % n);
        for (const auto& [cc, gv] : adj[gi].row[u])
          accumulate(static_cast<Coord>(rr) * n + cc, R.mul(val, gv));
      }
      insert(SVec(acc.begin(), acc.end()));
    }
  }
  return static_cast<long>(basis.size());
}

}  // namespace qschur
