#ifndef QSCHUR_CONVOLUTION_HPP
#define QSCHUR_CONVOLUTION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qschur/flags.hpp"
#include "qschur/qrootq.hpp"
#include "qschur/weights.hpp"

namespace qschur {

/// The enumerated variety together with its scalar ring and Cartan data;
/// the shared context of every convolution operator.
struct FlagModel {
  FlagIndexedSet flags;
  QRing ring;
  CartanData cartan;

  explicit FlagModel(FlagIndexedSet fs)
      : flags(std::move(fs)),
        ring(flags.q),
        cartan(CartanData::from_shape(flags.shape)) {}

  int size() const { return flags.size(); }
  int d() const { return flags.d; }
  const QuiverShape& shape() const { return flags.shape; }
};

/// Fork (ramified) model of tail length m, or chain model of length n.
/// When cache_dir is nonempty the enumerated variety is read from / written
/// to disk there.
FlagModel make_fork_model(int m, int d, long q, long max_flags = 1000000,
                          const std::string& cache_dir = "");
FlagModel make_chain_model(int n, int d, long q, long max_flags = 1000000,
                           const std::string& cache_dir = "");

/// Sparse function on X x X with values in Q(sqrt q); explicit zeros are
/// never stored. Row-major nested maps keep every iteration deterministic.
class ConvOp {
 public:
  explicit ConvOp(const FlagModel* model) : model_(model) {}

  const FlagModel* model() const { return model_; }
  const std::map<int, std::map<int, QRootQ>>& rows() const { return rows_; }

  void set(int r, int c, QRootQ v);
  void add_at(int r, int c, const QRootQ& v);
  const QRootQ* get(int r, int c) const;

  size_t nnz() const;
  bool is_zero() const { return rows_.empty(); }
  bool operator==(const ConvOp& o) const { return rows_ == o.rows_; }

 private:
  const FlagModel* model_;
  std::map<int, std::map<int, QRootQ>> rows_;
};

enum class GenKind { E, F, KPlus, KMinus };

ConvOp identity_op(const FlagModel& model);
/// Diagonal indicator of X_nu; the zero operator when X_nu is empty.
ConvOp one_nu(const FlagModel& model, const DimVector& nu);
ConvOp build_generator(const FlagModel& model, GenKind kind, int node);

/// All generators, indexed by node.
struct GeneratorSet {
  std::vector<ConvOp> E, F, Kp, Km;
};
GeneratorSet build_generators(const FlagModel& model);

/// Convolution product (f . g)(U, W) = sum_V f(U, V) g(V, W).
ConvOp compose(const ConvOp& f, const ConvOp& g);
ConvOp op_add(const ConvOp& f, const ConvOp& g);
ConvOp op_sub(const ConvOp& f, const ConvOp& g);
ConvOp op_scale(const QRootQ& s, const ConvOp& f);

/// JSON: list of [row, col, scalar] triples in row-major order.
std::string convop_to_json(const ConvOp& f);

struct RelationViolation {
  std::string family;
  std::string node_a, node_b;
  int row = 0, col = 0;
  std::string lhs, rhs;  // scalar JSON of the first differing entry
};

/// Checks every instance of the defining relation families:
/// K invertibility/commutativity, K-E and K-F commutation, the E-F
/// commutator, both Serre relations, distant commutations. Empty result
/// means every instance holds exactly.
std::vector<RelationViolation> check_relations(const FlagModel& model,
                                               const GeneratorSet& g);
long count_relation_instances(const FlagModel& model);

/// Exponent of the scalar by which K_node acts on operators supported on
/// X_nu x X_anything: d on the weight node minus (C nu)_node.
long weight_exponent(const FlagModel& model, int node, const DimVector& nu);

struct WeightViolation {
  std::string kind;  // "k_scaling", "e_support", "f_support"
  std::string node;
  int row = 0, col = 0;
  std::string detail;
};

/// Verifies the diagonal scaling of every K generator flag by flag (this is
/// the indicator-function statement: K_a composed with the indicator of a
/// single pair (U, W), U in X_nu, rescales it by the weight exponent), and
/// the support rule that E_a 1_nu lives on X_{nu - a} x X_nu and F_a 1_nu
/// on X_{nu + a} x X_nu.
std::vector<WeightViolation> weight_action_check(const FlagModel& model,
                                                 const GeneratorSet& g);

/// Certificate that each reconstructed idempotent is an explicit linear
/// combination of powers of the K-monomial prod_a K_a^{n_a}.
struct IdempotentCertificate {
  std::vector<long> n_vector;
  std::vector<std::pair<DimVector, long>> exponents;         // per realized nu
  std::vector<std::pair<DimVector, std::vector<QRootQ>>> coefficients;
};

struct IdempotentExtraction {
  std::vector<std::pair<DimVector, ConvOp>> reconstructed;  // nu order
  IdempotentCertificate certificate;
};

/// Solves for every 1_nu as a combination of K-monomial powers: picks an
/// integer vector (n_a) separating the diagonal exponents of the realized
/// nu (growing the search box as needed), then inverts the resulting
/// Vandermonde system by exact Lagrange interpolation.
IdempotentExtraction extract_idempotents(const FlagModel& model,
                                         const GeneratorSet& g,
                                         long max_box = 64);

struct ClosureOptions {
  size_t max_basis = 500000;
};

/// Linear dimension over Q(sqrt q) of the unital subalgebra generated by
/// the given operators: iterated left and right products against a basis
/// kept in reduced echelon form (pivot = lowest nonzero coordinate of the
/// flattened |X|^2 vector) until a fixed point. known_members may carry
/// operators that provably lie in the generated subalgebra (explicit
/// polynomials in the generators); they only speed up convergence.
long closure_dimension(const FlagModel& model, const std::vector<ConvOp>& generators,
                       const std::vector<ConvOp>& known_members = {},
                       const ClosureOptions& opts = {});

}  // namespace qschur

#endif
