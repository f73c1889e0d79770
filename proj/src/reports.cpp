#include "qschur/reports.hpp"

#include "qschur/strata.hpp"

namespace qschur::reports {

namespace {

nlohmann::json scalar_json(const QRing& R, const QRootQ& x) {
  return nlohmann::json::parse(R.to_json_string(x));
}

nlohmann::json params(const FlagModel& model) {
  nlohmann::json j;
  j["type"] = model.shape().kind == QuiverShape::Kind::TypeD ? "D" : "A";
  j[model.shape().kind == QuiverShape::Kind::TypeD ? "m" : "n"] = model.shape().m;
  j["d"] = model.d();
  j["q"] = model.flags.q;
  return j;
}

nlohmann::json violations_json(const FlagModel& model,
                               const std::vector<RelationViolation>& vs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : vs) {
    nlohmann::json e;
    e["family"] = v.family;
    e["node_a"] = v.node_a;
    e["node_b"] = v.node_b;
    e["row"] = v.row;
    e["col"] = v.col;
    e["lhs"] = nlohmann::json::parse(v.lhs);
    e["rhs"] = nlohmann::json::parse(v.rhs);
    arr.push_back(std::move(e));
  }
  return arr;
}

// Adds one to the first stored entry of the first nonempty E generator.
void perturb_first_entry(const FlagModel& model, GeneratorSet& g) {
  for (ConvOp& op : g.E) {
    if (op.is_zero()) continue;
    const auto& [r, row] = *op.rows().begin();
    const int c = row.begin()->first;
    op.set(r, c, model.ring.add(row.begin()->second, model.ring.one()));
    return;
  }
  throw UsageError("fault injection: no nonzero E generator to perturb");
}

}  // namespace

nlohmann::json enumeration(const FlagModel& model) {
  nlohmann::json j = nlohmann::json::parse(flagset_to_json(model.flags));
  nlohmann::json by_nu = nlohmann::json::array();
  for (const auto& [nu, range] : model.flags.by_nu) {
    nlohmann::json e;
    e["nu"] = nu;
    e["begin"] = range.first;
    e["end"] = range.second;
    by_nu.push_back(std::move(e));
  }
  j["by_nu"] = std::move(by_nu);
  j["flag_count"] = model.size();
  return j;
}

nlohmann::json relations(const FlagModel& model, bool inject_fault) {
  GeneratorSet g = build_generators(model);
  if (inject_fault) perturb_first_entry(model, g);
  const auto vs = check_relations(model, g);
  nlohmann::json j = params(model);
  j["fault_injected"] = inject_fault;
  j["instances_checked"] = count_relation_instances(model);
  j["violations"] = violations_json(model, vs);
  j["pass"] = vs.empty();
  return j;
}

nlohmann::json weight_action(const FlagModel& model) {
  GeneratorSet g = build_generators(model);
  const auto vs = weight_action_check(model, g);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : vs) {
    nlohmann::json e;
    e["kind"] = v.kind;
    e["node"] = v.node;
    e["row"] = v.row;
    e["col"] = v.col;
    e["detail"] = v.detail;
    arr.push_back(std::move(e));
  }
  nlohmann::json j = params(model);
  j["violations"] = std::move(arr);
  j["pass"] = vs.empty();
  return j;
}

nlohmann::json idempotents(const FlagModel& model) {
  GeneratorSet g = build_generators(model);
  IdempotentExtraction ex = extract_idempotents(model, g);
  const QRing& R = model.ring;
  bool all_match = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [nu, rec] : ex.reconstructed) {
    const bool match = rec == one_nu(model, nu);
    all_match = all_match && match;
    nlohmann::json e;
    e["nu"] = nu;
    e["matches_direct"] = match;
    arr.push_back(std::move(e));
  }
  nlohmann::json cert;
  cert["n_vector"] = ex.certificate.n_vector;
  nlohmann::json exps = nlohmann::json::array();
  for (const auto& [nu, w] : ex.certificate.exponents) {
    nlohmann::json e;
    e["nu"] = nu;
    e["exponent"] = w;
    exps.push_back(std::move(e));
  }
  cert["exponents"] = std::move(exps);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [nu, cs] : ex.certificate.coefficients) {
    nlohmann::json e;
    e["nu"] = nu;
    nlohmann::json list = nlohmann::json::array();
    for (const QRootQ& x : cs) list.push_back(scalar_json(R, x));
    e["coefficients"] = std::move(list);
    coeffs.push_back(std::move(e));
  }
  cert["coefficients"] = std::move(coeffs);
  nlohmann::json j = params(model);
  j["idempotents"] = std::move(arr);
  j["certificate"] = std::move(cert);
  j["pass"] = all_match;
  return j;
}

nlohmann::json dimension_check(const FlagModel& model, size_t max_basis) {
  GeneratorSet g = build_generators(model);
  std::vector<ConvOp> gens;
  for (int a = 0; a < model.shape().rank(); ++a) {
    gens.push_back(g.E[a]);
    gens.push_back(g.F[a]);
    gens.push_back(g.Kp[a]);
    gens.push_back(g.Km[a]);
  }
  // The reconstructed idempotents are explicit polynomials in the K
  // generators, so they may seed the closure without changing its span.
  IdempotentExtraction ex = extract_idempotents(model, g);
  std::vector<ConvOp> members;
  for (const auto& [nu, rec] : ex.reconstructed) members.push_back(rec);
  ClosureOptions opts;
  opts.max_basis = max_basis;
  const long dim = closure_dimension(model, gens, members, opts);

  const CartanData& cd = model.cartan;
  std::vector<int> dvec(model.shape().rank(), 0);
  dvec[model.shape().weight_node()] = model.d();
  const auto pi = pi_set(cd, dvec);
  const mpz_class sum = schur_dimension(cd, pi);

  nlohmann::json j = params(model);
  j["dim_C"] = std::to_string(dim);
  j["sum_squares"] = sum.get_str();
  j["match"] = (mpz_class(dim) == sum);
  nlohmann::json pis = nlohmann::json::array();
  for (const auto& e : pi) {
    nlohmann::json pe;
    pe["lambda"] = e.lambda;
    pe["nu"] = e.nu;
    pe["dim_L"] = weyl_dim(cd, e.lambda).get_str();
    pis.push_back(std::move(pe));
  }
  j["pi"] = std::move(pis);
  j["pass"] = j["match"];
  return j;
}

nlohmann::json counts(const FlagModel& model) {
  nlohmann::json j = params(model);
  const bool fork = model.shape().kind == QuiverShape::Kind::TypeD;
  const int m = model.shape().m;
  nlohmann::json arr = nlohmann::json::array();
  bool pass = true;
  for (const auto& [nu, range] : model.flags.by_nu) {
    nlohmann::json e;
    e["nu"] = nu;
    const long enumerated = range.second - range.first;
    e["enumerated"] = std::to_string(enumerated);
    mpz_class closed =
        fork ? count_flags_nu(nu, m, model.d(), model.flags.q)
             : count_chain_flags_nu(nu, m, model.d(), model.flags.q);
    e["closed_form"] = closed.get_str();
    const bool ok = closed == enumerated;
    e["match"] = ok;
    pass = pass && ok;
    if (fork) {
      nlohmann::json strata = nlohmann::json::array();
      for (const auto& c : enumerate_strata(nu, m, model.d())) {
        nlohmann::json s;
        std::vector<int> display(c.rbegin(), c.rend());
        s["c"] = display;
        auto it = model.flags.by_stratum.find(std::make_pair(nu, c));
        const long en = it == model.flags.by_stratum.end()
                            ? 0
                            : it->second.second - it->second.first;
        s["enumerated"] = std::to_string(en);
        mpz_class sc = stratum_count(nu, c, m, model.d(), model.flags.q);
        s["closed_form"] = sc.get_str();
        const bool sok = sc == en;
        s["match"] = sok;
        pass = pass && sok;
        strata.push_back(std::move(s));
      }
      e["strata"] = std::move(strata);
    }
    arr.push_back(std::move(e));
  }
  j["total"] = std::to_string(model.size());
  j["by_nu"] = std::move(arr);
  j["pass"] = pass;
  return j;
}

nlohmann::json pi_report(const std::string& kind, int m_or_n, int d) {
  if (kind != "D" && kind != "A") throw UsageError("pi_report: type must be D or A");
  const QuiverShape shape = kind == "D" ? QuiverShape::type_d(m_or_n)
                                        : QuiverShape::type_a(m_or_n);
  const CartanData cd = CartanData::from_shape(shape);
  std::vector<int> dvec(shape.rank(), 0);
  dvec[shape.weight_node()] = d;
  const auto pi = pi_set(cd, dvec);
  nlohmann::json j;
  j["type"] = kind;
  j[kind == "D" ? "m" : "n"] = m_or_n;
  j["d"] = d;
  j["saturated"] = check_saturation(cd, dvec, pi);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : pi) {
    nlohmann::json pe;
    pe["lambda"] = e.lambda;
    pe["nu"] = e.nu;
    pe["dim_L"] = weyl_dim(cd, e.lambda).get_str();
    arr.push_back(std::move(pe));
  }
  j["pi"] = std::move(arr);
  j["schur_dimension"] = schur_dimension(cd, pi).get_str();
  j["pass"] = j["saturated"];
  return j;
}

std::string strata_table(int m, int d, const std::vector<long>& primes,
                         long max_flags) {
  return strata_csv(m, d, primes, max_flags);
}

}  // namespace qschur::reports
