// Command-line driver for the qschur shared library. Every subcommand maps
// onto one C API report; output is JSON (CSV for the strata table), exit
// codes are 0 = success, 1 = verification failure, 2 = usage/resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qschur.h"

namespace {

struct CommonOpts {
  std::string type = "D";
  int m = 1;
  int n = 1;
  int d = 1;
  long q = 2;
  std::string out_path;
  std::string cache_dir;
  long max_flags = 1000000;
  long max_basis = 500000;
};

void add_shape_opts(CLI::App* cmd, CommonOpts& o, bool with_type) {
  if (with_type)
    cmd->add_option("--type", o.type, "shape type letter (D or A)")
        ->check(CLI::IsMember({"D", "A"}));
  cmd->add_option("--m", o.m, "tail length of the fork (type D)");
  cmd->add_option("--n", o.n, "chain length (type A)");
  cmd->add_option("--d", o.d, "ambient dimension")->required();
  cmd->add_option("--q", o.q, "field size (prime)");
}

void add_io_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
  cmd->add_option("--cache-dir", o.cache_dir,
                  "flag-set cache directory (env QSCHUR_CACHE_DIR)");
  cmd->add_option("--max-flags", o.max_flags, "enumeration resource cap");
  cmd->add_option("--max-basis", o.max_basis, "closure basis resource cap");
}

int fail_status(qs_status st) {
  std::cerr << "error: " << qs_status_name(st) << ": " << qs_last_error() << "\n";
  return 2;
}

int write_out(const CommonOpts& o, const char* text) {
  if (o.out_path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream f(o.out_path);
  if (!f) {
    std::cerr << "error: cannot open output file " << o.out_path << "\n";
    return 2;
  }
  f << text << "\n";
  return 0;
}

class Engine {
 public:
  Engine() = default;
  ~Engine() { qs_engine_destroy(e_); }
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  qs_status open(const CommonOpts& o, bool force_chain = false) {
    qs_limits lim;
    qs_limits_default(&lim);
    lim.max_flags = o.max_flags;
    lim.max_basis = o.max_basis;
    std::string cache = o.cache_dir;
    if (cache.empty()) {
      const char* env = std::getenv("QSCHUR_CACHE_DIR");
      if (env) cache = env;
    }
    const char* cdir = cache.empty() ? nullptr : cache.c_str();
    if (force_chain || o.type == "A")
      return qs_engine_create_chain(o.n, o.d, o.q, &lim, cdir, &e_);
    return qs_engine_create_fork(o.m, o.d, o.q, &lim, cdir, &e_);
  }

  qs_engine* get() const { return e_; }

 private:
  qs_engine* e_ = nullptr;
};

using EngineReport = qs_status (*)(const qs_engine*, int*, char**);

int run_engine_report(const CommonOpts& o, EngineReport fn, bool force_chain = false) {
  Engine eng;
  if (qs_status st = eng.open(o, force_chain); st != QS_OK) return fail_status(st);
  int pass = 1;
  char* json = nullptr;
  if (qs_status st = fn(eng.get(), &pass, &json); st != QS_OK) return fail_status(st);
  const int rc = write_out(o, json);
  qs_string_free(json);
  if (rc != 0) return rc;
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact convolution-algebra engine for flag varieties over F_q"};
  app.require_subcommand(1);

  CommonOpts o;
  bool inject_fault = false;
  std::vector<long> primes = {2, 3, 5, 7, 11};
  std::string pi_type = "D";
  int pi_rank = 1;
  int pi_d = 0;

  CLI::App* c_enum = app.add_subcommand("enumerate", "list the flag variety");
  add_shape_opts(c_enum, o, true);
  add_io_opts(c_enum, o);

  CLI::App* c_rel = app.add_subcommand("check-relations",
                                       "verify the defining relations under convolution");
  add_shape_opts(c_rel, o, true);
  add_io_opts(c_rel, o);
  c_rel->add_flag("--inject-fault", inject_fault,
                  "perturb one generator entry first (testing aid; must fail)");

  CLI::App* c_idem = app.add_subcommand("idempotents",
                                        "reconstruct every 1_nu from K-monomials");
  add_shape_opts(c_idem, o, true);
  add_io_opts(c_idem, o);

  CLI::App* c_dim = app.add_subcommand("dim-check",
                                       "closure dimension vs. sum of squared simple dimensions");
  add_shape_opts(c_dim, o, true);
  add_io_opts(c_dim, o);

  CLI::App* c_pi = app.add_subcommand("pi", "saturated weight set and dimensions");
  c_pi->add_option("--type", pi_type, "shape type letter (D or A)")
      ->check(CLI::IsMember({"D", "A"}));
  c_pi->add_option("--m", pi_rank, "tail length (type D) or chain length (type A)");
  c_pi->add_option("--n", pi_rank, "alias for --m under type A");
  c_pi->add_option("--d", pi_d, "weight multiplier")->required();
  add_io_opts(c_pi, o);

  CLI::App* c_weight = app.add_subcommand("weight-check",
                                          "K scaling and E/F support rules");
  add_shape_opts(c_weight, o, true);
  add_io_opts(c_weight, o);

  CLI::App* c_strata = app.add_subcommand("strata",
                                          "stratum dimension/count table (CSV)");
  c_strata->add_option("--m", o.m, "tail length of the fork");
  c_strata->add_option("--d", o.d, "ambient dimension")->required();
  c_strata->add_option("--primes", primes, "sample primes for interpolation");
  add_io_opts(c_strata, o);

  CLI::App* c_count = app.add_subcommand("count",
                                         "enumerated vs. closed-form point counts");
  add_shape_opts(c_count, o, true);
  add_io_opts(c_count, o);

  CLI::App* c_base = app.add_subcommand("typeA-baseline",
                                        "chain-model dimension check");
  c_base->add_option("--n", o.n, "chain length")->required();
  c_base->add_option("--d", o.d, "ambient dimension")->required();
  c_base->add_option("--q", o.q, "field size (prime)");
  add_io_opts(c_base, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(c_enum)) {
      Engine eng;
      if (qs_status st = eng.open(o); st != QS_OK) return fail_status(st);
      char* json = nullptr;
      if (qs_status st = qs_report_enumeration(eng.get(), &json); st != QS_OK)
        return fail_status(st);
      const int rc = write_out(o, json);
      qs_string_free(json);
      return rc;
    }
    if (app.got_subcommand(c_rel)) {
      Engine eng;
      if (qs_status st = eng.open(o); st != QS_OK) return fail_status(st);
      int pass = 1;
      char* json = nullptr;
      if (qs_status st = qs_report_relations(eng.get(), inject_fault ? 1 : 0,
                                             &pass, &json);
          st != QS_OK)
        return fail_status(st);
      const int rc = write_out(o, json);
      qs_string_free(json);
      if (rc != 0) return rc;
      return pass ? 0 : 1;
    }
    if (app.got_subcommand(c_idem)) return run_engine_report(o, qs_report_idempotents);
    if (app.got_subcommand(c_dim)) return run_engine_report(o, qs_report_dimension_check);
    if (app.got_subcommand(c_weight)) return run_engine_report(o, qs_report_weight_action);
    if (app.got_subcommand(c_count)) return run_engine_report(o, qs_report_counts);
    if (app.got_subcommand(c_base))
      return run_engine_report(o, qs_report_dimension_check, /*force_chain=*/true);
    if (app.got_subcommand(c_pi)) {
      int pass = 1;
      char* json = nullptr;
      if (qs_status st = qs_report_pi(pi_type.c_str(), pi_rank, pi_d, &pass, &json);
          st != QS_OK)
        return fail_status(st);
      const int rc = write_out(o, json);
      qs_string_free(json);
      if (rc != 0) return rc;
      return pass ? 0 : 1;
    }
    if (app.got_subcommand(c_strata)) {
      char* csv = nullptr;
      if (qs_status st = qs_report_strata_csv(o.m, o.d, primes.data(),
                                              static_cast<int>(primes.size()),
                                              o.max_flags, &csv);
          st != QS_OK)
        return fail_status(st);
      const int rc = write_out(o, csv);
      qs_string_free(csv);
      return rc;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
