#include "qschur.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qschur/reports.hpp"

using namespace qschur;

struct qs_engine {
  FlagModel model;
  long max_basis;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qs_status record_error(qs_status st, const char* what) {
  g_last_error = what ? what : "";
  return st;
}

template <typename Fn>
qs_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return QS_OK;
  } catch (const UsageError& e) {
    return record_error(QS_ERR_USAGE, e.what());
  } catch (const ResourceError& e) {
    return record_error(QS_ERR_RESOURCE, e.what());
  } catch (const ArithmeticError& e) {
    return record_error(QS_ERR_ARITHMETIC, e.what());
  } catch (const std::exception& e) {
    return record_error(QS_ERR_INTERNAL, e.what());
  } catch (...) {
    return record_error(QS_ERR_INTERNAL, "unknown error");
  }
}

qs_status emit(const nlohmann::json& j, int* pass_out, char** json_out) {
  if (!json_out) return record_error(QS_ERR_USAGE, "null output pointer");
  if (pass_out) *pass_out = j.value("pass", true) ? 1 : 0;
  *json_out = dup_string(j.dump(2));
  if (!*json_out) return record_error(QS_ERR_INTERNAL, "allocation failure");
  return QS_OK;
}

qs_limits resolved(const qs_limits* limits) {
  qs_limits l;
  qs_limits_default(&l);
  if (limits) l = *limits;
  return l;
}

}  // namespace

void qs_limits_default(qs_limits* limits) {
  if (!limits) return;
  limits->max_flags = 1000000;
  limits->max_basis = 500000;
}

qs_status qs_engine_create_fork(int m, int d, long q, const qs_limits* limits,
                                const char* cache_dir, qs_engine** out) {
  if (!out) return record_error(QS_ERR_USAGE, "null output pointer");
  *out = nullptr;
  const qs_limits l = resolved(limits);
  return guarded([&] {
    FlagModel model =
        make_fork_model(m, d, q, l.max_flags, cache_dir ? cache_dir : "");
    *out = new qs_engine{std::move(model), l.max_basis};
  });
}

qs_status qs_engine_create_chain(int n, int d, long q, const qs_limits* limits,
                                 const char* cache_dir, qs_engine** out) {
  if (!out) return record_error(QS_ERR_USAGE, "null output pointer");
  *out = nullptr;
  const qs_limits l = resolved(limits);
  return guarded([&] {
    FlagModel model =
        make_chain_model(n, d, q, l.max_flags, cache_dir ? cache_dir : "");
    *out = new qs_engine{std::move(model), l.max_basis};
  });
}

void qs_engine_destroy(qs_engine* e) { delete e; }

long qs_engine_flag_count(const qs_engine* e) { return e ? e->model.size() : -1; }

qs_status qs_report_enumeration(const qs_engine* e, char** json_out) {
  if (!e) return record_error(QS_ERR_USAGE, "null engine");
  return guarded([&] {
    nlohmann::json j = reports::enumeration(e->model);
    qs_status st = emit(j, nullptr, json_out);
    if (st != QS_OK) throw std::runtime_error(qs_last_error());
  });
}

qs_status qs_report_relations(const qs_engine* e, int inject_fault,
                              int* pass_out, char** json_out) {
  if (!e) return record_error(QS_ERR_USAGE, "null engine");
  return guarded([&] {
    nlohmann::json j = reports::relations(e->model, inject_fault != 0);
    if (emit(j, pass_out, json_out) != QS_OK)
      throw std::runtime_error(qs_last_error());
  });
}

qs_status qs_report_weight_action(const qs_engine* e, int* pass_out,
                                  char** json_out) {
  if (!e) return record_error(QS_ERR_USAGE, "null engine");
  return guarded([&] {
    nlohmann::json j = reports::weight_action(e->model);
    if (emit(j, pass_out, json_out) != QS_OK)
      throw std::runtime_error(qs_last_error());
  });
}

qs_status qs_report_idempotents(const qs_engine* e, int* pass_out,
                                char** json_out) {
  if (!e) return record_error(QS_ERR_USAGE, "null engine");
  return guarded([&] {
    nlohmann::json j = reports::idempotents(e->model);
    if (emit(j, pass_out, json_out) != QS_OK)
      throw std::runtime_error(qs_last_error());
  });
}

qs_status qs_report_dimension_check(const qs_engine* e, int* pass_out,
                                    char** json_out) {
  if (!e) return record_error(QS_ERR_USAGE, "null engine");
  return guarded([&] {
    nlohmann::json j =
        reports::dimension_check(e->model, static_cast<size_t>(e->max_basis));
    if (emit(j, pass_out, json_out) != QS_OK)
      throw std::runtime_error(qs_last_error());
  });
}

qs_status qs_report_counts(const qs_engine* e, int* pass_out, char** json_out) {
  if (!e) return record_error(QS_ERR_USAGE, "null engine");
  return guarded([&] {
    nlohmann::json j = reports::counts(e->model);
    if (emit(j, pass_out, json_out) != QS_OK)
      throw std::runtime_error(qs_last_error());
  });
}

qs_status qs_report_pi(const char* kind, int m_or_n, int d, int* pass_out,
                       char** json_out) {
  if (!kind) return record_error(QS_ERR_USAGE, "null kind");
  return guarded([&] {
    nlohmann::json j = reports::pi_report(kind, m_or_n, d);
    if (emit(j, pass_out, json_out) != QS_OK)
      throw std::runtime_error(qs_last_error());
  });
}

qs_status qs_report_strata_csv(int m, int d, const long* primes, int n_primes,
                               long max_flags, char** csv_out) {
  if (!csv_out) return record_error(QS_ERR_USAGE, "null output pointer");
  if (!primes || n_primes <= 0)
    return record_error(QS_ERR_USAGE, "at least one prime required");
  return guarded([&] {
    std::vector<long> ps(primes, primes + n_primes);
    std::string csv = reports::strata_table(m, d, ps, max_flags);
    *csv_out = dup_string(csv);
    if (!*csv_out) throw std::runtime_error("allocation failure");
  });
}

void qs_string_free(char* s) { std::free(s); }

const char* qs_status_name(qs_status status) {
  switch (status) {
    case QS_OK:
      return "ok";
    case QS_ERR_USAGE:
      return "usage error";
    case QS_ERR_RESOURCE:
      return "resource cap exceeded";
    case QS_ERR_ARITHMETIC:
      return "arithmetic error";
    case QS_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* qs_last_error(void) { return g_last_error.c_str(); }
