#ifndef QSCHUR_REPORTS_HPP
#define QSCHUR_REPORTS_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "qschur/convolution.hpp"

namespace qschur::reports {

/// Machine-readable pipelines behind the CLI subcommands. Unbounded
/// quantities (counts, dimensions, scalars) are serialized as decimal
/// strings; structural parameters stay plain JSON numbers. Reports that
/// verify something carry a boolean "pass".

nlohmann::json enumeration(const FlagModel& model);
nlohmann::json relations(const FlagModel& model, bool inject_fault);
nlohmann::json weight_action(const FlagModel& model);
nlohmann::json idempotents(const FlagModel& model);
nlohmann::json dimension_check(const FlagModel& model, size_t max_basis);
nlohmann::json counts(const FlagModel& model);
nlohmann::json pi_report(const std::string& kind, int m_or_n, int d);
std::string strata_table(int m, int d, const std::vector<long>& primes,
                         long max_flags);

}  // namespace qschur::reports

#endif
