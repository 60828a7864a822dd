#include "vmrank/report.hpp"

#include <nlohmann/json.hpp>

namespace vmrank {

std::size_t Report::passed() const {
  std::size_t count = 0;
  for (const auto& row : rows_) count += row.pass ? 1 : 0;
  return count;
}

std::string Report::to_tsv() const {
  std::string out = "experiment\tparameters\tlhs\trhs\tstatus\n";
  for (const auto& row : rows_) {
    out += row.experiment + '\t' + row.parameters + '\t' + row.lhs + '\t' + row.rhs + '\t' +
           (row.pass ? "pass" : "fail") + '\n';
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    details.push_back({{"experiment", row.experiment},
                       {"parameters", row.parameters},
                       {"lhs", row.lhs},
                       {"rhs", row.rhs},
                       {"pass", row.pass}});
  }
  nlohmann::ordered_json summary = {{"passed", passed()}, {"failed", failed()}, {"details", details}};
  return summary.dump(2) + '\n';
}

}  // namespace vmrank
