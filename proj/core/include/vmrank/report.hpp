#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vmrank {

struct ReportRow {
  std::string experiment;
  std::string parameters;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Experiment log. TSV has one row per check (experiment, parameters, lhs,
/// rhs, pass|fail); JSON is {"passed": n, "failed": n, "details": [...]}.
class Report {
 public:
  void add(ReportRow row) { rows_.push_back(std::move(row)); }

  const std::vector<ReportRow>& rows() const { return rows_; }
  std::size_t passed() const;
  std::size_t failed() const { return rows_.size() - passed(); }
  bool all_passed() const { return failed() == 0; }

  std::string to_tsv() const;
  std::string to_json() const;

 private:
  std::vector<ReportRow> rows_;
};

}  // namespace vmrank
