#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hallmod/scalar.hpp"

namespace hallmod {

struct ReportLine {
  std::string relation, indices, basis, lhs, rhs;
  bool ok = true;
};

// Results of a verification suite, one line per checked instance.
class Report {
 public:
  void add(ReportLine line) { lines_.push_back(std::move(line)); }
  void add_check(const std::string& relation, const std::string& indices, const std::string& basis,
                 const std::string& lhs, const std::string& rhs, bool ok) {
    lines_.push_back(ReportLine{relation, indices, basis, lhs, rhs, ok});
  }
  void merge(const Report& other);

  const std::vector<ReportLine>& lines() const { return lines_; }
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  std::size_t count(const std::string& relation) const;

  // Lines grouped by relation in first-appearance order; tsv adds a header row.
  std::string format(bool tsv) const;
  std::string summary() const;

 private:
  std::vector<ReportLine> lines_;
};

}  // namespace hallmod
