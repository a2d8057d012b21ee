#include "hallmod/report.hpp"

#include <algorithm>
#include <map>

namespace hallmod {

void Report::merge(const Report& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(lines_.begin(), lines_.end(), [](const ReportLine& l) { return !l.ok; }));
}

std::size_t Report::count(const std::string& relation) const {
  return static_cast<std::size_t>(
      std::count_if(lines_.begin(), lines_.end(), [&](const ReportLine& l) { return l.relation == relation; }));
}

std::string Report::format(bool tsv) const {
  std::map<std::string, std::size_t> first;
  for (std::size_t i = 0; i < lines_.size(); ++i) first.emplace(lines_[i].relation, i);
  std::vector<std::size_t> order(lines_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return first[lines_[a].relation] < first[lines_[b].relation]; });
  std::string out;
  if (tsv) out += "relation\tindices\tbasis\tlhs\trhs\tstatus\n";
  for (std::size_t i : order) {
    const ReportLine& l = lines_[i];
    std::string status = l.ok ? "pass" : "FAIL";
    if (tsv)
      out += l.relation + "\t" + l.indices + "\t" + l.basis + "\t" + l.lhs + "\t" + l.rhs + "\t" + status + "\n";
    else
      out += "relation=" + l.relation + " indices=" + l.indices + " basis=" + l.basis + " lhs=" + l.lhs +
             " rhs=" + l.rhs + " status=" + status + "\n";
  }
  return out;
}

std::string Report::summary() const {
  return std::to_string(lines_.size()) + " checks, " + std::to_string(failures()) + " failures";
}

}  // namespace hallmod
