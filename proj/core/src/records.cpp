#include "excal/records.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace excal {

namespace {

using nlohmann::json;

json census_json(const census::CensusReport& report) {
  json row;
  row["n"] = report.n;
  row["k"] = report.k;
  row["family"] = family_str(report.family);
  row["count_graph"] = to_string(report.count_graph);
  row["count_formula"] = to_string(report.count_formula);
  row["count_recurrence"] = to_string(report.count_recurrence);
  if (report.count_oracle) {
    row["count_oracle"] = to_string(*report.count_oracle);
  } else {
    row["count_oracle"] = nullptr;
  }
  row["agree"] = report.agree;
  return row;
}

}  // namespace

std::string census_records(const std::vector<census::CensusReport>& reports) {
  std::ostringstream os;
  for (const auto& report : reports) os << census_json(report).dump() << "\n";
  return os.str();
}

std::string census_table(const std::vector<census::CensusReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(8) << "family"
     << std::setw(14) << "graph" << std::setw(14) << "formula" << std::setw(14) << "recurrence"
     << std::setw(14) << "oracle" << "agree" << "\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(4) << r.n << std::setw(4) << r.k << std::setw(8)
       << family_str(r.family) << std::setw(14) << to_string(r.count_graph) << std::setw(14)
       << to_string(r.count_formula) << std::setw(14) << to_string(r.count_recurrence)
       << std::setw(14) << (r.count_oracle ? to_string(*r.count_oracle) : "-")
       << (r.agree ? "yes" : "NO") << "\n";
  }
  return os.str();
}

std::string conjecture_records(const harmonic::ConjectureReport& report) {
  std::ostringstream os;
  json head;
  head["record"] = "scan";
  head["n"] = report.n;
  head["k_min"] = report.k_min;
  head["k_max"] = report.k_max;
  head["degree_max"] = report.degree_max;
  head["sequences_tested"] = report.sequences_tested;
  head["applications"] = report.applications;
  os << head.dump() << "\n";
  for (const auto& scan : report.per_sequence) {
    json row;
    row["record"] = "sequence";
    row["rank"] = scan.rank;
    row["start_index"] = scan.start_index;
    row["order"] = scan.order;
    row["composition"] =
        sequence_str(alternating_sequence(scan.start_index, scan.order, report.n));
    row["witnesses"] = scan.witnesses;
    row["all_zero"] = scan.all_zero;
    os << row.dump() << "\n";
  }
  json tail;
  tail["record"] = "outcome";
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    tail["counterexample"] = true;
    tail["sequence"] = ce.sequence;
    tail["composition"] = sequence_str(ce.sequence);
    tail["witness"] = ce.witness.str();
    tail["output"] = ce.output.str();
  } else {
    tail["counterexample"] = false;
  }
  os << tail.dump() << "\n";
  return os.str();
}

std::string conjecture_table(const harmonic::ConjectureReport& report) {
  std::ostringstream os;
  os << "scan n=" << report.n << " orders " << report.k_min << ".." << report.k_max
     << " coefficient degrees <= " << report.degree_max << "\n";
  for (const auto& scan : report.per_sequence) {
    os << "  rank " << scan.rank << "  "
       << sequence_str(alternating_sequence(scan.start_index, scan.order, report.n))
       << "  witnesses " << scan.witnesses << "  "
       << (scan.all_zero ? "all zero" : "NONZERO OUTPUT") << "\n";
  }
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    os << "counterexample found: " << sequence_str(ce.sequence) << " on " << ce.witness.str()
       << " gives " << ce.output.str() << "\n";
  } else {
    os << "no counterexample within the scanned bounds (" << report.applications
       << " applications)\n";
  }
  return os.str();
}

}  // namespace excal
