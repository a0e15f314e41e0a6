#pragma once

#include "excal/census.hpp"
#include "excal/harmonic.hpp"

#include <string>
#include <vector>

namespace excal {

/// Line-delimited structured records (JSON lines, keys sorted, counts as
/// exact decimal strings) and aligned text tables. Both renderings are
/// byte-deterministic for fixed inputs.
std::string census_records(const std::vector<census::CensusReport>& reports);
std::string census_table(const std::vector<census::CensusReport>& reports);

std::string conjecture_records(const harmonic::ConjectureReport& report);
std::string conjecture_table(const harmonic::ConjectureReport& report);

}  // namespace excal
