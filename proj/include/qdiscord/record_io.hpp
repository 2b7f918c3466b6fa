#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qdiscord/sweep.hpp"

namespace qd {

inline constexpr int kSchemaVersion = 1;

/// Column order of the sweep CSV (after the "# schema=1" line).
const std::vector<std::string>& record_columns();

void write_records_csv(std::ostream& out, const std::vector<OutputRecord>& records);
/// Array of objects with the CSV column names; absent values are null.
void write_records_json(std::ostream& out, const std::vector<OutputRecord>& records);
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format);

const std::vector<std::string>& factorize_columns();
void write_factorize(std::ostream& out, const FactorizeReport& report, OutputFormat format);

}  // namespace qd
