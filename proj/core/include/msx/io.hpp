// SPDX-License-Identifier: Apache-2.0
//
// Plain-text serialization: the diffable state-file format ("dim 9" then 81
// lines "row col re im"), CSV emission for DataTable, and the 12-significant-
// digit number formatting used by all reports.

#pragma once

#include <iosfwd>
#include <string>

#include "msx/frontier.hpp"

namespace msx {

// 12 significant digits, shortest form ("%.12g").
std::string format_number(double x);

// State files carry full round-trip precision (shortest exact decimal), so a
// reloaded matrix is bit-identical to the one written.
void write_state_file(std::ostream& os, const DensityMatrix& rho);
std::string state_file_text(const DensityMatrix& rho);

// Throws std::invalid_argument on malformed input or when the parsed matrix
// violates the density-matrix invariants.
DensityMatrix read_state_file(std::istream& is);

void write_state_file(const std::string& path, const DensityMatrix& rho);
DensityMatrix read_state_file(const std::string& path);

// One header line, comma delimiter, '.' decimal separator, 12 significant
// digits. A leading "section" column is added when the table is sectioned.
void write_csv(std::ostream& os, const DataTable& table);
std::string csv_text(const DataTable& table);
void write_csv(const std::string& path, const DataTable& table);

}  // namespace msx
