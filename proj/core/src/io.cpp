// SPDX-License-Identifier: Apache-2.0

#include "msx/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace msx {

namespace {

std::string shortest_exact(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open for writing: " + path);
  return os;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_state_file(std::ostream& os, const DensityMatrix& rho) {
  os << "dim 9\n";
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const cplx z = rho.mat()(i, j);
      os << i << ' ' << j << ' ' << shortest_exact(z.real()) << ' '
         << shortest_exact(z.imag()) << '\n';
    }
  }
}

std::string state_file_text(const DensityMatrix& rho) {
  std::ostringstream os;
  write_state_file(os, rho);
  return os.str();
}

DensityMatrix read_state_file(std::istream& is) {
  std::string tag;
  int dim = 0;
  if (!(is >> tag >> dim) || tag != "dim" || dim != 9) {
    throw std::invalid_argument("state file: expected header 'dim 9'");
  }
  ComplexMatrix m(9, 9);
  std::vector<bool> seen(81, false);
  for (int k = 0; k < 81; ++k) {
    int i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (!(is >> i >> j >> re >> im)) {
      throw std::invalid_argument("state file: truncated or malformed entry");
    }
    if (i < 0 || i > 8 || j < 0 || j > 8) {
      throw std::invalid_argument("state file: entry index out of range");
    }
    if (seen[static_cast<size_t>(9 * i + j)]) {
      throw std::invalid_argument("state file: duplicate entry");
    }
    seen[static_cast<size_t>(9 * i + j)] = true;
    m(i, j) = cplx{re, im};
  }
  return DensityMatrix(m);
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream os = open_out(path);
  write_state_file(os, rho);
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open state file: " + path);
  return read_state_file(is);
}

void write_csv(std::ostream& os, const DataTable& table) {
  const bool sectioned = !table.sections.empty();
  if (sectioned && table.sections.size() != table.rows.size()) {
    throw std::invalid_argument("DataTable: section label count mismatch");
  }
  if (sectioned) os << "section";
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (sectioned || c > 0) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (size_t r = 0; r < table.rows.size(); ++r) {
    if (sectioned) os << table.sections[r];
    for (size_t c = 0; c < table.rows[r].size(); ++c) {
      if (sectioned || c > 0) os << ',';
      os << format_number(table.rows[r][c]);
    }
    os << '\n';
  }
}

std::string csv_text(const DataTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

void write_csv(const std::string& path, const DataTable& table) {
  std::ofstream os = open_out(path);
  write_csv(os, table);
}

}  // namespace msx
