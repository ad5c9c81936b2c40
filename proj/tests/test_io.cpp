// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "msx/io.hpp"

using namespace msx;

TEST_CASE("format_number: 12 significant digits, plain decimal point") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-0.000646) == "-0.000646");
  CHECK(format_number(0.0) == "0");
}

TEST_CASE("state file: write-read round trip is exact") {
  Rng rng(14);
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix rho = sample_general_state(rng, 1 + 2 * t);
    std::stringstream ss;
    write_state_file(ss, rho);
    const DensityMatrix back = read_state_file(ss);
    CHECK(back.mat().max_abs_diff(rho.mat()) == 0.0);
  }
}

TEST_CASE("state file: header and shape") {
  const std::string text = state_file_text(werner_state(0.5));
  CHECK(text.rfind("dim 9\n", 0) == 0);
  size_t lines = 0;
  for (char c : text) lines += (c == '\n');
  CHECK(lines == 82);  // header + 81 entries
}

TEST_CASE("state file: malformed inputs are rejected") {
  SUBCASE("wrong header") {
    std::stringstream ss("dim 3\n");
    CHECK_THROWS_AS(read_state_file(ss), std::invalid_argument);
  }
  SUBCASE("truncated body") {
    std::stringstream ss("dim 9\n0 0 1.0 0.0\n");
    CHECK_THROWS_AS(read_state_file(ss), std::invalid_argument);
  }
  SUBCASE("index out of range") {
    std::string text = state_file_text(werner_state(0.25));
    text.replace(text.find("\n0 0 "), 5, "\n0 9 ");
    std::stringstream ss(text);
    CHECK_THROWS_AS(read_state_file(ss), std::invalid_argument);
  }
  SUBCASE("duplicate entry") {
    std::string text = state_file_text(werner_state(0.25));
    text.replace(text.find("\n0 1 "), 5, "\n0 0 ");
    std::stringstream ss(text);
    CHECK_THROWS_AS(read_state_file(ss), std::invalid_argument);
  }
  SUBCASE("valid syntax, invalid state") {
    std::stringstream ss;
    ss << "dim 9\n";
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        ss << i << ' ' << j << ' ' << (i == j ? (i == 0 ? -0.1 : 1.1 / 8.0) : 0.0)
           << " 0\n";
    CHECK_THROWS_AS(read_state_file(ss), std::invalid_argument);
  }
}

TEST_CASE("csv: header, delimiter, sectioned tables") {
  DataTable t;
  t.columns = {"x", "y"};
  t.rows = {{0.5, 1.0}, {1.0 / 3.0, 0.25}};
  CHECK(csv_text(t) == "x,y\n0.5,1\n0.333333333333,0.25\n");

  t.sections = {"a", "b"};
  CHECK(csv_text(t) == "section,x,y\na,0.5,1\nb,0.333333333333,0.25\n");

  t.sections = {"a"};
  CHECK_THROWS_AS(csv_text(t), std::invalid_argument);
}

TEST_CASE("csv: deterministic output for identical tables") {
  const DataTable t = figure_dataset(1, 20, 0);
  CHECK(csv_text(t) == csv_text(figure_dataset(1, 20, 0)));
}
