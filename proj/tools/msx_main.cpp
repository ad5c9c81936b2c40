// SPDX-License-Identifier: Apache-2.0
//
// msx — command-line front end for the two-qutrit Bell-diagonal simplex
// toolkit. Subcommands: measure, classify, scan, frontier, figure.
//
// Exit codes: 0 success, 2 usage or parse error, 3 numerical failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msx/io.hpp"

namespace {

using msx::DensityMatrix;
using msx::ModIndex;
using msx::StateFamily;

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("not a number: '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Comma-separated probabilities: validated nonnegative, summing to 1 within
// 1e-9; renormalized (with a warning) when the deviation exceeds 1e-12.
std::vector<double> parse_probabilities(const std::string& text, size_t expected) {
  std::vector<double> p = parse_csv_doubles(text);
  if (p.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " probabilities, got " + std::to_string(p.size()));
  }
  double sum = 0.0;
  for (double x : p) {
    if (x < 0.0) throw std::invalid_argument("probabilities must be nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("probabilities sum to " + msx::format_number(sum) +
                                ", not 1");
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    std::cerr << "warning: renormalizing probabilities (sum deviates by "
              << msx::format_number(sum - 1.0) << ")\n";
  }
  for (double& x : p) x /= sum;
  return p;
}

ModIndex parse_point(const std::string& text) {
  const std::vector<double> v = parse_csv_doubles(text);
  if (v.size() != 2) throw std::invalid_argument("point must be 'm,n': '" + text + "'");
  for (double x : v) {
    if (x != 0.0 && x != 1.0 && x != 2.0) {
      throw std::invalid_argument("point components must be 0, 1 or 2: '" + text + "'");
    }
  }
  return ModIndex(static_cast<int>(v[0]), static_cast<int>(v[1]));
}

struct MeasureSpec {
  std::string werner, pair, line, triangle, rect, gamma, simplex, file;

  DensityMatrix build() const {
    int given = 0;
    for (const std::string* s :
         {&werner, &pair, &line, &triangle, &rect, &gamma, &simplex, &file}) {
      if (!s->empty()) ++given;
    }
    if (given != 1) {
      throw std::invalid_argument(
          "measure needs exactly one of --werner --pair --line --triangle "
          "--rect --gamma --simplex --file");
    }
    if (!werner.empty()) {
      const std::vector<double> v = parse_csv_doubles(werner);
      if (v.size() != 1) throw std::invalid_argument("--werner takes one value");
      return msx::werner_state(v[0]);
    }
    if (!pair.empty()) return msx::named_family(StateFamily::pair, parse_probabilities(pair, 2));
    if (!line.empty()) return msx::named_family(StateFamily::line, parse_probabilities(line, 3));
    if (!triangle.empty()) {
      return msx::named_family(StateFamily::triangle, parse_probabilities(triangle, 3));
    }
    if (!rect.empty()) {
      return msx::named_family(StateFamily::rectangle, parse_probabilities(rect, 4));
    }
    if (!gamma.empty()) return msx::named_family(StateFamily::gamma, parse_probabilities(gamma, 4));
    if (!simplex.empty()) {
      const std::vector<double> v = parse_probabilities(simplex, 9);
      std::array<double, 9> p{};
      std::copy(v.begin(), v.end(), p.begin());
      return msx::simplex_state(msx::ProbabilityVector9(p));
    }
    return msx::read_state_file(file);
  }
};

void run_measure(const MeasureSpec& spec) {
  const DensityMatrix rho = spec.build();
  std::cout << "negativity " << msx::format_number(msx::negativity(rho)) << '\n';
  std::cout << "linear_entropy " << msx::format_number(msx::linear_entropy(rho)) << '\n';
  std::cout << "purity " << msx::format_number(msx::purity(rho)) << '\n';
  std::cout << "ppt_by_purity " << (msx::ppt_by_purity(rho) ? "true" : "false") << '\n';
  std::cout << "bell_coefficients";
  const msx::ProbabilityVector9 q = msx::bell_coefficients(rho);
  for (int i = 0; i < 9; ++i) std::cout << ' ' << msx::format_number(q[i]);
  std::cout << '\n';
}

void run_classify(const std::vector<std::string>& point_args) {
  std::vector<ModIndex> pts;
  pts.reserve(point_args.size());
  for (const std::string& s : point_args) pts.push_back(parse_point(s));
  const msx::SubsetClass cls = msx::classify_subset(pts);
  const auto orb = msx::orbit(pts);
  std::cout << "class " << msx::to_string(cls) << '\n';
  std::cout << "orbit_size " << orb.size() << '\n';
  std::cout << "canonical";
  for (ModIndex x : orb.front()) std::cout << " (" << x.m << ',' << x.n << ")";
  std::cout << '\n';
}

void run_scan(std::uint64_t seed, int count, int workers, const std::string& out) {
  const std::vector<msx::ScanRecord> records = msx::scan_simplex(seed, count, workers);

  std::ofstream os(out);
  if (!os) throw std::invalid_argument("cannot open for writing: " + out);
  os << "stream,index,s,n\n";
  double max_n = 0.0;
  long violations = 0;
  for (const msx::ScanRecord& r : records) {
    os << r.seed_path.stream << ',' << r.seed_path.index << ','
       << msx::format_number(r.point.s) << ',' << msx::format_number(r.point.n) << '\n';
    max_n = std::max(max_n, r.point.n);
    const bool above = r.point.n > msx::werner_ceiling(r.point.s) + 1e-9;
    const bool below = r.point.s <= 0.75 && r.point.n < msx::curve_lines(r.point.s) - 1e-9;
    if (above || below) ++violations;
  }
  std::cout << "count " << records.size() << '\n';
  std::cout << "max_negativity " << msx::format_number(max_n) << '\n';
  std::cout << "boundary_violations " << violations << '\n';
  std::cout << "out " << out << '\n';
}

void run_frontier(std::uint64_t seed, const std::string& band, std::int64_t budget,
                  const std::string& out) {
  const std::vector<double> b = parse_csv_doubles(band);
  if (b.size() != 2) throw std::invalid_argument("--band must be 'lo,hi'");
  msx::SearchOptions opts;
  opts.band_lo = b[0];
  opts.band_hi = b[1];
  opts.budget = budget;
  const msx::SearchResult res = msx::find_above_werner(seed, opts);
  msx::write_state_file(out, res.state);
  std::cout << "s " << msx::format_number(res.point.s) << '\n';
  std::cout << "negativity " << msx::format_number(res.point.n) << '\n';
  std::cout << "margin " << msx::format_number(res.margin) << '\n';
  std::cout << "iterations " << res.iterations << '\n';
  std::cout << "state_file " << out << '\n';
}

void run_figure(int fig_id, int resolution, std::uint64_t seed, std::string out) {
  if (out.empty()) out = "fig" + std::to_string(fig_id) + ".csv";
  const msx::DataTable table = msx::figure_dataset(fig_id, resolution, seed);
  msx::write_csv(out, table);
  std::cout << "rows " << table.rows.size() << '\n';
  std::cout << "out " << out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qutrit Bell-diagonal simplex toolkit"};
  app.require_subcommand(1);

  MeasureSpec spec;
  auto* measure = app.add_subcommand("measure", "negativity, entropy and purity of one state");
  measure->add_option("--werner", spec.werner, "Werner state mixing parameter p");
  measure->add_option("--pair", spec.pair, "two probabilities p1,p2");
  measure->add_option("--line", spec.line, "three probabilities on a line");
  measure->add_option("--triangle", spec.triangle, "three probabilities off any line");
  measure->add_option("--rect", spec.rect, "four probabilities on a rectangle");
  measure->add_option("--gamma", spec.gamma, "four probabilities on a line plus a point");
  measure->add_option("--simplex", spec.simplex, "nine probabilities p(0,0)..p(2,2)");
  measure->add_option("--file", spec.file, "state file to load");

  std::vector<std::string> classify_points;
  auto* classify = app.add_subcommand("classify", "equivalence class of 1..4 grid points");
  classify->add_option("points", classify_points, "points 'm,n'")->expected(1, 4);

  std::uint64_t seed = 0;
  int count = 10000;
  int workers = 1;
  std::string out_scan = "scan.csv";
  auto* scan = app.add_subcommand("scan", "sample the simplex over the entropy-negativity plane");
  scan->add_option("--seed", seed, "RNG seed")->required();
  scan->add_option("--count", count, "number of samples");
  scan->add_option("--workers", workers, "worker threads");
  scan->add_option("--out", out_scan, "output CSV path");

  std::uint64_t fseed = 0;
  std::string band = "0.1,0.5";
  std::int64_t budget = 100000;
  std::string out_frontier = "frontier_state.txt";
  auto* frontier = app.add_subcommand("frontier", "search for states above the Werner curve");
  frontier->add_option("--seed", fseed, "RNG seed")->required();
  frontier->add_option("--band", band, "entropy band 'lo,hi'");
  frontier->add_option("--budget", budget, "proposal budget");
  frontier->add_option("--out", out_frontier, "best-state file path");

  int fig_id = 0;
  std::uint64_t gseed = 0;
  int resolution = 100;
  std::string out_figure;
  auto* figure = app.add_subcommand("figure", "tabulate one of the four figure datasets");
  figure->add_option("id", fig_id, "figure id 1..4")->required();
  figure->add_option("--seed", gseed, "RNG seed")->required();
  figure->add_option("--count", resolution, "grid resolution");
  figure->add_option("--out", out_figure, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*measure) {
      run_measure(spec);
    } else if (*classify) {
      run_classify(classify_points);
    } else if (*scan) {
      run_scan(seed, count, workers, out_scan);
    } else if (*frontier) {
      run_frontier(fseed, band, budget, out_frontier);
    } else if (*figure) {
      run_figure(fig_id, resolution, gseed, out_figure);
    }
  } catch (const msx::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
