// SPDX-License-Identifier: Apache-2.0
//
// Monte-Carlo exploration of the entropy-negativity plane: seeded simplex and
// general-state sampling, the region scan, the stochastic search for states
// above the Werner curve, and the tabulated datasets behind the four figures.
//
// Determinism contract: every sampled record is derived from a substream
// keyed by (seed, record index), never by worker id, so identical seeds give
// identical output for any worker count.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "msx/measures.hpp"

namespace msx {

// Deterministic splittable generator. Distributions are hand-rolled on top of
// the fully specified mt19937_64 stream so output depends only on the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Independent substream for one record of a batch.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return gen_(); }
  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  // Standard exponential via inversion.
  double exponential() { return -std::log1p(-uniform()); }
  // Standard normal via Box-Muller, pairs cached.
  double normal();
  // Independent N(0,1) real and imaginary parts.
  cplx complex_normal();

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

enum class SampleSource { simplex, general, search };

// Integers that reproduce a record exactly: the stream seed and the record's
// index within the batch.
struct SeedPath {
  std::uint64_t stream = 0;
  std::uint64_t index = 0;
};

struct ScanRecord {
  EntropyNegativityPoint point;
  SampleSource source = SampleSource::simplex;
  SeedPath seed_path;
};

struct SearchOptions {
  double band_lo = 0.0;   // entropy band, 0 <= lo < hi <= 15/16
  double band_hi = 0.9375;
  std::int64_t budget = 100000;   // proposal count
  bool bell_diagonal = false;     // project every proposal onto the simplex
  int starts = 100;               // initial candidates, best one seeds the climb
};

struct SearchResult {
  DensityMatrix state;
  EntropyNegativityPoint point;
  double margin = 0.0;            // n - curve_werner(s) of the returned state
  std::int64_t iterations = 0;
};

// One uniform point of the 8-simplex: nine standard exponentials, normalized.
ProbabilityVector9 sample_simplex_point(Rng& rng);

// count independent simplex points from per-index substreams of seed.
std::vector<ProbabilityVector9> sample_simplex(std::uint64_t seed, int count);

// rho = G G^dag / tr(G G^dag) with G a 9 x rank matrix of independent
// standard complex Gaussian entries; rank in 1..9.
DensityMatrix sample_general_state(Rng& rng, int rank);

// Maps count simplex samples through state construction, linear entropy and
// negativity. Records are index-ordered and worker-count independent.
std::vector<ScanRecord> scan_simplex(std::uint64_t seed, int count, int workers = 1);

// n minus the Werner-curve value at s, with the curve formula continued past
// its domain endpoint so the search objective stays defined everywhere.
double frontier_margin(const EntropyNegativityPoint& p);

// Stochastic hill climb maximizing frontier_margin subject to the entropy
// band (violations cost 10x the distance to the band). Starts from the best
// of opts.starts sampled general states (ranks cycling 1..9), proposes
// G' = G + eps*Delta with fresh Gaussian Delta, accepts on improvement, and
// halves eps (floor 1e-4, initial 0.05) after 20 consecutive rejections.
// A margin <= 0 is a legitimate outcome, not an error.
SearchResult find_above_werner(std::uint64_t seed, const SearchOptions& opts);

// Rectangular dataset with optional per-row section labels.
struct DataTable {
  std::vector<std::string> columns;   // value column names (excludes "section")
  std::vector<std::string> sections;  // empty, or one label per row
  std::vector<std::vector<double>> rows;
};

// Tabulated figure data:
//   1: negativity of the two-projector mixture over a p grid
//   2: line vs triangle negativity over the probability-triple grid
//   3: rectangle vs line-plus-point negativity at p_gamma = 0.5
//   4: sections simplex / curve_lines / curve_werner / search in the
//      entropy-negativity plane
// resolution = grid steps per axis (figure 4: resolution^2 scan samples).
DataTable figure_dataset(int fig_id, int resolution, std::uint64_t seed);

}  // namespace msx
