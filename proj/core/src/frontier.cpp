// SPDX-License-Identifier: Apache-2.0

#include "msx/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace msx {

namespace {

// splitmix64 round; decorrelates consecutive record indices.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix gaussian_factor(Rng& rng, int rank) {
  ComplexMatrix g(9, rank);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
  return g;
}

// rho = G G^dag / tr, computed without intermediate allocations.
ComplexMatrix normalized_gram(const ComplexMatrix& g) {
  const int rank = g.cols();
  ComplexMatrix rho(9, 9);
  double tr = 0.0;
  for (int i = 0; i < 9; ++i) {
    for (int j = i; j < 9; ++j) {
      cplx acc{0.0, 0.0};
      for (int k = 0; k < rank; ++k) acc += g(i, k) * std::conj(g(j, k));
      rho(i, j) = acc;
      rho(j, i) = std::conj(acc);
    }
    tr += rho(i, i).real();
  }
  const double inv = 1.0 / tr;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) rho(i, j) *= inv;
  // Pin the diagonal real so the trace is exactly the sum of real parts.
  for (int i = 0; i < 9; ++i) rho(i, i) = cplx{rho(i, i).real(), 0.0};
  return rho;
}

struct Objective {
  double score = 0.0;   // margin minus band penalty
  double margin = 0.0;
  EntropyNegativityPoint point;
};

Objective evaluate(const ComplexMatrix& rho, const SearchOptions& opts) {
  Objective o;
  o.point.s = detail::linear_entropy_unchecked(rho);
  o.point.n = detail::negativity_unchecked(rho);
  o.margin = frontier_margin(o.point);
  const double band_dist =
      std::max(0.0, opts.band_lo - o.point.s) + std::max(0.0, o.point.s - opts.band_hi);
  o.score = o.margin - 10.0 * band_dist;
  return o;
}

}  // namespace

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix64(seed ^ mix64(index)));
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; 1 - uniform() keeps the log argument in (0, 1].
  const double u = 1.0 - uniform();
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double theta = 2.0 * std::numbers::pi * v;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cplx{re, im};
}

ProbabilityVector9 sample_simplex_point(Rng& rng) {
  std::array<double, 9> p;
  double sum = 0.0;
  for (double& x : p) {
    x = rng.exponential();
    sum += x;
  }
  for (double& x : p) x /= sum;
  return ProbabilityVector9(p);
}

std::vector<ProbabilityVector9> sample_simplex(std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("sample_simplex: count must be >= 1");
  std::vector<ProbabilityVector9> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
    out.push_back(sample_simplex_point(rng));
  }
  return out;
}

DensityMatrix sample_general_state(Rng& rng, int rank) {
  if (rank < 1 || rank > 9) {
    throw std::invalid_argument("sample_general_state: rank must be in 1..9");
  }
  return DensityMatrix(normalized_gram(gaussian_factor(rng, rank)));
}

std::vector<ScanRecord> scan_simplex(std::uint64_t seed, int count, int workers) {
  if (count < 1) throw std::invalid_argument("scan_simplex: count must be >= 1");
  if (workers < 1) throw std::invalid_argument("scan_simplex: workers must be >= 1");
  workers = std::min(workers, count);

  std::vector<ScanRecord> records(static_cast<size_t>(count));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run_block = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      try {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
        const DensityMatrix rho = simplex_state(sample_simplex_point(rng));
        ScanRecord& rec = records[static_cast<size_t>(i)];
        rec.point = {linear_entropy(rho), negativity(rho)};
        rec.source = SampleSource::simplex;
        rec.seed_path = {seed, static_cast<std::uint64_t>(i)};
      } catch (const numerical_error& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::make_exception_ptr(numerical_error(
              std::string(e.what()) + " [seed " + std::to_string(seed) + ", record " +
              std::to_string(i) + "]"));
        }
        return;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    run_block(0, count);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    const int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_block, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

double frontier_margin(const EntropyNegativityPoint& p) {
  return p.n - (4.0 * std::sqrt(std::max(0.0, 1.0 - p.s)) - 1.0) / 3.0;
}

SearchResult find_above_werner(std::uint64_t seed, const SearchOptions& opts) {
  if (!(opts.band_lo >= 0.0 && opts.band_lo < opts.band_hi && opts.band_hi <= 0.9375)) {
    throw std::invalid_argument("find_above_werner: band must satisfy 0 <= lo < hi <= 15/16");
  }
  if (opts.budget < 1) throw std::invalid_argument("find_above_werner: budget must be >= 1");
  if (opts.starts < 1) throw std::invalid_argument("find_above_werner: starts must be >= 1");

  Rng rng = Rng::substream(seed, 0);

  auto realize = [&](const ComplexMatrix& g) {
    ComplexMatrix rho = normalized_gram(g);
    if (opts.bell_diagonal) {
      // Restrict the walk to the simplex: keep only the Bell-basis diagonal.
      std::array<double, 9> q = detail::bell_coefficients_unchecked(rho);
      for (double& x : q) x = std::max(0.0, x);
      double sum = 0.0;
      for (double x : q) sum += x;
      for (double& x : q) x /= sum;
      rho = detail::simplex_matrix(q);
    }
    return rho;
  };

  // Best of opts.starts sampled general states, ranks cycling 1..9.
  ComplexMatrix g_best;
  ComplexMatrix rho_best;
  Objective best;
  for (int i = 0; i < opts.starts; ++i) {
    ComplexMatrix g = gaussian_factor(rng, 1 + i % 9);
    ComplexMatrix rho = realize(g);
    const Objective o = evaluate(rho, opts);
    if (i == 0 || o.score > best.score) {
      best = o;
      g_best = std::move(g);
      rho_best = std::move(rho);
    }
  }

  double eps = 0.05;
  int consecutive_rejects = 0;
  for (std::int64_t it = 0; it < opts.budget; ++it) {
    ComplexMatrix delta = gaussian_factor(rng, g_best.cols());
    ComplexMatrix g = g_best;
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) g(i, j) += eps * delta(i, j);

    ComplexMatrix rho = realize(g);
    const Objective o = evaluate(rho, opts);
    if (o.score > best.score) {
      best = o;
      g_best = std::move(g);
      rho_best = std::move(rho);
      consecutive_rejects = 0;
    } else if (++consecutive_rejects >= 20) {
      eps = std::max(eps / 2.0, 1e-4);
      consecutive_rejects = 0;
    }
  }

  return SearchResult{DensityMatrix(rho_best), best.point, best.margin, opts.budget};
}

namespace {

double grid_value(int i, int resolution) {
  return static_cast<double>(i) / static_cast<double>(resolution);
}

DataTable figure_pair_curve(int resolution) {
  DataTable t;
  t.columns = {"p", "negativity"};
  for (int i = 0; i <= resolution; ++i) {
    const double p = grid_value(i, resolution);
    t.rows.push_back({p, negativity_pair_formula(p)});
  }
  return t;
}

DataTable figure_line_vs_triangle(int resolution) {
  DataTable t;
  t.columns = {"p_alpha", "p_beta", "n_line", "n_triangle"};
  for (int i = 0; i <= resolution; ++i) {
    for (int k = 0; k <= resolution - i; ++k) {
      const double pa = grid_value(i, resolution);
      const double pb = grid_value(k, resolution);
      const double pc = std::max(0.0, 1.0 - pa - pb);
      const std::array<double, 3> probs = {pa, pb, pc};
      const double n_line = negativity(named_family(StateFamily::line, probs));
      const double n_tri = negativity(named_family(StateFamily::triangle, probs));
      t.rows.push_back({pa, pb, n_line, n_tri});
    }
  }
  return t;
}

DataTable figure_rectangle_vs_gamma(int resolution) {
  DataTable t;
  t.columns = {"p_alpha", "p_beta", "n_rectangle", "n_gamma"};
  const double pg = 0.5;
  for (int i = 0; i <= resolution; ++i) {
    for (int k = 0; k <= resolution; ++k) {
      const double pa = grid_value(i, resolution);
      const double pb = grid_value(k, resolution);
      const double pd = 1.0 - pa - pb - pg;
      if (pd < 0.0) continue;  // outside the probability simplex
      const std::array<double, 4> probs = {pa, pb, pg, pd};
      const double n_rect = negativity(named_family(StateFamily::rectangle, probs));
      const double n_gamma = negativity(named_family(StateFamily::gamma, probs));
      t.rows.push_back({pa, pb, n_rect, n_gamma});
    }
  }
  return t;
}

DataTable figure_entropy_plane(int resolution, std::uint64_t seed) {
  DataTable t;
  t.columns = {"s", "n"};

  const int samples = resolution * resolution;
  for (const ScanRecord& rec : scan_simplex(seed, samples)) {
    t.sections.push_back("simplex");
    t.rows.push_back({rec.point.s, rec.point.n});
  }
  for (int i = 0; i <= resolution; ++i) {
    const double s = 0.75 * grid_value(i, resolution);
    t.sections.push_back("curve_lines");
    t.rows.push_back({s, curve_lines(s)});
  }
  for (int i = 0; i <= resolution; ++i) {
    const double s = 0.9375 * grid_value(i, resolution);
    t.sections.push_back("curve_werner");
    t.rows.push_back({s, curve_werner(s)});
  }
  // The states above the Werner curve live at high entropy and small
  // negativity; a short climb per seed is enough to land above the curve.
  SearchOptions opts;
  opts.band_lo = 0.80;
  opts.band_hi = 0.9375;
  opts.budget = std::max(1000, 250 * resolution);
  for (std::uint64_t k = 1; k <= 4; ++k) {
    const SearchResult r = find_above_werner(seed + k, opts);
    t.sections.push_back("search");
    t.rows.push_back({r.point.s, r.point.n});
  }
  return t;
}

}  // namespace

DataTable figure_dataset(int fig_id, int resolution, std::uint64_t seed) {
  if (resolution < 1) throw std::invalid_argument("figure_dataset: resolution must be >= 1");
  switch (fig_id) {
    case 1: return figure_pair_curve(resolution);
    case 2: return figure_line_vs_triangle(resolution);
    case 3: return figure_rectangle_vs_gamma(resolution);
    case 4: return figure_entropy_plane(resolution, seed);
    default: throw std::invalid_argument("figure_dataset: fig_id must be 1..4");
  }
}

}  // namespace msx
