// SPDX-License-Identifier: Apache-2.0

#include "msx/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace msx {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

void require_distinct(std::span<const ModIndex> s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t k = i + 1; k < s.size(); ++k)
      if (s[i] == s[k]) throw std::invalid_argument("subset: points must be distinct");
}

std::vector<ModIndex> sorted_points(std::span<const ModIndex> s) {
  std::vector<ModIndex> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

AffineMap::AffineMap(int a_, int b_, int c_, int d_, int j_, int r_)
    : a(mod3(a_)), b(mod3(b_)), c(mod3(c_)), d(mod3(d_)), j(mod3(j_)), r(mod3(r_)) {
  if (mod3(a * d - b * c) == 0) {
    throw std::invalid_argument("AffineMap: matrix not invertible mod 3");
  }
}

std::string to_string(SubsetClass c) {
  switch (c) {
    case SubsetClass::singleton: return "singleton";
    case SubsetClass::pair: return "pair";
    case SubsetClass::line: return "line";
    case SubsetClass::triangle: return "triangle";
    case SubsetClass::line_plus_point: return "line_plus_point";
    case SubsetClass::cap: return "cap";
  }
  return "unknown";
}

std::vector<AffineMap> enumerate_group() {
  std::vector<AffineMap> g;
  g.reserve(432);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          if (mod3(a * d - b * c) == 0) continue;
          for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 3; ++r) g.push_back(AffineMap(a, b, c, d, j, r));
        }
  return g;
}

ModIndex apply_map(const AffineMap& f, ModIndex x) {
  return ModIndex(f.a * x.m + f.b * x.n + f.j, f.c * x.m + f.d * x.n + f.r);
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  // f(g(x)) = F (G x + t_g) + t_f = (F G) x + (F t_g + t_f)
  return AffineMap(f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                   f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d,
                   f.a * g.j + f.b * g.r + f.j, f.c * g.j + f.d * g.r + f.r);
}

bool is_line(std::span<const ModIndex> s) {
  if (s.size() != 3) throw std::invalid_argument("is_line: exactly 3 points required");
  require_distinct(s);
  const std::vector<ModIndex> pts = sorted_points(s);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m) {
          if (n == 0 && m == 0) continue;
          std::vector<ModIndex> line = {ModIndex(j, k), ModIndex(j + n, k + m),
                                        ModIndex(j + 2 * n, k + 2 * m)};
          std::sort(line.begin(), line.end());
          if (line == pts) return true;
        }
  return false;
}

SubsetClass classify_subset(std::span<const ModIndex> s) {
  if (s.empty() || s.size() > 4) {
    throw std::invalid_argument("classify_subset: subset size must be 1..4");
  }
  require_distinct(s);
  switch (s.size()) {
    case 1:
      return SubsetClass::singleton;
    case 2:
      return SubsetClass::pair;
    case 3:
      return is_line(s) ? SubsetClass::line : SubsetClass::triangle;
    default: {
      // Size 4: a quadruple contains at most one full line (two distinct
      // lines share at most one point), so the split is unambiguous.
      for (int drop = 0; drop < 4; ++drop) {
        std::vector<ModIndex> triple;
        for (int i = 0; i < 4; ++i)
          if (i != drop) triple.push_back(s[i]);
        if (is_line(triple)) return SubsetClass::line_plus_point;
      }
      return SubsetClass::cap;
    }
  }
}

std::vector<std::vector<ModIndex>> orbit(std::span<const ModIndex> s) {
  require_distinct(s);
  std::set<std::vector<ModIndex>> images;
  for (const AffineMap& f : enumerate_group()) {
    std::vector<ModIndex> img;
    img.reserve(s.size());
    for (ModIndex x : s) img.push_back(apply_map(f, x));
    std::sort(img.begin(), img.end());
    images.insert(std::move(img));
  }
  return {images.begin(), images.end()};
}

std::vector<ModIndex> canonical_representative(std::span<const ModIndex> s) {
  return orbit(s).front();
}

}  // namespace msx
