// SPDX-License-Identifier: Apache-2.0
//
// The group of invertible affine transformations of the 3x3 index grid over
// Z3 (432 elements = 48 invertible 2x2 matrices x 9 translations), and the
// classification of 1..4-point subsets into its equivalence classes: one class
// each of single points and pairs, lines vs triangles for triples, and
// line-plus-point vs caps for quadruples.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "msx/modindex.hpp"

namespace msx {

// x |-> [[a,b],[c,d]] x + (j,r) over Z3, with ad - bc != 0 (mod 3).
struct AffineMap {
  int a = 1, b = 0;
  int c = 0, d = 1;
  int j = 0, r = 0;

  AffineMap() = default;
  AffineMap(int a_, int b_, int c_, int d_, int j_, int r_);

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

enum class SubsetClass { singleton, pair, line, triangle, line_plus_point, cap };

std::string to_string(SubsetClass c);

// All 432 invertible affine maps, in a fixed deterministic order.
std::vector<AffineMap> enumerate_group();

ModIndex apply_map(const AffineMap& f, ModIndex x);

// Composition f∘g: (f∘g)(x) = f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);

// True iff s is an affine line {(j,k), (j+n,k+m), (j+2n,k+2m)} for some
// start point and direction (n,m) != (0,0). Requires |s| == 3, points distinct.
bool is_line(std::span<const ModIndex> s);

// Classifies a subset of 1..4 distinct points. Size 4 splits into
// line_plus_point (some triple is collinear) and cap (no collinear triple;
// the orbit of the grid rectangles).
SubsetClass classify_subset(std::span<const ModIndex> s);

// All images of s under the full group, as sorted point lists, sorted
// lexicographically. Orbit sizes: singletons 9, pairs 36, lines 12,
// triangles 72, line_plus_point 72, caps 54.
std::vector<std::vector<ModIndex>> orbit(std::span<const ModIndex> s);

// Lexicographically smallest member of orbit(s); identical for any two
// subsets in the same orbit.
std::vector<ModIndex> canonical_representative(std::span<const ModIndex> s);

}  // namespace msx
