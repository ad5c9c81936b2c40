// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>

namespace msx {

// Point (m,n) of the 3x3 index grid over Z3. Components are reduced mod 3 at
// construction; addition and negation are mod-3. The grid is enumerated
// lexicographically, m major: flat() = 3m + n.
struct ModIndex {
  int m = 0;
  int n = 0;

  constexpr ModIndex() = default;
  constexpr ModIndex(int mm, int nn) : m(((mm % 3) + 3) % 3), n(((nn % 3) + 3) % 3) {}

  constexpr int flat() const { return 3 * m + n; }
  static constexpr ModIndex from_flat(int i) { return ModIndex(i / 3, i % 3); }

  constexpr ModIndex operator+(ModIndex o) const { return ModIndex(m + o.m, n + o.n); }
  constexpr ModIndex operator-() const { return ModIndex(-m, -n); }

  friend constexpr bool operator==(ModIndex a, ModIndex b) = default;
  friend constexpr auto operator<=>(ModIndex a, ModIndex b) {
    return a.flat() <=> b.flat();
  }
};

}  // namespace msx
