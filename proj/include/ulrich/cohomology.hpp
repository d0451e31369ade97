#pragma once

#include "ulrich/surface.hpp"

namespace ulrich {

// Dimensions (h0, h1, h2) of a line bundle's cohomology. Always satisfies
// h0 - h1 + h2 = chi_line and h2(L) = h0(K - L).
struct CohomTriple {
  Int h0 = 0;
  Int h1 = 0;
  Int h2 = 0;

  friend bool operator==(const CohomTriple&, const CohomTriple&) = default;
};

// h^0 of a line bundle, exact on P2 and Hirzebruch surfaces.
//   P2, L = (t):    binomial(t+2, 2) for t >= 0, else 0
//   F_a, L = (s,t): 0 for s < 0, else sum_{k=0..s} max(0, t - ka + 1)
// Blow-ups raise UnsupportedSurfaceError.
Int h0_line(const SurfaceModel& s, const DivClass& l);

// Independent check of h0_line on F_a: counts the pairs (k, m) with
// 0 <= k <= s and 0 <= m <= t - ka by brute-force enumeration. Shares no
// code with h0_line on purpose.
Int h0_monomial_count(Int a, const DivClass& l);

// Full triple: h0 directly, h2 = h0(K - L) by Serre duality, h1 from chi.
CohomTriple cohomology(const SurfaceModel& s, const DivClass& l);

}  // namespace ulrich
