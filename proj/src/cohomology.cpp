#include "ulrich/cohomology.hpp"

#include <algorithm>

namespace ulrich {

Int h0_line(const SurfaceModel& s, const DivClass& l) {
  if (!s.exact_cohomology()) {
    throw UnsupportedSurfaceError("exact cohomology unsupported on " + s.name() +
                                  " (blow-up at general points)");
  }
  if (l.rank() != s.rank()) {
    throw DimensionMismatch("h0_line: class rank " + std::to_string(l.rank()) +
                            " vs surface rank " + std::to_string(s.rank()));
  }
  if (s.kind() == SurfaceKind::ProjectivePlane) {
    const Int t = l.coords[0];
    if (t < 0) return 0;
    return checked_mul(checked_add(t, 2), checked_add(t, 1)) / 2;
  }

  // F_a: sum_{k=0..s} max(0, t - ka + 1), in closed form so large classes
  // stay O(1). Terms are positive exactly for k <= min(s, floor(t/a)).
  const Int a = s.hirzebruch_a();
  const Int sc = l.coords[0];
  const Int t = l.coords[1];
  if (sc < 0 || t < 0) return 0;
  const Int kmax = a == 0 ? sc : std::min(sc, t / a);
  const Int terms = checked_add(kmax, 1);
  // sum = (kmax+1)(t+1) - a * kmax(kmax+1)/2
  const Int triangle = checked_mul(kmax, terms) / 2;
  return checked_sub(checked_mul(terms, checked_add(t, 1)), checked_mul(a, triangle));
}

Int h0_monomial_count(Int a, const DivClass& l) {
  if (a < 0) throw RangeError("h0_monomial_count needs a >= 0");
  if (l.rank() != 2) throw DimensionMismatch("h0_monomial_count expects rank-2 coordinates");
  const Int s = l.coords[0];
  const Int t = l.coords[1];
  Int count = 0;
  for (Int k = 0; k <= s; ++k) {
    for (Int m = 0; m <= t - k * a; ++m) {
      ++count;
    }
  }
  return count;
}

CohomTriple cohomology(const SurfaceModel& s, const DivClass& l) {
  const DivClass k = canonical_class(s);
  CohomTriple out;
  out.h0 = h0_line(s, l);
  out.h2 = h0_line(s, k - l);
  const Int h1 = checked_sub(checked_add(out.h0, out.h2), chi_line(s, l));
  if (h1 < 0) {
    throw CrossCheckError("negative h1 = " + std::to_string(h1) + " for L = " + to_string(l) +
                          " on " + s.name());
  }
  out.h1 = h1;
  return out;
}

}  // namespace ulrich
