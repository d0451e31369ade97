#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ulrich/cohomology.hpp"
#include "ulrich/surface.hpp"

namespace ulrich {

enum class VerdictMode { Exact, NumericalFilterOnly };

// Outcome of the four-vanishing test for a line bundle L against a
// polarization H. In Exact mode `witnesses` carries
// (h0(L-H), h1(L-H), h1(L-2H), h2(L-2H)) and is_ulrich is authoritative.
// On blow-ups only the numerical filter runs; the mode flags the verdict as
// undetermined and is_ulrich stays false, so callers cannot mistake a passed
// filter for a proof.
struct UlrichVerdict {
  VerdictMode mode = VerdictMode::Exact;
  bool is_ulrich = false;
  bool filter_passed = false;  // determinant condition + chi(L-H) = chi(L-2H) = 0
  std::optional<std::array<Int, 4>> witnesses;
};

UlrichVerdict is_ulrich_line(const SurfaceModel& s, const DivClass& h, const DivClass& l);

// All Ulrich line-bundle classes for (S, H), lexicographically sorted.
//
// Candidates live on the affine lattice line 2 H.L = H.(K + 3H); on that line
// chi(L-H) = chi(L-2H) is a quadratic in the step parameter whose leading
// coefficient w.w is negative whenever H^2 > 0 (Hodge index), so it has at
// most two integer roots and the search is provably finite. Candidates are
// the roots; each is confirmed with is_ulrich_line. If the quadratic
// degenerates to the zero polynomial (only possible for degenerate H), the
// scan stops at `bound_cap` on |coords| (default 10 * max|H coords|) and
// raises UnboundedSearchError rather than looping forever.
std::vector<DivClass> enumerate_ulrich_lines(const SurfaceModel& s, const DivClass& h,
                                             std::optional<Int> bound_cap = std::nullopt);

// gamma_{i,j} = h^i(E(j)) for j in [j_min, j_max]. Exact rows for rank-1
// data on P2/Hirzebruch; rank-2 data gets the chi row only, the individual
// h^i being unavailable. Row order in renderers follows the table
// orientation with i = 2 on top.
struct CohomologyTable {
  Int j_min = 0;
  Int j_max = 0;
  bool exact = false;
  std::vector<Int> gamma0, gamma1, gamma2;  // filled when exact
  std::vector<Int> chi;                     // always filled
};

CohomologyTable cohomology_table(const SurfaceModel& s, const DivClass& h,
                                 const ChernData& e, Int j_min, Int j_max);

// Numerical shadow of the Lazarsfeld-Mukai bundle attached to (S, H):
// c1 = K + 3H, c2 = (5d + 3 K.H)/2 + 2, chi = 2d, and the expected family
// dimension d - K^2 + 5. `degenerate` flags family_dim <= 0.
struct LMNumerics {
  DivClass c1;
  Int c2 = 0;
  Int chi = 0;
  bool det_is_special = true;
  Int family_dim = 0;
  bool degenerate = false;
};

LMNumerics lazarsfeld_mukai_numerics(const SurfaceModel& s, const DivClass& h);

// The (2,n)-polarization identity on F_a, n > 2a: a line bundle (s,t) can
// satisfy chi(L-H) = chi(L-2H) = 0 only for
//     t = (a - n/2) s + (5n - 5a - 2)/2,
// and then chi(L-H) = (s-3)(s-1)(a-n)/2. Returns t exactly; when t is
// integral also evaluates chi_line(F_a, (s,t) - H) and asserts it matches
// the factored form. Non-integral t means no candidate at this s.
struct Type2NIdentity {
  Rat t;
  bool t_integral = false;
  std::optional<Int> chi_check;  // chi_line(F_a, (s,t) - H) when t is integral
  Rat chi_factored;              // (s-3)(s-1)(a-n)/2
};

Type2NIdentity hirzebruch_2n_identity(Int a, Int n, Int s);

}  // namespace ulrich
