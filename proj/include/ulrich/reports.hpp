#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ulrich/ulrich.hpp"

namespace ulrich {

// Brill-Noether number rho(g, r, deg) = g - (r+1)(g - deg + r).
Int brill_noether_rho(Int g, Int r, Int deg);

// Curve invariants of the adjoint curve C in |K + 3H| together with the
// hypothesis checks of the rank-2 existence statement. The genuinely
// geometric hypotheses (Clifford dimension 1, Clifford index computed by the
// adjoint restriction) cannot be verified numerically and are surfaced as
// assumption flags, never claimed as facts.
struct InvariantReport {
  Int d = 0, KH = 0, K2 = 0;
  Int g = 0, cliff = 0, gon = 0, pencil_deg = 0;
  Int family_dim = 0;
  Int h0_anticanonical = 0;       // exact on P2/Hirzebruch, chi lower bound on dP
  bool h0_anticanonical_exact = false;
  std::optional<Int> gon_fiber_bound;  // C.f on Hirzebruch: pencil-of-fibers gonality bound
  bool hyp_degree_ok = false;     // d > -K.H + 1
  bool hyp_genus_ok = false;      // g >= 4
  bool hyp_antipencil_ok = false; // h0(-K) >= 2
  bool degenerate_trio = false;   // family_dim <= 0
  bool assumed_clifford_dim_one = true;
  bool assumed_cliff_from_adjoint = true;
};

InvariantReport invariant_report(const SurfaceModel& s, const DivClass& h);

// Numerics of the 0-cycle bound on a smooth D in |K + 2H|: degree and genus
// of D, the offset alpha, h0(K+H), the parameter-count bound, and the
// dimension bounds for the jump loci Sigma_i (i = 1, 2, 3 tabulated).
struct CycleBoundReport {
  Int deg_D_H = 0;         // 2d + K.H
  Int g_D = 0;             // 2d + 3 K.H + K^2 + 1
  Int alpha = 0;           // d/2 + K.H/2 + 2
  Int h0_K_plus_H = 0;     // d/2 + K.H/2 + 1
  Int bound = 0;           // d - K.H - K^2 + 3
  Int dim_adjoint2_system = 0;  // dim |K + 2H|
  Int sum_identity = 0;         // dim |K+2H| + bound = 3d - K^2 + 3
  std::array<Int, 3> sigma_bounds{};  // sigma_i bound at i = 1, 2, 3
};

CycleBoundReport cycle_bound_report(const SurfaceModel& s, const DivClass& h);

// dim bound for the locus Sigma_i: d/2 + K.H/2 - i + 1.
Int sigma_dim_bound(const SurfaceModel& s, const DivClass& h, Int i);

// The dimension bookkeeping of the rank-2 existence argument. Every closed
// form is asserted against its independent route; a mismatch is a hard
// CrossCheckError since the identities are exact.
struct DimensionLedger {
  Int dim_linear_system = 0;  // dim |K + 3H| = chi(K+3H) - 1
  Int rho = 0;                // rho(g, 1, g - k + 3)
  Int dimW_lb = 0;            // dim_linear_system + rho = 5d - K^2 + 1
  Int dimG_lb = 0;            // Grassmannian-bundle bound, same value
  Int grass_dim = 0;          // dim G(2, 2d) = 2(2d - 2)
  Int lm_family_lb = 0;       // dimG_lb - grass_dim = d - K^2 + 5
  Int dimP_lb = 0;            // lm_family_lb + 2d - 1 = 3d - K^2 + 4
  Int dimZ_ub = 0;            // dim |K+2H| + cycle bound = 3d - K^2 + 3
  Int cycles_bound = 0;       // d - K.H - K^2 + 3
  Int moduli_dim = 0;         // 4 c2 - c1^2 - 3 = d - K^2 + 5
};

DimensionLedger dimension_ledger(const SurfaceModel& s, const DivClass& h);

// Shape data of the Pfaffian presentation of the Chow form: ambient P^N with
// N = (d - K.H)/2, the Grassmannian of codimension-3 planes, and the size of
// the skew-symmetric matrix.
struct ChowShape {
  Int ambient_dim = 0;        // N
  Int grass_sub_dim = 0;      // N - 2 (vector-space dimension of the planes)
  Int grass_ambient_dim = 0;  // N + 1
  Int grass_dim = 0;          // 3(N - 2)
  Int taut_rank = 3;
  Int matrix_size = 0;        // 2d
};

ChowShape chow_shape(const SurfaceModel& s, const DivClass& h);

// The three small surfaces whose rank-2 family dimension is <= 0, each with
// its explicit Ulrich line bundle. Every entry is re-verified with
// is_ulrich_line before being returned.
struct UlrichExample {
  SurfaceModel surface;
  DivClass polarization;
  DivClass line;
};

std::vector<UlrichExample> small_surface_exceptions();

}  // namespace ulrich
