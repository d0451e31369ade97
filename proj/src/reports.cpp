#include "ulrich/reports.hpp"

namespace ulrich {

namespace {

struct PolarizationData {
  DivClass k;
  Int d = 0;
  Int kh = 0;
  Int k2 = 0;
};

PolarizationData polarization_data(const SurfaceModel& s, const DivClass& h) {
  PolarizationData p;
  p.k = canonical_class(s);
  p.d = intersect(s, h, h);
  p.kh = intersect(s, p.k, h);
  p.k2 = s.k2();
  if ((p.d + p.kh) % 2 != 0) {
    throw ParityError("d + K.H = " + std::to_string(p.d + p.kh) +
                      " is odd; H is not an integral class of this lattice");
  }
  return p;
}

void check_equal(Int got, Int want, const char* what) {
  if (got != want) {
    throw CrossCheckError(std::string(what) + ": " + std::to_string(got) +
                          " != " + std::to_string(want));
  }
}

}  // namespace

Int brill_noether_rho(Int g, Int r, Int deg) {
  if (g < 0) throw RangeError("rho needs genus >= 0");
  if (r < 1) throw RangeError("rho needs r >= 1");
  const Int defect = checked_add(checked_sub(g, deg), r);
  return checked_sub(g, checked_mul(checked_add(r, 1), defect));
}

InvariantReport invariant_report(const SurfaceModel& s, const DivClass& h) {
  const auto [k, d, kh, k2] = polarization_data(s, h);

  InvariantReport rep;
  rep.d = d;
  rep.KH = kh;
  rep.K2 = k2;

  // g = (9/2) d + (9/2) K.H + K^2 + 1, cross-checked by adjunction on K+3H.
  rep.g = (Rat(checked_mul(9, checked_add(d, kh)), 2) + Rat(k2) + Rat(1)).as_integer();
  check_equal(adjunction_genus(s, k + 3 * h), rep.g, "genus of the adjoint curve");

  rep.cliff = checked_add(checked_add(checked_mul(2, d), checked_mul(3, kh)), k2);
  rep.gon = checked_add(rep.cliff, 2);
  rep.pencil_deg =
      (Rat(checked_add(checked_mul(5, d), checked_mul(3, kh)), 2) + Rat(2)).as_integer();
  // pencil degree is g - gon + 3 by construction
  check_equal(rep.pencil_deg, checked_add(checked_sub(rep.g, rep.gon), 3),
              "pencil degree vs g - k + 3");

  rep.family_dim = checked_add(checked_sub(d, k2), 5);

  if (s.exact_cohomology()) {
    rep.h0_anticanonical = cohomology(s, -k).h0;
    rep.h0_anticanonical_exact = true;
  } else {
    rep.h0_anticanonical = chi_line(s, -k);  // lower bound: h2(-K) = h0(2K) = 0
    rep.h0_anticanonical_exact = false;
  }
  if (s.kind() == SurfaceKind::Hirzebruch) {
    rep.gon_fiber_bound = intersect(s, k + 3 * h, DivClass{0, 1});
  }

  rep.hyp_degree_ok = d > checked_add(checked_neg(kh), 1);
  rep.hyp_genus_ok = rep.g >= 4;
  rep.hyp_antipencil_ok = rep.h0_anticanonical >= 2;
  rep.degenerate_trio = rep.family_dim <= 0;
  return rep;
}

Int sigma_dim_bound(const SurfaceModel& s, const DivClass& h, Int i) {
  if (i < 1) throw RangeError("sigma bound needs i >= 1");
  const auto p = polarization_data(s, h);
  return (Rat(checked_add(p.d, p.kh), 2) - Rat(i) + Rat(1)).as_integer();
}

CycleBoundReport cycle_bound_report(const SurfaceModel& s, const DivClass& h) {
  const auto [k, d, kh, k2] = polarization_data(s, h);

  CycleBoundReport rep;
  rep.deg_D_H = checked_add(checked_mul(2, d), kh);
  check_equal(intersect(s, k + 2 * h, h), rep.deg_D_H, "deg O_D(H) vs (K+2H).H");

  rep.g_D = checked_add(checked_add(checked_mul(2, d), checked_mul(3, kh)), checked_add(k2, 1));
  check_equal(adjunction_genus(s, k + 2 * h), rep.g_D, "g(D) vs adjunction on K+2H");

  const Rat half_sum = Rat(checked_add(d, kh), 2);
  rep.alpha = (half_sum + Rat(2)).as_integer();
  rep.h0_K_plus_H = (half_sum + Rat(1)).as_integer();
  if (s.exact_cohomology()) {
    check_equal(cohomology(s, k + h).h0, rep.h0_K_plus_H, "h0(K+H) formula vs cohomology");
  }

  rep.bound = checked_add(checked_sub(checked_sub(d, kh), k2), 3);
  rep.dim_adjoint2_system = checked_sub(chi_line(s, k + 2 * h), 1);
  rep.sum_identity = checked_add(rep.dim_adjoint2_system, rep.bound);
  check_equal(rep.sum_identity, checked_add(checked_sub(checked_mul(3, d), k2), 3),
              "dim|K+2H| + bound vs 3d - K^2 + 3");

  for (Int i = 1; i <= 3; ++i) {
    rep.sigma_bounds[static_cast<size_t>(i - 1)] = sigma_dim_bound(s, h, i);
  }
  return rep;
}

DimensionLedger dimension_ledger(const SurfaceModel& s, const DivClass& h) {
  const auto [k, d, kh, k2] = polarization_data(s, h);
  const InvariantReport inv = invariant_report(s, h);

  DimensionLedger led;
  led.dim_linear_system = checked_sub(chi_line(s, k + 3 * h), 1);
  if (s.exact_cohomology()) {
    // chi computes the actual dimension: K + 3H has no higher cohomology here.
    check_equal(cohomology(s, k + 3 * h).h0, checked_add(led.dim_linear_system, 1),
                "h0(K+3H) vs chi(K+3H)");
  }

  led.rho = brill_noether_rho(inv.g, 1, inv.pencil_deg);
  led.dimW_lb = checked_add(led.dim_linear_system, led.rho);
  check_equal(led.dimW_lb, checked_add(checked_sub(checked_mul(5, d), k2), 1),
              "dim W bound vs 5d - K^2 + 1");

  led.dimG_lb = led.dimW_lb;
  led.grass_dim = checked_mul(2, checked_sub(checked_mul(2, d), 2));
  led.lm_family_lb = checked_sub(led.dimG_lb, led.grass_dim);
  check_equal(led.lm_family_lb, checked_add(checked_sub(d, k2), 5),
              "bundle family bound vs d - K^2 + 5");

  led.dimP_lb = checked_add(led.lm_family_lb, checked_sub(checked_mul(2, d), 1));
  check_equal(led.dimP_lb, checked_add(checked_sub(checked_mul(3, d), k2), 4),
              "dim P bound vs 3d - K^2 + 4");

  const CycleBoundReport cycles = cycle_bound_report(s, h);
  led.cycles_bound = cycles.bound;
  led.dimZ_ub = checked_add(cycles.dim_adjoint2_system, cycles.bound);
  check_equal(led.dimZ_ub, checked_sub(led.dimP_lb, 1), "dim Z bound vs dim P - 1");
  check_equal(led.dimZ_ub, checked_add(checked_sub(checked_mul(3, d), k2), 3),
              "dim Z bound vs 3d - K^2 + 3");

  const LMNumerics lm = lazarsfeld_mukai_numerics(s, h);
  led.moduli_dim = checked_sub(
      checked_sub(checked_mul(4, lm.c2), intersect(s, lm.c1, lm.c1)), 3);
  check_equal(led.moduli_dim, led.lm_family_lb, "moduli dimension vs family bound");

  return led;
}

ChowShape chow_shape(const SurfaceModel& s, const DivClass& h) {
  const auto [k, d, kh, k2] = polarization_data(s, h);
  (void)k2;

  ChowShape shape;
  shape.ambient_dim = Rat(checked_sub(d, kh), 2).as_integer();
  if (s.exact_cohomology()) {
    check_equal(cohomology(s, h).h0, checked_add(shape.ambient_dim, 1),
                "h0(O(1)) vs ambient dimension + 1");
  }
  shape.grass_sub_dim = checked_sub(shape.ambient_dim, 2);
  shape.grass_ambient_dim = checked_add(shape.ambient_dim, 1);
  shape.grass_dim = checked_mul(3, shape.grass_sub_dim);
  shape.taut_rank = 3;
  shape.matrix_size = checked_mul(2, d);
  return shape;
}

std::vector<UlrichExample> small_surface_exceptions() {
  std::vector<UlrichExample> out = {
      {SurfaceModel::projective_plane(), DivClass{1}, DivClass{0}},
      {SurfaceModel::hirzebruch(0), DivClass{1, 1}, DivClass{0, 1}},
      {SurfaceModel::hirzebruch(1), DivClass{1, 2}, DivClass{1, 1}},
  };
  for (const auto& entry : out) {
    const UlrichVerdict v = is_ulrich_line(entry.surface, entry.polarization, entry.line);
    if (!v.is_ulrich) {
      throw CrossCheckError("small-surface entry " + to_string(entry.line) + " on " +
                            entry.surface.name() + " failed the Ulrich test");
    }
  }
  return out;
}

}  // namespace ulrich
