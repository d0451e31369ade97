#include "ulrich/ulrich.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ulrich {

namespace {

// Extended Euclid: returns g = gcd(|a|, |b|) > 0 and Bezout coefficients
// with a*x + b*y = g. Requires (a, b) != (0, 0).
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  if (a == 0 && b == 0) throw CalcError("gcd(0, 0) requested");
  Int old_r = a, r = b;
  Int old_x = 1, cur_x = 0;
  Int old_y = 0, cur_y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * cur_x;
    old_x = cur_x;
    cur_x = tmp;
    tmp = old_y - q * cur_y;
    old_y = cur_y;
    cur_y = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

Int isqrt(Int n) {
  if (n < 0) throw CalcError("isqrt of negative value");
  if (n == 0) return 0;
  Int x = static_cast<Int>(std::sqrt(static_cast<double>(n))) + 2;
  while (static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(x) >
         static_cast<unsigned __int128>(n)) {
    --x;
  }
  return x;
}

// Integer roots of A k^2 + B k + C = 0 (not identically zero), exact.
std::vector<Int> integer_quadratic_roots(Int a, Int b, Int c) {
  std::vector<Int> roots;
  if (a != 0) {
    const Int disc = checked_sub(checked_mul(b, b), checked_mul(4, checked_mul(a, c)));
    if (disc < 0) return roots;
    const Int sq = isqrt(disc);
    if (checked_mul(sq, sq) != disc) return roots;  // irrational roots
    const Int two_a = checked_mul(2, a);
    for (const Int num : {checked_sub(checked_neg(b), sq), checked_add(checked_neg(b), sq)}) {
      if (num % two_a == 0) roots.push_back(num / two_a);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  } else if (b != 0) {
    if (c % b == 0) roots.push_back(checked_neg(c / b));
  } else if (c == 0) {
    throw CalcError("identically zero quadratic has no root list");
  }
  return roots;
}

Int max_abs_coord(const DivClass& d) {
  Int m = 1;
  for (const Int c : d.coords) m = std::max(m, c < 0 ? checked_neg(c) : c);
  return m;
}

}  // namespace

UlrichVerdict is_ulrich_line(const SurfaceModel& s, const DivClass& h, const DivClass& l) {
  if (h.rank() != s.rank() || l.rank() != s.rank()) {
    throw DimensionMismatch("is_ulrich_line: coordinate length does not match " + s.name());
  }
  const DivClass lh = l - h;
  const DivClass l2h = l - 2 * h;

  UlrichVerdict verdict;
  verdict.filter_passed = ulrich_determinant_condition(s, h, ChernData{1, l, 0}) &&
                          chi_line(s, lh) == 0 && chi_line(s, l2h) == 0;
  if (!s.exact_cohomology()) {
    verdict.mode = VerdictMode::NumericalFilterOnly;
    verdict.is_ulrich = false;  // undetermined; the mode says so
    return verdict;
  }

  verdict.mode = VerdictMode::Exact;
  const CohomTriple first = cohomology(s, lh);
  const CohomTriple second = cohomology(s, l2h);
  verdict.witnesses = {first.h0, first.h1, second.h1, second.h2};
  verdict.is_ulrich =
      first.h0 == 0 && first.h1 == 0 && second.h1 == 0 && second.h2 == 0;
  return verdict;
}

std::vector<DivClass> enumerate_ulrich_lines(const SurfaceModel& s, const DivClass& h,
                                             std::optional<Int> bound_cap) {
  if (!s.exact_cohomology()) {
    throw UnsupportedSurfaceError("enumeration needs exact cohomology; unsupported on " +
                                  s.name());
  }
  if (h.rank() != s.rank()) {
    throw DimensionMismatch("enumerate_ulrich_lines: polarization does not match " + s.name());
  }
  const Int cap = bound_cap.value_or(checked_mul(10, max_abs_coord(h)));
  if (cap < 1) throw RangeError("bound cap must be >= 1");

  const DivClass k = canonical_class(s);
  const Int target2 = intersect(s, h, k + 3 * h);  // = 2 H.L on candidates
  if (target2 % 2 != 0) return {};
  const Int rhs = target2 / 2;

  std::vector<DivClass> found;

  if (s.kind() == SurfaceKind::ProjectivePlane) {
    const Int m = h.coords[0];
    if (m == 0) {
      if (rhs == 0) {
        throw UnboundedSearchError(
            "degenerate H = 0: the determinant condition holds on the whole lattice "
            "(cap " + std::to_string(cap) + ")");
      }
      return {};
    }
    if (rhs % m != 0) return {};
    const DivClass candidate{rhs / m};
    if (is_ulrich_line(s, h, candidate).is_ulrich) found.push_back(candidate);
    return found;
  }

  // Hirzebruch: H.(x,y) = p x + q y with p = t0 - a s0, q = s0. Base point
  // L0 via Bezout, primitive direction w with H.w = 0.
  const Int a = s.hirzebruch_a();
  const Int p = checked_sub(h.coords[1], checked_mul(a, h.coords[0]));
  const Int q = h.coords[0];
  if (p == 0 && q == 0) {
    if (rhs == 0) {
      throw UnboundedSearchError(
          "degenerate H = 0: the determinant condition holds on the whole lattice "
          "(cap " + std::to_string(cap) + ")");
    }
    return {};
  }
  Int bez_x = 0, bez_y = 0;
  const Int g = ext_gcd(p, q, bez_x, bez_y);
  if (rhs % g != 0) return {};
  const Int scale = rhs / g;
  const DivClass base{checked_mul(bez_x, scale), checked_mul(bez_y, scale)};
  const DivClass dir{q / g, checked_neg(p / g)};

  // On the line, 2 chi(L(k) - H) = A k^2 + B k + C; A = w.w < 0 whenever
  // H^2 > 0, so the candidate set is the (at most two) integer roots.
  const DivClass b0 = base - h;
  const Int qa = intersect(s, dir, dir);
  const Int qb = intersect(s, dir, 2 * b0 - k);
  const Int qc = checked_mul(2, chi_line(s, b0));

  if (qa == 0 && qb == 0 && qc == 0) {
    throw UnboundedSearchError(
        "chi(L-H) vanishes identically along the candidate line for H = " + to_string(h) +
        "; search capped at |coords| <= " + std::to_string(cap));
  }

  for (const Int root : integer_quadratic_roots(qa, qb, qc)) {
    const DivClass candidate = base + root * dir;
    if (is_ulrich_line(s, h, candidate).is_ulrich) found.push_back(candidate);
  }
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

CohomologyTable cohomology_table(const SurfaceModel& s, const DivClass& h,
                                 const ChernData& e, Int j_min, Int j_max) {
  if (j_min > j_max) {
    throw RangeError("empty twist range " + std::to_string(j_min) + ".." +
                     std::to_string(j_max));
  }
  if (e.rank != 1 && e.rank != 2) {
    throw RangeError("cohomology table needs rank 1 or 2 data");
  }
  if (e.rank == 1 && !s.exact_cohomology()) {
    throw UnsupportedSurfaceError("exact cohomology unsupported on " + s.name());
  }

  CohomologyTable table;
  table.j_min = j_min;
  table.j_max = j_max;
  table.exact = e.rank == 1;
  for (Int j = j_min; j <= j_max; ++j) {
    const ChernData twisted = twist(s, e, j * h);
    if (e.rank == 1) {
      const CohomTriple c = cohomology(s, twisted.c1);
      table.gamma0.push_back(c.h0);
      table.gamma1.push_back(c.h1);
      table.gamma2.push_back(c.h2);
      table.chi.push_back(chi_line(s, twisted.c1));
    } else {
      table.chi.push_back(chi_rank2(s, twisted));
    }
  }
  return table;
}

LMNumerics lazarsfeld_mukai_numerics(const SurfaceModel& s, const DivClass& h) {
  if (h.rank() != s.rank()) {
    throw DimensionMismatch("lazarsfeld_mukai_numerics: polarization does not match " +
                            s.name());
  }
  const DivClass k = canonical_class(s);
  const Int d = intersect(s, h, h);
  const Int kh = intersect(s, k, h);

  LMNumerics lm;
  lm.c1 = k + 3 * h;
  lm.c2 = (Rat(checked_add(checked_mul(5, d), checked_mul(3, kh)), 2) + Rat(2)).as_integer();
  lm.chi = chi_rank2(s, ChernData{2, lm.c1, lm.c2});
  if (lm.chi != checked_mul(2, d)) {
    throw CrossCheckError("chi of the rank-2 data is " + std::to_string(lm.chi) +
                          ", expected 2d = " + std::to_string(2 * d));
  }
  if (!ulrich_determinant_condition(s, h, ChernData{2, lm.c1, lm.c2})) {
    throw CrossCheckError("determinant condition failed for c1 = K + 3H");
  }
  lm.det_is_special = true;
  lm.family_dim = checked_add(checked_sub(d, s.k2()), 5);
  lm.degenerate = lm.family_dim <= 0;
  return lm;
}

Type2NIdentity hirzebruch_2n_identity(Int a, Int n, Int s) {
  if (a < 0) throw RangeError("Hirzebruch parameter must be >= 0");
  if (n <= checked_mul(2, a)) {
    throw RangeError("the (2,n) identity needs n > 2a, got a=" + std::to_string(a) +
                     ", n=" + std::to_string(n));
  }

  Type2NIdentity out;
  // t = [(2a - n) s + (5n - 5a - 2)] / 2
  out.t = Rat(checked_add(checked_mul(checked_sub(checked_mul(2, a), n), s),
                          checked_sub(checked_mul(5, n), checked_add(checked_mul(5, a), 2))),
              2);
  out.chi_factored =
      Rat(checked_mul(checked_mul(checked_sub(s, 3), checked_sub(s, 1)), checked_sub(a, n)), 2);
  out.t_integral = out.t.is_integer();
  if (out.t_integral) {
    const SurfaceModel fa = SurfaceModel::hirzebruch(a);
    const DivClass polarization{2, n};
    const DivClass line{s, out.t.as_integer()};
    out.chi_check = chi_line(fa, line - polarization);
    if (Rat(*out.chi_check) != out.chi_factored) {
      throw CrossCheckError("chi(L-H) = " + std::to_string(*out.chi_check) +
                            " disagrees with the factored form " + out.chi_factored.str());
    }
  }
  return out;
}

}  // namespace ulrich
