#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ulrich/rational.hpp"

namespace ulrich {

enum class SurfaceKind { ProjectivePlane, Hirzebruch, BlowupP2 };

// Picard-lattice model of a rational surface. Fixed basis conventions:
//
//   P2   : (h)            h^2 = 1
//   F_a  : (C0, f)        C0^2 = -a, C0.f = 1, f^2 = 0
//                         "type (s,t)" means s*C0 + t*f, C0 the negative section
//   dP_r : (h, e_1..e_r)  h^2 = 1, e_i^2 = -1, mixed products 0
//
// Every model is rational, so chi(O_S) = 1 throughout.
class SurfaceModel {
 public:
  static SurfaceModel projective_plane() { return {SurfaceKind::ProjectivePlane, 0}; }
  static SurfaceModel hirzebruch(Int a);
  static SurfaceModel blowup_p2(Int r);

  SurfaceKind kind() const { return kind_; }
  Int hirzebruch_a() const;
  Int blowup_r() const;

  int rank() const;  // Picard rank: 1, 2, r+1
  Int k2() const;    // K^2: 9, 8, 9-r

  // Exact line-bundle cohomology is implemented on P2 and Hirzebruch only;
  // blow-ups at general points get numerical filters.
  bool exact_cohomology() const { return kind_ != SurfaceKind::BlowupP2; }

  std::string name() const;  // "P2", "F3", "dP6"

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  SurfaceModel(SurfaceKind k, Int p) : kind_(k), param_(p) {}

  SurfaceKind kind_;
  Int param_;  // a for Hirzebruch, r for BlowupP2
};

// Integer coordinate vector of a divisor class in the owning surface's basis.
struct DivClass {
  std::vector<Int> coords;

  DivClass() = default;
  explicit DivClass(std::vector<Int> c) : coords(std::move(c)) {}
  DivClass(std::initializer_list<Int> c) : coords(c) {}

  int rank() const { return static_cast<int>(coords.size()); }

  friend bool operator==(const DivClass&, const DivClass&) = default;
};

DivClass operator+(const DivClass& a, const DivClass& b);
DivClass operator-(const DivClass& a, const DivClass& b);
DivClass operator-(const DivClass& a);
DivClass operator*(Int n, const DivClass& a);

// Lexicographic coordinate order; the stable output contract of enumeration.
bool lex_less(const DivClass& a, const DivClass& b);

std::string to_string(const DivClass& d);   // "2,5"
DivClass parse_div(std::string_view text);  // inverse of to_string

// Numerical Chern data of a sheaf. Rank 1 or 2 everywhere in this project;
// rank 1 carries c2 = 0.
struct ChernData {
  Int rank = 1;
  DivClass c1;
  Int c2 = 0;

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

// Surface descriptor grammar: `P2 | F<a> | dP<r>` with a >= 0 and 1 <= r <= 8.
// r > 8 leaves del Pezzo territory and is rejected with a RangeError.
SurfaceModel make_surface(std::string_view spec);

// Symmetric bilinear intersection pairing in the basis above.
Int intersect(const SurfaceModel& s, const DivClass& a, const DivClass& b);

// K_S: P2 -> (-3); F_a -> (-2, -(a+2)); dP_r -> (-3, 1..1).
DivClass canonical_class(const SurfaceModel& s);

// Adjunction: 1 + C.(C+K)/2.
Int adjunction_genus(const SurfaceModel& s, const DivClass& c);

// Riemann-Roch for a line bundle, chi(O_S) = 1: 1 + L.(L-K)/2.
Int chi_line(const SurfaceModel& s, const DivClass& l);

// Riemann-Roch for rank-2 Chern data: 2 + (c1^2 - 2 c2)/2 - (c1.K)/2,
// evaluated in exact rationals with a final integrality assertion.
Int chi_rank2(const SurfaceModel& s, const ChernData& e);

// Chern data of E twisted by O(M).
// rank 1: c1 += M.  rank 2: c1 += 2M, c2 += c1.M + M^2.
ChernData twist(const SurfaceModel& s, const ChernData& e, const DivClass& m);

// The linear determinant condition H.(c1 - rank/2 (K + 3H)) = 0, evaluated
// in exact rationals. Necessary for E to be Ulrich with respect to H.
bool ulrich_determinant_condition(const SurfaceModel& s, const DivClass& h,
                                  const ChernData& e);

// Positivity heuristic used for CLI warnings. On F_a this is the ampleness
// criterion H.f > 0, H.C0 > 0; on dP_r only a coarse necessary check.
// Never consulted by the engines themselves.
bool plausibly_very_ample(const SurfaceModel& s, const DivClass& h);

}  // namespace ulrich
