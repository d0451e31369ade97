#include "ulrich/surface.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ulrich {

namespace {

void require_rank(const SurfaceModel& s, const DivClass& d, const char* where) {
  if (d.rank() != s.rank()) {
    throw DimensionMismatch(std::string(where) + ": divisor class has " +
                            std::to_string(d.rank()) + " coordinates, surface " +
                            s.name() + " has Picard rank " + std::to_string(s.rank()));
  }
}

void require_same_rank(const DivClass& a, const DivClass& b, const char* where) {
  if (a.rank() != b.rank()) {
    throw DimensionMismatch(std::string(where) + ": coordinate lengths differ (" +
                            std::to_string(a.rank()) + " vs " + std::to_string(b.rank()) + ")");
  }
}

// Divide an even pairing value by 2; odd values are an internal-consistency
// failure (the pairing of integral classes in these formulas is always even).
Int half_even(Int n, const char* what) {
  if (n % 2 != 0) {
    throw ParityError(std::string(what) + ": value " + std::to_string(n) + " is odd");
  }
  return n / 2;
}

Int parse_int(std::string_view text, std::string_view full) {
  Int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("bad integer '" + std::string(text) + "' in '" + std::string(full) + "'");
  }
  return value;
}

}  // namespace

SurfaceModel SurfaceModel::hirzebruch(Int a) {
  if (a < 0) throw RangeError("Hirzebruch parameter must be >= 0, got " + std::to_string(a));
  return {SurfaceKind::Hirzebruch, a};
}

SurfaceModel SurfaceModel::blowup_p2(Int r) {
  if (r < 1) throw RangeError("blow-up needs at least one point, got r=" + std::to_string(r));
  if (r > 8) {
    throw RangeError("dP" + std::to_string(r) +
                     " is beyond the del Pezzo range r <= 8; unverified territory");
  }
  return {SurfaceKind::BlowupP2, r};
}

Int SurfaceModel::hirzebruch_a() const {
  if (kind_ != SurfaceKind::Hirzebruch) throw CalcError("not a Hirzebruch surface");
  return param_;
}

Int SurfaceModel::blowup_r() const {
  if (kind_ != SurfaceKind::BlowupP2) throw CalcError("not a blow-up of P2");
  return param_;
}

int SurfaceModel::rank() const {
  switch (kind_) {
    case SurfaceKind::ProjectivePlane: return 1;
    case SurfaceKind::Hirzebruch: return 2;
    case SurfaceKind::BlowupP2: return static_cast<int>(param_) + 1;
  }
  throw CalcError("bad surface kind");
}

Int SurfaceModel::k2() const {
  switch (kind_) {
    case SurfaceKind::ProjectivePlane: return 9;
    case SurfaceKind::Hirzebruch: return 8;
    case SurfaceKind::BlowupP2: return 9 - param_;
  }
  throw CalcError("bad surface kind");
}

std::string SurfaceModel::name() const {
  switch (kind_) {
    case SurfaceKind::ProjectivePlane: return "P2";
    case SurfaceKind::Hirzebruch: return "F" + std::to_string(param_);
    case SurfaceKind::BlowupP2: return "dP" + std::to_string(param_);
  }
  throw CalcError("bad surface kind");
}

SurfaceModel make_surface(std::string_view spec) {
  if (spec == "P2") return SurfaceModel::projective_plane();
  if (spec.size() >= 2 && spec[0] == 'F' && spec[1] != '-') {
    return SurfaceModel::hirzebruch(parse_int(spec.substr(1), spec));
  }
  if (spec.size() >= 3 && spec.substr(0, 2) == "dP" && spec[2] != '-') {
    return SurfaceModel::blowup_p2(parse_int(spec.substr(2), spec));
  }
  throw ParseError("bad surface descriptor '" + std::string(spec) +
                   "' (expected P2, F<a>, or dP<r>)");
}

DivClass operator+(const DivClass& a, const DivClass& b) {
  require_same_rank(a, b, "DivClass addition");
  DivClass r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked_add(r.coords[i], b.coords[i]);
  return r;
}

DivClass operator-(const DivClass& a, const DivClass& b) {
  require_same_rank(a, b, "DivClass subtraction");
  DivClass r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked_sub(r.coords[i], b.coords[i]);
  return r;
}

DivClass operator-(const DivClass& a) {
  DivClass r = a;
  for (auto& c : r.coords) c = checked_neg(c);
  return r;
}

DivClass operator*(Int n, const DivClass& a) {
  DivClass r = a;
  for (auto& c : r.coords) c = checked_mul(n, c);
  return r;
}

bool lex_less(const DivClass& a, const DivClass& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

std::string to_string(const DivClass& d) {
  std::ostringstream out;
  for (size_t i = 0; i < d.coords.size(); ++i) {
    if (i) out << ',';
    out << d.coords[i];
  }
  return out.str();
}

DivClass parse_div(std::string_view text) {
  if (text.empty()) throw ParseError("empty divisor class");
  std::vector<Int> coords;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view piece =
        comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    if (piece.empty()) throw ParseError("empty coordinate in '" + std::string(text) + "'");
    coords.push_back(parse_int(piece, text));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return DivClass(std::move(coords));
}

Int intersect(const SurfaceModel& s, const DivClass& a, const DivClass& b) {
  require_rank(s, a, "intersect");
  require_rank(s, b, "intersect");
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane:
      return checked_mul(a.coords[0], b.coords[0]);
    case SurfaceKind::Hirzebruch: {
      // (s1,t1).(s2,t2) = -a s1 s2 + s1 t2 + s2 t1
      const Int cross = checked_add(checked_mul(a.coords[0], b.coords[1]),
                                    checked_mul(a.coords[1], b.coords[0]));
      return checked_sub(cross, checked_mul(s.hirzebruch_a(),
                                            checked_mul(a.coords[0], b.coords[0])));
    }
    case SurfaceKind::BlowupP2: {
      Int acc = checked_mul(a.coords[0], b.coords[0]);
      for (size_t i = 1; i < a.coords.size(); ++i) {
        acc = checked_sub(acc, checked_mul(a.coords[i], b.coords[i]));
      }
      return acc;
    }
  }
  throw CalcError("bad surface kind");
}

DivClass canonical_class(const SurfaceModel& s) {
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane:
      return DivClass{-3};
    case SurfaceKind::Hirzebruch:
      return DivClass{-2, -(s.hirzebruch_a() + 2)};
    case SurfaceKind::BlowupP2: {
      std::vector<Int> coords(static_cast<size_t>(s.rank()), 1);
      coords[0] = -3;
      return DivClass(std::move(coords));
    }
  }
  throw CalcError("bad surface kind");
}

Int adjunction_genus(const SurfaceModel& s, const DivClass& c) {
  const Int pairing = intersect(s, c, c + canonical_class(s));
  return checked_add(1, half_even(pairing, "adjunction genus: C.(C+K)"));
}

Int chi_line(const SurfaceModel& s, const DivClass& l) {
  const Int pairing = intersect(s, l, l - canonical_class(s));
  return checked_add(1, half_even(pairing, "chi: L.(L-K)"));
}

Int chi_rank2(const SurfaceModel& s, const ChernData& e) {
  if (e.rank != 2) throw RangeError("chi_rank2 needs rank 2, got " + std::to_string(e.rank));
  const DivClass k = canonical_class(s);
  const Rat chi = Rat(2) +
                  Rat(checked_sub(intersect(s, e.c1, e.c1), checked_mul(2, e.c2)), 2) -
                  Rat(intersect(s, e.c1, k), 2);
  return chi.as_integer();
}

ChernData twist(const SurfaceModel& s, const ChernData& e, const DivClass& m) {
  require_rank(s, m, "twist");
  require_rank(s, e.c1, "twist");
  if (e.rank == 1) return ChernData{1, e.c1 + m, 0};
  if (e.rank != 2) throw RangeError("twist needs rank 1 or 2, got " + std::to_string(e.rank));
  ChernData out;
  out.rank = 2;
  out.c1 = e.c1 + 2 * m;
  out.c2 = checked_add(e.c2, checked_add(intersect(s, e.c1, m), intersect(s, m, m)));
  return out;
}

bool ulrich_determinant_condition(const SurfaceModel& s, const DivClass& h,
                                  const ChernData& e) {
  if (e.rank != 1 && e.rank != 2) {
    throw RangeError("determinant condition needs rank 1 or 2, got " + std::to_string(e.rank));
  }
  const DivClass adjoint = canonical_class(s) + 3 * h;
  const Rat lhs = Rat(intersect(s, h, e.c1)) -
                  Rat(e.rank, 2) * Rat(intersect(s, h, adjoint));
  return lhs == Rat(0);
}

bool plausibly_very_ample(const SurfaceModel& s, const DivClass& h) {
  if (h.rank() != s.rank()) return false;
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane:
      return h.coords[0] >= 1;
    case SurfaceKind::Hirzebruch:
      // H.f = s > 0 and H.C0 = t - a s > 0
      return h.coords[0] >= 1 &&
             h.coords[1] > checked_mul(s.hirzebruch_a(), h.coords[0]);
    case SurfaceKind::BlowupP2: {
      if (h.coords[0] < 1) return false;
      if (intersect(s, h, h) < 1) return false;
      const DivClass e_i_negative(std::vector<Int>(h.coords.begin() + 1, h.coords.end()));
      for (Int b : e_i_negative.coords) {
        if (-b < 1) return false;  // H.e_i = -b_i must be positive
      }
      return true;
    }
  }
  return false;
}

}  // namespace ulrich
