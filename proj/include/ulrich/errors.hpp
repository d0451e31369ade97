#pragma once

#include <stdexcept>
#include <string>

namespace ulrich {

// Root of every error this library throws.
struct CalcError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input: surface descriptors, divisor coordinates, CLI args.
struct ParseError : CalcError {
  using CalcError::CalcError;
};

// Structurally valid input outside the supported range (e.g. dP9).
struct RangeError : CalcError {
  using CalcError::CalcError;
};

// Divisor-class coordinate length does not match the surface's Picard rank.
struct DimensionMismatch : CalcError {
  using CalcError::CalcError;
};

// An integrality assertion failed. All division-by-2 formulas are evaluated
// in exact rationals with a final integrality check; a ParityError means an
// internal-consistency violation, not bad user input.
struct ParityError : CalcError {
  using CalcError::CalcError;
};

// Requested exact cohomology on a surface where only numerical data is
// available (blow-ups of P2 at general points).
struct UnsupportedSurfaceError : CalcError {
  using CalcError::CalcError;
};

// The candidate line in the Picard lattice admits no finite cutoff
// (degenerate polarization). The search stops at the configured cap instead
// of looping forever.
struct UnboundedSearchError : CalcError {
  using CalcError::CalcError;
};

// Two independent exact routes to the same value disagreed. The formulas are
// exact, so this is always an implementation bug and fails hard.
struct CrossCheckError : CalcError {
  using CalcError::CalcError;
};

// Checked 64-bit arithmetic overflowed. Hard failure, never wraparound.
struct OverflowError : CalcError {
  using CalcError::CalcError;
};

}  // namespace ulrich
