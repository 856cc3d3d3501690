#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fibercone/hilbert.hpp"
#include "fibercone/ideal.hpp"

namespace fibercone {

using ParameterSequence = std::vector<Polynomial>;

// Window result for one element x: does xR ∩ I1^s I2^r = x I1^s I2^(r-1)
// hold for every r in [r0, r_window] and every s in [0, s_window]?
struct SuperficialVerdict {
  size_t index = 0;   // position of the element in the sequence
  bool pass = false;  // some stable row exists within the window
  int r0 = -1;        // least stable row when pass, else -1
  int r_window = 0;
  int s_window = 0;
};

struct ReductionData {
  ParameterSequence x;
  int reduction_number = -1;  // least r with (x) I2^r = I2^(r+1)
  int s_value = -1;           // least n with (x) I1 I2^n = I1 I2^(n+1)
  std::vector<SuperficialVerdict> superficial_verdicts;
  bool inside_I1 = false;  // (x) contained in I1
  uint64_t seed = 0;
};

// Least r <= probe_bound with (x) I2^r = I2^(r+1); (false, -1) when the
// sequence has the wrong length, an element lies outside I2, or no exponent
// within the bound works. probe_bound < 0 selects colength(R/I2) + 2.
std::pair<bool, int> is_reduction(IdealArena& arena,
                                  const ParameterSequence& x, IdealPtr I2,
                                  int probe_bound = -1);

// Tests the window property xR ∩ I1^s I2^r = x I1^s I2^(r-1) cell by cell.
// The zero element is degenerate and always fails.
SuperficialVerdict check_superficial(const Polynomial& x,
                                     const FiltrationPair& pair, int r_window,
                                     int s_window);

// Least n with (x) I1 I2^n = I1 I2^(n+1), re-verified at n+1. The sequence
// must be a reduction of I2 so that the probe terminates; throws
// WindowTooSmall past probe_bound (default colength(R/I2) + 2).
int s_value(const ParameterSequence& x, const FiltrationPair& pair,
            int probe_bound = -1);

// Draws `trials` random F_p-combinations of the generators of I2 (d elements
// per candidate); when constrain_inside_I1 is set, candidates with any
// element outside I1 are rejected. The first candidate passing the reduction
// test is returned with its full ReductionData (reduction number, s-value,
// per-element superficiality verdicts over r <= reduction_number + d + 3,
// s <= 2). Throws TrialsExhausted with the best failing candidate otherwise.
// Deterministic in `seed`.
ReductionData find_minimal_reduction(IdealArena& arena, IdealPtr I2,
                                     IdealPtr I1, bool constrain_inside_I1,
                                     int trials, uint64_t seed,
                                     int probe_bound = -1);

}  // namespace fibercone
