#pragma once

#include <cstdint>

#include "kobdd/big_uint.hpp"
#include "kobdd/census.hpp"
#include "kobdd/program.hpp"

namespace kobdd {

/// Subfunction ceiling for any function computed by a k-OBDD of width w:
/// w^((k-1)w + 1).
big_uint ak13_bound(uint32_t k, uint32_t w);

/// Subfunction floor for SAF_{k,w}: w^((k-1)(w-2)). Requires w >= 2.
big_uint saf_census_lower_bound(uint32_t k, uint32_t w);

struct ak13_verdict {
  bool ok = false;
  uint64_t census = 0;
  big_uint bound;
  uint32_t k = 0; // layer count of the checked program
  uint32_t w = 0; // measured width
  uint32_t n = 0;
};

/// Measures the program (layer count, width), extracts its function, and
/// checks census_global against the ceiling. Arity-guarded by census_global.
ak13_verdict check_ak13(const leveled_program& program);

struct gap_values {
  int64_t base = 0;
  int64_t exponent = 0;
  big_uint value;
};

struct gap_result {
  gap_values lhs; // floor for SAF_{ceil(k/3), ceil(w/4)}
  gap_values rhs; // ceiling for width floor(w/16) - 3 k-OBDDs
  bool separated = false;
  bool in_theorem_range = false; // k >= 2 and w >= 64
};

/// Exact big-integer comparison of the two sides of the width-hierarchy
/// argument: ceil(w/4)^((ceil(k/3)-1)(ceil(w/4)-2)) versus
/// (floor(w/16)-3)^((k-1)(floor(w/16)-3)+1). Values with nonpositive bases or
/// exponents degenerate to 0 or 1 and are only reachable outside the
/// theorem's stated range, which the result flags.
gap_result hierarchy_gap(uint32_t k, uint32_t w);

} // namespace kobdd
