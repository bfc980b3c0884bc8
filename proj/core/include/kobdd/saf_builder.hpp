#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kobdd/program.hpp"
#include "kobdd/saf.hpp"

namespace kobdd {

/// Builds the explicit 2k-OBDD computing SAF_{k,w} over the natural order.
///
/// Layer 2t scans the blocks for AdrK = t and AdrW = step2(t-1) and produces
/// step1(t); layer 2t+1 targets AdrW = step1(t) and produces step2(t). Each
/// scan tracks, per carried value, whether the current block's address still
/// spells one of the (at most two) bit patterns that reduce to the target,
/// accumulates the matched block's value popcount mod w, and parks the layer
/// result in passthrough nodes until the layer ends. A missing block turns
/// into a FAIL thread that runs to sink 0. Node roles are tagged
/// check:/carry:/accum:/result: for auditing and per-layer decoding.
leveled_program build_saf_program(const saf_params& params);

struct role_counts {
  uint32_t check = 0;
  uint32_t carry = 0;
  uint32_t accum = 0;
  uint32_t result = 0;
  uint32_t total() const { return check + carry + accum + result; }
};

struct builder_report {
  std::vector<std::vector<role_counts>> per_layer; // [layer][level in layer]
  role_counts max_counts; // per-level maxima over the whole program
  uint32_t width = 0;     // realized width
  std::vector<std::string> unknown_roles;
  std::string to_text() const;
};

/// Role census of a built (or deserialized) program; unknown tags are flagged.
builder_report explain_program(const leveled_program& program);

/// Step values read off a run of the built program via role tags, one pair
/// per iteration round, plus the sink reached.
struct decoded_trace {
  std::vector<ext_value> step1;
  std::vector<ext_value> step2;
  int output = 0;
};

decoded_trace decode_program_trace(const leveled_program& program,
                                   const saf_params& params,
                                   const assignment& input);

/// Differential check of the built program against the reference evaluator:
/// seeded random inputs plus the structured suite (all-zeros, all-ones,
/// single-block probes, full chain witnesses), with per-layer decoding
/// compared to the reference trace on the first decode_count samples.
struct equivalence_report {
  uint64_t samples = 0;
  uint64_t structured_cases = 0;
  uint64_t mismatch_count = 0;
  std::vector<std::string> mismatch_inputs; // capped, reproduced verbatim
  uint64_t decode_checked = 0;
  uint64_t decode_mismatches = 0;

  bool ok() const { return mismatch_count == 0 && decode_mismatches == 0; }
};

equivalence_report run_equivalence_check(const saf_params& params,
                                         uint64_t samples, uint64_t seed,
                                         uint64_t decode_count = 1000);

} // namespace kobdd
