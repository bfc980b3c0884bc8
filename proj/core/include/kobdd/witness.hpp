#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kobdd/census.hpp"
#include "kobdd/saf.hpp"

namespace kobdd {

/// Prescribed per-round values for a constructed input: the value the lower
/// lookup must produce and the value the upper lookup must produce, both < w.
struct chain_plan {
  std::vector<std::pair<uint32_t, uint32_t>> round_values; // size k
};

/// Builds an input whose trace follows the plan exactly: block 2t answers the
/// round-t lower lookup with plan value, block 2t+1 the upper lookup; all
/// remaining blocks copy block 0's address and stay shadowed behind it.
assignment make_chain_input(const block_layout& layout, const chain_plan& plan);

/// Input where exactly the given block carries address (0, 0) (every other
/// block answers (1, 1)), so the first lookup selects it and the chain then
/// fails. Exercises single-block matching and FAIL propagation.
assignment make_single_block_probe(const block_layout& layout, uint32_t block);

/// Partial assignment with an explicit ascending domain.
struct restriction {
  std::vector<uint32_t> vars;
  std::vector<uint8_t> bits;

  static restriction from_assignment(const assignment& full,
                                     std::vector<uint32_t> domain);
  void apply(assignment& onto) const;
  bool same_domain(const restriction& other) const { return vars == other.vars; }
  bool operator==(const restriction&) const = default;
};

/// Blocks whose value variables land on the partition's front side at least
/// w times (I_A) versus the rest (I_B). Whenever |I_A| equals kw the split is
/// checked against the counting argument: every I_B block must keep at least
/// w+1 value variables behind the cut, and |I_B| must equal kw.
struct partition_classification {
  std::vector<uint32_t> heavy_blocks; // I_A
  std::vector<uint32_t> light_blocks; // I_B
  bool balanced = false;
  bool lemma_holds = false;
};

partition_classification classify_partition(const block_layout& layout,
                                            const partition& pi);

/// A constructed pair of front-side restrictions with provably different SAF
/// subfunctions, together with full witness inputs for both. Uses relaxed
/// parameters (n = 2kw * (addr_bits + w)) and the natural half partition.
struct distinguish_pair {
  saf_params params;
  partition part;
  restriction sigma;
  restriction sigma_prime;
  assignment nu;       // full input extending sigma, accepted (unless swapped)
  assignment nu_prime; // full input extending sigma_prime
};

/// seed_a != seed_b are the popcounts of the differing seed block (< w);
/// swap_finals exchanges which of the two inputs accepts.
/// Requires w >= 2 for k == 2 and w >= 3 for k >= 3 (block budget).
distinguish_pair make_distinguish_pair(uint32_t k, uint32_t w, uint32_t seed_a,
                                       uint32_t seed_b, bool swap_finals);

struct distinguish_result {
  bool found = false;
  restriction gamma;
  uint64_t candidates_tried = 0;
  bool relaxed = false; // parameters were accepted without inequality (1)
  int value_on_sigma = 0;
  int value_on_sigma_prime = 0;
};

/// Searches for a back-side assignment gamma with
/// eval(sigma, gamma) != eval(sigma_prime, gamma). Structured candidates
/// first: chain completions that place the needed addresses and popcounts
/// into free back-side blocks (only attempted when every block lies fully on
/// one side of the cut); then seeded random assignments up to the budget.
/// A miss after budget exhaustion is inconclusive, not a proof of equality.
distinguish_result distinguish(const saf_params& params, const restriction& sigma,
                               const restriction& sigma_prime,
                               const partition& pi, uint64_t budget = 10000,
                               uint64_t seed = 1);

} // namespace kobdd
