#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kobdd/program.hpp"

namespace kobdd {

/// ceil(log2(v)) for v >= 1; 0 for v == 1.
uint32_t ceil_log2(uint32_t v);

/// Step-function value domain: FAIL or an integer in [0, 2w).
/// FAIL is the paper's -1 sentinel: no block with the required address
/// exists; it absorbs through all later steps and forces output 0.
class ext_value {
public:
  constexpr ext_value() : v_(fail_marker) {}
  constexpr explicit ext_value(int32_t v) : v_(v) {}

  static constexpr ext_value fail() { return {}; }
  constexpr bool is_fail() const { return v_ == fail_marker; }
  constexpr int32_t value() const { return v_; }
  std::string to_string() const {
    return is_fail() ? "fail" : std::to_string(v_);
  }
  constexpr bool operator==(const ext_value&) const = default;

private:
  static constexpr int32_t fail_marker = -1;
  int32_t v_;
};

struct saf_params {
  uint32_t k = 0;
  uint32_t w = 0;
  uint32_t n = 0;
  /// true when the structural inequality 2kw(2w + ceil(log k) + ceil(log 2w)) < n
  /// was waived (witness searches at tiny scales); every consumer that only
  /// needs the block geometry still works.
  bool relaxed = false;
};

struct params_validation {
  std::optional<saf_params> params;
  std::string error;      // empty iff valid
  uint32_t suggested_n = 0; // nearest valid n when one is suggested

  bool ok() const { return params.has_value(); }
};

params_validation validate_params(uint32_t k, uint32_t w, uint32_t n);
params_validation validate_params_relaxed(uint32_t k, uint32_t w, uint32_t n);

/// Smallest n accepted by validate_params for this (k, w): the least multiple
/// of 2kw strictly above 2kw(2w + ceil(log k) + ceil(log 2w)).
uint32_t minimal_valid_n(uint32_t k, uint32_t w);

/// validate_params or throw std::invalid_argument with the rejection text.
saf_params require_params(uint32_t k, uint32_t w, uint32_t n);

/// Block geometry of SAF_{k,w}: 2kw contiguous blocks of a = n/(2kw)
/// variables; within a block the first ceil(log k) + ceil(log 2w) variables
/// are address bits, the remaining b are value bits.
class block_layout {
public:
  explicit block_layout(const saf_params& params);

  const saf_params& params() const { return params_; }
  uint32_t k() const { return params_.k; }
  uint32_t w() const { return params_.w; }
  uint32_t n() const { return params_.n; }
  uint32_t block_count() const { return 2 * params_.k * params_.w; }
  uint32_t block_size() const { return a_; }
  uint32_t log_k_bits() const { return mk_; }
  uint32_t log_2w_bits() const { return mw_; }
  uint32_t addr_bits() const { return mk_ + mw_; }
  uint32_t value_bits() const { return a_ - addr_bits(); }

  uint32_t address_var(uint32_t block, uint32_t j) const {
    return block * a_ + j;
  }
  uint32_t value_var(uint32_t block, uint32_t j) const {
    return block * a_ + addr_bits() + j;
  }
  uint32_t block_of(uint32_t var) const { return var / a_; }
  uint32_t offset_in_block(uint32_t var) const { return var % a_; }
  bool is_address_var(uint32_t var) const {
    return offset_in_block(var) < addr_bits();
  }

private:
  saf_params params_;
  uint32_t a_;
  uint32_t mk_;
  uint32_t mw_;
};

/// First address part of block p: sum of y^p_j * 2^j over the ceil(log k)
/// leading address bits, mod k. Selects the iteration step the block serves.
uint32_t adr_k(const block_layout& layout, const assignment& input, uint32_t block);

/// Second address part: the next ceil(log 2w) address bits as a number mod 2w.
/// The block's slot within its iteration step.
uint32_t adr_w(const block_layout& layout, const assignment& input, uint32_t block);

/// Least block p with adr_k(p) == t and adr_w(p) == i; nullopt if none.
std::optional<uint32_t> ind(const block_layout& layout, const assignment& input,
                            uint32_t i, uint32_t t);

/// Popcount of the selected block's value bits mod w; FAIL when ind fails.
ext_value val(const block_layout& layout, const assignment& input, uint32_t i,
              uint32_t t);

/// Step functions for t in [-1, k). Both are 0 at t == -1. A FAIL anywhere
/// (including an inner val) propagates. Non-FAIL step1 lies in [w, 2w),
/// non-FAIL step2 in [0, w).
ext_value saf_step1(const block_layout& layout, const assignment& input, int32_t t);
ext_value saf_step2(const block_layout& layout, const assignment& input, int32_t t);

struct step_record {
  ext_value step1;
  ext_value step2;
  std::optional<uint32_t> block_for_step1;
  std::optional<uint32_t> block_for_step2;
};

struct step_trace {
  std::vector<step_record> steps; // one per t in [0, k)
  int output = 0;
};

step_trace trace_saf(const saf_params& params, const assignment& input);

/// 1 iff step2(k-1) is neither FAIL nor 0.
int eval_saf(const saf_params& params, const assignment& input);

} // namespace kobdd
