#include "kobdd/saf.hpp"

#include <stdexcept>

namespace kobdd {

uint32_t ceil_log2(uint32_t v) {
  uint32_t bits = 0;
  while ((uint64_t{1} << bits) < v) ++bits;
  return bits;
}

namespace {

uint32_t addr_bits_for(uint32_t k, uint32_t w) {
  return ceil_log2(k) + ceil_log2(2 * w);
}

params_validation reject(std::string why, uint32_t suggested = 0) {
  params_validation r;
  r.error = std::move(why);
  r.suggested_n = suggested;
  return r;
}

uint32_t suggest_n(uint32_t k, uint32_t w, uint32_t at_least) {
  const uint32_t blocks = 2 * k * w;
  const uint64_t bound = uint64_t{blocks} * (2 * w + addr_bits_for(k, w));
  uint64_t n = std::max<uint64_t>(bound + 1, at_least);
  n = (n + blocks - 1) / blocks * blocks;
  return static_cast<uint32_t>(n);
}

} // namespace

params_validation validate_params(uint32_t k, uint32_t w, uint32_t n) {
  if (k < 2) return reject("k must be at least 2");
  if (w < 2) return reject("w must be at least 2 (w = 1 collapses the block values)");
  const uint32_t blocks = 2 * k * w;
  const uint64_t bound = uint64_t{blocks} * (2 * w + addr_bits_for(k, w));
  if (uint64_t{n} <= bound)
    return reject("n must strictly exceed 2kw(2w + ceil(log k) + ceil(log 2w)) = " +
                      std::to_string(bound),
                  suggest_n(k, w, n));
  if (n % blocks != 0)
    return reject("n must be a multiple of 2kw = " + std::to_string(blocks),
                  suggest_n(k, w, n));
  params_validation r;
  r.params = saf_params{k, w, n, false};
  return r;
}

params_validation validate_params_relaxed(uint32_t k, uint32_t w, uint32_t n) {
  if (k < 2) return reject("k must be at least 2");
  if (w < 2) return reject("w must be at least 2");
  const uint32_t blocks = 2 * k * w;
  if (n % blocks != 0)
    return reject("n must be a multiple of 2kw = " + std::to_string(blocks));
  const uint32_t a = n / blocks;
  if (a < addr_bits_for(k, w) + 1)
    return reject("blocks need at least one value bit: n/(2kw) must exceed " +
                  std::to_string(addr_bits_for(k, w)));
  params_validation r;
  r.params = saf_params{k, w, n, true};
  return r;
}

uint32_t minimal_valid_n(uint32_t k, uint32_t w) {
  if (k < 2 || w < 2) throw std::invalid_argument("minimal_valid_n requires k, w >= 2");
  return suggest_n(k, w, 0);
}

saf_params require_params(uint32_t k, uint32_t w, uint32_t n) {
  auto v = validate_params(k, w, n);
  if (!v.ok()) throw std::invalid_argument("invalid SAF parameters: " + v.error);
  return *v.params;
}

block_layout::block_layout(const saf_params& params)
    : params_(params),
      a_(params.n / (2 * params.k * params.w)),
      mk_(ceil_log2(params.k)),
      mw_(ceil_log2(2 * params.w)) {
  if (params.n == 0 || params.n % (2 * params.k * params.w) != 0)
    throw std::invalid_argument("layout requires 2kw | n");
  if (a_ < addr_bits() + 1)
    throw std::invalid_argument("layout requires at least one value bit per block");
}

uint32_t adr_k(const block_layout& layout, const assignment& input, uint32_t block) {
  uint32_t sum = 0;
  for (uint32_t j = 0; j < layout.log_k_bits(); ++j)
    if (input.get(layout.address_var(block, j))) sum += uint32_t{1} << j;
  return sum % layout.k();
}

uint32_t adr_w(const block_layout& layout, const assignment& input, uint32_t block) {
  uint32_t sum = 0;
  for (uint32_t j = 0; j < layout.log_2w_bits(); ++j)
    if (input.get(layout.address_var(block, layout.log_k_bits() + j)))
      sum += uint32_t{1} << j;
  return sum % (2 * layout.w());
}

namespace {

uint32_t block_popcount_mod_w(const block_layout& layout, const assignment& input,
                              uint32_t block) {
  uint32_t ones = 0;
  for (uint32_t j = 0; j < layout.value_bits(); ++j)
    if (input.get(layout.value_var(block, j))) ++ones;
  return ones % layout.w();
}

struct block_summary {
  uint32_t adrk;
  uint32_t adrw;
  uint32_t value;
};

std::vector<block_summary> summarize(const block_layout& layout,
                                     const assignment& input) {
  std::vector<block_summary> blocks(layout.block_count());
  for (uint32_t p = 0; p < layout.block_count(); ++p)
    blocks[p] = {adr_k(layout, input, p), adr_w(layout, input, p),
                 block_popcount_mod_w(layout, input, p)};
  return blocks;
}

void check_arity(const block_layout& layout, const assignment& input) {
  if (input.size() != layout.n())
    throw std::invalid_argument("input has arity " + std::to_string(input.size()) +
                                ", SAF expects " + std::to_string(layout.n()));
}

} // namespace

std::optional<uint32_t> ind(const block_layout& layout, const assignment& input,
                            uint32_t i, uint32_t t) {
  check_arity(layout, input);
  for (uint32_t p = 0; p < layout.block_count(); ++p)
    if (adr_k(layout, input, p) == t && adr_w(layout, input, p) == i) return p;
  return std::nullopt;
}

ext_value val(const block_layout& layout, const assignment& input, uint32_t i,
              uint32_t t) {
  const auto p = ind(layout, input, i, t);
  if (!p) return ext_value::fail();
  return ext_value(static_cast<int32_t>(block_popcount_mod_w(layout, input, *p)));
}

namespace {

step_trace trace_impl(const block_layout& layout, const assignment& input) {
  check_arity(layout, input);
  const auto blocks = summarize(layout, input);
  const auto lookup = [&](uint32_t i, uint32_t t)
      -> std::optional<std::pair<uint32_t, uint32_t>> {
    for (uint32_t p = 0; p < blocks.size(); ++p)
      if (blocks[p].adrk == t && blocks[p].adrw == i)
        return std::make_pair(p, blocks[p].value);
    return std::nullopt;
  };

  step_trace trace;
  trace.steps.resize(layout.k());
  const uint32_t w = layout.w();
  ext_value prev2(0); // step2 at t = -1
  for (uint32_t t = 0; t < layout.k(); ++t) {
    step_record& rec = trace.steps[t];
    if (!prev2.is_fail()) {
      if (const auto hit = lookup(static_cast<uint32_t>(prev2.value()), t)) {
        rec.block_for_step1 = hit->first;
        rec.step1 = ext_value(static_cast<int32_t>(hit->second + w));
      }
    }
    if (!rec.step1.is_fail()) {
      if (const auto hit = lookup(static_cast<uint32_t>(rec.step1.value()), t)) {
        rec.block_for_step2 = hit->first;
        rec.step2 = ext_value(static_cast<int32_t>(hit->second));
      }
    }
    prev2 = rec.step2;
  }
  trace.output = (!prev2.is_fail() && prev2.value() != 0) ? 1 : 0;
  return trace;
}

} // namespace

ext_value saf_step1(const block_layout& layout, const assignment& input, int32_t t) {
  if (t < -1) throw std::invalid_argument("step index must be >= -1");
  if (t == -1) return ext_value(0);
  const auto trace = trace_impl(layout, input);
  return trace.steps[static_cast<uint32_t>(t)].step1;
}

ext_value saf_step2(const block_layout& layout, const assignment& input, int32_t t) {
  if (t < -1) throw std::invalid_argument("step index must be >= -1");
  if (t == -1) return ext_value(0);
  const auto trace = trace_impl(layout, input);
  return trace.steps[static_cast<uint32_t>(t)].step2;
}

step_trace trace_saf(const saf_params& params, const assignment& input) {
  return trace_impl(block_layout(params), input);
}

int eval_saf(const saf_params& params, const assignment& input) {
  return trace_saf(params, input).output;
}

} // namespace kobdd
