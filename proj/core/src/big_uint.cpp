#include "kobdd/big_uint.hpp"

#include <algorithm>

namespace kobdd {

big_uint::big_uint(uint64_t value) {
  if (value != 0) {
    limbs_.push_back(static_cast<uint32_t>(value));
    if (value >> 32) limbs_.push_back(static_cast<uint32_t>(value >> 32));
  }
}

void big_uint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

big_uint& big_uint::operator*=(const big_uint& rhs) {
  if (is_zero() || rhs.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    const uint64_t a = limbs_[i];
    for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
      const uint64_t cur = a * rhs.limbs_[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t j = i + rhs.limbs_.size();
    while (carry) {
      const uint64_t cur = out[j] + carry;
      out[j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++j;
    }
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

big_uint big_uint::pow(uint64_t base, uint64_t exponent) {
  big_uint result(1);
  big_uint factor(base);
  while (exponent) {
    if (exponent & 1) result *= factor;
    exponent >>= 1;
    if (exponent) factor *= factor;
  }
  return result;
}

int big_uint::compare(const big_uint& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

size_t big_uint::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

std::string big_uint::to_string() const {
  if (is_zero()) return "0";
  // repeated division by 10^9, collecting 9-digit chunks
  std::vector<uint32_t> work = limbs_;
  std::vector<uint32_t> chunks;
  while (!work.empty()) {
    uint64_t rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      const uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    chunks.push_back(static_cast<uint32_t>(rem));
  }
  std::string out = std::to_string(chunks.back());
  char buf[10];
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof(buf), "%09u", chunks[i]);
    out += buf;
  }
  return out;
}

} // namespace kobdd
