#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kobdd {

/// Arbitrary-precision unsigned integer.
///
/// Covers exactly what the bound arithmetic needs: multiplication integer
/// exponentiation, comparison, and decimal printing. Values in the hierarchy
/// comparisons reach tens of thousands of bits, far past uint64_t, and the
/// comparisons must be exact, so no floating point is involved anywhere.
class big_uint {
public:
  big_uint() = default; // zero
  big_uint(uint64_t value);

  /// base^exponent by binary exponentiation. 0^0 is defined as 1.
  static big_uint pow(uint64_t base, uint64_t exponent);

  big_uint& operator*=(const big_uint& rhs);
  friend big_uint operator*(big_uint lhs, const big_uint& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const big_uint& rhs) const = default;
  bool operator<(const big_uint& rhs) const { return compare(rhs) < 0; }
  bool operator>(const big_uint& rhs) const { return compare(rhs) > 0; }
  bool operator<=(const big_uint& rhs) const { return compare(rhs) <= 0; }
  bool operator>=(const big_uint& rhs) const { return compare(rhs) >= 0; }

  /// -1, 0, or +1.
  int compare(const big_uint& rhs) const;

  bool is_zero() const { return limbs_.empty(); }
  size_t bit_length() const;

  /// Decimal representation, no leading zeros ("0" for zero).
  std::string to_string() const;

private:
  // little-endian base-2^32 limbs, most significant limb nonzero
  std::vector<uint32_t> limbs_;

  void trim();
};

} // namespace kobdd
