#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kobdd/program.hpp"

namespace kobdd {

/// Boolean function as a packed truth table. Index bit j carries variable x_j.
class bool_function {
public:
  bool_function() = default;

  static bool_function from_bits(uint32_t n, const std::vector<uint8_t>& bits);
  /// '0'/'1' text of length 2^n (n >= 1); entry i is f on the assignment
  /// whose bit j of i gives x_j.
  static bool_function from_table_string(std::string_view text);
  static bool_function from_program(const leveled_program& program,
                                    uint32_t max_n = 20);
  template <typename F>
  static bool_function from_evaluator(uint32_t n, F&& fn) {
    std::vector<uint8_t> bits(uint64_t{1} << n);
    for (uint64_t i = 0; i < bits.size(); ++i)
      bits[i] = fn(i) ? 1 : 0;
    return from_bits(n, bits);
  }

  uint32_t arity() const { return n_; }
  uint64_t table_size() const { return uint64_t{1} << n_; }
  bool get(uint64_t index) const {
    return (words_[index >> 6] >> (index & 63u)) & 1u;
  }
  std::string to_table_string() const;

  bool operator==(const bool_function&) const = default;

private:
  uint32_t n_ = 0;
  std::vector<uint64_t> words_;
};

/// Prefix/suffix split of the variables along an order: X_A is the first
/// `cut` variables of the order, X_B the rest. Both sides nonempty.
struct partition {
  variable_order order;
  uint32_t cut = 1;

  std::vector<uint32_t> front_vars() const; // X_A
  std::vector<uint32_t> back_vars() const;  // X_B
};

/// Number of distinct subfunctions of f under all 2^|X_A| restrictions of the
/// partition's front side. Depends on the front side only as a set (the
/// subfunction tables are keyed over X_B in ascending variable index).
/// Guarded to n <= 20.
uint64_t census_pi(const bool_function& f, const partition& pi);

/// max over cuts u in [1, n-1] of census_pi for the given order.
uint64_t census_theta(const bool_function& f, const variable_order& theta);

struct census_result {
  uint64_t n_global = 0;
  variable_order order; // an order achieving the minimum
  uint32_t cut = 0;     // a cut of that order achieving its maximum
  uint64_t n_theta = 0;
  uint64_t n_pi = 0;
};

/// min over all orders of census_theta, computed with a bottleneck-path
/// dynamic program over the subset lattice: the cost of a subset S is the
/// census of the partition (S, complement), and the answer is the cheapest
/// max-cost over monotone chains from the empty set to all variables. This
/// is equivalent to the definition because the census depends on the front
/// side only through the set. Guarded to n <= 8.
census_result census_global(const bool_function& f);

/// census of the partition whose front side is the given variable set.
uint64_t census_for_front_set(const bool_function& f, uint64_t front_mask);

} // namespace kobdd
