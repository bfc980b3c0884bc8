#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kobdd/rng.hpp"

namespace kobdd {

/// A permutation of {0,...,n-1}: the variable order shared by all layers.
struct variable_order {
  std::vector<uint32_t> perm;

  static variable_order identity(uint32_t n);
  uint32_t size() const { return static_cast<uint32_t>(perm.size()); }
  bool is_permutation() const;
  bool operator==(const variable_order&) const = default;
};

/// Input vector. Bit j is the value of variable x_j, independently of any
/// variable order.
class assignment {
public:
  assignment() = default;
  explicit assignment(std::vector<uint8_t> bits);

  static assignment zeros(uint32_t n);
  static assignment ones(uint32_t n);
  /// Parses a string of '0'/'1' characters; character j is x_j.
  static assignment from_string(std::string_view text);
  static assignment random(uint32_t n, rng64& rng);

  uint32_t size() const { return static_cast<uint32_t>(bits_.size()); }
  bool get(uint32_t var) const { return bits_[var] != 0; }
  void set(uint32_t var, bool value) { bits_[var] = value ? 1 : 0; }
  void flip(uint32_t var) { bits_[var] ^= 1; }
  std::string to_string() const;
  const std::vector<uint8_t>& bits() const { return bits_; }

  bool operator==(const assignment&) const = default;

private:
  std::vector<uint8_t> bits_;
};

/// Reference to a node at some global level, or to one of the two sinks.
struct node_ref {
  static constexpr int32_t sink_level = -1;

  int32_t level = 0; // global level index; sink_level for sinks
  int32_t index = 0; // node index within the level, or the sink label

  static constexpr node_ref sink(int label) { return {sink_level, label}; }
  static constexpr node_ref sink0() { return sink(0); }
  static constexpr node_ref sink1() { return sink(1); }
  constexpr bool is_sink() const { return level == sink_level; }
  constexpr int sink_label() const { return index; }
  bool operator==(const node_ref&) const = default;
};

/// var value marking a node that does not branch (lo == hi).
constexpr int32_t passthrough_var = -1;

struct node {
  int32_t var = passthrough_var;
  node_ref lo;
  node_ref hi;
  std::string role; // free-form annotation; the SAF builder stores state tags

  bool is_passthrough() const { return var == passthrough_var; }
  bool operator==(const node&) const = default;
};

/// One level: the nodes visited at a fixed depth, all branching nodes testing
/// the same variable.
struct level {
  int32_t var = 0;
  std::vector<node> nodes;

  bool operator==(const level&) const = default;
};

struct program_metrics {
  uint32_t width = 0;
  uint64_t size = 0;
  uint32_t layer_count = 0;
  /// size < width * n * layer_count. Degenerate width-1 programs can sit
  /// exactly at the bound, so this is reported rather than enforced.
  bool size_bound_ok = false;
};

struct validation_issue {
  std::string what;
  uint32_t layer = 0;
  uint32_t level = 0; // global level index

  static constexpr uint32_t no_position = UINT32_MAX;
};

struct diagnostics {
  std::vector<validation_issue> issues;
  bool pass() const { return issues.empty(); }
  std::string to_text() const;
};

/// Leveled oblivious branching program organized as layers of levels.
///
/// Immutable after construction. evaluate(), metrics and the exports are
/// const, pure, and safe to call concurrently.
class leveled_program {
public:
  /// layers[i] is the sequence of levels of layer i, in depth order.
  /// Throws std::invalid_argument on structurally broken input (empty program,
  /// references out of range, order length mismatch).
  leveled_program(uint32_t n, variable_order order,
                  std::vector<std::vector<level>> layers);

  uint32_t n() const { return n_; }
  const variable_order& order() const { return order_; }

  uint32_t layer_count() const {
    return static_cast<uint32_t>(layer_offsets_.size()) - 1;
  }
  uint32_t level_count() const {
    return static_cast<uint32_t>(levels_.size());
  }
  const level& level_at(uint32_t global_level) const {
    return levels_[global_level];
  }
  std::span<const level> layer(uint32_t i) const;
  uint32_t layer_begin(uint32_t i) const { return layer_offsets_[i]; }
  uint32_t layer_end(uint32_t i) const { return layer_offsets_[i + 1]; }

  /// Follows the computation path from the source (level 0, node 0) and
  /// returns the label of the sink reached. Throws std::invalid_argument on
  /// arity mismatch and std::runtime_error if an edge fails to advance.
  int evaluate(const assignment& input) const;

  bool operator==(const leveled_program&) const = default;

private:
  uint32_t n_ = 0;
  variable_order order_;
  std::vector<level> levels_;
  std::vector<uint32_t> layer_offsets_; // size layer_count + 1
};

program_metrics metrics(const leveled_program& program);

/// Structural check of the k-OBDD contract: oblivious levels, read-once
/// within each layer, one shared order across layers, edges into the next
/// level only. Violations are returned as data, never thrown.
diagnostics validate_kobdd(const leveled_program& program);

/// Full truth table; bit i is the program's value on the assignment whose
/// bit j (of i) gives x_j. Refuses n > max_n.
std::vector<uint8_t> truth_table(const leveled_program& program,
                                 uint32_t max_n = 24);

/// Seeded random k-OBDD over the identity order: k layers of n levels. The
/// source level holds one node, every other level exactly w; edges are drawn
/// uniformly into the next level (into the sinks at the last level).
leveled_program random_kobdd(uint32_t k, uint32_t w, uint32_t n,
                             uint64_t seed);

/// Flattened evaluator for hot loops (differential checks, truth tables).
/// Requires every edge to target the immediately following level; falls back
/// to leveled_program::evaluate otherwise.
class fast_evaluator {
public:
  explicit fast_evaluator(const leveled_program& program);
  int operator()(const assignment& input) const;

private:
  const leveled_program* program_;
  bool flat_ = false;
  std::vector<int32_t> vars_;
  std::vector<int32_t> lo_;
  std::vector<int32_t> hi_;
  std::vector<uint32_t> offsets_;
};

} // namespace kobdd
