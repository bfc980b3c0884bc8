#pragma once

#include <string>

#include "kobdd/program.hpp"

namespace kobdd {

/// Versioned JSON document: {version, n, order, layers, sinks}. Layers hold
/// level objects {var, nodes}; node references are [level, index] pairs with
/// global level numbering, or "sink0"/"sink1". Lossless, byte-stable.
std::string to_json(const leveled_program& program);

/// Inverse of to_json. Throws std::runtime_error on malformed documents or
/// unsupported versions.
leveled_program program_from_json(const std::string& text);

leveled_program load_program(const std::string& path);
void save_program(const leveled_program& program, const std::string& path);

/// Deterministic graphviz text: one cluster per layer, node ids
/// L<layer>_V<level>_N<index>, branch edges labeled 0/1, referenced sinks as
/// boxes. Re-export of the same program is byte-identical.
std::string to_dot(const leveled_program& program);

struct dot_stats {
  uint64_t nodes = 0;
  uint64_t edges = 0;
};
dot_stats count_dot_elements(const std::string& dot_text);

} // namespace kobdd
