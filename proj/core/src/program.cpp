#include "kobdd/program.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kobdd {

variable_order variable_order::identity(uint32_t n) {
  variable_order order;
  order.perm.resize(n);
  for (uint32_t i = 0; i < n; ++i) order.perm[i] = i;
  return order;
}

bool variable_order::is_permutation() const {
  std::vector<uint8_t> seen(perm.size(), 0);
  for (uint32_t v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

assignment::assignment(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
  for (uint8_t& b : bits_) b = b ? 1 : 0;
}

assignment assignment::zeros(uint32_t n) {
  return assignment(std::vector<uint8_t>(n, 0));
}

assignment assignment::ones(uint32_t n) {
  return assignment(std::vector<uint8_t>(n, 1));
}

assignment assignment::from_string(std::string_view text) {
  std::vector<uint8_t> bits(text.size());
  for (size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '0')
      bits[j] = 0;
    else if (text[j] == '1')
      bits[j] = 1;
    else
      throw std::invalid_argument("assignment string may contain only '0' and '1'");
  }
  return assignment(std::move(bits));
}

assignment assignment::random(uint32_t n, rng64& rng) {
  std::vector<uint8_t> bits(n);
  uint64_t word = 0;
  for (uint32_t j = 0; j < n; ++j) {
    if (j % 64 == 0) word = rng.next();
    bits[j] = static_cast<uint8_t>((word >> (j % 64)) & 1u);
  }
  return assignment(std::move(bits));
}

std::string assignment::to_string() const {
  std::string out(bits_.size(), '0');
  for (size_t j = 0; j < bits_.size(); ++j)
    if (bits_[j]) out[j] = '1';
  return out;
}

leveled_program::leveled_program(uint32_t n, variable_order order,
                                 std::vector<std::vector<level>> layers)
    : n_(n), order_(std::move(order)) {
  if (layers.empty()) throw std::invalid_argument("program needs at least one layer");
  if (order_.size() != n) throw std::invalid_argument("order length must equal n");
  layer_offsets_.push_back(0);
  for (auto& layer : layers) {
    if (layer.empty()) throw std::invalid_argument("layer without levels");
    for (auto& lvl : layer) levels_.push_back(std::move(lvl));
    layer_offsets_.push_back(static_cast<uint32_t>(levels_.size()));
  }
  if (levels_.front().nodes.empty())
    throw std::invalid_argument("first level has no source node");
  const int32_t total = static_cast<int32_t>(levels_.size());
  for (int32_t li = 0; li < total; ++li) {
    for (const node& nd : levels_[li].nodes) {
      for (const node_ref& ref : {nd.lo, nd.hi}) {
        if (ref.is_sink()) {
          if (ref.index != 0 && ref.index != 1)
            throw std::invalid_argument("sink label must be 0 or 1");
          continue;
        }
        if (ref.level < 0 || ref.level >= total ||
            ref.index < 0 ||
            static_cast<size_t>(ref.index) >= levels_[ref.level].nodes.size())
          throw std::invalid_argument("node reference out of range");
      }
      if (nd.var >= 0 && static_cast<uint32_t>(nd.var) >= n)
        throw std::invalid_argument("node variable out of range");
    }
    if (levels_[li].var < 0 || static_cast<uint32_t>(levels_[li].var) >= n)
      throw std::invalid_argument("level variable out of range");
  }
}

std::span<const level> leveled_program::layer(uint32_t i) const {
  return {levels_.data() + layer_offsets_[i],
          levels_.data() + layer_offsets_[i + 1]};
}

int leveled_program::evaluate(const assignment& input) const {
  if (input.size() != n_)
    throw std::invalid_argument("input has arity " + std::to_string(input.size()) +
                                ", program expects " + std::to_string(n_));
  node_ref cur{0, 0};
  while (!cur.is_sink()) {
    const node& nd = levels_[cur.level].nodes[cur.index];
    const node_ref next =
        nd.is_passthrough() ? nd.lo : (input.get(nd.var) ? nd.hi : nd.lo);
    if (!next.is_sink() && next.level <= cur.level)
      throw std::runtime_error("edge does not advance to a later level");
    cur = next;
  }
  return cur.sink_label();
}

program_metrics metrics(const leveled_program& program) {
  program_metrics m;
  m.layer_count = program.layer_count();
  for (uint32_t li = 0; li < program.level_count(); ++li) {
    const auto count = program.level_at(li).nodes.size();
    m.width = std::max<uint32_t>(m.width, static_cast<uint32_t>(count));
    m.size += count;
  }
  m.size_bound_ok =
      m.size < static_cast<uint64_t>(m.width) * program.n() * m.layer_count;
  return m;
}

std::string diagnostics::to_text() const {
  if (issues.empty()) return "pass";
  std::ostringstream out;
  for (const auto& issue : issues) {
    out << issue.what;
    if (issue.layer != validation_issue::no_position)
      out << " (layer " << issue.layer << ", level " << issue.level << ")";
    out << '\n';
  }
  return out.str();
}

namespace {

bool is_subsequence(const std::vector<int32_t>& seq,
                    const std::vector<uint32_t>& perm) {
  size_t pos = 0;
  for (int32_t v : seq) {
    while (pos < perm.size() && perm[pos] != static_cast<uint32_t>(v)) ++pos;
    if (pos == perm.size()) return false;
    ++pos;
  }
  return true;
}

} // namespace

diagnostics validate_kobdd(const leveled_program& program) {
  diagnostics diag;
  const auto issue = [&](std::string what, uint32_t layer, uint32_t lvl) {
    diag.issues.push_back({std::move(what), layer, lvl});
  };

  if (!program.order().is_permutation())
    issue("order is not a permutation of the variables",
          validation_issue::no_position, validation_issue::no_position);

  std::vector<int32_t> shared_labels;
  for (uint32_t la = 0; la < program.layer_count(); ++la) {
    std::vector<int32_t> labels;
    std::vector<uint8_t> seen(program.n(), 0);
    for (uint32_t gl = program.layer_begin(la); gl < program.layer_end(la); ++gl) {
      const level& lvl = program.level_at(gl);
      labels.push_back(lvl.var);
      if (seen[lvl.var]) issue("variable repeated within layer", la, gl);
      seen[lvl.var] = 1;
      for (const node& nd : lvl.nodes) {
        if (nd.is_passthrough()) {
          if (!(nd.lo == nd.hi))
            issue("passthrough node with diverging edges", la, gl);
        } else if (nd.var != lvl.var) {
          issue("non-oblivious level: node tests a different variable", la, gl);
        }
        for (const node_ref& ref : {nd.lo, nd.hi}) {
          if (!ref.is_sink() && ref.level != static_cast<int32_t>(gl) + 1)
            issue("edge crossing more than one level", la, gl);
        }
      }
    }
    if (!is_subsequence(labels, program.order().perm))
      issue("layer tests variables out of the shared order", la,
            validation_issue::no_position);
    if (la == 0)
      shared_labels = labels;
    else if (labels != shared_labels)
      issue("layers disagree on the tested variable sequence", la,
            validation_issue::no_position);
  }
  return diag;
}

std::vector<uint8_t> truth_table(const leveled_program& program, uint32_t max_n) {
  const uint32_t n = program.n();
  if (n > max_n)
    throw std::invalid_argument("truth table refused: arity " + std::to_string(n) +
                                " exceeds the limit of " + std::to_string(max_n));
  const fast_evaluator eval(program);
  std::vector<uint8_t> table(uint64_t{1} << n);
  assignment input = assignment::zeros(n);
  for (uint64_t i = 0; i < table.size(); ++i) {
    for (uint32_t j = 0; j < n; ++j) input.set(j, (i >> j) & 1u);
    table[i] = static_cast<uint8_t>(eval(input));
  }
  return table;
}

leveled_program random_kobdd(uint32_t k, uint32_t w, uint32_t n, uint64_t seed) {
  if (k < 1 || w < 1 || n < 1)
    throw std::invalid_argument("random_kobdd requires k, w, n >= 1");
  rng64 rng(seed);
  std::vector<std::vector<level>> layers(k);
  for (uint32_t la = 0; la < k; ++la) {
    layers[la].resize(n);
    for (uint32_t lv = 0; lv < n; ++lv) {
      level& cur = layers[la][lv];
      cur.var = static_cast<int32_t>(lv);
      // one source node, then w nodes everywhere else; this keeps the strict
      // size bound s < w*n*k intact for w >= 2
      const uint32_t count = (la == 0 && lv == 0) ? 1 : w;
      const bool last = (la == k - 1 && lv == n - 1);
      const int32_t next_level = static_cast<int32_t>(la * n + lv + 1);
      const uint32_t fanout = last ? 2 : w;
      cur.nodes.resize(count);
      for (uint32_t i = 0; i < count; ++i) {
        node& nd = cur.nodes[i];
        nd.var = static_cast<int32_t>(lv);
        const auto draw = [&]() -> node_ref {
          const auto target = static_cast<int32_t>(rng.next_below(fanout));
          return last ? node_ref::sink(target) : node_ref{next_level, target};
        };
        nd.lo = draw();
        nd.hi = draw();
      }
    }
  }
  return leveled_program(n, variable_order::identity(n), std::move(layers));
}

fast_evaluator::fast_evaluator(const leveled_program& program)
    : program_(&program) {
  flat_ = true;
  offsets_.reserve(program.level_count() + 1);
  offsets_.push_back(0);
  for (uint32_t li = 0; li < program.level_count() && flat_; ++li) {
    const level& lvl = program.level_at(li);
    for (const node& nd : lvl.nodes) {
      for (const node_ref& ref : {nd.lo, nd.hi}) {
        if (!ref.is_sink() && ref.level != static_cast<int32_t>(li) + 1) {
          flat_ = false;
          break;
        }
      }
      if (!flat_) break;
    }
    offsets_.push_back(offsets_.back() + static_cast<uint32_t>(lvl.nodes.size()));
  }
  if (!flat_) return;
  const uint32_t total = offsets_.back();
  vars_.resize(total);
  lo_.resize(total);
  hi_.resize(total);
  const auto encode = [](const node_ref& ref) -> int32_t {
    return ref.is_sink() ? -1 - ref.sink_label() : ref.index;
  };
  for (uint32_t li = 0; li < program.level_count(); ++li) {
    const level& lvl = program.level_at(li);
    for (size_t i = 0; i < lvl.nodes.size(); ++i) {
      const uint32_t at = offsets_[li] + static_cast<uint32_t>(i);
      vars_[at] = lvl.nodes[i].var;
      lo_[at] = encode(lvl.nodes[i].lo);
      hi_[at] = encode(lvl.nodes[i].hi);
    }
  }
}

int fast_evaluator::operator()(const assignment& input) const {
  if (!flat_) return program_->evaluate(input);
  if (input.size() != program_->n())
    throw std::invalid_argument("input arity mismatch");
  const uint8_t* bits = input.bits().data();
  int32_t idx = 0;
  const uint32_t levels = program_->level_count();
  for (uint32_t li = 0; li < levels; ++li) {
    const uint32_t at = offsets_[li] + static_cast<uint32_t>(idx);
    const int32_t var = vars_[at];
    idx = (var < 0 || !bits[var]) ? lo_[at] : hi_[at];
    if (idx < 0) return -1 - idx;
  }
  throw std::runtime_error("path ran past the last level without a sink");
}

} // namespace kobdd
