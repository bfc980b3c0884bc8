#include "kobdd/program_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kobdd {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int format_version = 1;

ordered_json ref_to_json(const node_ref& ref) {
  if (ref.is_sink()) return ref.sink_label() == 0 ? "sink0" : "sink1";
  return ordered_json::array({ref.level, ref.index});
}

node_ref ref_from_json(const ordered_json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "sink0") return node_ref::sink0();
    if (s == "sink1") return node_ref::sink1();
    throw std::runtime_error("unknown sink reference: " + s);
  }
  if (!j.is_array() || j.size() != 2)
    throw std::runtime_error("node reference must be [level, index]");
  return node_ref{j[0].get<int32_t>(), j[1].get<int32_t>()};
}

} // namespace

std::string to_json(const leveled_program& program) {
  ordered_json doc;
  doc["version"] = format_version;
  doc["n"] = program.n();
  doc["order"] = program.order().perm;
  ordered_json layers = ordered_json::array();
  for (uint32_t la = 0; la < program.layer_count(); ++la) {
    ordered_json levels = ordered_json::array();
    for (const level& lvl : program.layer(la)) {
      ordered_json nodes = ordered_json::array();
      for (const node& nd : lvl.nodes) {
        ordered_json jn;
        if (nd.is_passthrough())
          jn["pass"] = true;
        else
          jn["var"] = nd.var;
        jn["lo"] = ref_to_json(nd.lo);
        jn["hi"] = ref_to_json(nd.hi);
        if (!nd.role.empty()) jn["role"] = nd.role;
        nodes.push_back(std::move(jn));
      }
      levels.push_back(ordered_json{{"var", lvl.var}, {"nodes", std::move(nodes)}});
    }
    layers.push_back(std::move(levels));
  }
  doc["layers"] = std::move(layers);
  doc["sinks"] = ordered_json::array({0, 1});
  return doc.dump();
}

leveled_program program_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("program document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version"))
    throw std::runtime_error("program document lacks a version field");
  if (doc["version"].get<int>() != format_version)
    throw std::runtime_error("unsupported program format version " +
                             doc["version"].dump());
  const auto n = doc.at("n").get<uint32_t>();
  variable_order order;
  order.perm = doc.at("order").get<std::vector<uint32_t>>();
  std::vector<std::vector<level>> layers;
  for (const auto& jlayer : doc.at("layers")) {
    std::vector<level> lvls;
    for (const auto& jlevel : jlayer) {
      level lvl;
      lvl.var = jlevel.at("var").get<int32_t>();
      for (const auto& jn : jlevel.at("nodes")) {
        node nd;
        if (jn.contains("pass") && jn["pass"].get<bool>()) {
          nd.var = passthrough_var;
        } else {
          nd.var = jn.at("var").get<int32_t>();
          if (nd.var != lvl.var)
            throw std::runtime_error("node variable disagrees with its level");
        }
        nd.lo = ref_from_json(jn.at("lo"));
        nd.hi = ref_from_json(jn.at("hi"));
        if (nd.is_passthrough() && !(nd.lo == nd.hi))
          throw std::runtime_error("passthrough node with diverging edges");
        if (jn.contains("role")) nd.role = jn["role"].get<std::string>();
        lvl.nodes.push_back(std::move(nd));
      }
      lvls.push_back(std::move(lvl));
    }
    layers.push_back(std::move(lvls));
  }
  return leveled_program(n, std::move(order), std::move(layers));
}

leveled_program load_program(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open program file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return program_from_json(buf.str());
}

void save_program(const leveled_program& program, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write program file: " + path);
  out << to_json(program) << '\n';
}

std::string to_dot(const leveled_program& program) {
  std::ostringstream out;
  const auto name = [&](uint32_t layer, uint32_t local_level, int32_t index) {
    std::ostringstream s;
    s << 'L' << layer << "_V" << local_level << "_N" << index;
    return s.str();
  };
  bool sink_used[2] = {false, false};
  out << "digraph program {\n  rankdir=LR;\n";
  for (uint32_t la = 0; la < program.layer_count(); ++la) {
    out << "  subgraph cluster_layer" << la << " {\n"
        << "    label=\"layer " << la << "\";\n";
    const auto span = program.layer(la);
    for (uint32_t lv = 0; lv < span.size(); ++lv) {
      for (size_t i = 0; i < span[lv].nodes.size(); ++i) {
        const node& nd = span[lv].nodes[i];
        out << "    " << name(la, lv, static_cast<int32_t>(i));
        if (nd.is_passthrough())
          out << " [shape=point];\n";
        else
          out << " [label=\"x" << nd.var << "\"];\n";
        for (const node_ref& ref : {nd.lo, nd.hi})
          if (ref.is_sink()) sink_used[ref.sink_label()] = true;
      }
    }
    out << "  }\n";
  }
  for (int s = 0; s < 2; ++s)
    if (sink_used[s])
      out << "  sink" << s << " [shape=box,label=\"" << s << "\"];\n";
  const auto target = [&](const node_ref& ref) {
    if (ref.is_sink()) return std::string(ref.sink_label() == 0 ? "sink0" : "sink1");
    const uint32_t gl = static_cast<uint32_t>(ref.level);
    // locate the layer owning the referenced global level
    uint32_t la = 0;
    while (program.layer_end(la) <= gl) ++la;
    return name(la, gl - program.layer_begin(la), ref.index);
  };
  for (uint32_t la = 0; la < program.layer_count(); ++la) {
    const auto span = program.layer(la);
    for (uint32_t lv = 0; lv < span.size(); ++lv) {
      for (size_t i = 0; i < span[lv].nodes.size(); ++i) {
        const node& nd = span[lv].nodes[i];
        const std::string from = name(la, lv, static_cast<int32_t>(i));
        if (nd.is_passthrough()) {
          out << "  " << from << " -> " << target(nd.lo) << ";\n";
        } else {
          out << "  " << from << " -> " << target(nd.lo) << " [label=\"0\"];\n";
          out << "  " << from << " -> " << target(nd.hi) << " [label=\"1\"];\n";
        }
      }
    }
  }
  out << "}\n";
  return out.str();
}

dot_stats count_dot_elements(const std::string& dot_text) {
  dot_stats stats;
  std::istringstream in(dot_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find(" -> ") != std::string::npos)
      ++stats.edges;
    else if (line.find("_N") != std::string::npos &&
             line.find('[') != std::string::npos)
      ++stats.nodes;
  }
  return stats;
}

} // namespace kobdd
