// Copyright 2026 The infodiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infodiv/export.hpp"

#include <algorithm>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "canonical_json.hpp"
#include "infodiv/error.hpp"
#include "infodiv/format.hpp"

namespace infodiv {

namespace {

constexpr std::string_view kFormatTag = "infodiv-dendrogram";
constexpr std::uint64_t kFormatVersion = 1;

std::vector<std::string> sorted_labels(const Dendrogram& d,
                                       const RowSubset& members) {
  std::vector<std::string> out;
  for (auto i : members) out.push_back(d.labels[i]);
  std::sort(out.begin(), out.end());
  return out;
}

json::Array label_array(const std::vector<std::string>& labels) {
  return json::Array(labels.begin(), labels.end());
}

std::string to_json(const Dendrogram& d) {
  json::Array nodes;
  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const auto& node = d.nodes[id];
    json::Object record{
        {"id", json::count(id)},
        {"members", label_array(sorted_labels(d, node.members))},
        {"height", node.height},
        {"parent", node.parent ? json::count(*node.parent) : json::Value()},
    };
    json::Array children;
    if (node.children) {
      children.push_back(json::count((*node.children)[0]));
      children.push_back(json::count((*node.children)[1]));
    }
    record["children"] = std::move(children);
    if (node.split) {
      const auto& s = *node.split;
      record["divisive"] = s.divisive;
      record["global_delta"] = s.global_delta;
      record["h_aggregate"] = s.h_aggregate;
      record["h_left"] = s.h_left;
      record["h_right"] = s.h_right;
      record["local_h0"] = s.local_h0;
    } else if (node.leaf_reason) {
      record["leaf_reason"] = std::string(to_string(*node.leaf_reason));
    }
    nodes.emplace_back(std::move(record));
  }
  return json::dump(json::Object{
      {"format", std::string(kFormatTag)},
      {"version", kFormatVersion},
      {"labels", label_array(d.labels)},
      {"nodes", std::move(nodes)},
      {"total_height", d.total_height()},
  });
}

std::string newick_label(const std::string& label) {
  if (!label.empty() &&
      label.find_first_of(" \t\r\n()[]':;,") == std::string::npos) {
    return label;
  }
  std::string out = "'";
  for (char c : label) {
    if (c == '\'') out.push_back('\'');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

void newick_node(const Dendrogram& d, std::size_t id, std::string& out) {
  const auto& node = d.nodes[id];
  if (node.is_leaf()) {
    if (node.members.size() == 1) {
      out.append(newick_label(d.labels[node.members.front()]));
      return;
    }
    out.push_back('(');
    bool first = true;
    for (const auto& label : sorted_labels(d, node.members)) {
      if (!first) out.push_back(',');
      first = false;
      out.append(newick_label(label));
      out.append(":0");
    }
    out.push_back(')');
    return;
  }
  const std::string length = format_number(node.split->global_delta);
  out.push_back('(');
  newick_node(d, (*node.children)[0], out);
  out.append(":" + length + ",");
  newick_node(d, (*node.children)[1], out);
  out.append(":" + length + ")");
}

std::string to_newick(const Dendrogram& d) {
  std::string out;
  const auto& root = d.root();
  if (root.is_leaf() && root.members.size() == 1) {
    out = "(" + newick_label(d.labels[root.members.front()]) + ":0)";
  } else {
    newick_node(d, 0, out);
  }
  out.append(";\n");
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string to_dot(const Dendrogram& d) {
  std::string out =
      "digraph dendrogram {\n"
      "  rankdir=LR;\n"
      "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const auto& node = d.nodes[id];
    std::string label;
    if (node.is_leaf()) {
      const auto names = sorted_labels(d, node.members);
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (k > 0) label.append(", ");
        label.append(dot_escape(names[k]));
      }
    } else {
      label = "height " + format_number(node.height) + " bits\\nlocal h0 " +
              format_number(node.split->local_h0) + " bits";
      if (!node.split->divisive) label.append("\\nnon-divisive");
    }
    out.append("  n" + std::to_string(id) + " [label=\"" + label + "\"");
    if (!node.is_leaf() && !node.split->divisive) out.append(", style=dashed");
    out.append("];\n");
  }
  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const auto& node = d.nodes[id];
    if (node.is_leaf()) continue;
    const std::string length = format_number(node.split->global_delta);
    for (auto child : *node.children) {
      out.append("  n" + std::to_string(id) + " -> n" + std::to_string(child) +
                 " [label=\"" + length + "\"");
      if (!node.split->divisive) out.append(", style=dashed");
      out.append("];\n");
    }
  }
  out.append("}\n");
  return out;
}

[[noreturn]] void bad_document(const std::string& what) {
  throw Error(ErrorKind::kParse, "dendrogram json: " + what);
}

const nlohmann::json& field(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad_document(std::string("missing key '") + key + "'");
  return *it;
}

double number_field(const nlohmann::json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number()) bad_document(std::string("'") + key + "' not a number");
  return v.get<double>();
}

std::size_t index_field(const nlohmann::json& v, const char* what) {
  if (!v.is_number_unsigned()) {
    bad_document(std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

LeafReason parse_leaf_reason(const std::string& text) {
  for (auto reason : {LeafReason::kSingleton, LeafReason::kIdenticalProfiles,
                      LeafReason::kNoSplit, LeafReason::kZeroDelta}) {
    if (text == to_string(reason)) return reason;
  }
  bad_document("unknown leaf_reason '" + text + "'");
}

}  // namespace

std::string_view to_string(LeafReason reason) {
  switch (reason) {
    case LeafReason::kSingleton: return "singleton";
    case LeafReason::kIdenticalProfiles: return "identical_profiles";
    case LeafReason::kNoSplit: return "no_split";
    case LeafReason::kZeroDelta: return "zero_delta";
  }
  return "unknown";
}

std::string export_dendrogram(const Dendrogram& dendrogram,
                              ExportFormat format) {
  switch (format) {
    case ExportFormat::kJson: return to_json(dendrogram);
    case ExportFormat::kNewick: return to_newick(dendrogram);
    case ExportFormat::kDot: return to_dot(dendrogram);
  }
  return {};
}

Dendrogram parse_dendrogram_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_document(e.what());
  }
  if (!doc.is_object()) bad_document("top level is not an object");
  const auto& tag = field(doc, "format");
  if (!tag.is_string() || tag.get<std::string>() != kFormatTag) {
    bad_document("not an infodiv dendrogram");
  }
  if (field(doc, "version") != kFormatVersion) {
    bad_document("unsupported version");
  }

  Dendrogram d;
  const auto& labels = field(doc, "labels");
  if (!labels.is_array()) bad_document("'labels' is not an array");
  std::unordered_map<std::string, std::size_t> index_of;
  for (const auto& label : labels) {
    if (!label.is_string()) bad_document("label is not a string");
    if (!index_of.emplace(label.get<std::string>(), d.labels.size()).second) {
      bad_document("duplicate label");
    }
    d.labels.push_back(label.get<std::string>());
  }

  const auto& nodes = field(doc, "nodes");
  if (!nodes.is_array() || nodes.empty()) bad_document("'nodes' is empty");
  try {
    for (std::size_t id = 0; id < nodes.size(); ++id) {
      const auto& rec = nodes[id];
      if (!rec.is_object()) bad_document("node is not an object");
      if (index_field(field(rec, "id"), "id") != id) {
        bad_document("node ids are not sequential");
      }
      std::vector<std::size_t> members;
      for (const auto& label : field(rec, "members")) {
        auto it = index_of.find(label.get<std::string>());
        if (it == index_of.end()) bad_document("member is not a known label");
        members.push_back(it->second);
      }
      DendrogramNode node{RowSubset(std::move(members))};
      node.height = number_field(rec, "height");
      if (const auto& parent = field(rec, "parent"); !parent.is_null()) {
        node.parent = index_field(parent, "parent");
      }
      const auto& children = field(rec, "children");
      if (!children.is_array()) bad_document("'children' is not an array");
      if (children.size() == 2) {
        node.children = std::array{index_field(children[0], "child"),
                                   index_field(children[1], "child")};
      } else if (!children.empty()) {
        bad_document("a node has exactly zero or two children");
      }
      if (node.children) {
        // Sides are filled in below once every node's members are known.
        node.split = SplitEvaluation{
            .left = node.members,
            .right = node.members,
            .h_aggregate = number_field(rec, "h_aggregate"),
            .h_left = number_field(rec, "h_left"),
            .h_right = number_field(rec, "h_right"),
            .local_h0 = number_field(rec, "local_h0"),
            .global_delta = number_field(rec, "global_delta"),
            .divisive = field(rec, "divisive").get<bool>(),
        };
      } else if (rec.contains("leaf_reason")) {
        node.leaf_reason =
            parse_leaf_reason(field(rec, "leaf_reason").get<std::string>());
      }
      d.nodes.push_back(std::move(node));
    }
  } catch (const nlohmann::json::exception& e) {
    bad_document(e.what());
  }

  for (auto& node : d.nodes) {
    if (!node.children) continue;
    const auto [l, r] = *node.children;
    if (l >= d.nodes.size() || r >= d.nodes.size()) {
      bad_document("child id out of range");
    }
    node.split->left = d.nodes[l].members;
    node.split->right = d.nodes[r].members;
  }
  validate_dendrogram(d);
  return d;
}

std::string entropy_report_json(
    const EntropyReport& report, const std::vector<std::string>& group_names,
    const std::vector<std::vector<std::string>>& group_members) {
  json::Array groups;
  for (std::size_t g = 0; g < report.groups.size(); ++g) {
    groups.emplace_back(json::Object{
        {"name", group_names.at(g)},
        {"members", label_array(group_members.at(g))},
        {"p_g", report.groups[g].p_g},
        {"h_g", report.groups[g].h_g},
    });
  }
  return json::dump(json::Object{
      {"groups", std::move(groups)},
      {"h0", report.h0},
      {"h0_ratio", report.h0_ratio},
      {"h_cond", report.h_cond},
      {"h_joint", report.h_joint},
      {"h_m", report.h_m},
      {"h_n", report.h_n},
  });
}

std::string oracle_report_json(const OracleReport& report,
                               const std::vector<std::string>& labels,
                               std::string_view search,
                               std::size_t max_groups) {
  auto groups_of = [&](const Grouping& grouping) {
    json::Array out;
    for (const auto& subset : grouping.subsets()) {
      std::vector<std::string> names;
      for (auto i : subset) names.push_back(labels.at(i));
      std::sort(names.begin(), names.end());
      out.emplace_back(label_array(names));
    }
    return out;
  };
  json::Object doc{
      {"search", std::string(search)},
      {"max_groups", json::count(max_groups)},
      {"best_groups", groups_of(report.best_grouping)},
      {"best_h0", report.best_h0},
      {"candidates_examined", report.candidates_examined},
  };
  if (report.greedy_grouping) {
    doc["greedy_groups"] = groups_of(*report.greedy_grouping);
  }
  if (report.greedy_h0) doc["greedy_h0"] = *report.greedy_h0;
  if (report.gap) doc["gap"] = *report.gap;
  return json::dump(doc);
}

}  // namespace infodiv
