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

#include "infodiv/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "infodiv/format.hpp"

namespace infodiv {

namespace {

std::string leaf_text(const Dendrogram& d, const DendrogramNode& node) {
  std::vector<std::string> names;
  for (auto i : node.members) names.push_back(d.labels[i]);
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k > 0) out.append(", ");
    out.append(names[k]);
  }
  return out;
}

// Nodes below a non-divisive split, including the split's own children.
std::vector<bool> dashed_nodes(const Dendrogram& d) {
  std::vector<bool> dashed(d.nodes.size(), false);
  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const auto& node = d.nodes[id];
    if (node.is_leaf()) continue;
    const bool below = dashed[id] || !node.split->divisive;
    for (auto c : *node.children) dashed[c] = below;
  }
  return dashed;
}

std::vector<double> axis_ticks(double total) {
  if (total <= 0.0) return {0.0};
  const double raw = total / 5.0;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  double step = magnitude;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * magnitude;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (int k = 0; k * step <= total * (1.0 + 1e-9); ++k) {
    ticks.push_back(k * step);
  }
  return ticks;
}

std::string tick_label(double t) {
  return format_number(std::round(t * 1e9) / 1e9);
}

class TextCanvas {
 public:
  TextCanvas(const Dendrogram& d, std::size_t width)
      : d_(d), width_(width), dashed_(dashed_nodes(d)) {
    total_ = d.total_height();
    start_.assign(d.nodes.size(), 0);
    split_col_.assign(d.nodes.size(), 0);
    end_ = width_;
    for (std::size_t id = 0; id < d.nodes.size(); ++id) {
      const auto& node = d.nodes[id];
      if (node.is_leaf()) {
        end_ = std::max(end_, start_[id] + 1);
        continue;
      }
      split_col_[id] = std::max(column(node.split_height()), start_[id] + 1);
      for (auto c : *node.children) start_[c] = split_col_[id];
    }
    rows_.assign(d.leaves().size(),
                 std::vector<std::string>(end_ + 1, " "));
    labels_.assign(rows_.size(), "");
  }

  std::string draw() {
    draw_node(0, 0);
    std::size_t cut = 0;
    for (auto id : cut_frontier(d_, CutRule::at_nondivisive())) {
      cut = std::max(cut, start_[id]);
    }
    for (auto& row : rows_) {
      if (row[cut] == " ") row[cut] = "┊";
    }

    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& cell : rows_[r]) out.append(cell);
      out.append(" ");
      out.append(labels_[r]);
      out.push_back('\n');
    }

    std::vector<std::string> axis(end_ + 1, "─");
    std::string tick_row(end_ + 16, ' ');
    std::size_t next_free = 0;
    for (double t : axis_ticks(total_)) {
      const std::size_t c = column(t);
      if (c > end_) continue;
      axis[c] = "┬";
      const std::string text = tick_label(t);
      if (c >= next_free && c + text.size() <= tick_row.size()) {
        tick_row.replace(c, text.size(), text);
        next_free = c + text.size() + 1;
      }
    }
    axis[cut] = "╂";
    for (const auto& cell : axis) out.append(cell);
    out.append(" bits\n");
    while (!tick_row.empty() && tick_row.back() == ' ') tick_row.pop_back();
    out.append(tick_row);
    out.push_back('\n');
    out.append("┊ divisive cut at " + format_number(divisive_cut_height(d_)) +
               " bits; ╌ lines lie below a non-divisive split\n");
    return out;
  }

 private:
  std::size_t column(double h) const {
    if (total_ <= 0.0) return 0;
    return static_cast<std::size_t>(
        std::lround(h / total_ * static_cast<double>(width_)));
  }

  // Returns the number of rows used by the subtree.
  std::size_t draw_node(std::size_t id, std::size_t top) {
    const auto& node = d_.nodes[id];
    const char* line = dashed_[id] ? "╌" : "─";
    const std::size_t first = id == 0 ? 0 : start_[id] + 1;
    if (node.is_leaf()) {
      for (std::size_t c = first; c <= end_; ++c) rows_[top][c] = line;
      labels_[top] = leaf_text(d_, node);
      return 1;
    }
    const std::size_t e = split_col_[id];
    for (std::size_t c = first; c < e; ++c) rows_[top][c] = line;
    rows_[top][e] = "┬";
    const auto [l, r] = *node.children;
    const std::size_t left_rows = draw_node(l, top);
    const std::size_t second = top + left_rows;
    const char* vertical = node.split->divisive && !dashed_[id] ? "│" : "┆";
    for (std::size_t row = top + 1; row < second; ++row) {
      rows_[row][e] = vertical;
    }
    rows_[second][e] = "└";
    return left_rows + draw_node(r, second);
  }

  const Dendrogram& d_;
  std::size_t width_;
  std::vector<bool> dashed_;
  double total_ = 0.0;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> split_col_;
  std::size_t end_ = 0;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> labels_;
};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out.append("&amp;"); break;
      case '<': out.append("&lt;"); break;
      case '>': out.append("&gt;"); break;
      case '"': out.append("&quot;"); break;
      case '\'': out.append("&apos;"); break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string render_svg(const Dendrogram& d) {
  constexpr double kLeft = 24.0;
  constexpr double kTop = 24.0;
  constexpr double kPlotWidth = 480.0;
  constexpr double kRowHeight = 20.0;
  constexpr double kLabelWidth = 220.0;
  constexpr double kAxisHeight = 56.0;

  const double total = d.total_height();
  const auto dashed = dashed_nodes(d);
  const auto leaves = d.leaves();
  const double plot_height = kRowHeight * static_cast<double>(leaves.size());
  const double width = kLeft + kPlotWidth + kLabelWidth;
  const double height = kTop + plot_height + kAxisHeight;
  auto x_of = [&](double h) {
    return kLeft + (total > 0.0 ? h / total * kPlotWidth : 0.0);
  };

  // Leaves take consecutive rows in preorder; internal nodes sit midway
  // between their children.
  std::vector<double> y(d.nodes.size(), 0.0);
  {
    std::size_t row = 0;
    for (std::size_t id = 0; id < d.nodes.size(); ++id) {
      if (d.nodes[id].is_leaf()) {
        y[id] = kTop + kRowHeight * (static_cast<double>(row++) + 0.5);
      }
    }
    for (std::size_t id = d.nodes.size(); id-- > 0;) {
      const auto& node = d.nodes[id];
      if (!node.is_leaf()) {
        y[id] = (y[(*node.children)[0]] + y[(*node.children)[1]]) / 2.0;
      }
    }
  }

  std::string out;
  out.append(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width) +
      "\" height=\"" + fixed(height) + "\" viewBox=\"0 0 " + fixed(width) +
      " " + fixed(height) + "\" font-family=\"Helvetica, Arial, sans-serif\" "
      "font-size=\"12\">\n");
  out.append("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  out.append("  <g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n");
  auto line = [&](double x1, double y1, double x2, double y2, bool dash) {
    out.append("    <line x1=\"" + fixed(x1) + "\" y1=\"" + fixed(y1) +
               "\" x2=\"" + fixed(x2) + "\" y2=\"" + fixed(y2) + "\"");
    if (dash) out.append(" stroke-dasharray=\"4 3\" stroke=\"#777777\"");
    out.append("/>\n");
  };
  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const auto& node = d.nodes[id];
    const double x_start = x_of(node.height);
    if (node.is_leaf()) {
      line(x_start, y[id], x_of(total), y[id], dashed[id]);
      continue;
    }
    const double x_split = x_of(node.split_height());
    line(x_start, y[id], x_split, y[id], dashed[id]);
    const auto [l, r] = *node.children;
    line(x_split, y[l], x_split, y[r], dashed[id] || !node.split->divisive);
  }
  out.append("  </g>\n");

  out.append("  <g fill=\"black\">\n");
  for (auto id : leaves) {
    out.append("    <text x=\"" + fixed(x_of(total) + 6.0) + "\" y=\"" +
               fixed(y[id] + 4.0) + "\">" +
               xml_escape(leaf_text(d, d.nodes[id])) + "</text>\n");
  }
  out.append("  </g>\n");

  const double cut_x = x_of(divisive_cut_height(d));
  out.append("  <g stroke=\"#c0392b\" stroke-width=\"1.5\">\n");
  out.append("    <line x1=\"" + fixed(cut_x) + "\" y1=\"" +
             fixed(kTop - 12.0) + "\" x2=\"" + fixed(cut_x) + "\" y2=\"" +
             fixed(kTop + plot_height) +
             "\" stroke-dasharray=\"6 4\"/>\n");
  out.append("    <text x=\"" + fixed(cut_x + 4.0) + "\" y=\"" +
             fixed(kTop - 14.0) +
             "\" stroke=\"none\" fill=\"#c0392b\">divisive cut</text>\n");
  out.append("  </g>\n");

  const double axis_y = kTop + plot_height + 10.0;
  out.append("  <g stroke=\"black\" fill=\"black\">\n");
  out.append("    <line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(axis_y) +
             "\" x2=\"" + fixed(kLeft + kPlotWidth) + "\" y2=\"" +
             fixed(axis_y) + "\"/>\n");
  for (double t : axis_ticks(total)) {
    const double x = x_of(t);
    out.append("    <line x1=\"" + fixed(x) + "\" y1=\"" + fixed(axis_y) +
               "\" x2=\"" + fixed(x) + "\" y2=\"" + fixed(axis_y + 5.0) +
               "\"/>\n");
    out.append("    <text x=\"" + fixed(x) + "\" y=\"" + fixed(axis_y + 18.0) +
               "\" stroke=\"none\" text-anchor=\"middle\">" + tick_label(t) +
               "</text>\n");
  }
  out.append("    <text x=\"" + fixed(kLeft + kPlotWidth / 2.0) + "\" y=\"" +
             fixed(axis_y + 38.0) +
             "\" stroke=\"none\" text-anchor=\"middle\">bits</text>\n");
  out.append("  </g>\n");
  out.append("</svg>\n");
  return out;
}

}  // namespace

double divisive_cut_height(const Dendrogram& dendrogram) {
  double h = 0.0;
  for (auto id : cut_frontier(dendrogram, CutRule::at_nondivisive())) {
    h = std::max(h, dendrogram.nodes[id].height);
  }
  return h;
}

std::string render_dendrogram(const Dendrogram& dendrogram,
                              RenderFormat format) {
  if (format == RenderFormat::kSvg) return render_svg(dendrogram);
  if (dendrogram.nodes.size() == 1) {
    return "── " + leaf_text(dendrogram, dendrogram.root()) + "\n";
  }
  return TextCanvas(dendrogram, 48).draw();
}

}  // namespace infodiv
