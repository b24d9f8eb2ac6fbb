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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "infodiv/clustering.hpp"
#include "infodiv/csv.hpp"
#include "infodiv/entropy.hpp"
#include "infodiv/error.hpp"
#include "infodiv/export.hpp"
#include "infodiv/oracle.hpp"
#include "infodiv/parallel.hpp"
#include "infodiv/render.hpp"
#include "infodiv/similarity.hpp"

namespace infodiv::cli {
namespace {

struct Common {
  std::string input;
  std::string out_path;
  bool drop_zero_rows = false;
};

struct ClusterArgs {
  std::string mode = "greedy";
  std::string stop = "divisive";
  std::string format = "json";
  double min_delta = 0.0;
};

struct SimilarityArgs {
  std::string measure;
  bool log = false;
  std::string diagonal = "include";
};

struct OracleArgs {
  std::size_t max_groups = 0;  // 0: root bisection only
  std::string stop = "divisive";
};

void add_common(CLI::App* cmd, Common& common, const char* what,
                bool matrix_input) {
  cmd->add_option("input", common.input, what)->required();
  cmd->add_option("--out", common.out_path,
                  "Write the result to PATH instead of standard output");
  if (matrix_input) {
    cmd->add_flag("--drop-zero-rows", common.drop_zero_rows,
                  "Drop all-zero rows (reported on stderr) instead of failing");
  }
}

LabeledMatrix load_matrix(const Common& common, std::ostream& err) {
  auto built = parse_csv(common.input, common.drop_zero_rows
                                           ? ZeroRowPolicy::kDrop
                                           : ZeroRowPolicy::kReject);
  for (const auto& row : built.dropped) {
    err << "note: dropped all-zero row '" << row.label << "' (data row "
        << row.index + 1 << ")\n";
  }
  return std::move(built.matrix);
}

void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  file << text;
  if (!file) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot write '" + common.out_path + "'");
  }
}

StopRule stop_rule(const std::string& text) {
  return text == "full" ? StopRule::kFullTree : StopRule::kDivisiveOnly;
}

std::string run_cluster(const Common& common, const ClusterArgs& args,
                        std::ostream& err) {
  const auto matrix = load_matrix(common, err);
  const ClusterOptions options{stop_rule(args.stop), args.min_delta};
  const Bisector bisector =
      args.mode == "exhaustive" ? Bisector(exhaustive_bisector)
                                : Bisector(greedy_bisect);
  const auto dendrogram = divisive_cluster(matrix, options, bisector);
  if (args.format == "newick") {
    return export_dendrogram(dendrogram, ExportFormat::kNewick);
  }
  if (args.format == "dot") {
    return export_dendrogram(dendrogram, ExportFormat::kDot);
  }
  if (args.format == "text") {
    return render_dendrogram(dendrogram, RenderFormat::kText);
  }
  if (args.format == "svg") {
    return render_dendrogram(dendrogram, RenderFormat::kSvg);
  }
  return export_dendrogram(dendrogram, ExportFormat::kJson);
}

std::string run_similarity(const Common& common, const SimilarityArgs& args,
                           std::ostream& err) {
  const auto matrix = load_matrix(common, err);
  const auto result = similarity_matrix(
      matrix,
      args.measure == "cosine" ? Measure::kCosine : Measure::kPearson,
      args.diagonal == "missing" ? DiagonalMode::kMissing
                                 : DiagonalMode::kInclude,
      args.log ? Transform::kLog : Transform::kNone);
  return write_csv(result);
}

std::string run_entropy(const Common& common, const std::string& groups_path,
                        std::ostream& err) {
  const auto matrix = load_matrix(common, err);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(groups_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, groups_path + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::kParse,
                groups_path + ": expected an object of label -> group");
  }

  std::map<std::string, std::string> group_of;
  for (const auto& [label, group] : doc.items()) {
    if (group.is_string()) {
      group_of[label] = group.get<std::string>();
    } else if (group.is_number_integer()) {
      group_of[label] = std::to_string(group.get<long long>());
    } else {
      throw Error(ErrorKind::kParse, groups_path + ": group of '" + label +
                                         "' must be a string or integer");
    }
  }

  std::set<std::string> names;
  for (const auto& label : matrix.row_labels()) {
    auto it = group_of.find(label);
    if (it == group_of.end()) {
      throw Error(ErrorKind::kInvalidGrouping,
                  "row '" + label + "' has no group in " + groups_path);
    }
    names.insert(it->second);
  }
  if (group_of.size() != matrix.rows()) {
    for (const auto& [label, group] : group_of) {
      const auto& rows = matrix.row_labels();
      if (std::find(rows.begin(), rows.end(), label) == rows.end()) {
        throw Error(ErrorKind::kInvalidGrouping,
                    "'" + label + "' in " + groups_path + " is not a row");
      }
    }
  }

  const std::vector<std::string> ordered(names.begin(), names.end());
  std::vector<std::size_t> assignment;
  std::vector<std::vector<std::string>> members(ordered.size());
  for (const auto& label : matrix.row_labels()) {
    const auto& name = group_of.at(label);
    const auto g = static_cast<std::size_t>(
        std::lower_bound(ordered.begin(), ordered.end(), name) -
        ordered.begin());
    assignment.push_back(g);
    members[g].push_back(label);
  }
  const auto report = decompose(probability_model(matrix),
                                Grouping::from_assignment(assignment));
  return entropy_report_json(report, ordered, members);
}

std::string run_oracle(const Common& common, const OracleArgs& args,
                       std::ostream& err) {
  const auto matrix = load_matrix(common, err);
  const ClusterOptions options{stop_rule(args.stop), 0.0};
  if (args.max_groups == 0) {
    const auto report = verify_greedy(matrix, options);
    return oracle_report_json(report, matrix.row_labels(), "bisection", 2);
  }
  const auto report =
      verify_greedy_partition(matrix, args.max_groups, options);
  return oracle_report_json(report, matrix.row_labels(), "partition",
                            args.max_groups);
}

std::string run_render(const Common& common, const std::string& format) {
  const auto dendrogram = parse_dendrogram_json(read_file(common.input));
  return render_dendrogram(
      dendrogram, format == "svg" ? RenderFormat::kSvg : RenderFormat::kText);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  if (const char* env = std::getenv(kThreadsEnvVar.data())) {
    const auto threads = parse_thread_count(env);
    if (!threads) {
      err << "error: " << kThreadsEnvVar << " must be a positive integer, got '"
          << env << "'\n";
      return kExitUsage;
    }
    set_thread_limit(*threads);
  }

  CLI::App app{"Information-theoretic divisive clustering of labeled matrices",
               "infodiv"};
  app.require_subcommand(1);

  Common common;
  ClusterArgs cluster_args;
  SimilarityArgs similarity_args;
  OracleArgs oracle_args;
  std::string groups_path;
  std::string render_format = "text";

  auto* cluster = app.add_subcommand("cluster", "Divisive clustering");
  add_common(cluster, common, "Matrix CSV", true);
  cluster->add_option("--mode", cluster_args.mode, "Bisection search")
      ->check(CLI::IsMember({"greedy", "exhaustive"}));
  cluster->add_option("--stop", cluster_args.stop, "Which splits to make")
      ->check(CLI::IsMember({"divisive", "full"}));
  cluster->add_option("--format", cluster_args.format, "Output format")
      ->check(CLI::IsMember({"json", "newick", "dot", "text", "svg"}));
  cluster->add_option("--min-delta", cluster_args.min_delta,
                      "Minimum gain in bits for a growth move")
      ->check(CLI::NonNegativeNumber);

  auto* similarity = app.add_subcommand("similarity", "Similarity matrix");
  add_common(similarity, common, "Square matrix CSV", true);
  similarity->add_option("--measure", similarity_args.measure, "Measure")
      ->required()
      ->check(CLI::IsMember({"pearson", "cosine"}));
  similarity->add_flag("--log", similarity_args.log,
                       "Transform cells to log2(1 + x) first");
  similarity->add_option("--diagonal", similarity_args.diagonal,
                         "Diagonal cells as data or as missing")
      ->check(CLI::IsMember({"include", "missing"}));

  auto* entropy = app.add_subcommand("entropy", "Entropy decomposition");
  add_common(entropy, common, "Matrix CSV", true);
  entropy->add_option("--groups", groups_path,
                      "JSON object mapping row label to group name")
      ->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search vs greedy");
  add_common(oracle, common, "Matrix CSV", true);
  oracle->add_option("--max-groups", oracle_args.max_groups,
                     "Search all partitions into at most K groups")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--stop", oracle_args.stop, "Stop rule for greedy")
      ->check(CLI::IsMember({"divisive", "full"}));

  auto* render = app.add_subcommand("render", "Draw a dendrogram JSON file");
  add_common(render, common, "Dendrogram JSON", false);
  render->add_option("--format", render_format, "Output format")
      ->check(CLI::IsMember({"text", "svg"}));

  std::vector<std::string> argv_storage{"infodiv"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    std::string result;
    if (cluster->parsed()) {
      result = run_cluster(common, cluster_args, err);
    } else if (similarity->parsed()) {
      result = run_similarity(common, similarity_args, err);
    } else if (entropy->parsed()) {
      result = run_entropy(common, groups_path, err);
    } else if (oracle->parsed()) {
      result = run_oracle(common, oracle_args, err);
    } else {
      result = run_render(common, render_format);
    }
    emit(common, result, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace infodiv::cli
