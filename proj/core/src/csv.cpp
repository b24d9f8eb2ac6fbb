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

#include "infodiv/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "infodiv/error.hpp"
#include "infodiv/format.hpp"

namespace infodiv {
namespace {

struct Field {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

using Record = std::vector<Field>;

std::string at(const Field& f) {
  return "line " + std::to_string(f.line) + ", column " +
         std::to_string(f.column);
}

std::vector<Record> tokenize(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Record> records;
  Record record;
  Field field;
  std::size_t line = 1;
  std::size_t column = 1;
  bool in_quotes = false;
  bool record_started = false;
  std::size_t quote_line = 0;

  auto start_field = [&] {
    field = Field{{}, line, column};
    record_started = true;
  };
  auto end_field = [&] {
    record.push_back(std::move(field));
    field = Field{};
    ++column;
  };
  auto end_record = [&] {
    if (record_started) {
      end_field();
      // A line holding a single empty field is a blank line.
      if (!(record.size() == 1 && record.front().text.empty())) {
        records.push_back(std::move(record));
      }
    }
    record.clear();
    record_started = false;
    column = 1;
  };

  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (!record_started) start_field();
    if (in_quotes) {
      if (c == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          field.text.push_back('"');
          ++k;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.text.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        quote_line = line;
        break;
      case ',':
        end_field();
        start_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field.text.push_back(c);
    }
  }
  if (in_quotes) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(quote_line) +
                                       ": unterminated quoted field");
  }
  end_record();
  return records;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(const Field& f, const std::string& row_label,
                    const std::string& col_label) {
  std::string_view s = trim(f.text);
  const std::string where =
      at(f) + " (row '" + row_label + "', column '" + col_label + "')";
  if (s.starts_with('+')) s.remove_prefix(1);
  double value = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw Error(ErrorKind::kParse,
                where + ": malformed number '" + f.text + "'");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kNonFiniteValue,
                where + ": non-finite value '" + f.text + "'");
  }
  if (value < 0.0) {
    throw Error(ErrorKind::kNegativeValue,
                where + ": negative value " + std::string(s));
  }
  return value;
}

std::string quote(const std::string& field) {
  const bool needs = field.find_first_of(",\"\r\n") != std::string::npos ||
                     (!field.empty() && (field.front() == ' ' ||
                                         field.back() == ' ' ||
                                         field.front() == '\t' ||
                                         field.back() == '\t'));
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string write_table(const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels,
                        auto&& value_at) {
  std::string out;
  for (const auto& label : col_labels) {
    out.push_back(',');
    out.append(quote(label));
  }
  out.push_back('\n');
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    out.append(quote(row_labels[i]));
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
      out.push_back(',');
      out.append(format_number(value_at(i, j)));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace

MatrixBuild parse_csv_text(std::string_view text, ZeroRowPolicy policy) {
  const auto records = tokenize(text);
  if (records.empty()) throw Error(ErrorKind::kParse, "empty file");

  const Record& header = records.front();
  if (header.size() < 2) {
    throw Error(ErrorKind::kParse,
                "line 1: header needs a corner cell and at least one column");
  }
  std::vector<std::string> col_labels;
  std::unordered_map<std::string, std::size_t> seen_cols;
  for (std::size_t j = 1; j < header.size(); ++j) {
    const std::string label(trim(header[j].text));
    if (!seen_cols.emplace(label, j).second) {
      throw Error(ErrorKind::kDuplicateLabel,
                  at(header[j]) + ": duplicate column label '" + label + "'");
    }
    col_labels.push_back(label);
  }
  if (records.size() < 2) throw Error(ErrorKind::kParse, "no data rows");

  std::vector<std::string> row_labels;
  std::vector<std::vector<double>> values;
  std::unordered_map<std::string, std::size_t> seen_rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const Record& rec = records[r];
    if (rec.size() != header.size()) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(rec.front().line) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(rec.size()));
    }
    std::string label(trim(rec.front().text));
    if (!seen_rows.emplace(label, r).second) {
      throw Error(ErrorKind::kDuplicateLabel,
                  at(rec.front()) + ": duplicate row label '" + label + "'");
    }
    std::vector<double> row;
    row.reserve(col_labels.size());
    for (std::size_t j = 1; j < rec.size(); ++j) {
      row.push_back(parse_number(rec[j], label, col_labels[j - 1]));
    }
    row_labels.push_back(std::move(label));
    values.push_back(std::move(row));
  }

  auto built = build_matrix(std::move(row_labels), std::move(col_labels),
                            values, policy);
  built.matrix = canonical_order(built.matrix);
  return built;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kParse, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MatrixBuild parse_csv(const std::filesystem::path& path,
                      ZeroRowPolicy policy) {
  const std::string text = read_file(path);
  try {
    return parse_csv_text(text, policy);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.message());
  }
}

std::string write_csv(const LabeledMatrix& matrix) {
  return write_table(matrix.row_labels(), matrix.col_labels(),
                     [&](std::size_t i, std::size_t j) {
                       return matrix.at(i, j);
                     });
}

std::string write_csv(const SimilarityMatrix& similarity) {
  return write_table(similarity.labels, similarity.labels,
                     [&](std::size_t i, std::size_t j) {
                       return similarity.values[i][j];
                     });
}

}  // namespace infodiv
