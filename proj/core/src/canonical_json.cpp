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

#include "canonical_json.hpp"

#include <nlohmann/json.hpp>

#include "infodiv/format.hpp"

namespace infodiv::json {
namespace {

std::string escape(const std::string& s) {
  return nlohmann::json(s).dump(-1, ' ', false,
                                nlohmann::json::error_handler_t::replace);
}

bool is_scalar(const Value& v) {
  return !std::holds_alternative<Array>(v.data) &&
         !std::holds_alternative<Object>(v.data);
}

void write(const Value& value, int depth, std::string& out) {
  const std::string indent(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_indent(static_cast<std::size_t>(depth) * 2, ' ');
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::nullptr_t>) {
          out.append("null");
        } else if constexpr (std::is_same_v<T, bool>) {
          out.append(v ? "true" : "false");
        } else if constexpr (std::is_same_v<T, double>) {
          out.append(format_number(v));
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
          out.append(std::to_string(v));
        } else if constexpr (std::is_same_v<T, std::string>) {
          out.append(escape(v));
        } else if constexpr (std::is_same_v<T, Array>) {
          if (v.empty()) {
            out.append("[]");
            return;
          }
          bool flat = true;
          for (const auto& item : v) flat = flat && is_scalar(item);
          out.push_back('[');
          for (std::size_t k = 0; k < v.size(); ++k) {
            if (k > 0) out.push_back(',');
            if (flat) {
              if (k > 0) out.push_back(' ');
            } else {
              out.push_back('\n');
              out.append(indent);
            }
            write(v[k], depth + 1, out);
          }
          if (!flat) {
            out.push_back('\n');
            out.append(close_indent);
          }
          out.push_back(']');
        } else {
          if (v.empty()) {
            out.append("{}");
            return;
          }
          out.push_back('{');
          bool first = true;
          for (const auto& [key, item] : v) {
            if (!first) out.push_back(',');
            first = false;
            out.push_back('\n');
            out.append(indent);
            out.append(escape(key));
            out.append(": ");
            write(item, depth + 1, out);
          }
          out.push_back('\n');
          out.append(close_indent);
          out.push_back('}');
        }
      },
      value.data);
}

}  // namespace

std::string dump(const Value& value) {
  std::string out;
  write(value, 0, out);
  out.push_back('\n');
  return out;
}

}  // namespace infodiv::json
