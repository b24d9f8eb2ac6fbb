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

#include "infodiv/format.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "infodiv/error.hpp"

namespace infodiv {

std::string format_number(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kNonFiniteValue, "cannot format non-finite number");
  }
  if (value == 0.0) return "0";

  // Far more digits than a double carries, so digit 13 and beyond are the
  // exact expansion and the rounding decision below is exact.
  std::array<char, 128> buf{};
  std::snprintf(buf.data(), buf.size(), "%.80e", std::fabs(value));
  const std::string raw(buf.data());
  const auto e_pos = raw.find('e');
  int exponent = std::atoi(raw.c_str() + e_pos + 1);

  std::string digits;
  digits.reserve(90);
  for (std::size_t i = 0; i < e_pos; ++i) {
    if (raw[i] != '.') digits.push_back(raw[i]);
  }

  std::string kept = digits.substr(0, kSignificantDigits);
  if (digits[kSignificantDigits] >= '5') {
    int i = kSignificantDigits - 1;
    while (i >= 0 && kept[i] == '9') {
      kept[i] = '0';
      --i;
    }
    if (i >= 0) {
      ++kept[i];
    } else {
      kept.insert(kept.begin(), '1');
      kept.pop_back();
      ++exponent;
    }
  }
  while (kept.size() > 1 && kept.back() == '0') kept.pop_back();

  std::string out;
  if (value < 0) out.push_back('-');
  if (exponent < -5 || exponent >= kSignificantDigits) {
    out.push_back(kept[0]);
    if (kept.size() > 1) {
      out.push_back('.');
      out.append(kept, 1, std::string::npos);
    }
    std::array<char, 16> exp_buf{};
    std::snprintf(exp_buf.data(), exp_buf.size(), "e%c%02d",
                  exponent < 0 ? '-' : '+', std::abs(exponent));
    out.append(exp_buf.data());
  } else if (exponent < 0) {
    out.append("0.");
    out.append(static_cast<std::size_t>(-exponent - 1), '0');
    out.append(kept);
  } else {
    const auto int_digits = static_cast<std::size_t>(exponent) + 1;
    if (kept.size() <= int_digits) {
      out.append(kept);
      out.append(int_digits - kept.size(), '0');
    } else {
      out.append(kept, 0, int_digits);
      out.push_back('.');
      out.append(kept, int_digits, std::string::npos);
    }
  }
  return out;
}

}  // namespace infodiv
