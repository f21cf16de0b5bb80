// Copyright 2026 The LipTest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liptest/name_params.hpp"

#include <cstdint>
#include <stdexcept>

namespace liptest {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("builtin spec: " + what);
}

}  // namespace

double NameParams::get_double(const std::string& key, double fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) bad("trailing characters in value of '" + key + "'");
    return v;
  } catch (const std::invalid_argument&) {
    bad("value of '" + key + "' is not a number");
  } catch (const std::out_of_range&) {
    bad("value of '" + key + "' is out of range");
  }
}

double NameParams::require_double(const std::string& key) const {
  if (!has(key)) bad("missing required parameter '" + key + "'");
  return get_double(key, 0.0);
}

std::uint64_t NameParams::get_u64(const std::string& key,
                                  std::uint64_t fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) bad("trailing characters in value of '" + key + "'");
    return v;
  } catch (const std::invalid_argument&) {
    bad("value of '" + key + "' is not an unsigned integer");
  } catch (const std::out_of_range&) {
    bad("value of '" + key + "' is out of range");
  }
}

int NameParams::require_int(const std::string& key) const {
  if (!has(key)) bad("missing required parameter '" + key + "'");
  const std::uint64_t v = get_u64(key, 0);
  if (v > 1u << 20) bad("value of '" + key + "' is implausibly large");
  return static_cast<int>(v);
}

NameParams parse_name_params(const std::string& spec) {
  NameParams out;
  const auto qmark = spec.find('?');
  out.name = spec.substr(0, qmark);
  if (out.name.empty()) bad("empty name");
  if (qmark == std::string::npos) return out;

  std::string rest = spec.substr(qmark + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto amp = rest.find('&', start);
    const std::string piece =
        rest.substr(start, amp == std::string::npos ? std::string::npos : amp - start);
    if (!piece.empty()) {
      const auto eq = piece.find('=');
      if (eq == std::string::npos || eq == 0) bad("expected key=value, got '" + piece + "'");
      out.params[piece.substr(0, eq)] = piece.substr(eq + 1);
    }
    if (amp == std::string::npos) break;
    start = amp + 1;
  }
  return out;
}

}  // namespace liptest
