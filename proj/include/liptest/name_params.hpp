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

#ifndef LIPTEST_NAME_PARAMS_HPP_
#define LIPTEST_NAME_PARAMS_HPP_

#include <map>
#include <string>

namespace liptest {

// Parsed form of "name?key=value&key2=value2" specs used by the builtin
// registries.
struct NameParams {
  std::string name;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) > 0; }
  double get_double(const std::string& key, double fallback) const;
  double require_double(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  int require_int(const std::string& key) const;
};

NameParams parse_name_params(const std::string& spec);

}  // namespace liptest

#endif  // LIPTEST_NAME_PARAMS_HPP_
