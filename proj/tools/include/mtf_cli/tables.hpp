// Copyright 2026 The minitwistor Authors
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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mtf/catalog.hpp"
#include "mtf_cli/cli.hpp"

namespace mtf::cli {

/// A regenerated table and its differences from the embedded reference copy.
struct TableResult {
  std::string body;
  std::vector<std::string> mismatches;
};

TableResult delta_table(std::size_t n_max, Format format, const CatalogOptions& options);
TableResult fibonacci_table(std::size_t n_max, Format format);
TableResult lebrun_table(std::size_t n, Format format);
TableResult involutive_table(std::size_t n, Format format);

}  // namespace mtf::cli
