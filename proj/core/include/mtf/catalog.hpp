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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mtf/marked_sequence.hpp"
#include "mtf/numeric.hpp"

namespace mtf {

/// Largest n accepted by the enumeration routines.
inline constexpr std::size_t kCatalogMaxN = 12;

/// The n+2 children of a level-(n-1) sequence: prepend 1, insert k_i + k_{i+1}
/// at each adjacency (left to right), append 1. Duplicates are kept.
std::vector<MarkedSequence> insertions(const MarkedSequence& seq);

/// U(1)-equivalence key: the multiset of maximal runs of entries > 1, each run
/// taken up to reversal. Rendered as e.g. "[2][2,5,3]".
std::string u1_key(const MarkedSequence& seq);

/// Maximal runs of 1s replaced by a separator, taken up to reversal,
/// e.g. "|2,5,3|". Kept for comparison; it is finer than u1_key.
std::string collapsed_word_key(const MarkedSequence& seq);

/// Canonical children of the given parents, deduplicated and sorted. With
/// workers > 1 the parents are split into contiguous chunks; the result does
/// not depend on the worker count.
std::vector<MarkedSequence> expand_level(const std::vector<MarkedSequence>& parents, std::size_t workers);

/// All valid level-n sequences up to reversal, as sorted canonical forms.
/// Levels are memoized across calls.
std::vector<MarkedSequence> enumerate_marked(std::size_t n, std::size_t workers = 1);

struct MarkedClass {
  MarkedSequence canonical;
  std::vector<MarkedSequence> members;  // sequence and its reversal, deduplicated
  std::string u1_key;
  std::size_t m = 0;
  std::vector<std::size_t> l;
  std::optional<long> slack;
};

struct CatalogOptions {
  std::size_t workers = 1;
  /// When set, level sets are read from and written to JSON files here.
  std::optional<std::filesystem::path> cache_dir;
};

MarkedClass describe_marked(const MarkedSequence& canonical_seq);

std::vector<MarkedClass> marked_classes(std::size_t n, const CatalogOptions& options = {});

struct CatalogClass {
  MarkedSequence canonical;             // lexicographically smallest member
  std::vector<MarkedSequence> members;  // every marked sequence in the class, sorted
  std::string u1_key;
  std::optional<long> slack;  // maximum over members
};

struct U1Catalog {
  std::size_t n = 0;
  std::vector<CatalogClass> classes;
  std::size_t delta() const { return classes.size(); }
};

U1Catalog u1_classes(std::size_t n, const CatalogOptions& options = {});

/// Cache file for level n inside dir.
std::filesystem::path cache_file(const std::filesystem::path& dir, std::size_t n);

/// Returns the cached canonical sequences, or nothing if the file is absent or
/// does not describe a valid level-n set.
std::optional<std::vector<MarkedSequence>> load_cache(const std::filesystem::path& dir, std::size_t n);

void save_cache(const std::filesystem::path& dir, std::size_t n, const std::vector<MarkedClass>& classes);

std::vector<MarkedSequence> family_lebrun(std::size_t n);

std::vector<MarkedSequence> family_involutive(std::size_t n);

/// f(1) = f(2) = 1.
Integer fibonacci(std::size_t k);

MarkedSequence family_fibonacci(std::size_t n);

/// Largest m over all level-n sequences.
std::size_t max_m(std::size_t n, std::size_t workers = 1);

struct DeltaRow {
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t marked_classes = 0;
  std::optional<Rational> ratio;  // delta / n^2, empty for n = 0
};

struct DeltaTable {
  std::vector<DeltaRow> rows;
};

/// Computes delta(n) for 0 <= n <= n_max, checking monotonicity and that the
/// end-insertion map on classes is injective.
DeltaTable growth_report(std::size_t n_max, const CatalogOptions& options = {});

}  // namespace mtf
