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

#include "mtf/marked_sequence.hpp"

#include <algorithm>

#include "mtf/error.hpp"

namespace mtf {

MarkedSequence::MarkedSequence(std::vector<Integer> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidInput("sequence must have at least one entry");
  for (std::size_t idx = 0; idx < weights_.size(); ++idx) {
    if (weights_[idx] <= 0) {
      throw InvalidInput("k_" + std::to_string(idx + 2) + " must be positive");
    }
  }
  if (weights_.front() != 1) throw InvalidInput("k_2 must equal 1");
  if (weights_.back() != 1) {
    throw InvalidInput("k_" + std::to_string(weights_.size() + 1) + " (= k_{n+2}) must equal 1");
  }
}

MarkedSequence::MarkedSequence(std::initializer_list<long> weights)
    : MarkedSequence([&] {
        std::vector<Integer> out;
        out.reserve(weights.size());
        for (long w : weights) out.emplace_back(w);
        return out;
      }()) {}

MarkedSequence MarkedSequence::parse(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_integer(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MarkedSequence(std::move(out));
}

const Integer& MarkedSequence::k(std::size_t i) const {
  if (i < 2 || i > n() + 2) {
    throw InvalidInput("index " + std::to_string(i) + " outside 2.." + std::to_string(n() + 2));
  }
  return weights_[i - 2];
}

MarkedSequence MarkedSequence::reversed() const {
  return MarkedSequence(std::vector<Integer>(weights_.rbegin(), weights_.rend()));
}

bool MarkedSequence::is_semi_free() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Integer& w) { return w == 1; });
}

Integer MarkedSequence::max_weight() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

std::string MarkedSequence::to_string() const {
  std::string out;
  for (std::size_t idx = 0; idx < weights_.size(); ++idx) {
    if (idx) out += ',';
    out += weights_[idx].get_str();
  }
  return out;
}

bool operator==(const MarkedSequence& a, const MarkedSequence& b) { return a.weights_ == b.weights_; }

bool operator<(const MarkedSequence& a, const MarkedSequence& b) {
  if (a.weights_.size() != b.weights_.size()) return a.weights_.size() < b.weights_.size();
  return std::lexicographical_compare(a.weights_.begin(), a.weights_.end(), b.weights_.begin(),
                                      b.weights_.end());
}

MarkedSequence canonical(const MarkedSequence& seq) {
  MarkedSequence rev = seq.reversed();
  return rev < seq ? rev : seq;
}

}  // namespace mtf
