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

#include "mtf/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <set>
#include <thread>

#include "mtf/error.hpp"
#include "mtf/invariants.hpp"
#include "mtf/toric_fan.hpp"

namespace mtf {
namespace {

void check_budget(std::size_t n) {
  if (n > kCatalogMaxN) {
    throw InvalidInput("n = " + std::to_string(n) + " exceeds the enumeration budget of " +
                       std::to_string(kCatalogMaxN));
  }
}

std::string join(std::span<const Integer> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_string(values[i]);
  }
  return out;
}

void sort_unique(std::vector<MarkedSequence>& seqs) {
  std::sort(seqs.begin(), seqs.end());
  seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
}

}  // namespace

std::vector<MarkedSequence> insertions(const MarkedSequence& seq) {
  const auto w = seq.weights();
  std::vector<MarkedSequence> out;
  out.reserve(w.size() + 1);

  std::vector<Integer> child;
  child.reserve(w.size() + 1);
  child.emplace_back(1);
  child.insert(child.end(), w.begin(), w.end());
  out.emplace_back(child);

  for (std::size_t gap = 0; gap + 1 < w.size(); ++gap) {
    child.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(gap) + 1);
    child.push_back(w[gap] + w[gap + 1]);
    child.insert(child.end(), w.begin() + static_cast<std::ptrdiff_t>(gap) + 1, w.end());
    out.emplace_back(child);
  }

  child.assign(w.begin(), w.end());
  child.emplace_back(1);
  out.emplace_back(child);
  return out;
}

std::string u1_key(const MarkedSequence& seq) {
  std::vector<std::vector<Integer>> blocks;
  std::vector<Integer> current;
  auto flush = [&] {
    if (current.empty()) return;
    std::vector<Integer> rev(current.rbegin(), current.rend());
    blocks.push_back(std::min(current, rev));
    current.clear();
  };
  for (const Integer& k : seq.weights()) {
    if (k == 1) {
      flush();
    } else {
      current.push_back(k);
    }
  }
  flush();
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::string out;
  for (const auto& block : blocks) out += "[" + join(block) + "]";
  return out;
}

std::string collapsed_word_key(const MarkedSequence& seq) {
  auto render = [](auto begin, auto end) {
    std::string word;
    bool in_ones = false;
    bool need_comma = false;
    for (auto it = begin; it != end; ++it) {
      if (*it == 1) {
        if (!in_ones) word += '|';
        in_ones = true;
        need_comma = false;
      } else {
        if (need_comma) word += ',';
        word += to_string(*it);
        in_ones = false;
        need_comma = true;
      }
    }
    return word;
  };
  const auto w = seq.weights();
  return std::min(render(w.begin(), w.end()), render(w.rbegin(), w.rend()));
}

std::vector<MarkedSequence> expand_level(const std::vector<MarkedSequence>& parents, std::size_t workers) {
  auto expand_range = [&parents](std::size_t begin, std::size_t end) {
    std::vector<MarkedSequence> out;
    for (std::size_t p = begin; p < end; ++p) {
      for (const auto& child : insertions(parents[p])) out.push_back(canonical(child));
    }
    sort_unique(out);
    return out;
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(parents.size(), 1));
  if (workers == 1) return expand_range(0, parents.size());

  std::vector<std::vector<MarkedSequence>> partial(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (parents.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(parents.size(), w * chunk);
    const std::size_t end = std::min(parents.size(), begin + chunk);
    threads.emplace_back([&, w, begin, end] { partial[w] = expand_range(begin, end); });
  }
  for (auto& t : threads) t.join();
  std::vector<MarkedSequence> merged;
  for (auto& part : partial) std::move(part.begin(), part.end(), std::back_inserter(merged));
  sort_unique(merged);
  return merged;
}

std::vector<MarkedSequence> enumerate_marked(std::size_t n, std::size_t workers) {
  check_budget(n);
  static std::mutex mutex;
  static std::vector<std::vector<MarkedSequence>> levels;
  std::lock_guard<std::mutex> lock(mutex);
  if (levels.empty()) levels.push_back({MarkedSequence{1}});
  while (levels.size() <= n) levels.push_back(expand_level(levels.back(), workers));
  return levels[n];
}

MarkedClass describe_marked(const MarkedSequence& canonical_seq) {
  MarkedClass out{canonical_seq, {canonical_seq, canonical_seq.reversed()}, u1_key(canonical_seq), 0, {}, {}};
  sort_unique(out.members);
  const LVector lvec = l_vector(canonical_seq);
  out.m = lvec.m();
  out.l = lvec.l;
  for (const auto& member : out.members) {
    const auto slack = regularity(member).slack;
    if (slack && (!out.slack || *slack > *out.slack)) out.slack = slack;
  }
  return out;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, std::size_t n) {
  return dir / ("catalog-n" + std::to_string(n) + ".json");
}

std::optional<std::vector<MarkedSequence>> load_cache(const std::filesystem::path& dir, std::size_t n) {
  std::ifstream in(cache_file(dir, n));
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("n").get<std::size_t>() != n) return std::nullopt;
    std::vector<MarkedSequence> out;
    for (const auto& entry : doc.at("classes")) {
      MarkedSequence seq = MarkedSequence::parse(entry.at("canonical").get<std::string>());
      if (seq.n() != n || !(canonical(seq) == seq) || !is_valid_sequence(seq)) return std::nullopt;
      if (!out.empty() && !(out.back() < seq)) return std::nullopt;
      out.push_back(std::move(seq));
    }
    if (out.empty()) return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void save_cache(const std::filesystem::path& dir, std::size_t n, const std::vector<MarkedClass>& classes) {
  nlohmann::json doc;
  doc["n"] = n;
  doc["classes"] = nlohmann::json::array();
  for (const auto& cls : classes) {
    nlohmann::json entry;
    entry["canonical"] = cls.canonical.to_string();
    entry["members"] = nlohmann::json::array();
    for (const auto& member : cls.members) entry["members"].push_back(member.to_string());
    entry["u1_key"] = cls.u1_key;
    entry["m"] = cls.m;
    entry["l"] = cls.l;
    entry["slack"] = cls.slack ? nlohmann::json(*cls.slack) : nlohmann::json(nullptr);
    doc["classes"].push_back(std::move(entry));
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = cache_file(dir, n);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write catalog cache in " + dir.string());
    out << doc.dump(2) << '\n';
    if (!out) throw InvalidInput("cannot write catalog cache in " + dir.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InvalidInput("cannot write catalog cache in " + dir.string() + ": " + ec.message());
}

std::vector<MarkedClass> marked_classes(std::size_t n, const CatalogOptions& options) {
  check_budget(n);
  std::optional<std::vector<MarkedSequence>> seqs;
  if (options.cache_dir) seqs = load_cache(*options.cache_dir, n);
  const bool from_cache = seqs.has_value();
  if (!seqs) seqs = enumerate_marked(n, options.workers);
  std::vector<MarkedClass> out;
  out.reserve(seqs->size());
  for (const auto& seq : *seqs) out.push_back(describe_marked(seq));
  if (options.cache_dir && !from_cache) save_cache(*options.cache_dir, n, out);
  return out;
}

U1Catalog u1_classes(std::size_t n, const CatalogOptions& options) {
  std::map<std::string, CatalogClass> groups;
  for (const auto& marked : marked_classes(n, options)) {
    auto [it, inserted] = groups.try_emplace(marked.u1_key, CatalogClass{marked.canonical, {}, marked.u1_key, {}});
    CatalogClass& cls = it->second;
    cls.members.insert(cls.members.end(), marked.members.begin(), marked.members.end());
    if (marked.canonical < cls.canonical) cls.canonical = marked.canonical;
    if (marked.slack && (!cls.slack || *marked.slack > *cls.slack)) cls.slack = marked.slack;
  }
  U1Catalog out;
  out.n = n;
  for (auto& [key, cls] : groups) {
    sort_unique(cls.members);
    ensure(cls.members.front() == cls.canonical, "class canonical must be its smallest member");
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const CatalogClass& a, const CatalogClass& b) { return a.canonical < b.canonical; });
  return out;
}

std::vector<MarkedSequence> family_lebrun(std::size_t n) {
  if (n < 3) throw InvalidInput("the LeBrun family needs n >= 3");
  std::vector<MarkedSequence> out;
  std::vector<Integer> w(n + 1, Integer(1));
  out.emplace_back(w);
  for (std::size_t j = 0; j < n; ++j) w[j] = static_cast<long>(j + 1);
  out.emplace_back(w);  // (1,2,...,n,1)
  w[n - 1] = 1;
  out.emplace_back(w);  // (1,2,...,n-1,1,1)
  for (std::size_t k = (n + 1) / 2; k + 2 <= n; ++k) {
    std::vector<Integer> v;
    for (std::size_t j = 1; j <= k; ++j) v.emplace_back(static_cast<long>(j));
    v.emplace_back(1);
    for (std::size_t j = n - k; j >= 2; --j) v.emplace_back(static_cast<long>(j));
    v.emplace_back(1);
    out.emplace_back(v);
  }
  for (const auto& seq : out) ensure(is_valid_sequence(seq), "LeBrun family member " + seq.to_string() + " is invalid");
  ensure(out.size() == n / 2 + 2, "LeBrun family must have floor(n/2) + 2 members");
  return out;
}

std::vector<MarkedSequence> family_involutive(std::size_t n) {
  if (n < 1) throw InvalidInput("the involutive family needs n >= 1");
  std::vector<MarkedSequence> out;
  for (std::size_t c = 0; 2 * c <= n; ++c) {
    std::vector<Integer> w(n + 1, Integer(1));
    // k_{2j+1} = 2 for j = 1..c; k_i sits at vector position i - 2.
    for (std::size_t j = 1; j <= c; ++j) w[2 * j - 1] = 2;
    out.emplace_back(w);
    ensure(is_valid_sequence(out.back()), "involutive family member " + out.back().to_string() + " is invalid");
  }
  return out;
}

Integer fibonacci(std::size_t k) {
  Integer a = 0;
  Integer b = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return a;
}

MarkedSequence family_fibonacci(std::size_t n) {
  if (n < 2) throw InvalidInput("the Fibonacci family needs n >= 2");
  std::vector<Integer> w{Integer(1), Integer(2), Integer(1)};
  for (std::size_t level = 3; level <= n; ++level) {
    std::size_t best = 0;
    for (std::size_t gap = 1; gap + 1 < w.size(); ++gap) {
      if (w[gap] + w[gap + 1] >= w[best] + w[best + 1]) best = gap;
    }
    const Integer sum = w[best] + w[best + 1];
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(best) + 1, sum);
  }
  MarkedSequence seq(w);
  ensure(is_valid_sequence(seq), "Fibonacci family member " + seq.to_string() + " is invalid");
  ensure(Integer(static_cast<unsigned long>(procedure_a(seq).m())) == fibonacci(n + 1), "Fibonacci family must have m = f(n+1)");
  return seq;
}

std::size_t max_m(std::size_t n, std::size_t workers) {
  std::size_t best = 0;
  for (const auto& seq : enumerate_marked(n, workers)) best = std::max(best, procedure_a(seq).m());
  return best;
}

DeltaTable growth_report(std::size_t n_max, const CatalogOptions& options) {
  check_budget(n_max);
  DeltaTable table;
  std::optional<U1Catalog> previous;
  for (std::size_t n = 0; n <= n_max; ++n) {
    U1Catalog current = u1_classes(n, options);
    DeltaRow row;
    row.n = n;
    row.delta = current.delta();
    row.marked_classes = 0;
    for (const auto& cls : current.classes) {
      std::set<MarkedSequence> canon;
      for (const auto& member : cls.members) canon.insert(canonical(member));
      row.marked_classes += canon.size();
    }
    if (n > 0) {
      Rational ratio(static_cast<unsigned long>(row.delta), static_cast<unsigned long>(n * n));
      ratio.canonicalize();
      row.ratio = ratio;
    }
    if (previous) {
      ensure(row.delta >= previous->delta(), "delta(n) must be nondecreasing");
      std::set<std::string> images;
      for (const auto& cls : previous->classes) images.insert(u1_key(insertions(cls.canonical).front()));
      ensure(images.size() == previous->delta(), "end insertion must be injective on classes");
    }
    table.rows.push_back(row);
    previous = std::move(current);
  }
  return table;
}

}  // namespace mtf
