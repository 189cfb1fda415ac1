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

// Acceptance checks: one PASS/FAIL line per criterion, exact arithmetic only.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mtf/catalog.hpp"
#include "mtf/conic_bundle.hpp"
#include "mtf/invariants.hpp"
#include "mtf/minitwistor.hpp"
#include "mtf/toric_fan.hpp"
#include "oracles.hpp"

using namespace mtf;

namespace {

/// Collects the first failure; an empty result means the criterion passed.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && !failure_) failure_ = what;
  }
  const std::optional<std::string>& failure() const { return failure_; }
  std::vector<std::string> notes;

 private:
  std::optional<std::string> failure_;
};

std::vector<MarkedSequence> parse_all(std::initializer_list<const char*> texts) {
  std::vector<MarkedSequence> out;
  for (const char* t : texts) out.push_back(MarkedSequence::parse(t));
  return out;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::vector<MarkedSequence> all_with_entries_at_most_two(std::size_t n) {
  std::vector<MarkedSequence> out;
  for (const auto& seq : testing::all_marked(n)) {
    if (seq.max_weight() <= 2) out.push_back(seq);
  }
  return out;
}

void criterion_delta(Check& c) {
  const std::vector<std::size_t> expected{1, 1, 2, 3, 7, 15};
  std::vector<std::size_t> got;
  for (std::size_t n = 0; n < expected.size(); ++n) got.push_back(u1_classes(n).delta());
  c.expect(got == expected, "delta(0..5) = " + join(got));
  c.notes.push_back("delta(0..5) = " + join(got));

  // The n = 4 classes can be represented by the seven published sequences:
  // each published sequence (or its reversal) lies in exactly one class, and
  // distinct sequences lie in distinct classes.
  const auto catalog = u1_classes(4);
  const auto published =
      parse_all({"1,1,1,1,1", "1,2,1,1,1", "1,2,1,2,1", "1,2,3,1,1", "1,3,2,3,1", "1,2,5,3,1", "1,2,3,4,1"});
  std::set<std::size_t> used;
  for (const auto& rep : published) {
    std::size_t hits = 0;
    for (std::size_t k = 0; k < catalog.classes.size(); ++k) {
      const auto& members = catalog.classes[k].members;
      const bool in = std::find(members.begin(), members.end(), rep) != members.end() ||
                      std::find(members.begin(), members.end(), rep.reversed()) != members.end();
      if (in) {
        ++hits;
        used.insert(k);
      }
    }
    c.expect(hits == 1, "(" + rep.to_string() + ") lies in " + std::to_string(hits) + " classes");
  }
  c.expect(used.size() == 7 && catalog.delta() == 7, "published n = 4 list does not biject onto the classes");
}

void criterion_fibonacci_table(Check& c) {
  const std::map<std::size_t, std::pair<std::string, std::string>> table{
      {2, {"1,2,1", "1,1,1,1"}},
      {3, {"1,2,3,1", "1,1,1,2,1"}},
      {4, {"1,2,5,3,1", "1,1,3,2,2,1"}},
      {5, {"1,2,5,8,3,1", "1,1,3,3,5,2,1"}},
      {6, {"1,2,5,13,8,3,1", "1,1,3,8,5,5,2,1"}},
      {7, {"1,2,5,13,21,8,3,1", "1,1,3,8,8,13,5,2,1"}},
  };
  const std::map<std::size_t, std::size_t> table_m{{2, 2}, {3, 3}, {4, 5}, {5, 8}, {6, 13}, {7, 21}};
  for (const auto& [n, row] : table) {
    const auto seq = family_fibonacci(n);
    const auto lvec = l_vector(seq);
    c.expect(seq.to_string() == row.first, "n=" + std::to_string(n) + ": sequence " + seq.to_string());
    c.expect(join(lvec.l) == row.second, "n=" + std::to_string(n) + ": l = " + join(lvec.l));
    c.expect(lvec.m() == table_m.at(n), "n=" + std::to_string(n) + ": m = " + std::to_string(lvec.m()));
    c.expect(Integer(static_cast<unsigned long>(lvec.m())) == fibonacci(n + 1),
             "n=" + std::to_string(n) + ": m != f(n+1)");
  }
  std::vector<std::size_t> maxima;
  for (std::size_t n = 2; n <= 8; ++n) {
    const std::size_t best = max_m(n);
    maxima.push_back(best);
    c.expect(Integer(static_cast<unsigned long>(best)) == fibonacci(n + 1),
             "brute-force max m at n=" + std::to_string(n) + " is " + std::to_string(best));
    c.expect(procedure_a(family_fibonacci(n)).m() == best, "Fibonacci sequence is not the argmax at n=" +
                                                               std::to_string(n));
  }
  c.notes.push_back("brute-force max m for n=2..8: " + join(maxima));
}

void criterion_spot_value(Check& c) {
  const std::size_t m = procedure_a(MarkedSequence{1, 2, 1, 2, 1}).m();
  c.expect(m == 3, "m((1,2,1,2,1)) = " + std::to_string(m));
}

void criterion_y_structure(Check& c) {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& seq : testing::all_marked(n)) {
      ++count;
      const std::string tag = "(" + seq.to_string() + ")";
      const auto trace = procedure_a(seq);
      const std::size_t m = trace.m();
      const auto y = build_y(trace);
      const auto lvec = l_vector(y);
      c.expect(lvec.at(1) == 1 && lvec.at(n + 2) == 1, tag + ": l_1 or l_{n+2} != 1");
      c.expect(lvec.total() == 2 * m, tag + ": sum l != 2m");
      c.expect(Integer(static_cast<unsigned long>(m)) >= seq.max_weight(), tag + ": m < max k");
      std::size_t plus = 0;
      std::size_t minus = 0;
      for (std::size_t i = 1; i <= n + 2; ++i) {
        c.expect(y.plus_at(i) == 0 || y.minus_at(i) == 0, tag + ": both S^+ and S^- at " + std::to_string(i));
        plus += y.plus_at(i);
        minus += y.minus_at(i);
      }
      c.expect(plus == m && minus == m, tag + ": sum l^+ or sum l^- != m");
      const auto rm = restriction_multiplicities(y, seq);
      const Integer mm(static_cast<unsigned long>(m));
      c.expect(rm.on_c[0] == mm && rm.on_conjugate[0] == mm, tag + ": C_1 multiplicities != (m, m)");
      for (std::size_t i = 2; i <= n + 2; ++i) {
        c.expect(rm.on_c[i - 1] == mm + seq.k(i) && rm.on_conjugate[i - 1] == mm - seq.k(i),
                 tag + ": restriction at " + std::to_string(i) + " != (m+k_i, m-k_i)");
      }
    }
  }
  c.notes.push_back(std::to_string(count) + " marked sequences checked");
}

void criterion_equation(Check& c) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& seq : testing::all_marked(n)) {
      const auto lvec = l_vector(seq);
      const auto form = rhs_polynomial(lvec, ConformalInvariant::standard(n), 1);
      c.expect(form.degree() == 2 * lvec.m(), "(" + seq.to_string() + "): rhs degree != 2m");
    }
    const MarkedSequence semi(std::vector<Integer>(n + 1, Integer(1)));
    const auto model = build_minitwistor(semi, ConformalInvariant::standard(n));
    const BinaryForm u1_ulast{{Rational(0), Rational(1), Rational(0)}};
    c.expect(model.q.pullback() == u1_ulast, "semi-free n=" + std::to_string(n) + ": pullback != u_1 u_{n+2}");
    c.expect(model.singular_points.empty(), "semi-free n=" + std::to_string(n) + ": singularities reported");
  }
}

void criterion_singularities(Check& c) {
  {
    const auto model = build_minitwistor(MarkedSequence{1, 2, 5, 3, 1}, ConformalInvariant::standard(4));
    std::vector<std::string> labels;
    for (const auto& s : model.singular_points) labels.push_back(s.label());
    c.expect(labels == std::vector<std::string>{"C^2/Z_5", "A_2", "A_1", "A_1"},
             "(1,2,5,3,1) singularities: " + join(labels));
    c.expect(model.singular_points.size() == 4 && *model.singular_points[1].index == 3 &&
                 *model.singular_points[2].index == 4 && *model.singular_points[3].index == 5,
             "(1,2,5,3,1): A-points at the wrong indices");
  }
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& seq : all_with_entries_at_most_two(n)) {
      ++checked;
      const auto lvec = l_vector(seq);
      for (const auto& s : singularities(lvec, ConformalInvariant::standard(n), lvec.m())) {
        c.expect(s.kind != SingularityRecord::Kind::RealA, "(" + seq.to_string() + ") has a real singularity");
      }
    }
  }
  c.notes.push_back(std::to_string(checked) + " {1,2}-sequences without real singularities");
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto seq = family_fibonacci(n);
    const auto lvec = l_vector(seq);
    std::multiset<std::size_t> orders;
    for (const auto& s : singularities(lvec, ConformalInvariant::standard(n), lvec.m())) {
      if (s.kind == SingularityRecord::Kind::RealA) orders.insert(s.order);
    }
    for (std::size_t j = 3; j <= n; ++j) {
      const std::size_t order = fibonacci(j).get_ui() - 1;
      c.expect(orders.count(order) >= 1,
               "Fibonacci n=" + std::to_string(n) + " lacks A_" + std::to_string(order));
    }
  }
}

void criterion_deformability(Check& c) {
  for (std::size_t n = 3; n <= 10; ++n) {
    std::vector<MarkedSequence> positive;
    for (const auto& seq : family_lebrun(n)) {
      if (seq.is_semi_free()) continue;
      if (*regularity(seq).slack > 0) positive.push_back(seq);
    }
    std::vector<Integer> shape;
    for (std::size_t j = 1; j + 1 <= n; ++j) shape.emplace_back(static_cast<unsigned long>(j));
    shape.emplace_back(1);
    shape.emplace_back(1);
    c.expect(positive.size() == 1, "LeBrun n=" + std::to_string(n) + ": " + std::to_string(positive.size()) +
                                       " members with positive slack");
    if (positive.size() == 1) {
      c.expect(positive[0] == MarkedSequence(shape) && *regularity(positive[0]).slack == 1,
               "LeBrun n=" + std::to_string(n) + ": deformable member is (" + positive[0].to_string() + ")");
    }
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    std::vector<long> slacks;
    for (const auto& seq : family_involutive(n)) {
      if (!seq.is_semi_free()) slacks.push_back(*regularity(seq).slack);
    }
    std::vector<long> expected;
    for (long v = static_cast<long>(n) - 2; v >= 0; v -= 2) expected.push_back(v);
    c.expect(slacks == expected, "involutive n=" + std::to_string(n) + ": slacks " + join(slacks));
  }
}

void criterion_discriminant(Check& c) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& seq : testing::all_marked(n)) {
      const std::string tag = "(" + seq.to_string() + ")";
      const auto lvec = l_vector(seq);
      const auto schedule = blow_up_schedule(seq);
      if (seq.is_semi_free()) {
        c.expect(schedule.stages.size() == 1, tag + ": semi-free schedule has several stages");
      } else {
        c.expect(schedule.stages.size() == lvec.max() + 2, tag + ": schedule does not have M+2 stages");
      }
      if (n == 0 || seq.is_semi_free()) continue;

      const auto reg = regularity(seq);
      const auto joyce = discriminant_joyce(seq);
      const auto deformed = discriminant_deformed(seq);
      c.expect(static_cast<long>(deformed.hyperplane_sections) == *reg.slack, tag + ": hyperplane count != n+r-s");
      // Joyce interior indices = deformed (b) + deformed (c) + hyperplane indices + {r}.
      std::multiset<std::size_t> joyce_idx(joyce.irreducible_fibers.begin(), joyce.irreducible_fibers.end());
      for (const auto& ch : joyce.reducible_fiber_chains) joyce_idx.insert(ch.index);
      std::multiset<std::size_t> deformed_idx(deformed.irreducible_fibers.begin(), deformed.irreducible_fibers.end());
      for (const auto& ch : deformed.reducible_fiber_chains) deformed_idx.insert(ch.index);
      deformed_idx.insert(deformed.hyperplane_indices.begin(), deformed.hyperplane_indices.end());
      deformed_idx.insert(*reg.r);
      c.expect(joyce_idx == deformed_idx, tag + ": Joyce and deformed index sets do not reconcile");
      for (std::size_t i : deformed.hyperplane_indices) {
        c.expect(lvec.at(i) == 0, tag + ": hyperplane index " + std::to_string(i) + " is not irreducible for Joyce");
      }
    }
  }
}

void criterion_round_trips(Check& c) {
  std::size_t fans = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& seq : testing::all_marked(n)) {
      const HalfFan fan = fan_from_sequence(seq);
      c.expect(sequence_from_fan(fan, 1) == seq, "(" + seq.to_string() + "): sequence -> fan -> sequence");
      for (std::size_t mark = 1; mark <= fan.size(); ++mark) {
        ++fans;
        const HalfFan normalized = normalize_at(fan, mark);
        c.expect(fan_from_sequence(sequence_from_fan(fan, mark)) == normalized,
                 "(" + seq.to_string() + "): fan -> sequence -> fan at mark " + std::to_string(mark));
      }
    }
  }
  c.notes.push_back(std::to_string(fans) + " marked fans round-tripped");

  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> pick_n(1, 6);
  std::uniform_int_distribution<long> step(1, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<long> point(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = pick_n(rng);
    const auto seqs = testing::all_marked(n);
    std::uniform_int_distribution<std::size_t> pick(0, seqs.size() - 1);
    const auto& seq = seqs[pick(rng)];
    std::vector<ExtendedRational> values{ExtendedRational(0)};
    Rational current = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const long num = step(rng);
      current += testing::reduced(num, den(rng));
      values.emplace_back(current);
    }
    values.push_back(ExtendedRational::infinity());
    const ConformalInvariant lambdas(values);
    const int c_sign = sign(rng) ? 1 : -1;
    const auto lvec = l_vector(seq);
    const auto form = rhs_polynomial(lvec, lambdas, c_sign);
    const auto q = quadratic_split(form, lvec.m());
    const std::string tag = "trial " + std::to_string(trial) + " (" + seq.to_string() + ")";
    c.expect(q.pullback() == form, tag + ": pullback differs from the rhs");
    const long u1_num = point(rng);
    const Rational u1 = testing::reduced(u1_num, den(rng));
    const long ulast_num = point(rng);
    const Rational ulast = testing::reduced(ulast_num, den(rng));
    c.expect(testing::evaluate_quadratic_on_curve(q, u1, ulast) ==
                 testing::evaluate_product(lvec, lambdas, c_sign, u1, ulast),
             tag + ": Q on the normal curve differs from the product");
  }
  c.notes.push_back("100 randomized pullback round trips (seed 12345)");
}

void criterion_growth(Check& c) {
  constexpr std::size_t kBound = 8;
  const auto table = growth_report(kBound);
  std::vector<std::string> ratios;
  for (std::size_t n = 1; n < table.rows.size(); ++n) {
    c.expect(table.rows[n].delta >= table.rows[n - 1].delta, "delta decreases at n=" + std::to_string(n));
    ratios.push_back(to_string(*table.rows[n].ratio));
  }
  for (std::size_t n = 1; n <= kBound; ++n) {
    const auto previous = u1_classes(n - 1);
    const auto current = u1_classes(n);
    std::set<std::string> keys_now;
    for (const auto& cls : current.classes) keys_now.insert(cls.u1_key);
    std::set<std::string> images;
    for (const auto& cls : previous.classes) {
      const std::string image = u1_key(insertions(cls.canonical).front());
      c.expect(keys_now.count(image) == 1, "end insertion leaves the level-n classes");
      images.insert(image);
    }
    c.expect(images.size() == previous.delta(), "end insertion is not injective at n=" + std::to_string(n));
  }
  c.notes.push_back("delta(n)/n^2 for n=1.." + std::to_string(kBound) + ": " + join(ratios));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"delta table and n=4 representatives", criterion_delta},
      {"Fibonacci table and maximal m", criterion_fibonacci_table},
      {"Procedure (A) spot value", criterion_spot_value},
      {"Y-structure suite (n <= 6)", criterion_y_structure},
      {"equation degree and smooth quadric", criterion_equation},
      {"singularity classification", criterion_singularities},
      {"deformability of the LeBrun and involutive families", criterion_deformability},
      {"discriminant reports and blow-up schedule", criterion_discriminant},
      {"round trips", criterion_round_trips},
      {"growth property", criterion_growth},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    try {
      criteria[k].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = !check.failure().has_value();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << (k + 1) << "] " << criteria[k].first;
    if (!ok) std::cout << " -- " << *check.failure();
    std::cout << "\n";
    for (const auto& note : check.notes) std::cout << "       " << note << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
