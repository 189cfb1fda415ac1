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

#include "mtf/toric_fan.hpp"

#include <numeric>
#include <string>

#include "mtf/error.hpp"

namespace mtf {

namespace {

bool is_primitive(const RayVec& v) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
  return g == 1;
}

std::string show(const RayVec& v) { return "(" + v.x.get_str() + "," + v.y.get_str() + ")"; }

}  // namespace

HalfFan::HalfFan(std::vector<RayVec> rays) : rays_(std::move(rays)) {
  if (rays_.size() < 2) throw InvalidInput("a half-fan needs at least two rays");
  for (const auto& v : rays_) {
    if (!is_primitive(v)) throw InvalidInput("ray " + show(v) + " is not primitive");
  }
  for (std::size_t i = 0; i + 1 < rays_.size(); ++i) {
    if (det(rays_[i], rays_[i + 1]) != 1) {
      throw InvalidInput("det(v_" + std::to_string(i + 1) + ", v_" + std::to_string(i + 2) +
                         ") != 1");
    }
  }
  if (det(rays_.back(), -rays_.front()) != 1) {
    throw InvalidInput("det(v_{n+2}, -v_1) != 1");
  }
  for (std::size_t i = 1; i < rays_.size(); ++i) {
    if (det(rays_.front(), rays_[i]) <= 0) {
      throw InvalidInput("ray v_" + std::to_string(i + 1) + " leaves the half-turn");
    }
  }
}

const RayVec& HalfFan::ray(std::size_t i) const {
  if (i < 1 || i > rays_.size()) throw InvalidInput("ray index " + std::to_string(i) + " out of range");
  return rays_[i - 1];
}

RayVec HalfFan::full_ray(std::ptrdiff_t t) const {
  const auto half = static_cast<std::ptrdiff_t>(rays_.size());
  const auto period = 2 * half;
  t %= period;
  if (t < 0) t += period;
  return t < half ? rays_[static_cast<std::size_t>(t)] : -rays_[static_cast<std::size_t>(t - half)];
}

Integer SelfIntersections::cycle_total() const {
  Integer sum = 0;
  for (const auto& v : values) sum += v;
  return 2 * sum;
}

HalfFan fan_from_sequence(const MarkedSequence& seq) {
  const auto weights = seq.weights();
  std::vector<RayVec> rays;
  rays.reserve(weights.size() + 1);
  rays.push_back({1, 0});
  rays.push_back({0, 1});
  // v_i = (x_i, k_i); det(v_i, v_{i+1}) = x_i k_{i+1} - k_i x_{i+1} = 1.
  for (std::size_t idx = 1; idx < weights.size(); ++idx) {
    const RayVec& prev = rays.back();
    const Integer numerator = prev.x * weights[idx] - 1;
    if (!mpz_divisible_p(numerator.get_mpz_t(), prev.y.get_mpz_t())) {
      throw InvalidInput("invalid sequence: no lattice ray with det(v_1, v_" + std::to_string(idx + 2) +
                         ") = " + weights[idx].get_str() + " continues the unimodular chain");
    }
    Integer x = numerator / prev.y;
    rays.push_back({std::move(x), weights[idx]});
  }
  try {
    return HalfFan(std::move(rays));
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("invalid sequence: ") + e.what());
  }
}

bool is_valid_sequence(const MarkedSequence& seq) {
  try {
    (void)fan_from_sequence(seq);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

MarkedSequence sequence_from_fan(const HalfFan& fan, std::size_t marked) {
  if (marked < 1 || marked > fan.size()) {
    throw InvalidInput("marked index " + std::to_string(marked) + " outside 1.." + std::to_string(fan.size()));
  }
  const auto base = static_cast<std::ptrdiff_t>(marked - 1);
  const RayVec anchor = fan.full_ray(base);
  std::vector<Integer> weights;
  weights.reserve(fan.size() - 1);
  for (std::ptrdiff_t j = 1; j < static_cast<std::ptrdiff_t>(fan.size()); ++j) {
    Integer d = det(anchor, fan.full_ray(base + j));
    weights.push_back(abs(d));
  }
  return MarkedSequence(std::move(weights));
}

HalfFan normalize_at(const HalfFan& fan, std::size_t marked) {
  if (marked < 1 || marked > fan.size()) {
    throw InvalidInput("marked index " + std::to_string(marked) + " outside 1.." + std::to_string(fan.size()));
  }
  const auto base = static_cast<std::ptrdiff_t>(marked - 1);
  const RayVec a = fan.full_ray(base);
  const RayVec b = fan.full_ray(base + 1);
  // det(a, b) = 1, so the inverse of the matrix [a b] is integral:
  // [a b]^{-1} = [[b.y, -b.x], [-a.y, a.x]].
  auto apply = [&](const RayVec& v) {
    return RayVec{b.y * v.x - b.x * v.y, -a.y * v.x + a.x * v.y};
  };
  std::vector<RayVec> rays;
  rays.reserve(fan.size());
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(fan.size()); ++j) {
    rays.push_back(apply(fan.full_ray(base + j)));
  }
  return HalfFan(std::move(rays));
}

SelfIntersections self_intersections(const HalfFan& fan) {
  SelfIntersections out;
  out.values.reserve(fan.size());
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(fan.size()); ++t) {
    const RayVec v = fan.full_ray(t);
    const RayVec sum = fan.full_ray(t - 1) + fan.full_ray(t + 1);
    // sum = a v with v primitive; a is read off a non-zero coordinate.
    Integer a = v.x != 0 ? Integer(sum.x / v.x) : Integer(sum.y / v.y);
    ensure(sum == RayVec{a * v.x, a * v.y},
           "malformed fan: neighbours of v_" + std::to_string(t + 1) + " are not collinear with it");
    out.values.push_back(-a);
  }
  ensure(out.cycle_total() == 12 - 6 * static_cast<long>(fan.size()),
         "self-intersections do not sum to 12 - 6(n+2)");
  return out;
}

}  // namespace mtf
