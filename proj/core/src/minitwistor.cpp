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

#include "mtf/minitwistor.hpp"

#include <algorithm>
#include <string>

#include "mtf/error.hpp"

namespace mtf {

ConformalInvariant::ConformalInvariant(std::vector<ExtendedRational> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.size() < 2) throw InvalidInput("conformal invariant needs at least two values");
  if (!(lambdas_.front() == ExtendedRational(0))) throw InvalidInput("lambda_1 must be 0");
  if (!lambdas_.back().is_infinite()) throw InvalidInput("lambda_{n+2} must be inf");
  for (std::size_t i = 1; i + 1 < lambdas_.size(); ++i) {
    if (lambdas_[i].is_infinite()) {
      throw InvalidInput("lambda_" + std::to_string(i + 1) + " must be finite");
    }
    if (!(lambdas_[i - 1] < lambdas_[i])) throw InvalidInput("lambdas must be strictly increasing");
  }
}

ConformalInvariant ConformalInvariant::standard(std::size_t n) {
  std::vector<ExtendedRational> values;
  values.reserve(n + 2);
  for (std::size_t i = 0; i <= n; ++i) values.emplace_back(static_cast<long>(i));
  values.push_back(ExtendedRational::infinity());
  return ConformalInvariant(std::move(values));
}

ConformalInvariant ConformalInvariant::parse(std::string_view text) {
  std::vector<ExtendedRational> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    values.push_back(ExtendedRational::parse(
        text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ConformalInvariant(std::move(values));
}

bool BinaryForm::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; });
}

BinaryForm QuadraticForm::pullback() const {
  BinaryForm out;
  out.coefficients.assign(2 * m + 1, Rational(0));
  for (const auto& [key, coeff] : terms) out.coefficients[key.first + key.second] += coeff;
  return out;
}

BinaryForm rhs_polynomial(const LVector& lvec, const ConformalInvariant& lambdas, int c_sign) {
  if (c_sign != 1 && c_sign != -1) throw InvalidInput("c must be +1 or -1");
  const std::size_t count = lvec.l.size();
  if (lambdas.values().size() != count) {
    throw InvalidInput("expected " + std::to_string(count) + " lambda values, got " +
                       std::to_string(lambdas.values().size()));
  }
  ensure(lvec.at(1) == 1 && lvec.at(count) == 1, "rhs_polynomial needs l_1 = l_{n+2} = 1");

  // Work in u = u_1 / u_{n+2}; poly[d] is the coefficient of u^d.
  std::vector<Rational> poly{Rational(0), Rational(c_sign)};
  for (std::size_t i = 2; i + 1 <= count; ++i) {
    const Rational& root = lambdas.at(i).value();
    for (std::size_t rep = 0; rep < lvec.at(i); ++rep) {
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] += poly[d];
        next[d] -= root * poly[d];
      }
      poly = std::move(next);
    }
  }
  // The trailing u_{n+2} factor raises the total degree by one without
  // adding a u_1 power.
  poly.emplace_back(0);
  BinaryForm out{std::move(poly)};
  ensure(out.degree() == 2 * lvec.m(), "rhs degree differs from 2m");
  return out;
}

QuadraticForm quadratic_split(const BinaryForm& form, std::size_t m) {
  if (form.degree() != 2 * m && !form.coefficients.empty()) {
    throw InvalidInput("binary form of degree " + std::to_string(form.degree()) +
                       " cannot be split over z_0..z_" + std::to_string(m));
  }
  QuadraticForm q;
  q.m = m;
  for (std::size_t d = 0; d < form.coefficients.size(); ++d) {
    if (form.coefficients[d] == 0) continue;
    const std::size_t hi = (d + 1) / 2;
    const std::size_t lo = d / 2;
    q.terms[{lo, hi}] += form.coefficients[d];
  }
  return q;
}

bool equivalent_on_normal_curve(const QuadraticForm& a, const QuadraticForm& b) {
  return a.m == b.m && a.pullback() == b.pullback();
}

std::string SingularityRecord::label() const {
  if (kind == Kind::CyclicQuotientPair) return "C^2/Z_" + std::to_string(order);
  return "A_" + std::to_string(order);
}

std::vector<SingularityRecord> singularities(const LVector& lvec, const ConformalInvariant& lambdas,
                                             std::size_t m) {
  if (m < 1) throw InvalidInput("m must be positive");
  std::vector<SingularityRecord> out;
  if (m > 1) {
    out.push_back({SingularityRecord::Kind::CyclicQuotientPair, m, std::nullopt, std::nullopt});
  }
  for (std::size_t i = 1; i <= lvec.l.size(); ++i) {
    if (lvec.at(i) > 1) {
      out.push_back({SingularityRecord::Kind::RealA, lvec.at(i) - 1, i, lambdas.at(i)});
    }
  }
  return out;
}

std::vector<FiberPoint> reducible_fibers(const LVector& lvec, const ConformalInvariant& lambdas) {
  std::vector<FiberPoint> out;
  for (std::size_t i = 1; i <= lvec.l.size(); ++i) {
    if (lvec.at(i) > 0) out.push_back({i, lambdas.at(i)});
  }
  ensure(!out.empty() && out.back().lambda.is_infinite(), "the fiber over inf is always reducible");
  return out;
}

std::vector<FiberPoint> irreducible_marked_fibers(const LVector& lvec, const ConformalInvariant& lambdas) {
  std::vector<FiberPoint> out;
  for (std::size_t i = 1; i <= lvec.l.size(); ++i) {
    if (lvec.at(i) == 0) out.push_back({i, lambdas.at(i)});
  }
  return out;
}

std::optional<long> moduli_dimension(const LVector& lvec) {
  if (lvec.m() < 2) return std::nullopt;
  const auto positive = std::count_if(lvec.l.begin(), lvec.l.end(), [](std::size_t v) { return v > 0; });
  return static_cast<long>(positive) - 3;
}

std::vector<std::size_t> fixed_lines(const LVector& lvec) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= lvec.l.size(); ++i) {
    if (lvec.at(i) == 0) out.push_back(i);
  }
  return out;
}

MinitwistorModel build_minitwistor(const MarkedSequence& seq, const ConformalInvariant& lambdas,
                                   int c_sign) {
  if (lambdas.n() != seq.n()) {
    throw InvalidInput("sequence has n = " + std::to_string(seq.n()) + " but " +
                       std::to_string(lambdas.values().size()) + " lambda values were given");
  }
  MinitwistorModel model;
  model.n = seq.n();
  model.l = l_vector(seq);
  model.m = model.l.m();
  model.lambdas = lambdas;
  model.c_sign = c_sign;
  model.rhs = rhs_polynomial(model.l, lambdas, c_sign);
  model.q = quadratic_split(model.rhs, model.m);
  ensure(model.q.pullback() == model.rhs, "quadratic split does not pull back to the rhs");
  model.ambient_dim = model.m + 2;
  model.surface_degree = 2 * model.m;
  model.dim_vm = model.m + 1;
  model.dim_wm = model.m + 3;
  model.singular_points = singularities(model.l, lambdas, model.m);
  model.reducible = reducible_fibers(model.l, lambdas);
  model.irreducible = irreducible_marked_fibers(model.l, lambdas);
  model.moduli_dim = moduli_dimension(model.l);
  model.fixed = fixed_lines(model.l);
  return model;
}

}  // namespace mtf
