// Copyright 2026 The dbcayley Authors.
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

#include "dbcayley/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace dbcayley {

namespace {

Rational power_of_two(long exponent) {
  if (exponent >= 0) return Rational(BigInt(1) << exponent);
  return Rational(BigInt(1), BigInt(1) << -exponent);
}

std::string render(const Interval& x) {
  if (x.is_exact()) return to_decimal(x.lo, 6);
  if (x.width() < Rational(1, 1'000'000'000)) return "~" + to_decimal(x.lo, 6);
  return "[" + to_decimal(x.lo, 6) + ", " + to_decimal(x.hi, 6) + "]";
}

CertificateCheck make_check(std::string name, Verdict verdict, const Interval& lhs,
                            const Interval& rhs) {
  return {std::move(name), verdict, render(lhs), render(rhs)};
}

Verdict overlap_verdict(const Interval& a, const Interval& b) {
  return (a.lo <= b.hi && b.lo <= a.hi) ? Verdict::kHolds : Verdict::kFails;
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(std::begin(p), std::end(p)),
          *std::max_element(std::begin(p), std::end(p))};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw ParameterError("interval division by an interval containing 0");
  return a * Interval{1 / b.hi, 1 / b.lo};
}

Interval pow(const Interval& a, unsigned n) {
  if (a.lo < 0) throw ParameterError("interval power requires a nonnegative base");
  return {pow_rational(a.lo, n), pow_rational(a.hi, n)};
}

Interval log2_enclosure(const Rational& x, unsigned bits) {
  if (x <= 0) throw ParameterError("log2 of a nonpositive value");
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  long n = static_cast<long>(floor_log2(num)) - static_cast<long>(floor_log2(den));
  while (power_of_two(n) > x) --n;
  while (power_of_two(n + 1) <= x) ++n;

  const Rational y = x / power_of_two(n);
  if (y == 1) return Interval::exact(Rational(n));

  // y in (1, 2) held as [lo, hi] / 2^precision. Each squaring decides one
  // fractional bit of log2(y) and at most doubles the relative width.
  const unsigned precision = 2 * bits + 64;
  const BigInt scale = BigInt(1) << precision;
  const BigInt two = scale << 1;
  const Rational scaled = y * Rational(scale);
  BigInt lo = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  BigInt hi = lo + 1;

  BigInt fraction = 0;
  unsigned decided = 0;
  for (unsigned j = 1; j <= bits; ++j) {
    lo = (lo * lo) >> precision;
    hi = (hi * hi + scale - 1) >> precision;
    if (lo >= two) {
      fraction = (fraction << 1) | 1;
      lo >>= 1;
      hi = (hi + 1) >> 1;
    } else if (hi < two) {
      fraction <<= 1;
    } else {
      break;
    }
    decided = j;
  }
  const Rational base = Rational(n) + Rational(fraction, BigInt(1) << decided);
  return {base, base + Rational(BigInt(1), BigInt(1) << decided)};
}

Interval log2_enclosure(const Interval& x, unsigned bits) {
  return {log2_enclosure(x.lo, bits).lo, log2_enclosure(x.hi, bits).hi};
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kBoundary: return "boundary";
  }
  return "?";
}

Verdict compare_at_least(const Interval& a, const Interval& b, bool strict) {
  if (strict) {
    if (a.lo > b.hi) return Verdict::kHolds;
    if (a.hi <= b.lo) return Verdict::kFails;
  } else {
    if (a.lo >= b.hi) return Verdict::kHolds;
    if (a.hi < b.lo) return Verdict::kFails;
  }
  return Verdict::kBoundary;
}

BigInt moore_bound(int d, int k, bool directed) {
  if (d < 1 || k < 1) throw ParameterError("Moore bound requires d >= 1 and k >= 1");
  if (directed) {
    BigInt sum = 0;
    BigInt term = 1;
    for (int i = 0; i <= k; ++i) {
      sum += term;
      term *= d;
    }
    return sum;
  }
  if (d == 1) return 2;
  if (d == 2) return BigInt(2) * k + 1;
  return 1 + BigInt(d) * (pow_big(d - 1, k) - 1) / (d - 2);
}

std::map<std::string, BigInt> competitor_orders(int d, int k, bool directed) {
  if (d < 1 || k < 1) throw ParameterError("comparator orders require d >= 1 and k >= 1");
  std::map<std::string, BigInt> orders;
  const auto K = static_cast<unsigned>(k);
  if (directed) {
    if (k >= 3 && d >= 4) orders["vetrik"] = k * pow_big(d / 2, K);
    orders["debruijn"] = pow_big(d, K);
  } else {
    if (k >= 3 && d >= 5) {
      orders["mssv"] = k * pow_big((d + 1) / 3, K);
      orders["mss"] = k * pow_big(2 * ((d - 2) / 6) + 1, K) - k;
    }
    orders["debruijn"] = pow_big(d / 2, K);
  }
  orders["moore"] = moore_bound(d, k, directed);
  return orders;
}

BigInt construction_order(const ConstructionSpec& spec) {
  spec.check();
  const auto k = static_cast<unsigned>(spec.k);
  switch (spec.kind) {
    case ConstructionKind::kShiftDirected:
      return BigInt(k - 1) * pow_big(spec.d - spec.k + 3, k - 1);
    case ConstructionKind::kShiftUndirected:
      return BigInt(k - 1) * pow_big((spec.d - spec.k) / 2 + 2, k - 1);
    case ConstructionKind::kBlockDirected:
    case ConstructionKind::kBlockUndirected: {
      const auto r = static_cast<unsigned>((spec.k - 1) * spec.ell + spec.m);
      return BigInt(r) * pow_big(spec.t, r);
    }
  }
  return 0;
}

Interval corollary_lower_bound(int k, int d, bool directed) {
  if (k < 3) throw ParameterError("corollary bounds require k >= 3");
  if (d < 1) throw ParameterError("corollary bounds require d >= 1");
  const auto K = static_cast<unsigned>(k);
  if (directed) {
    const Rational base = Rational(k, k + 2) * (d + 1);
    return Interval::exact(pow_rational(base, K) / k);
  }
  if (d < 3) throw ParameterError("undirected corollary bound requires d >= 3");
  const Interval log_half_d = log2_enclosure(Rational(d, 2));
  const Interval log_log_d = log2_enclosure(log2_enclosure(Rational(d)));
  const Interval log_8k2 = log2_enclosure(Rational(8 * k * k));
  const Interval inner = Interval::exact(d) + Interval::exact(k) * log_half_d - log_log_d - log_8k2;
  if (inner.lo <= 0) {
    throw ParameterError("undirected corollary bound is not positive at d=" + std::to_string(d));
  }
  const Interval factor = Interval::exact(Rational(k, 2 * k + 4)) * inner;
  return pow(factor, K) / Interval::exact(k);
}

CorollaryCertificate corollary_certificate(int k, std::optional<int> ell_choice, bool directed) {
  const CorollaryParams p = corollary_params(k, ell_choice);
  const int ell = p.ell;
  CorollaryCertificate cert;
  cert.k = k;
  cert.ell = p.ell;
  cert.r = p.r;
  cert.m = p.m;
  cert.directed = directed;
  cert.d = directed ? p.directed_degree : p.undirected_degree;
  cert.order = BigInt(p.r) * pow_big(2, static_cast<unsigned>(p.r));

  const auto K = static_cast<unsigned>(k);
  const BigInt k2l = BigInt(k) * k * ell;
  const Interval log_k2l = log2_enclosure(Rational(k2l));
  const Interval kl = Interval::exact(Rational(k) * ell);
  const Interval two_kl = Interval::exact(Rational(pow_big(2, K * ell)));
  const Interval two_l = Interval::exact(Rational(pow_big(2, static_cast<unsigned>(ell))));
  const Interval one = Interval::exact(1);
  const Interval kk = Interval::exact(k);

  cert.theta = log_k2l / kl;
  cert.n0 = (kl - log_k2l) * two_kl / Interval::exact(Rational(k2l));
  const Interval q =
      (Interval::exact(1 + Rational(2, k)) - Interval::exact(2) * log_k2l / Interval::exact(Rational(k2l))) *
      two_l;
  cert.degree_cap = directed ? q - one : q;
  if (cert.d > INT32_MAX) throw ParameterError("corollary degree too large for the bound evaluation");
  cert.lower_bound = corollary_lower_bound(k, static_cast<int>(cert.d), directed);

  const Interval order = Interval::exact(Rational(cert.order));
  const Interval degree = Interval::exact(Rational(cert.d));
  auto& checks = cert.checks;

  checks.push_back(make_check("log2(k^2 l) <= 3l/4", corollary_condition(k, ell) ? Verdict::kHolds : Verdict::kFails,
                              log_k2l, Interval::exact(Rational(3 * ell, 4))));
  checks.push_back(make_check("0 < m < l", (0 < p.m && p.m < p.ell) ? Verdict::kHolds : Verdict::kFails,
                              Interval::exact(p.m), Interval::exact(p.ell)));
  const Interval three_over_4k = Interval::exact(Rational(3, 4 * k));
  checks.push_back(make_check("theta <= 3/(4k)", compare_at_least(three_over_4k, cert.theta),
                              cert.theta, three_over_4k));
  checks.push_back(make_check("3/(4k) <= 1/4",
                              compare_at_least(Interval::exact(Rational(1, 4)), three_over_4k),
                              three_over_4k, Interval::exact(Rational(1, 4))));
  const Interval theta_cap = Interval::exact(Rational(k - 2, 2 * k - 2));
  checks.push_back(make_check("theta <= (k-2)/(2k-2)", compare_at_least(theta_cap, cert.theta),
                              cert.theta, theta_cap));
  checks.push_back(make_check("order >= n0", compare_at_least(order, cert.n0), order, cert.n0));

  const Interval ratio = kk * cert.n0 / pow(Interval::exact(Rational(k, k + 2)) * q, K);
  if (directed) {
    checks.push_back(make_check("d < d+", compare_at_least(cert.degree_cap, degree, true), degree,
                                cert.degree_cap));
    checks.push_back(make_check("k n0 (k/(k+2) (d+ + 1))^-k >= 1", compare_at_least(ratio, one),
                                ratio, one));
    const Interval two_theta = Interval::exact(2) * cert.theta;
    const Interval via_theta =
        (one - cert.theta) * pow(one + two_theta / (Interval::exact(k + 2) - two_theta), K);
    checks.push_back(make_check("k n0 (k/(k+2) (d+ + 1))^-k = (1-theta)(1+2theta/(k+2-2theta))^k",
                                overlap_verdict(ratio, via_theta), ratio, via_theta));
    const Interval bernoulli =
        (one - cert.theta) * (one + kk * two_theta / (Interval::exact(k + 2) - two_theta));
    checks.push_back(make_check("(1-theta)(1+2k theta/(k+2-2theta)) >= 1",
                                compare_at_least(bernoulli, one), bernoulli, one));
  } else {
    const Interval half_sum = Interval::exact(Rational(cert.d + p.r, 2));
    checks.push_back(make_check("(d+r)/2 < q", compare_at_least(q, half_sum, true), half_sum, q));
    const Interval rhs = pow(kk * q / Interval::exact(k + 2), K);
    const Interval lhs = kk * cert.n0;
    checks.push_back(make_check("k n0 > (k q/(k+2))^k", compare_at_least(lhs, rhs, true), lhs, rhs));
    const Interval r_floor = kk * log2_enclosure(Rational(cert.d, 2)) -
                             log2_enclosure(log2_enclosure(Rational(cert.d))) -
                             log2_enclosure(Rational(8 * k * k));
    const Interval r_value = Interval::exact(p.r);
    checks.push_back(make_check("r > k log2(d/2) - log2 log2 d - log2 8k^2",
                                compare_at_least(r_value, r_floor, true), r_value, r_floor));
  }
  checks.push_back(make_check("order >= corollary lower bound",
                              compare_at_least(order, cert.lower_bound), order, cert.lower_bound));

  cert.inequality_holds = std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) {
    return c.verdict == Verdict::kHolds;
  });
  return cert;
}

BigInt block_directed_degree(int k, int t, int r, int ell) {
  const int m = r - (k - 1) * ell;
  if (m < 0) throw ParameterError("block length exceeds r");
  return pow_big(t, static_cast<unsigned>(ell)) + BigInt(r - 1) * pow_big(t, static_cast<unsigned>(m)) - 1;
}

OptimalEll optimal_ell(int k, int t, int r) {
  if (k < 2 || t < 2 || r < 3) {
    throw ParameterError("optimal_ell requires k >= 2, t >= 2, r >= 3");
  }
  std::optional<OptimalEll> best;
  for (int ell = 2; ell <= r; ++ell) {
    const long m = static_cast<long>(r) - static_cast<long>(k - 1) * ell;
    if (!(0 < m && m < ell)) continue;
    BigInt degree = block_directed_degree(k, t, r, ell);
    if (!best || degree < best->degree) {
      best = OptimalEll{ell, static_cast<int>(m), std::move(degree), 0.0};
    }
  }
  if (!best) {
    throw ParameterError("no block length l gives 0 < r-(k-1)l < l for k=" + std::to_string(k) +
                         ", r=" + std::to_string(r));
  }
  best->continuous =
      (r + std::log(static_cast<double>(k - 1) * (r - 1)) / std::log(static_cast<double>(t))) / k;
  return *best;
}

std::optional<SecondConstruction> best_second_construction(int d, int k, bool directed) {
  if (k < 2 || d < 1) return std::nullopt;
  std::optional<SecondConstruction> best;
  const BigInt cap = d;
  for (int t = 2; BigInt(t) * t <= cap; ++t) {
    for (int ell = 2; pow_big(t, static_cast<unsigned>(ell)) <= cap; ++ell) {
      for (int m = 1; m < ell; ++m) {
        const ConstructionSpec spec = directed ? ConstructionSpec::block_directed(k, ell, t, m)
                                               : ConstructionSpec::block_undirected(k, ell, t, m);
        BigInt degree = directed ? formula_degree(spec)
                                 : block_undirected_distinct_size(k, ell, t, m);
        if (degree > cap) break;
        BigInt order = construction_order(spec);
        if (!best || order > best->order) {
          best = SecondConstruction{spec, std::move(order), std::move(degree)};
        }
      }
    }
  }
  return best;
}

BoundRow compare(int d, int k, bool directed) {
  BoundRow row;
  row.k = k;
  row.d = d;
  row.directed = directed;
  row.competitor_orders = competitor_orders(d, k, directed);
  const bool first_valid = k >= 4 && d >= (directed ? k - 1 : k + 1);
  if (first_valid) {
    row.our_order = construction_order(directed ? ConstructionSpec::shift_directed(k, d)
                                                : ConstructionSpec::shift_undirected(k, d));
  }
  row.second = best_second_construction(d, k, directed);

  std::vector<std::pair<std::string, const BigInt*>> candidates;
  if (row.our_order) candidates.emplace_back(directed ? "thm1" : "thm2", &*row.our_order);
  if (row.second) candidates.emplace_back("second", &row.second->order);
  for (const char* name : {"vetrik", "mssv", "mss"}) {
    if (auto it = row.competitor_orders.find(name); it != row.competitor_orders.end()) {
      candidates.emplace_back(name, &it->second);
    }
  }
  row.winner = "none";
  const BigInt* best = nullptr;
  for (const auto& [name, order] : candidates) {
    if (!best || *order > *best) {
      best = order;
      row.winner = name;
    }
  }
  return row;
}

}  // namespace dbcayley
