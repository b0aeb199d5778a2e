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

#ifndef DBCAYLEY_BOUNDS_HPP
#define DBCAYLEY_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dbcayley/generators.hpp"
#include "dbcayley/numeric.hpp"

namespace dbcayley {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  static Interval exact(const Rational& value) { return {value, value}; }
  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
/// Product of intervals; general sign handling.
Interval operator*(const Interval& a, const Interval& b);
/// Quotient; throws ParameterError if b contains zero.
Interval operator/(const Interval& a, const Interval& b);
/// a^n for a with lo >= 0.
Interval pow(const Interval& a, unsigned n);

/// Rational enclosure of log2(x) for x > 0, of width at most 2^-bits.
/// Exact when x is a power of two.
Interval log2_enclosure(const Rational& x, unsigned bits = 48);
/// log2 over an interval with lo > 0.
Interval log2_enclosure(const Interval& x, unsigned bits = 48);

enum class Verdict { kHolds, kFails, kBoundary };
std::string to_string(Verdict verdict);

/// Decides a >= b (or a > b when strict) from enclosures. kBoundary means the
/// enclosures overlap and no verdict is possible.
Verdict compare_at_least(const Interval& a, const Interval& b, bool strict = false);

/// Directed: 1 + d + ... + d^k. Undirected: 1 + d((d-1)^k - 1)/(d-2) for d >= 3,
/// 2k+1 for d = 2, 2 for d = 1.
BigInt moore_bound(int d, int k, bool directed);

/// Orders of the cited comparator families at (d, k). Keys present only
/// inside each family's validity range:
///   vetrik   k floor(d/2)^k           (digraphs, k >= 3, d >= 4)
///   mssv     k floor((d+1)/3)^k       (graphs, k >= 3, d >= 5)
///   mss      k(2 floor((d-2)/6)+1)^k - k  (graphs, k >= 3, d >= 5)
///   debruijn d^k (directed) or floor(d/2)^k (undirected)
///   moore    moore_bound(d, k, directed)
std::map<std::string, BigInt> competitor_orders(int d, int k, bool directed);

/// Closed-form order of a construction, evaluated directly rather than
/// through GroupParams.
BigInt construction_order(const ConstructionSpec& spec);

/// Directed: (1/k)(k/(k+2) (d+1))^k, exact.
/// Undirected: (1/k)(k/(2k+4) (d + k log2(d/2) - log2 log2 d - log2 8k^2))^k,
/// enclosed.
Interval corollary_lower_bound(int k, int d, bool directed);

struct CertificateCheck {
  std::string name;
  Verdict verdict;
  std::string lhs;  // decimal renderings of the enclosures, informational
  std::string rhs;
};

struct CorollaryCertificate {
  int k = 0;
  int ell = 0;
  int r = 0;
  int m = 0;
  bool directed = true;
  BigInt d;
  BigInt order;
  Interval theta;       // log2(k^2 l) / (k l)
  Interval n0;          // (1/k - log2(k^2 l)/(k^2 l)) 2^(k l)
  Interval degree_cap;  // d+ (directed) or q (undirected)
  Interval lower_bound; // corollary_lower_bound(k, d, directed)
  std::vector<CertificateCheck> checks;
  bool inequality_holds = false;  // every check is kHolds
};

/// Evaluates the chain of inequalities behind the t = 2 corollary for the
/// instance chosen by corollary_params(k, ell); ell unset selects it automatically.
CorollaryCertificate corollary_certificate(int k, std::optional<int> ell, bool directed = true);

struct OptimalEll {
  int ell = 0;
  int m = 0;
  BigInt degree;      // t^l + (r-1) t^m - 1
  double continuous;  // (r + log_t((k-1)(r-1))) / k
};

/// Exhaustive search over l >= 2 with 0 < r - (k-1)l < l; ties go to the
/// smaller l. Throws ParameterError when no l is valid.
OptimalEll optimal_ell(int k, int t, int r);

/// Degree of the directed second construction with r fixed.
BigInt block_directed_degree(int k, int t, int r, int ell);

struct SecondConstruction {
  ConstructionSpec spec;
  BigInt order;
  BigInt degree;
};

/// Largest second-construction order with degree <= d and diameter k.
std::optional<SecondConstruction> best_second_construction(int d, int k, bool directed);

struct BoundRow {
  int k = 0;
  int d = 0;
  bool directed = true;
  std::optional<BigInt> our_order;  // first construction, when (k, d) is valid
  std::optional<SecondConstruction> second;
  std::map<std::string, BigInt> competitor_orders;
  std::string winner;  // among Cayley constructions: thm1/thm2, second, vetrik, mssv, mss
};

BoundRow compare(int d, int k, bool directed);

}  // namespace dbcayley

#endif  // DBCAYLEY_BOUNDS_HPP
