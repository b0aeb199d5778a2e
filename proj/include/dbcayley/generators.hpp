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

#ifndef DBCAYLEY_GENERATORS_HPP
#define DBCAYLEY_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dbcayley/group.hpp"
#include "dbcayley/numeric.hpp"

namespace dbcayley {

enum class ConstructionKind {
  kShiftDirected,      // first construction, digraph; parameters (k, d)
  kShiftUndirected,    // first construction, graph; parameters (k, d)
  kBlockDirected,      // second construction, digraph; parameters (k, l, t, m)
  kBlockUndirected,    // second construction, graph; parameters (k, l, t, m)
};

/// One of the four constructions with its parameters. Canonical text forms:
///   thm1:k=4,d=3   thm2:k=4,d=5   thm3:k=3,l=2,t=2,m=1   thm4:k=2,l=2,t=2,m=1
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::kShiftDirected;
  int k = 0;
  int d = 0;    // first construction only
  int ell = 0;  // second construction only
  int t = 0;
  int m = 0;

  static ConstructionSpec shift_directed(int k, int d);
  static ConstructionSpec shift_undirected(int k, int d);
  static ConstructionSpec block_directed(int k, int ell, int t, int m);
  static ConstructionSpec block_undirected(int k, int ell, int t, int m);

  bool directed() const;
  bool first_construction() const;
  int claimed_diameter() const { return k; }

  /// Throws ParameterError naming the violated bound.
  void check() const;

  /// Group parameters (t, r) of the construction; calls check().
  GroupParams params() const;

  std::string to_string() const;

  friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

/// Parses the canonical "thmN:key=value,..." form. Throws ParameterError.
ConstructionSpec parse_spec(std::string_view text);

class GeneratorSet {
 public:
  GeneratorSet(GroupParams params, std::vector<GroupElement> elements, bool directed,
               std::optional<ConstructionSpec> spec, std::size_t expected_size);

  const GroupParams& params() const { return params_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool directed() const { return directed_; }
  const std::optional<ConstructionSpec>& spec() const { return spec_; }
  std::size_t expected_size() const { return expected_size_; }

  /// Elements that the construction lists in two different classes. Each
  /// pair is (element, (first class, second class)); the set stores it once.
  struct Overlap {
    GroupElement element;
    int first_class;
    int second_class;
  };
  const std::vector<Overlap>& overlaps() const { return overlaps_; }
  void set_overlaps(std::vector<Overlap> overlaps) { overlaps_ = std::move(overlaps); }

  /// Appends without any checking; used to exercise the validator.
  void push_back_unchecked(GroupElement element) { elements_.push_back(std::move(element)); }

 private:
  GroupParams params_;
  std::vector<GroupElement> elements_;
  bool directed_;
  std::optional<ConstructionSpec> spec_;
  std::size_t expected_size_;
  std::vector<Overlap> overlaps_;
};

/// r = k-1, t = d-k+3. Shift-and-add elements (a,0,...,0;1) for a in Z_t, then
/// pure shifts (0,...,0;s) for 2 <= s <= r-1. Size d.
GeneratorSet shift_directed_set(int k, int d);

/// r = k-1, t = floor((d-k)/2)+2. The t shift-and-add elements, their t
/// inverses, then pure shifts for 2 <= s <= r-2. Size 2t+r-3 <= d.
GeneratorSet shift_undirected_set(int k, int d);

/// r = (k-1)l+m. All t^l long elements (a_1..a_l,0..0;l), then the
/// (r-1)t^m-1 non-identity short elements (a_1..a_m,0..0;s) with s != l.
GeneratorSet block_directed_set(int k, int ell, int t, int m);

/// The six classes of the undirected second construction, in order:
/// long, long inverses, short (s not in {0,l}), short inverses,
/// short with s = 0, pure shifts with s not in {0,l,-l}.
std::array<std::vector<GroupElement>, 6> block_undirected_classes(int k, int ell, int t, int m);

/// Union of block_undirected_classes(), each element stored once. Elements
/// that appear in two classes are recorded in overlaps(); expected_size()
/// keeps the closed-form count 2t^l+(2r-3)t^m-r.
GeneratorSet block_undirected_set(int k, int ell, int t, int m);

GeneratorSet build(const ConstructionSpec& spec);

/// Closed-form degree for a spec (d for thm1, 2t+r-3 for thm2, ...).
BigInt formula_degree(const ConstructionSpec& spec);

/// Distinct elements in the undirected second construction:
/// formula_degree minus 2 * sum_{s=1}^{m-1} (t^{m-s} - 1).
BigInt block_undirected_distinct_size(int k, int ell, int t, int m);

struct ValidationReport {
  bool distinct = true;
  bool identity_free = true;
  std::optional<bool> symmetric;  // only checked for undirected sets
  bool size_matches = true;
  std::size_t actual_size = 0;
  std::size_t expected_size = 0;
  std::optional<int> degree_slack;  // thm2: d - |S|
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

ValidationReport validate(const GeneratorSet& set);

/// Parameters chosen for the t = 2 corollary instances.
struct CorollaryParams {
  int k = 0;
  int t = 2;
  int ell = 0;
  int r = 0;
  int m = 0;
  BigInt directed_degree;    // 2^l + (r-1) 2^m - 1
  BigInt undirected_degree;  // 2^(l+1) + (2r-3) 2^m - r
};

/// True iff log2(k^2 l) <= (3/4) l, decided as (k^2 l)^4 <= 2^(3l).
bool corollary_condition(int k, int ell);

/// k >= 3. With ell unset the smallest l satisfying corollary_condition is
/// used. r = ceil(k l - log2(k^2 l)), m = r - (k-1) l.
CorollaryParams corollary_params(int k, std::optional<int> ell);

/// Parses "cor:k=K[,l=L|auto][,mode=directed|undirected]" or any thmN spec.
struct ResolvedSpec {
  ConstructionSpec spec;
  std::optional<CorollaryParams> corollary;
};
ResolvedSpec resolve_spec(std::string_view text);

}  // namespace dbcayley

#endif  // DBCAYLEY_GENERATORS_HPP
