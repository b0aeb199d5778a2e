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

#include "dbcayley/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace dbcayley {

namespace {

constexpr std::uint64_t kMaxGenerators = std::uint64_t{1} << 24;

std::string kind_tag(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::kShiftDirected: return "thm1";
    case ConstructionKind::kShiftUndirected: return "thm2";
    case ConstructionKind::kBlockDirected: return "thm3";
    case ConstructionKind::kBlockUndirected: return "thm4";
  }
  return "?";
}

[[noreturn]] void violated(const ConstructionSpec& spec, const std::string& bound) {
  throw ParameterError(kind_tag(spec.kind) + " requires " + bound + " (got " +
                       spec.to_string() + ")");
}

std::int64_t block_length(const ConstructionSpec& spec) {
  return static_cast<std::int64_t>(spec.k - 1) * spec.ell + spec.m;
}

// Calls f(a) for every a in Z_t^len, coordinate 0 varying fastest.
template <typename F>
void for_each_block(std::uint32_t t, std::uint32_t len, F&& f) {
  std::vector<std::int64_t> a(len, 0);
  while (true) {
    f(std::span<const std::int64_t>(a));
    std::uint32_t i = 0;
    while (i < len && ++a[i] == static_cast<std::int64_t>(t)) a[i++] = 0;
    if (i == len) break;
  }
}

GroupElement padded(const GroupParams& params, std::span<const std::int64_t> prefix,
                    std::int64_t shift) {
  std::vector<std::int64_t> v(params.r(), 0);
  std::copy(prefix.begin(), prefix.end(), v.begin());
  return GroupElement(params, v, shift);
}

bool all_zero(std::span<const std::int64_t> a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

void check_materializable(const ConstructionSpec& spec) {
  const BigInt size = formula_degree(spec);
  if (size > kMaxGenerators) {
    throw ParameterError("generator set of " + spec.to_string() + " has " + size.str() +
                         " elements, more than the 2^24 that can be materialized");
  }
}

int parse_int(std::string_view key, std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("value of '" + std::string(key) + "' is not an integer: '" +
                         std::string(text) + "'");
  }
  return value;
}

// Splits "tag:k1=v1,k2=v2" into the tag and a key/value map.
std::pair<std::string, std::map<std::string, std::string>> split_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParameterError("spec '" + std::string(text) + "' lacks a ':' after the construction tag");
  }
  std::string tag(text.substr(0, colon));
  std::map<std::string, std::string> fields;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParameterError("malformed field '" + std::string(item) + "' in spec '" +
                           std::string(text) + "'");
    }
    std::string key(item.substr(0, eq));
    if (!fields.emplace(key, std::string(item.substr(eq + 1))).second) {
      throw ParameterError("duplicate field '" + key + "' in spec '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return {std::move(tag), std::move(fields)};
}

int take(std::map<std::string, std::string>& fields, const std::string& key,
         std::string_view text) {
  auto it = fields.find(key);
  if (it == fields.end()) {
    throw ParameterError("spec '" + std::string(text) + "' is missing field '" + key + "'");
  }
  const int value = parse_int(key, it->second);
  fields.erase(it);
  return value;
}

void reject_leftovers(const std::map<std::string, std::string>& fields, std::string_view text) {
  if (!fields.empty()) {
    throw ParameterError("unknown field '" + fields.begin()->first + "' in spec '" +
                         std::string(text) + "'");
  }
}

}  // namespace

ConstructionSpec ConstructionSpec::shift_directed(int k, int d) {
  return {ConstructionKind::kShiftDirected, k, d, 0, 0, 0};
}
ConstructionSpec ConstructionSpec::shift_undirected(int k, int d) {
  return {ConstructionKind::kShiftUndirected, k, d, 0, 0, 0};
}
ConstructionSpec ConstructionSpec::block_directed(int k, int ell, int t, int m) {
  return {ConstructionKind::kBlockDirected, k, 0, ell, t, m};
}
ConstructionSpec ConstructionSpec::block_undirected(int k, int ell, int t, int m) {
  return {ConstructionKind::kBlockUndirected, k, 0, ell, t, m};
}

bool ConstructionSpec::directed() const {
  return kind == ConstructionKind::kShiftDirected || kind == ConstructionKind::kBlockDirected;
}

bool ConstructionSpec::first_construction() const {
  return kind == ConstructionKind::kShiftDirected || kind == ConstructionKind::kShiftUndirected;
}

void ConstructionSpec::check() const {
  switch (kind) {
    case ConstructionKind::kShiftDirected:
      if (k < 4) violated(*this, "k >= 4");
      if (d < k - 1) violated(*this, "d >= k-1");
      break;
    case ConstructionKind::kShiftUndirected:
      if (k < 4) violated(*this, "k >= 4");
      if (d < k + 1) violated(*this, "d >= k+1");
      break;
    case ConstructionKind::kBlockDirected:
    case ConstructionKind::kBlockUndirected:
      if (k < 2) violated(*this, "k >= 2");
      if (ell < 2) violated(*this, "l >= 2");
      if (t < 2) violated(*this, "t >= 2");
      if (m <= 0) violated(*this, "m > 0");
      if (m >= ell) violated(*this, "m < l");
      if (block_length(*this) > INT32_MAX) violated(*this, "r = (k-1)l+m to fit in 32 bits");
      break;
  }
}

GroupParams ConstructionSpec::params() const {
  check();
  if (first_construction()) {
    const int r = k - 1;
    const int t_value = directed() ? d - k + 3 : (d - k) / 2 + 2;
    return GroupParams(t_value, r);
  }
  return GroupParams(t, block_length(*this));
}

std::string ConstructionSpec::to_string() const {
  std::string out = kind_tag(kind) + ":k=" + std::to_string(k);
  if (first_construction()) {
    out += ",d=" + std::to_string(d);
  } else {
    out += ",l=" + std::to_string(ell) + ",t=" + std::to_string(t) + ",m=" + std::to_string(m);
  }
  return out;
}

ConstructionSpec parse_spec(std::string_view text) {
  auto [tag, fields] = split_spec(text);
  ConstructionSpec spec;
  if (tag == "thm1" || tag == "thm2") {
    const int k = take(fields, "k", text);
    const int d = take(fields, "d", text);
    spec = tag == "thm1" ? ConstructionSpec::shift_directed(k, d)
                         : ConstructionSpec::shift_undirected(k, d);
  } else if (tag == "thm3" || tag == "thm4") {
    const int k = take(fields, "k", text);
    const int ell = take(fields, "l", text);
    const int t = take(fields, "t", text);
    const int m = take(fields, "m", text);
    spec = tag == "thm3" ? ConstructionSpec::block_directed(k, ell, t, m)
                         : ConstructionSpec::block_undirected(k, ell, t, m);
  } else {
    throw ParameterError("unknown construction '" + tag + "' (expected thm1..thm4 or cor)");
  }
  reject_leftovers(fields, text);
  spec.check();
  return spec;
}

GeneratorSet::GeneratorSet(GroupParams params, std::vector<GroupElement> elements, bool directed,
                           std::optional<ConstructionSpec> spec, std::size_t expected_size)
    : params_(params),
      elements_(std::move(elements)),
      directed_(directed),
      spec_(std::move(spec)),
      expected_size_(expected_size) {
  for (const GroupElement& g : elements_) {
    if (g.params() != params_) throw MismatchError("generator from a different group");
  }
}

BigInt formula_degree(const ConstructionSpec& spec) {
  spec.check();
  const std::int64_t r = spec.first_construction() ? spec.k - 1 : block_length(spec);
  switch (spec.kind) {
    case ConstructionKind::kShiftDirected:
      return BigInt(spec.d);
    case ConstructionKind::kShiftUndirected: {
      const std::int64_t t = (spec.d - spec.k) / 2 + 2;
      return BigInt(2 * t + r - 3);
    }
    case ConstructionKind::kBlockDirected:
      return pow_big(spec.t, spec.ell) + (r - 1) * pow_big(spec.t, spec.m) - 1;
    case ConstructionKind::kBlockUndirected:
      return 2 * pow_big(spec.t, spec.ell) + (2 * r - 3) * pow_big(spec.t, spec.m) - r;
  }
  return 0;
}

BigInt block_undirected_distinct_size(int k, int ell, int t, int m) {
  BigInt size = formula_degree(ConstructionSpec::block_undirected(k, ell, t, m));
  for (int s = 1; s < m; ++s) size -= 2 * (pow_big(t, m - s) - 1);
  return size;
}

GeneratorSet shift_directed_set(int k, int d) {
  const ConstructionSpec spec = ConstructionSpec::shift_directed(k, d);
  const GroupParams params = spec.params();
  check_materializable(spec);
  const std::uint32_t r = params.r();
  std::vector<GroupElement> elements;
  for (std::uint32_t a = 0; a < params.t(); ++a) {
    const std::int64_t prefix[] = {a};
    elements.push_back(padded(params, prefix, 1));
  }
  for (std::uint32_t s = 2; s + 1 <= r; ++s) elements.push_back(padded(params, {}, s));
  return GeneratorSet(params, std::move(elements), true, spec, static_cast<std::size_t>(d));
}

GeneratorSet shift_undirected_set(int k, int d) {
  const ConstructionSpec spec = ConstructionSpec::shift_undirected(k, d);
  const GroupParams params = spec.params();
  check_materializable(spec);
  const std::uint32_t r = params.r();
  std::vector<GroupElement> elements;
  for (std::uint32_t a = 0; a < params.t(); ++a) {
    const std::int64_t prefix[] = {a};
    elements.push_back(padded(params, prefix, 1));
  }
  for (std::uint32_t a = 0; a < params.t(); ++a) elements.push_back(inverse(elements[a]));
  for (std::uint32_t s = 2; s + 2 <= r; ++s) elements.push_back(padded(params, {}, s));
  const auto expected = static_cast<std::size_t>(formula_degree(spec));
  return GeneratorSet(params, std::move(elements), false, spec, expected);
}

GeneratorSet block_directed_set(int k, int ell, int t, int m) {
  const ConstructionSpec spec = ConstructionSpec::block_directed(k, ell, t, m);
  const GroupParams params = spec.params();
  check_materializable(spec);
  const std::uint32_t r = params.r();
  std::vector<GroupElement> elements;
  for_each_block(params.t(), ell, [&](std::span<const std::int64_t> a) {
    elements.push_back(padded(params, a, ell));
  });
  for (std::uint32_t s = 0; s < r; ++s) {
    if (s == static_cast<std::uint32_t>(ell)) continue;
    for_each_block(params.t(), m, [&](std::span<const std::int64_t> a) {
      if (s == 0 && all_zero(a)) return;
      elements.push_back(padded(params, a, s));
    });
  }
  const auto expected = static_cast<std::size_t>(formula_degree(spec));
  return GeneratorSet(params, std::move(elements), true, spec, expected);
}

std::array<std::vector<GroupElement>, 6> block_undirected_classes(int k, int ell, int t, int m) {
  const ConstructionSpec spec = ConstructionSpec::block_undirected(k, ell, t, m);
  const GroupParams params = spec.params();
  check_materializable(spec);
  const std::uint32_t r = params.r();
  const std::uint32_t l = static_cast<std::uint32_t>(ell);
  const std::uint32_t minus_l = (r - l % r) % r;

  std::array<std::vector<GroupElement>, 6> classes;
  for_each_block(params.t(), l, [&](std::span<const std::int64_t> a) {
    classes[0].push_back(padded(params, a, l));
  });
  for (const GroupElement& g : classes[0]) classes[1].push_back(inverse(g));
  for (std::uint32_t s = 1; s < r; ++s) {
    if (s == l) continue;
    for_each_block(params.t(), m, [&](std::span<const std::int64_t> a) {
      if (!all_zero(a)) classes[2].push_back(padded(params, a, s));
    });
  }
  for (const GroupElement& g : classes[2]) classes[3].push_back(inverse(g));
  for_each_block(params.t(), m, [&](std::span<const std::int64_t> a) {
    if (!all_zero(a)) classes[4].push_back(padded(params, a, 0));
  });
  for (std::uint32_t s = 1; s < r; ++s) {
    if (s == l % r || s == minus_l) continue;
    classes[5].push_back(padded(params, {}, s));
  }
  return classes;
}

GeneratorSet block_undirected_set(int k, int ell, int t, int m) {
  const ConstructionSpec spec = ConstructionSpec::block_undirected(k, ell, t, m);
  const GroupParams params = spec.params();
  auto classes = block_undirected_classes(k, ell, t, m);

  std::map<GroupElement, int> owner;
  std::vector<GroupElement> elements;
  std::vector<GeneratorSet::Overlap> overlaps;
  for (int c = 0; c < 6; ++c) {
    for (GroupElement& g : classes[c]) {
      const auto [it, inserted] = owner.emplace(g, c);
      if (inserted) {
        elements.push_back(std::move(g));
      } else {
        overlaps.push_back({g, it->second, c});
      }
    }
  }
  const auto expected = static_cast<std::size_t>(formula_degree(spec));
  GeneratorSet set(params, std::move(elements), false, spec, expected);
  set.set_overlaps(std::move(overlaps));
  return set;
}

GeneratorSet build(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::kShiftDirected: return shift_directed_set(spec.k, spec.d);
    case ConstructionKind::kShiftUndirected: return shift_undirected_set(spec.k, spec.d);
    case ConstructionKind::kBlockDirected:
      return block_directed_set(spec.k, spec.ell, spec.t, spec.m);
    case ConstructionKind::kBlockUndirected:
      return block_undirected_set(spec.k, spec.ell, spec.t, spec.m);
  }
  throw InternalError("unhandled construction kind");
}

ValidationReport validate(const GeneratorSet& set) {
  ValidationReport report;
  report.actual_size = set.size();
  report.expected_size = set.expected_size();

  std::set<GroupElement> seen;
  for (const GroupElement& g : set.elements()) {
    if (g.is_identity()) {
      report.identity_free = false;
      report.failures.push_back("identity element " + g.to_string() + " present");
    }
    if (!seen.insert(g).second) {
      report.distinct = false;
      report.failures.push_back("duplicate element " + g.to_string());
    }
  }
  if (!set.directed()) {
    report.symmetric = true;
    for (const GroupElement& g : set.elements()) {
      const GroupElement inv = inverse(g);
      if (!seen.contains(inv)) {
        report.symmetric = false;
        report.failures.push_back("inverse " + inv.to_string() + " of " + g.to_string() +
                                  " missing");
      }
    }
  }
  for (const auto& overlap : set.overlaps()) {
    report.failures.push_back("element " + overlap.element.to_string() + " listed in classes " +
                              std::to_string(overlap.first_class + 1) + " and " +
                              std::to_string(overlap.second_class + 1));
  }
  if (report.actual_size != report.expected_size) {
    report.size_matches = false;
    report.failures.push_back("size " + std::to_string(report.actual_size) +
                              " differs from the closed-form count " +
                              std::to_string(report.expected_size));
  }
  if (const auto& spec = set.spec();
      spec && spec->kind == ConstructionKind::kShiftUndirected) {
    report.degree_slack = spec->d - static_cast<int>(report.actual_size);
    if (*report.degree_slack < 0) {
      report.failures.push_back("degree " + std::to_string(report.actual_size) +
                                " exceeds d=" + std::to_string(spec->d));
    }
  }
  return report;
}

bool corollary_condition(int k, int ell) {
  if (k < 1 || ell < 1) return false;
  const BigInt n = BigInt(k) * k * ell;
  return pow_big(n, 4) <= pow_big(2, 3 * static_cast<unsigned>(ell));
}

CorollaryParams corollary_params(int k, std::optional<int> ell) {
  if (k < 3) {
    throw ParameterError("corollary parameters require k >= 3 (got k=" + std::to_string(k) + ")");
  }
  int l = 0;
  if (ell) {
    l = *ell;
    if (l < 2 || !corollary_condition(k, l)) {
      throw ParameterError("l=" + std::to_string(l) + " violates log2(k^2 l) <= 3l/4 for k=" +
                           std::to_string(k));
    }
  } else {
    for (l = 2; !corollary_condition(k, l); ++l) {
      if (l > 1'000'000) throw InternalError("no l satisfies the corollary condition");
    }
  }
  CorollaryParams p;
  p.k = k;
  p.ell = l;
  const std::int64_t kl = static_cast<std::int64_t>(k) * l;
  // ceil(k l - log2(k^2 l)) = k l - floor(log2(k^2 l)) since k l is an integer.
  const std::int64_t r = kl - floor_log2(BigInt(k) * k * l);
  const std::int64_t m = r - static_cast<std::int64_t>(k - 1) * l;
  if (!(0 < m && m < l)) {
    throw ParameterError("corollary parameters give m=" + std::to_string(m) +
                         " outside (0, l=" + std::to_string(l) + ")");
  }
  if (r > INT32_MAX) throw ParameterError("corollary r does not fit in 32 bits");
  p.r = static_cast<int>(r);
  p.m = static_cast<int>(m);
  p.directed_degree = pow_big(2, l) + (r - 1) * pow_big(2, p.m) - 1;
  p.undirected_degree = pow_big(2, l + 1) + (2 * r - 3) * pow_big(2, p.m) - r;
  return p;
}

ResolvedSpec resolve_spec(std::string_view text) {
  if (!text.starts_with("cor:")) return {parse_spec(text), std::nullopt};
  auto [tag, fields] = split_spec(text);
  const int k = take(fields, "k", text);
  std::optional<int> ell;
  if (auto it = fields.find("l"); it != fields.end()) {
    if (it->second != "auto") ell = parse_int("l", it->second);
    fields.erase(it);
  }
  bool directed = true;
  if (auto it = fields.find("mode"); it != fields.end()) {
    if (it->second == "undirected") {
      directed = false;
    } else if (it->second != "directed") {
      throw ParameterError("mode must be 'directed' or 'undirected', got '" + it->second + "'");
    }
    fields.erase(it);
  }
  reject_leftovers(fields, text);
  CorollaryParams p = corollary_params(k, ell);
  ConstructionSpec spec = directed ? ConstructionSpec::block_directed(k, p.ell, p.t, p.m)
                                   : ConstructionSpec::block_undirected(k, p.ell, p.t, p.m);
  return {spec, std::move(p)};
}

}  // namespace dbcayley
