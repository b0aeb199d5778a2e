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

// Arithmetic in the wreath product G = Z_t^r x| Z_r.
//
// An element (v; s) is a vector v of r residues mod t together with a shift
// s mod r. The product is (u; s) * (v; s') = (u + alpha^s(v); s + s'), where
// alpha rotates coordinates one place to the right:
//   alpha(v_0, ..., v_{r-1}) = (v_{r-1}, v_0, ..., v_{r-2}).
//
// Dense indices use the layout
//   index = shift * t^r + sum_i vector[i] * t^i
// with coordinate 0 least significant. Exports depend on this layout.

#ifndef DBCAYLEY_GROUP_HPP
#define DBCAYLEY_GROUP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dbcayley/numeric.hpp"

namespace dbcayley {

using Residue = std::uint32_t;

/// Largest group order that may be densely indexed.
inline constexpr std::uint64_t kMaxIndexableOrder = std::uint64_t{1} << 62;

class GroupParams {
 public:
  /// Throws ParameterError unless t >= 2 and r >= 2.
  GroupParams(std::int64_t t, std::int64_t r);

  std::uint32_t t() const { return t_; }
  std::uint32_t r() const { return r_; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  std::uint32_t t_;
  std::uint32_t r_;
};

/// r * t^r, exactly.
BigInt group_order(const GroupParams& params);

/// r * t^r as a machine integer; throws CapacityError above kMaxIndexableOrder.
std::uint64_t indexable_order(const GroupParams& params);

struct ElementIndex {
  std::uint64_t value = 0;
  friend auto operator<=>(const ElementIndex&, const ElementIndex&) = default;
};

class GroupElement {
 public:
  /// Reduces every coordinate mod t and the shift mod r; negative inputs are
  /// allowed. Throws ParameterError if the vector length is not r.
  GroupElement(const GroupParams& params, std::span<const std::int64_t> vector,
               std::int64_t shift);
  GroupElement(const GroupParams& params, std::initializer_list<std::int64_t> vector,
               std::int64_t shift);

  const GroupParams& params() const { return params_; }
  std::span<const Residue> vector() const { return vector_; }
  Residue coordinate(std::size_t i) const { return vector_[i]; }
  Residue shift() const { return shift_; }
  bool is_identity() const;

  /// "(v_0,...,v_{r-1};s)"
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.shift_ <=> b.shift_; c != 0) return c;
    return a.vector_ <=> b.vector_;
  }

 private:
  friend GroupElement make_canonical(const GroupParams&, std::vector<Residue>, Residue);
  GroupElement(const GroupParams& params, std::vector<Residue> vector, Residue shift)
      : params_(params), vector_(std::move(vector)), shift_(shift) {}

  GroupParams params_;
  std::vector<Residue> vector_;
  Residue shift_;
};

GroupElement identity(const GroupParams& params);

/// alpha^s(vector) for any integer s; result[i] = vector[(i - s) mod r].
std::vector<Residue> shift_alpha(std::span<const Residue> vector, std::int64_t s);

/// Throws MismatchError if x and y come from different groups.
GroupElement multiply(const GroupElement& x, const GroupElement& y);

/// (v; s)^-1 = (-alpha^{-s}(v); -s).
GroupElement inverse(const GroupElement& x);

inline GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  return multiply(x, y);
}

ElementIndex encode(const GroupElement& x);
GroupElement decode(ElementIndex index, const GroupParams& params);

}  // namespace dbcayley

#endif  // DBCAYLEY_GROUP_HPP
