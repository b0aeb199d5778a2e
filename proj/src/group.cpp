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

#include "dbcayley/group.hpp"

#include <sstream>

namespace dbcayley {

namespace {

Residue reduce(std::int64_t value, std::uint32_t modulus) {
  const std::int64_t m = modulus;
  std::int64_t reduced = value % m;
  if (reduced < 0) reduced += m;
  return static_cast<Residue>(reduced);
}

}  // namespace

GroupElement make_canonical(const GroupParams& params, std::vector<Residue> vector,
                            Residue shift) {
  return GroupElement(params, std::move(vector), shift);
}

GroupParams::GroupParams(std::int64_t t, std::int64_t r) {
  if (t < 2 || r < 2) {
    throw ParameterError("group parameters require t >= 2 and r >= 2 (got t=" +
                         std::to_string(t) + ", r=" + std::to_string(r) + ")");
  }
  if (t > UINT32_MAX || r > UINT32_MAX) {
    throw ParameterError("group parameters t and r must fit in 32 bits");
  }
  t_ = static_cast<std::uint32_t>(t);
  r_ = static_cast<std::uint32_t>(r);
}

BigInt group_order(const GroupParams& params) {
  return BigInt(params.r()) * pow_big(BigInt(params.t()), params.r());
}

std::uint64_t indexable_order(const GroupParams& params) {
  const BigInt order = group_order(params);
  if (order > kMaxIndexableOrder) {
    throw CapacityError("group order " + order.str() + " exceeds the dense indexing limit 2^62",
                        order);
  }
  return static_cast<std::uint64_t>(order);
}

GroupElement::GroupElement(const GroupParams& params, std::span<const std::int64_t> vector,
                           std::int64_t shift)
    : params_(params), shift_(reduce(shift, params.r())) {
  if (vector.size() != params.r()) {
    throw ParameterError("element vector has length " + std::to_string(vector.size()) +
                         ", expected r=" + std::to_string(params.r()));
  }
  vector_.reserve(vector.size());
  for (std::int64_t c : vector) vector_.push_back(reduce(c, params.t()));
}

GroupElement::GroupElement(const GroupParams& params,
                           std::initializer_list<std::int64_t> vector, std::int64_t shift)
    : GroupElement(params, std::span<const std::int64_t>(vector.begin(), vector.size()),
                   shift) {}

bool GroupElement::is_identity() const {
  if (shift_ != 0) return false;
  for (Residue c : vector_) {
    if (c != 0) return false;
  }
  return true;
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < vector_.size(); ++i) {
    if (i != 0) out << ',';
    out << vector_[i];
  }
  out << ';' << shift_ << ')';
  return out.str();
}

GroupElement identity(const GroupParams& params) {
  return make_canonical(params, std::vector<Residue>(params.r(), 0), 0);
}

std::vector<Residue> shift_alpha(std::span<const Residue> vector, std::int64_t s) {
  const std::size_t r = vector.size();
  std::vector<Residue> result(r);
  if (r == 0) return result;
  const std::size_t step = reduce(s, static_cast<std::uint32_t>(r));
  for (std::size_t i = 0; i < r; ++i) result[(i + step) % r] = vector[i];
  return result;
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (x.params() != y.params()) {
    throw MismatchError("cannot multiply elements of different groups");
  }
  const GroupParams& p = x.params();
  const std::uint32_t r = p.r();
  const std::uint32_t t = p.t();
  const std::uint32_t s = x.shift();
  std::vector<Residue> vector(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    const Residue moved = y.coordinate((i + r - s) % r);
    vector[i] = static_cast<Residue>((std::uint64_t{x.coordinate(i)} + moved) % t);
  }
  return make_canonical(p, std::move(vector), (s + y.shift()) % r);
}

GroupElement inverse(const GroupElement& x) {
  const GroupParams& p = x.params();
  const std::uint32_t t = p.t();
  std::vector<Residue> vector = shift_alpha(x.vector(), -static_cast<std::int64_t>(x.shift()));
  for (Residue& c : vector) c = (t - c) % t;
  return make_canonical(p, std::move(vector), (p.r() - x.shift()) % p.r());
}

ElementIndex encode(const GroupElement& x) {
  const GroupParams& p = x.params();
  const std::uint64_t order = indexable_order(p);
  const std::uint64_t block = order / p.r();
  std::uint64_t value = 0;
  for (std::size_t i = p.r(); i-- > 0;) value = value * p.t() + x.coordinate(i);
  return ElementIndex{x.shift() * block + value};
}

GroupElement decode(ElementIndex index, const GroupParams& params) {
  const std::uint64_t order = indexable_order(params);
  if (index.value >= order) {
    throw ParameterError("element index " + std::to_string(index.value) +
                         " out of range for group of order " + std::to_string(order));
  }
  const std::uint64_t block = order / params.r();
  std::uint64_t rest = index.value % block;
  std::vector<Residue> vector(params.r());
  for (Residue& c : vector) {
    c = static_cast<Residue>(rest % params.t());
    rest /= params.t();
  }
  return make_canonical(params, std::move(vector),
                        static_cast<Residue>(index.value / block));
}

}  // namespace dbcayley
