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

#ifndef DBCAYLEY_NUMERIC_HPP
#define DBCAYLEY_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dbcayley {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated (bad parameters, malformed spec).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different groups.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A computation would need more states than the configured cap allows.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, BigInt required)
      : Error(what), required_(std::move(required)) {}
  const BigInt& required() const { return required_; }

 private:
  BigInt required_;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline BigInt pow_big(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Decimal rendering truncated to `digits` fractional places (for tables only).
std::string to_decimal(const Rational& value, unsigned digits = 6);

/// floor(log2(n)) for n >= 1.
inline unsigned floor_log2(const BigInt& n) {
  return static_cast<unsigned>(boost::multiprecision::msb(n));
}

}  // namespace dbcayley

#endif  // DBCAYLEY_NUMERIC_HPP
