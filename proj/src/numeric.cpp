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

#include "dbcayley/numeric.hpp"

namespace dbcayley {

std::string to_decimal(const Rational& value, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  out += BigInt(num / den).str();
  BigInt rest = num % den;
  if (digits == 0 || rest == 0) return out;
  out += '.';
  for (unsigned i = 0; i < digits; ++i) {
    rest *= 10;
    out += static_cast<char>('0' + static_cast<int>(rest / den));
    rest %= den;
  }
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace dbcayley
