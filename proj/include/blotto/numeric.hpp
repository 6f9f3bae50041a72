// Copyright 2026 The Blotto Solver Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOTTO_NUMERIC_HPP_
#define BLOTTO_NUMERIC_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace blotto {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// "numerator/denominator" with the denominator always present, e.g. "0/1".
std::string to_fraction_string(const Rational& value);
// Inverse of to_fraction_string; also accepts a bare integer.
Rational parse_fraction(std::string_view text);

double to_double(const Rational& value);

// Shortest round-trip decimal form that always carries a fractional part
// ("1.0", "-0.5", "0.3333333333333333").
std::string format_decimal(double value);

}  // namespace blotto

#endif  // BLOTTO_NUMERIC_HPP_
