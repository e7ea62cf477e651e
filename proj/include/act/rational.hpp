//  Copyright (c) 2026 The actdct authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace act {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision numerator/denominator.
/// boost::rational keeps entries in lowest terms with positive denominator.
using Rational = boost::rational<BigInt>;

inline Rational make_rational(long long num, long long den = 1) {
    if (den < 0) {  // boost::rational rejects negative denominators for cpp_int
        num = -num;
        den = -den;
    }
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

}  // namespace act
