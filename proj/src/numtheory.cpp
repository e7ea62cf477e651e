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

#include "act/numtheory.hpp"

#include <stdexcept>

namespace act {

int moebius(long long n) {
    if (n < 1) {
        throw std::invalid_argument("moebius: n must be >= 1");
    }
    int sign = 1;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) {
                return 0;  // squared prime factor
            }
            sign = -sign;
        }
    }
    if (n > 1) {
        sign = -sign;
    }
    return sign;
}

long long mertens(long long n) {
    if (n < 1) {
        throw std::invalid_argument("mertens: n must be >= 1");
    }
    long long sum = 0;
    for (long long m = 1; m <= n; ++m) {
        sum += moebius(m);
    }
    return sum;
}

}  // namespace act
