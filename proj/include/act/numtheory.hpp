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

namespace act {

/// Moebius function mu(n): 0 if n has a squared prime factor, otherwise
/// (-1)^(number of distinct prime factors). Throws std::invalid_argument
/// for n < 1.
int moebius(long long n);

/// Mertens function M(n) = sum of mu(m) for m = 1..n. Throws
/// std::invalid_argument for n < 1.
long long mertens(long long n);

}  // namespace act
