/*
 * Copyright (c) 2026, the dunkl project authors.  All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Exact rational scalars. Everything in this library is computed over GMP
// rationals; there is no floating point anywhere in the core.

#ifndef DUNKL_RATIONAL_HPP
#define DUNKL_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace dunkl {

using Rat = mpq_class;

// Builds p/q with canonicalization. q must be nonzero.
Rat rat(long p, long q = 1);

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed
// input or a zero denominator.
Rat rat_from_string(const std::string& s);

// Renders "p" or "p/q" in lowest terms.
std::string rat_to_string(const Rat& r);

// Exact square root when r is a perfect square of a rational, otherwise
// nullopt. Negative input yields nullopt.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

}  // namespace dunkl

#endif  // DUNKL_RATIONAL_HPP
