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

#ifndef DUNKL_DOCUMENT_HPP
#define DUNKL_DOCUMENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/algebra.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/poly.hpp"

namespace dunkl {

// Syntax error with a 1-based source position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Text document: one `algebra:` header, optional `k:` and `partition:`
// directives, then `poly <name> = <terms>` lines.  Terms use the canonical
// form `coeff * x0^e0 x1^e1 ...` with coeff a rational combination of basis
// names, e.g. `(1/2)*1 + (-1)*e12`.
struct InputDocument {
  std::string algebra_spec;
  Algebra algebra;
  std::optional<Multiplicities> k;
  std::optional<std::vector<std::vector<int>>> partition;
  std::vector<std::pair<std::string, Poly>> polys;
};

InputDocument parse_document(const std::string& text);
std::string serialize_document(const InputDocument& doc);

// One polynomial expression against a given frame, e.g. `(1)*x0 + (i)*x1`.
// line_offset sets the reported line number for errors.
Poly parse_poly_text(const Frame& frame, const std::string& text, int line_offset = 1);

// `{1,2|3}` -> {{1,2},{3}}.
std::vector<std::vector<int>> parse_partition_blocks(const std::string& text);

// `0,-1/4,-1/4` -> rational list.
std::vector<Rat> parse_multiplicity_list(const std::string& text);

// `2,3` -> {2,3}, sorted and checked for duplicates.
std::vector<int> parse_subset(const std::string& text);

}  // namespace dunkl

#endif  // DUNKL_DOCUMENT_HPP
