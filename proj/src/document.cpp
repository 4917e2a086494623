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

#include "dunkl/document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dunkl {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class TokKind { Name, Var, Int, Punct, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  int var_index = 0;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(const std::string& text, int line) {
  std::vector<Token> out;
  std::size_t at = 0;
  while (at < text.size()) {
    char c = text[at];
    int column = static_cast<int>(at) + 1;
    if (c == ' ' || c == '\t') {
      ++at;
      continue;
    }
    if (c == '#') break;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = at;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
        ++end;
      out.push_back({TokKind::Int, text.substr(at, end - at), 0, line, column});
      at = end;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = at;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
        ++end;
      std::string word = text.substr(at, end - at);
      if (word.size() >= 2 && word[0] == 'x' &&
          std::all_of(word.begin() + 1, word.end(),
                      [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
        Token t{TokKind::Var, word, std::stoi(word.substr(1)), line, column};
        out.push_back(t);
      } else {
        out.push_back({TokKind::Name, word, 0, line, column});
      }
      at = end;
      continue;
    }
    if (std::string("()*^+-/=,:|{}").find(c) != std::string::npos) {
      out.push_back({TokKind::Punct, std::string(1, c), 0, line, column});
      ++at;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, column);
  }
  out.push_back({TokKind::End, "", 0, line, static_cast<int>(text.size()) + 1});
  return out;
}

class ExprParser {
 public:
  ExprParser(const Frame& frame, std::vector<Token> tokens)
      : frame_(frame), tokens_(std::move(tokens)) {}

  Poly parse() {
    Poly out = expression();
    const Token& t = peek();
    if (t.kind != TokKind::End)
      throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.column);
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool is_punct(const char* p) const {
    return peek().kind == TokKind::Punct && peek().text == p;
  }

  Poly expression() {
    bool negate = false;
    if (is_punct("-")) {
      take();
      negate = true;
    } else if (is_punct("+")) {
      take();
    }
    Poly acc = product();
    if (negate) acc = neg(acc);
    while (is_punct("+") || is_punct("-")) {
      bool minus = take().text == "-";
      Poly rhs = product();
      acc = minus ? sub(acc, rhs) : add(acc, rhs);
    }
    return acc;
  }

  Poly product() {
    Poly acc = factor();
    for (;;) {
      if (is_punct("*")) {
        const Token star = take();
        acc = combine(acc, factor(), star);
        continue;
      }
      const Token& t = peek();
      bool starts_factor = t.kind == TokKind::Int || t.kind == TokKind::Name ||
                           t.kind == TokKind::Var || (t.kind == TokKind::Punct && t.text == "(");
      if (!starts_factor) break;
      acc = combine(acc, factor(), t);
    }
    return acc;
  }

  Poly factor() {
    const Token& t = peek();
    if (t.kind == TokKind::Punct && t.text == "(") {
      take();
      Poly inner = expression();
      if (!is_punct(")"))
        throw ParseError("expected ')'", peek().line, peek().column);
      take();
      return inner;
    }
    if (t.kind == TokKind::Int) {
      Token num = take();
      Rat value(num.text);
      if (is_punct("/")) {
        take();
        const Token& den = peek();
        if (den.kind != TokKind::Int)
          throw ParseError("expected denominator", den.line, den.column);
        take();
        Rat d(den.text);
        if (d == 0) throw ParseError("zero denominator", den.line, den.column);
        value /= d;
      }
      value.canonicalize();
      return constant_poly(frame_, Element::scalar(frame_.tab(), value));
    }
    if (t.kind == TokKind::Name) {
      Token name = take();
      int idx = frame_.tab()->basis_index(name.text);
      if (idx < 0)
        throw ParseError("unknown basis name '" + name.text + "'", name.line, name.column);
      return constant_poly(frame_, Element::basis(frame_.tab(), idx));
    }
    if (t.kind == TokKind::Var) {
      Token var = take();
      if (var.var_index > frame_.n())
        throw ParseError("variable index out of range", var.line, var.column);
      int exponent = 1;
      if (is_punct("^")) {
        take();
        const Token& e = peek();
        if (e.kind != TokKind::Int)
          throw ParseError("expected exponent", e.line, e.column);
        take();
        exponent = std::stoi(e.text);
      }
      Monomial m(static_cast<std::size_t>(frame_.n()) + 1, 0);
      m[static_cast<std::size_t>(var.var_index)] = exponent;
      return monomial_poly(frame_, m, Element::basis(frame_.tab(), 0));
    }
    throw ParseError("expected a factor", t.line, t.column);
  }

  static bool is_real_poly(const Poly& p) {
    for (const auto& [m, c] : p.terms())
      if (!c.is_real()) return false;
    return true;
  }

  static std::optional<Element> as_constant(const Poly& p) {
    if (p.is_zero()) return Element(p.frame().tab());
    if (p.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *p.terms().begin();
    for (int e : m)
      if (e != 0) return std::nullopt;
    return c;
  }

  Poly combine(const Poly& a, const Poly& b, const Token& at) const {
    if (auto ca = as_constant(a)) return left_scale(*ca, b);
    if (auto cb = as_constant(b)) return right_scale(a, *cb);
    if (is_real_poly(a)) return real_mul(a, b);
    if (is_real_poly(b)) return real_mul(b, a);
    throw ParseError("product of two non-real polynomials is not supported",
                     at.line, at.column);
  }

  const Frame& frame_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Poly parse_poly_text(const Frame& frame, const std::string& text, int line_offset) {
  ExprParser parser(frame, tokenize(text, line_offset));
  return parser.parse();
}

std::vector<std::vector<int>> parse_partition_blocks(const std::string& text) {
  std::string body = strip(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw std::invalid_argument("partition must be wrapped in braces, e.g. {1,2|3}");
  body = body.substr(1, body.size() - 2);
  std::vector<std::vector<int>> blocks;
  for (const std::string& part : split(body, '|')) {
    std::vector<int> block;
    for (const std::string& item : split(part, ',')) {
      std::string v = strip(item);
      if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw std::invalid_argument("partition entries must be positive integers");
      block.push_back(std::stoi(v));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<Rat> parse_multiplicity_list(const std::string& text) {
  std::vector<Rat> out;
  for (const std::string& item : split(strip(text), ',')) {
    std::string v = strip(item);
    if (v.empty()) throw std::invalid_argument("empty multiplicity entry");
    out.push_back(rat_from_string(v));
  }
  return out;
}

std::vector<int> parse_subset(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split(strip(text), ',')) {
    std::string v = strip(item);
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }) ||
        std::stoi(v) < 1)
      throw std::invalid_argument("subset entries must be positive integers");
    out.push_back(std::stoi(v));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("subset entries must be distinct");
  return out;
}

InputDocument parse_document(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::optional<InputDocument> doc;
  std::optional<std::vector<Rat>> pending_k;
  int pending_k_line = 0;
  std::optional<std::vector<std::vector<int>>> pending_partition;
  int pending_partition_line = 0;

  while (std::getline(in, raw)) {
    ++line;
    std::string body = strip(raw);
    if (body.empty() || body[0] == '#') continue;

    std::size_t colon = body.find(':');
    std::size_t space = body.find(' ');
    if (colon != std::string::npos && (space == std::string::npos || colon < space)) {
      std::string key = strip(body.substr(0, colon));
      std::string value = strip(body.substr(colon + 1));
      if (key == "algebra") {
        if (doc) throw ParseError("duplicate algebra header", line, 1);
        InputDocument d;
        d.algebra_spec = value;
        try {
          d.algebra = make_algebra(value);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line, static_cast<int>(colon) + 2);
        }
        doc = std::move(d);
        continue;
      }
      if (key == "k") {
        try {
          pending_k = parse_multiplicity_list(value);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line, static_cast<int>(colon) + 2);
        }
        pending_k_line = line;
        continue;
      }
      if (key == "partition") {
        try {
          pending_partition = parse_partition_blocks(value);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line, static_cast<int>(colon) + 2);
        }
        pending_partition_line = line;
        continue;
      }
      throw ParseError("unknown directive '" + key + "'", line, 1);
    }

    if (body.rfind("poly", 0) == 0 &&
        (body.size() == 4 || body[4] == ' ' || body[4] == '\t')) {
      if (!doc) throw ParseError("poly before algebra header", line, 1);
      std::size_t eq = body.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected '=' in poly definition", line,
                         static_cast<int>(body.size()) + 1);
      std::string name = strip(body.substr(4, eq - 4));
      if (name.empty() ||
          !std::isalpha(static_cast<unsigned char>(name[0])) ||
          !std::all_of(name.begin(), name.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
          }))
        throw ParseError("invalid poly name", line, 6);
      for (const auto& [existing, p] : doc->polys)
        if (existing == name)
          throw ParseError("duplicate poly name '" + name + "'", line, 6);
      Poly p = parse_poly_text(doc->algebra.frame, body.substr(eq + 1), line);
      doc->polys.emplace_back(name, std::move(p));
      continue;
    }

    throw ParseError("unrecognized line", line, 1);
  }

  if (!doc) throw ParseError("missing algebra header", std::max(line, 1), 1);

  const int n = doc->algebra.frame.n();
  if (pending_k) {
    if (static_cast<int>(pending_k->size()) != n)
      throw ParseError("expected " + std::to_string(n) + " multiplicities",
                       pending_k_line, 1);
    Multiplicities k;
    k.k = std::move(*pending_k);
    doc->k = std::move(k);
  }
  if (pending_partition) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (auto& block : *pending_partition) {
      std::sort(block.begin(), block.end());
      for (int i : block) {
        if (i < 1 || i > n)
          throw ParseError("partition index out of range", pending_partition_line, 1);
        if (seen[static_cast<std::size_t>(i)])
          throw ParseError("partition blocks overlap", pending_partition_line, 1);
        seen[static_cast<std::size_t>(i)] = true;
      }
    }
    for (int i = 1; i <= n; ++i)
      if (!seen[static_cast<std::size_t>(i)])
        throw ParseError("partition does not cover every index",
                         pending_partition_line, 1);
    std::sort(pending_partition->begin(), pending_partition->end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a.front() < b.front();
              });
    doc->partition = std::move(pending_partition);
  }
  return *doc;
}

std::string serialize_document(const InputDocument& doc) {
  std::ostringstream out;
  out << "algebra: " << doc.algebra_spec << "\n";
  if (doc.k) {
    out << "k: ";
    for (int i = 1; i <= doc.k->n(); ++i) {
      if (i > 1) out << ",";
      out << rat_to_string(doc.k->at(i));
    }
    out << "\n";
  }
  if (doc.partition) {
    out << "partition: {";
    for (std::size_t b = 0; b < doc.partition->size(); ++b) {
      if (b) out << "|";
      const auto& block = (*doc.partition)[b];
      for (std::size_t t = 0; t < block.size(); ++t) {
        if (t) out << ",";
        out << block[t];
      }
    }
    out << "}\n";
  }
  for (const auto& [name, p] : doc.polys)
    out << "poly " << name << " = " << p.str() << "\n";
  return out.str();
}

}  // namespace dunkl
