/*
 * Copyright 2026 The asymptree Authors
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
 */

#include "asymptree/levelled_io.hpp"

#include <cctype>

namespace asymptree::levelled {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LevelledNumber<Rational> parse() {
    std::vector<Term<Rational>> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    terms.push_back(term(false));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      terms.push_back(term(op == '-'));
    }
    return LevelledNumber<Rational>::from_terms(std::move(terms));
  }

 private:
  Term<Rational> term(bool negated) {
    skip_ws();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negated ^= peek() == '-';
      ++pos_;
      skip_ws();
    }
    if (at_end()) throw ParseError("expected a term", pos_);

    Rational coeff(1);
    bool have_symbol = false;
    if (peek() == 'u') {
      have_symbol = true;
    } else {
      coeff = number("coefficient");
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'u') throw ParseError("expected 'u'", pos_);
        have_symbol = true;
      }
    }

    Rational g(0);
    if (have_symbol) {
      ++pos_;  // 'u'
      g = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        g = number("exponent");
      }
    }
    if (negated) coeff = -coeff;
    return {Level{g}, coeff};
  }

  Rational number(const char* what) {
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '/')) ++pos_;
    const auto token = text_.substr(start, pos_ - start);
    try {
      return parse_rational(token);
    } catch (const std::invalid_argument&) {
      throw ParseError(std::string("malformed ") + what + " '" + std::string(token) + "'", start);
    }
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LevelledNumber<Rational> parse_levelled(std::string_view text) { return Parser(text).parse(); }

std::string format_levelled(const LevelledNumber<Rational>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& t : x.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(t.coeff) + "*u^" + to_string(t.level.g);
  }
  return out;
}

std::string format_spectrum(const Spectrum<Rational>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += "(" + to_string(s[i].c) + ", " + to_string(s[i].level.g) + ")";
  }
  return out + "]";
}

}  // namespace asymptree::levelled
