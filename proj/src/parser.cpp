/*
 * Copyright 2026 The submc Authors
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


#include <cctype>
#include <set>

#include "submc/errors.hpp"
#include "submc/formula.hpp"

namespace submc {

namespace {

enum class Tok { Ident, LAngle, RAngle, LSquare, RSquare, LParen, RParen, Bang, Amp, Bar, Arrow, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](char a, char b) { return i + 1 < in.size() && in[i] == a && in[i + 1] == b; };
  while (i < in.size()) {
    char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < in.size() && (std::isalnum(static_cast<unsigned char>(in[j])) || in[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(in.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Tok k;
    std::size_t len = 2;
    if (two('<', '<')) k = Tok::LAngle;
    else if (two('>', '>')) k = Tok::RAngle;
    else if (two('[', '[')) k = Tok::LSquare;
    else if (two(']', ']')) k = Tok::RSquare;
    else if (two('-', '>')) k = Tok::Arrow;
    else {
      len = 1;
      switch (c) {
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '!': k = Tok::Bang; break;
        case '&': k = Tok::Amp; break;
        case '|': k = Tok::Bar; break;
        case ',': k = Tok::Comma; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
    }
    out.push_back({k, std::string(in.substr(i, len)), i});
    i += len;
  }
  out.push_back({Tok::End, "", in.size()});
  return out;
}

const std::set<std::string, std::less<>> kKeywords = {"A", "E", "X", "F", "G", "U", "R", "true", "false"};

class Parser {
 public:
  Parser(std::string_view text, Scope scope)
      : toks_(lex(text)), depth_(scope == Scope::Path ? 1 : 0) {}

  Formula run() {
    Formula f = implication();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  bool is_kw(std::string_view kw) const { return peek().kind == Tok::Ident && peek().text == kw; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

  void require_scope(const Token& t) const {
    if (depth_ == 0)
      throw ScopeError("temporal operator '" + t.text + "' outside any quantifier", t.pos);
  }

  Formula implication() {
    Formula a = disjunction();
    if (peek().kind == Tok::Arrow) {
      ++at_;
      Formula b = implication();
      return Formula::disj(Formula::negation(std::move(a)), std::move(b));
    }
    return a;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Bar) {
      ++at_;
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = binary_temporal();
    while (peek().kind == Tok::Amp) {
      ++at_;
      f = Formula::conj(std::move(f), binary_temporal());
    }
    return f;
  }

  Formula binary_temporal() {
    Formula a = unary();
    if (is_kw("U") || is_kw("R")) {
      Token t = peek();
      require_scope(t);
      ++at_;
      Formula b = binary_temporal();
      return t.text == "U" ? Formula::until(std::move(a), std::move(b))
                           : Formula::release(std::move(a), std::move(b));
    }
    return a;
  }

  std::vector<std::string> coalition(Tok close, const char* closer) {
    std::vector<std::string> names;
    if (peek().kind == close) {
      ++at_;
      return names;
    }
    while (true) {
      const Token& t = peek();
      if (t.kind != Tok::Ident || kKeywords.contains(t.text))
        throw ArityError("expected an agent name in coalition", t.pos);
      for (const auto& n : names)
        if (n == t.text) throw ArityError("agent '" + t.text + "' repeated in coalition", t.pos);
      names.push_back(t.text);
      ++at_;
      if (peek().kind == Tok::Comma) {
        ++at_;
        continue;
      }
      if (peek().kind == close) {
        ++at_;
        return names;
      }
      throw ArityError(std::string("expected ',' or '") + closer + "' in coalition", peek().pos);
    }
  }

  Formula quantified_body() {
    ++depth_;
    Formula body = binary_temporal();
    --depth_;
    return body;
  }

  Formula unary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Bang:
        ++at_;
        return Formula::negation(unary());
      case Tok::LAngle: {
        ++at_;
        auto names = coalition(Tok::RAngle, ">>");
        return Formula::strategic(std::move(names), quantified_body());
      }
      case Tok::LSquare: {
        ++at_;
        auto names = coalition(Tok::RSquare, "]]");
        return Formula::strategic_dual(std::move(names), quantified_body());
      }
      case Tok::LParen: {
        ++at_;
        Formula f = implication();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        ++at_;
        return f;
      }
      case Tok::Ident:
        break;
      default:
        fail(t.kind == Tok::End ? "unexpected end of formula" : "unexpected '" + t.text + "'");
    }
    ++at_;
    if (t.text == "true") return Formula::top();
    if (t.text == "false") return Formula::bottom();
    if (t.text == "A") return Formula::forall(quantified_body());
    if (t.text == "E") return Formula::exists(quantified_body());
    if (t.text == "X" || t.text == "F" || t.text == "G") {
      require_scope(t);
      Formula f = unary();
      if (t.text == "X") return Formula::next(std::move(f));
      if (t.text == "F") return Formula::finally(std::move(f));
      return Formula::globally(std::move(f));
    }
    if (t.text == "U" || t.text == "R") throw ParseError("'" + t.text + "' needs a left operand", t.pos);
    return Formula::atom(t.text);
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  int depth_;
};

}  // namespace

Formula parse(std::string_view text, Scope scope) { return Parser(text, scope).run(); }

}  // namespace submc
