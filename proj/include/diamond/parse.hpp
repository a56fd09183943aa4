/*
   Copyright 2026 The diamond authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*/

#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "diamond/poly.hpp"

namespace diamond {

namespace detail {

// Single-line tokenizer for the polynomial grammar. Columns are 1-based
// and offset so diagnostics point into the enclosing file line.
class PolyLexer {
 public:
  PolyLexer(std::string_view src, int line, int col_offset)
      : src_(src), line_(line), col_offset_(col_offset) {}

  enum class Tok { end, integer, ident, plus, minus, star, slash, caret };

  struct Token {
    Tok kind;
    std::string text;
    int col;
  };

  Token next() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    int col = col_offset_ + static_cast<int>(pos_);
    if (pos_ >= src_.size()) return {Tok::end, "", col};
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::integer, std::string(src_.substr(start, pos_ - start)), col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Tok::ident, std::string(src_.substr(start, pos_ - start)), col};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::plus, "+", col};
      case '-': return {Tok::minus, "-", col};
      case '*': return {Tok::star, "*", col};
      case '/': return {Tok::slash, "/", col};
      case '^': return {Tok::caret, "^", col};
      default:
        throw parse_error(line_, col, std::string("unexpected character '") + c + "'");
    }
  }

  int line() const { return line_; }

 private:
  std::string_view src_;
  size_t pos_ = 0;
  int line_;
  int col_offset_;
};

// '*'-separated factors: IDENT[^k] or the literal 1.
inline void parse_factors(const AlphabetPtr& alphabet, PolyLexer& lex, PolyLexer::Token& tok,
                          std::vector<uint8_t>& letters) {
  using Tok = PolyLexer::Tok;
  while (true) {
    if (tok.kind == Tok::integer) {
      if (tok.text != "1")
        throw parse_error(lex.line(), tok.col, "only the factor 1 may appear inside a monomial");
      tok = lex.next();
    } else if (tok.kind == Tok::ident) {
      auto li = alphabet->find(tok.text);
      if (!li) throw parse_error(lex.line(), tok.col, "unknown letter '" + tok.text + "'");
      tok = lex.next();
      long power = 1;
      if (tok.kind == Tok::caret) {
        tok = lex.next();
        if (tok.kind != Tok::integer)
          throw parse_error(lex.line(), tok.col, "expected exponent after '^'");
        if (tok.text.size() > 6)
          throw parse_error(lex.line(), tok.col, "exponent too large");
        power = std::stol(tok.text);
        tok = lex.next();
      }
      for (long k = 0; k < power; ++k) letters.push_back(*li);
    } else {
      throw parse_error(lex.line(), tok.col, "expected a letter factor");
    }
    if (tok.kind == Tok::star) {
      tok = lex.next();
      continue;
    }
    break;
  }
}

}  // namespace detail

/// Parse one polynomial: terms separated by +/-, each an optional
/// integer or integer/integer coefficient followed by '*'-separated
/// letter factors with optional ^k powers; the bare token 1 is the unit
/// monomial. Whitespace between tokens is ignored.
template <class K = Rational>
Poly<K> parse_poly(const AlphabetPtr& alphabet, std::string_view text, int line = 1,
                   int col_offset = 1) {
  using Tok = detail::PolyLexer::Tok;
  detail::PolyLexer lex(text, line, col_offset);
  auto tok = lex.next();
  if (tok.kind == Tok::end) throw parse_error(line, tok.col, "empty polynomial");

  std::vector<std::pair<K, Word>> raw;
  bool negate = false;
  if (tok.kind == Tok::plus || tok.kind == Tok::minus) {
    negate = tok.kind == Tok::minus;
    tok = lex.next();
  }
  while (true) {
    Int num = 1, den = 1;
    std::vector<uint8_t> letters;
    if (tok.kind == Tok::integer) {
      num = Int(tok.text);
      tok = lex.next();
      if (tok.kind == Tok::slash) {
        tok = lex.next();
        if (tok.kind != Tok::integer)
          throw parse_error(line, tok.col, "expected denominator after '/'");
        den = Int(tok.text);
        if (den == 0) throw parse_error(line, tok.col, "zero denominator");
        tok = lex.next();
      }
      if (tok.kind == Tok::star) {
        tok = lex.next();
        detail::parse_factors(alphabet, lex, tok, letters);
      }
      // a bare integer is a multiple of the unit monomial
    } else if (tok.kind == Tok::ident) {
      detail::parse_factors(alphabet, lex, tok, letters);
    } else {
      throw parse_error(line, tok.col, "expected a term");
    }
    K coeff = scalar_ops<K>::from_fraction(negate ? Int(-num) : num, den);
    raw.emplace_back(std::move(coeff), Word(alphabet, std::move(letters)));

    if (tok.kind == Tok::end) break;
    if (tok.kind == Tok::plus || tok.kind == Tok::minus) {
      negate = tok.kind == Tok::minus;
      tok = lex.next();
      continue;
    }
    throw parse_error(line, tok.col, "expected '+' or '-' between terms");
  }
  return poly_normalize<K>(std::move(raw));
}

/// A parsed relation file: the declared alphabet plus its relations.
template <class K = Rational>
struct RelationFile {
  AlphabetPtr alphabet;
  std::vector<Poly<K>> relations;
};

/// Line-oriented format: one `alphabet: x y` line (precedence ascending),
/// then `relation: <polynomial>` lines; '#' starts a comment.
template <class K = Rational>
RelationFile<K> parse_relation_file(std::string_view content) {
  RelationFile<K> out;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= content.size()) {
    size_t eol = content.find('\n', pos);
    std::string_view rawline =
        content.substr(pos, eol == std::string_view::npos ? content.size() - pos : eol - pos);
    ++lineno;
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;

    std::string_view lineview = rawline;
    if (auto h = lineview.find('#'); h != std::string_view::npos) lineview = lineview.substr(0, h);
    size_t first = lineview.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    size_t last = lineview.find_last_not_of(" \t\r");
    std::string_view body = lineview.substr(first, last - first + 1);

    if (body.rfind("alphabet:", 0) == 0) {
      if (out.alphabet)
        throw parse_error(lineno, static_cast<int>(first) + 1, "duplicate alphabet line");
      std::istringstream ss{std::string(body.substr(9))};
      std::vector<std::string> names;
      std::string name;
      while (ss >> name) names.push_back(name);
      if (names.empty())
        throw parse_error(lineno, static_cast<int>(first) + 1, "alphabet line lists no letters");
      out.alphabet = Alphabet::names(std::move(names));
    } else if (body.rfind("relation:", 0) == 0) {
      if (!out.alphabet)
        throw parse_error(lineno, static_cast<int>(first) + 1,
                          "relation precedes the alphabet line");
      std::string_view ptext = body.substr(9);
      int col0 = static_cast<int>(first) + 9 + 1;
      out.relations.push_back(parse_poly<K>(out.alphabet, ptext, lineno, col0));
    } else {
      throw parse_error(lineno, static_cast<int>(first) + 1,
                        "expected 'alphabet:' or 'relation:'");
    }
  }
  if (!out.alphabet) throw parse_error(lineno, 1, "missing alphabet line");
  return out;
}

/// Canonical round-trippable rendering of a relation file.
template <class K>
std::string relation_file_text(const RelationFile<K>& file) {
  std::ostringstream os;
  os << "alphabet:";
  for (size_t i = 0; i < file.alphabet->size(); ++i) os << " " << file.alphabet->letter(i);
  os << "\n";
  for (const auto& r : file.relations) os << "relation: " << poly_text(r) << "\n";
  return os.str();
}

}  // namespace diamond
