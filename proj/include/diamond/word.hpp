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

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "diamond/errors.hpp"

namespace diamond {

/// An ordered alphabet. Letter 0 is the least letter; precedence is
/// ascending with the index. Letters are named (names are single
/// characters for word sources, identifiers for relation files).
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw usage_error("alphabet must be nonempty");
    for (const auto& l : letters_) {
      if (l.empty()) throw usage_error("alphabet letter name must be nonempty");
    }
    auto sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw usage_error("alphabet letters must be distinct");
  }

  /// One letter per character, precedence in the given order.
  static std::shared_ptr<const Alphabet> chars(std::string_view s) {
    std::vector<std::string> ls;
    ls.reserve(s.size());
    for (char c : s) ls.emplace_back(1, c);
    return std::make_shared<const Alphabet>(std::move(ls));
  }

  static std::shared_ptr<const Alphabet> names(std::vector<std::string> ls) {
    return std::make_shared<const Alphabet>(std::move(ls));
  }

  size_t size() const { return letters_.size(); }
  const std::string& letter(size_t i) const { return letters_.at(i); }

  std::optional<uint8_t> find(std::string_view name) const {
    for (size_t i = 0; i < letters_.size(); ++i)
      if (letters_[i] == name) return static_cast<uint8_t>(i);
    return std::nullopt;
  }

  bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> letters_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

enum class Ordering { less, equal, greater };

/// A monomial of the free algebra: a finite sequence of letter indices.
/// The empty word is the unit monomial.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet) : alpha_(std::move(alphabet)) { require_alpha(); }

  Word(AlphabetPtr alphabet, std::vector<uint8_t> letters)
      : alpha_(std::move(alphabet)), idx_(std::move(letters)) {
    require_alpha();
    for (uint8_t i : idx_)
      if (i >= alpha_->size()) throw usage_error("letter index out of range for alphabet");
  }

  /// Parse a word whose letters are all single characters ("abaab").
  static Word parse_chars(AlphabetPtr alphabet, std::string_view text) {
    std::vector<uint8_t> idx;
    idx.reserve(text.size());
    for (char c : text) {
      auto i = alphabet->find(std::string_view(&c, 1));
      if (!i) throw usage_error(std::string("letter '") + c + "' not in alphabet");
      idx.push_back(*i);
    }
    return Word(std::move(alphabet), std::move(idx));
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  size_t length() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  uint8_t operator[](size_t i) const { return idx_[i]; }
  const std::vector<uint8_t>& letters() const { return idx_; }

  Word concat(const Word& o) const {
    check_same_alphabet(o);
    std::vector<uint8_t> out = idx_;
    out.insert(out.end(), o.idx_.begin(), o.idx_.end());
    return Word(alpha_, std::move(out));
  }

  Word sub(size_t pos, size_t len) const {
    if (pos > idx_.size() || pos + len > idx_.size())
      throw usage_error("subword range out of bounds");
    return Word(alpha_, std::vector<uint8_t>(idx_.begin() + pos, idx_.begin() + pos + len));
  }

  Word drop_first() const { return sub(1, length() - 1); }
  Word drop_last() const { return sub(0, length() - 1); }

  bool matches_at(const Word& pattern, size_t pos) const {
    if (pos + pattern.length() > length()) return false;
    return std::equal(pattern.idx_.begin(), pattern.idx_.end(), idx_.begin() + pos);
  }

  /// Leftmost occurrence of `pattern` at position >= from. The empty
  /// pattern matches at every position.
  std::optional<size_t> find(const Word& pattern, size_t from = 0) const {
    if (pattern.length() > length()) return std::nullopt;
    for (size_t i = from; i + pattern.length() <= length(); ++i)
      if (matches_at(pattern, i)) return i;
    return std::nullopt;
  }

  bool contains(const Word& pattern) const { return find(pattern).has_value(); }

  /// Letter names concatenated ("bb", "babab"). Intended for single
  /// character alphabets; multi-character names concatenate as-is.
  std::string text() const {
    std::string out;
    for (uint8_t i : idx_) out += alpha_->letter(i);
    return out;
  }

  bool operator==(const Word& o) const { return *alpha_ == *o.alpha_ && idx_ == o.idx_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  void check_same_alphabet(const Word& o) const {
    if (alpha_ != o.alpha_ && *alpha_ != *o.alpha_)
      throw usage_error("words over mismatched alphabets");
  }

 private:
  void require_alpha() const {
    if (!alpha_) throw usage_error("word requires an alphabet");
  }
  AlphabetPtr alpha_;
  std::vector<uint8_t> idx_;
};

/// Degree-lexicographic comparison: shorter words first, equal lengths
/// compared letter-by-letter in alphabet precedence.
inline Ordering deglex_cmp(const Word& u, const Word& v) {
  u.check_same_alphabet(v);
  if (u.length() != v.length())
    return u.length() < v.length() ? Ordering::less : Ordering::greater;
  const auto& a = u.letters();
  const auto& b = v.letters();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::less : Ordering::greater;
  }
  return Ordering::equal;
}

struct DeglexLess {
  bool operator()(const Word& u, const Word& v) const {
    return deglex_cmp(u, v) == Ordering::less;
  }
};

using WordSet = std::set<Word, DeglexLess>;

}  // namespace diamond
