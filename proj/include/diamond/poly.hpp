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
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "diamond/scalar.hpp"
#include "diamond/word.hpp"

namespace diamond {

template <class K>
struct Term {
  K coeff;
  Word word;
};

/// An element of the free algebra: nonzero coefficients attached to
/// monomials, kept strictly descending in deglex. The empty term list is
/// the zero polynomial; the leading term is terms()[0].
template <class K = Rational>
class Poly {
 public:
  Poly() = default;

  static Poly from_terms(std::vector<std::pair<K, Word>> raw) {
    return Poly(normalize_terms(std::move(raw)));
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term<K>>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  const Term<K>& lead() const {
    if (terms_.empty()) throw usage_error("zero polynomial has no leading term");
    return terms_[0];
  }
  const Word& lead_word() const { return lead().word; }
  size_t degree() const { return lead_word().length(); }
  bool is_monic() const { return !terms_.empty() && scalar_ops<K>::is_one(terms_[0].coeff); }

  std::optional<AlphabetPtr> alphabet() const {
    if (terms_.empty()) return std::nullopt;
    return terms_[0].word.alphabet();
  }

  Poly monic() const {
    if (terms_.empty()) throw usage_error("cannot scale the zero polynomial monic");
    return scaled(K(1) / terms_[0].coeff);
  }

  Poly scaled(const K& c) const {
    if (c == K(0)) return Poly();
    std::vector<Term<K>> out = terms_;
    for (auto& t : out) t.coeff = t.coeff * c;
    return Poly(std::move(out));
  }

  Poly operator-() const { return scaled(K(-1)); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    // merge of two strictly descending term lists
    std::vector<Term<K>> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      Ordering ord = deglex_cmp(a.terms_[i].word, b.terms_[j].word);
      if (ord == Ordering::greater) {
        out.push_back(a.terms_[i++]);
      } else if (ord == Ordering::less) {
        out.push_back(b.terms_[j++]);
      } else {
        K c = a.terms_[i].coeff + b.terms_[j].coeff;
        if (c != K(0)) out.push_back({c, a.terms_[i].word});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  /// Two-sided monomial multiple u * p * v.
  Poly mul_word(const Word& u, const Word& v) const {
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.coeff, u.concat(t.word).concat(v)});
    return Poly(std::move(out));  // deglex order is preserved by u._v
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    std::vector<std::pair<K, Word>> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        raw.emplace_back(s.coeff * t.coeff, s.word.concat(t.word));
    return from_terms(std::move(raw));
  }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].word != o.terms_[i].word)
        return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  explicit Poly(std::vector<Term<K>> terms) : terms_(std::move(terms)) {}

  static std::vector<Term<K>> normalize_terms(std::vector<std::pair<K, Word>> raw) {
    for (size_t i = 1; i < raw.size(); ++i) raw[0].second.check_same_alphabet(raw[i].second);
    std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
      return deglex_cmp(a.second, b.second) == Ordering::greater;
    });
    std::vector<Term<K>> out;
    for (auto& [c, w] : raw) {
      if (!out.empty() && deglex_cmp(out.back().word, w) == Ordering::equal) {
        out.back().coeff = out.back().coeff + c;
        if (out.back().coeff == K(0)) out.pop_back();
      } else if (c != K(0)) {
        out.push_back({std::move(c), std::move(w)});
      }
    }
    return out;
  }

  std::vector<Term<K>> terms_;
};

/// Merge like terms, drop zeros, sort strictly descending in deglex.
template <class K>
Poly<K> poly_normalize(std::vector<std::pair<K, Word>> raw) {
  return Poly<K>::from_terms(std::move(raw));
}

struct ReductionSite {
  size_t term_index;  // index into the term sequence
  size_t position;    // occurrence position inside the monomial
};

/// One reduction step: eliminate the selected monomial occurrence of
/// lead(g), i.e. return p - c * u * g * v.
template <class K>
Poly<K> reduce_once(const Poly<K>& p, const Poly<K>& g, ReductionSite at) {
  if (g.is_zero() || !g.is_monic()) throw usage_error("reduction requires a monic divisor");
  if (at.term_index >= p.terms().size()) throw usage_error("reduction site: no such monomial");
  const Word& w = p.terms()[at.term_index].word;
  const Word& lw = g.lead_word();
  if (at.position + lw.length() > w.length() || !w.matches_at(lw, at.position))
    throw usage_error("reduction site: leading word does not occur at that position");
  const K& c = p.terms()[at.term_index].coeff;
  Word u = w.sub(0, at.position);
  Word v = w.sub(at.position + lw.length(), w.length() - at.position - lw.length());
  return p - g.mul_word(u, v).scaled(c);
}

namespace detail {

/// Indices of `basis`, sorted so leads ascend in deglex. Zero or
/// non-monic entries are rejected.
template <class K>
std::vector<size_t> basis_order(std::span<const Poly<K>> basis) {
  std::vector<size_t> order(basis.size());
  std::iota(order.begin(), order.end(), size_t{0});
  for (const auto& g : basis)
    if (g.is_zero() || !g.is_monic()) throw usage_error("basis elements must be monic");
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return deglex_cmp(basis[a].lead_word(), basis[b].lead_word()) == Ordering::less;
  });
  return order;
}

/// Leftmost position of `w` where some basis lead occurs; among leads
/// matching there, the deglex-least one.
template <class K>
std::optional<std::pair<size_t, size_t>> find_site(const Word& w,
                                                   std::span<const Poly<K>> basis,
                                                   const std::vector<size_t>& order) {
  for (size_t pos = 0; pos <= w.length(); ++pos) {
    for (size_t oi : order) {
      const Word& lw = basis[oi].lead_word();
      if (pos + lw.length() <= w.length() && w.matches_at(lw, pos))
        return std::make_pair(pos, oi);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Reduce p until no monomial contains any basis leading word. Strategy:
/// deglex-greatest reducible monomial, its leftmost reducible occurrence,
/// deglex-least matching lead. Each step strictly decreases the reduced
/// monomial, so the loop terminates.
template <class K>
Poly<K> normal_form(Poly<K> p, std::span<const Poly<K>> basis) {
  auto order = detail::basis_order(basis);
  bool reduced = true;
  while (reduced && !p.is_zero()) {
    reduced = false;
    for (size_t ti = 0; ti < p.terms().size(); ++ti) {
      auto site = detail::find_site(p.terms()[ti].word, basis, order);
      if (site) {
        p = reduce_once(p, basis[site->second], {ti, site->first});
        reduced = true;
        break;
      }
    }
  }
  return p;
}

template <class K>
Poly<K> normal_form(const Poly<K>& p, const std::vector<Poly<K>>& basis) {
  return normal_form(p, std::span<const Poly<K>>(basis));
}

/// Monomial in the relation-file grammar: letters joined with '*', the
/// unit monomial rendered as "1".
inline std::string monomial_text(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.length(); ++i) {
    if (i) out += "*";
    out += w.alphabet()->letter(w[i]);
  }
  return out;
}

template <class K>
std::string poly_text(const Poly<K>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = scalar_ops<K>::negative(t.coeff);
    K mag = scalar_ops<K>::abs(t.coeff);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (t.word.empty()) {
      os << scalar_ops<K>::str(mag);
    } else if (scalar_ops<K>::is_one(mag)) {
      os << monomial_text(t.word);
    } else {
      os << scalar_ops<K>::str(mag) << "*" << monomial_text(t.word);
    }
    first = false;
  }
  return os.str();
}

}  // namespace diamond
