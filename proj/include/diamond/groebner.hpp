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

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "diamond/poly.hpp"

namespace diamond {

/// A proper overlap of two leading words: u1*u2 = w1 and u2*u3 = w2 with
/// u2 nonempty and neither word containing the other (u1, u3 nonempty).
struct OverlapSplit {
  Word u1, u2, u3;
  Word word() const { return u1.concat(u2).concat(u3); }
};

/// All proper overlaps of w1 with w2, sorted by |u2| descending. The
/// containment case (one lead a subword of the other) is not produced;
/// inter-reduction removes it before it could matter.
inline std::vector<OverlapSplit> overlaps(const Word& w1, const Word& w2) {
  if (w1.empty() || w2.empty()) throw usage_error("overlaps require nonempty words");
  w1.check_same_alphabet(w2);
  std::vector<OverlapSplit> out;
  size_t maxk = std::min(w1.length(), w2.length()) - 1;
  for (size_t k = maxk; k >= 1; --k) {
    // u2 = suffix of w1 of length k = prefix of w2 of length k
    bool match = true;
    for (size_t i = 0; i < k; ++i) {
      if (w1[w1.length() - k + i] != w2[i]) {
        match = false;
        break;
      }
    }
    if (match) {
      out.push_back({w1.sub(0, w1.length() - k), w2.sub(0, k), w2.sub(k, w2.length() - k)});
    }
  }
  return out;
}

/// The composition of f and g along the overlap: (f - w1)*u3 - u1*(g - w2),
/// normalized. Every monomial of the result precedes the overlap word.
template <class K>
Poly<K> composition_result(const Poly<K>& f, const Poly<K>& g, const OverlapSplit& o) {
  if (f.is_zero() || g.is_zero() || !f.is_monic() || !g.is_monic())
    throw usage_error("composition requires monic polynomials");
  Word w1 = o.u1.concat(o.u2);
  Word w2 = o.u2.concat(o.u3);
  if (f.lead_word() != w1 || g.lead_word() != w2)
    throw usage_error("overlap does not match the leading words");
  Word eps(o.u2.alphabet());
  Poly<K> lead1 = poly_normalize<K>({{K(1), w1}});
  Poly<K> lead2 = poly_normalize<K>({{K(1), w2}});
  return (f - lead1).mul_word(eps, o.u3) - (g - lead2).mul_word(o.u1, eps);
}

/// Fully inter-reduce: make every element monic with a tail in normal
/// form w.r.t. the others, and no lead a subword of another lead. The
/// result is sorted by leading word and canonical for the ideal it spans.
template <class K>
std::vector<Poly<K>> interreduce(std::vector<Poly<K>> work) {
  std::vector<Poly<K>> basis;
  std::erase_if(work, [](const Poly<K>& p) { return p.is_zero(); });
  auto by_lead = [](const Poly<K>& a, const Poly<K>& b) {
    return deglex_cmp(a.lead_word(), b.lead_word()) == Ordering::less;
  };
  while (!work.empty()) {
    std::stable_sort(work.begin(), work.end(), by_lead);
    Poly<K> p = normal_form(std::move(work.front()), basis);
    work.erase(work.begin());
    if (p.is_zero()) continue;
    p = p.monic();
    const Word lp = p.lead_word();
    std::vector<Poly<K>> keep;
    for (auto& g : basis) {
      bool hit = g.lead_word().contains(lp);
      for (size_t ti = 1; !hit && ti < g.terms().size(); ++ti)
        hit = g.terms()[ti].word.contains(lp);
      (hit ? work : keep).push_back(std::move(g));
    }
    keep.push_back(std::move(p));
    basis = std::move(keep);
  }
  std::sort(basis.begin(), basis.end(), by_lead);
  return basis;
}

struct CompletionLimits {
  size_t max_basis = 4096;
  size_t max_queue = 1u << 20;
  size_t max_steps = 1u << 20;
};

template <class K = Rational>
struct CompletionOutcome {
  enum class Status { saturated, truncated };

  std::vector<Poly<K>> basis;      // monic, inter-reduced, sorted by lead
  std::vector<Word> obstructions;  // the basis leads, deglex ascending
  int processed_word_bound = 0;
  int obstructions_exact_upto = 0;
  Status status = Status::saturated;
};

/// Limit hit during completion; carries whatever basis was reached.
template <class K = Rational>
class completion_limit_error : public resource_error {
 public:
  completion_limit_error(const std::string& msg, CompletionOutcome<K> partial_outcome)
      : resource_error(msg), partial(std::move(partial_outcome)) {}
  CompletionOutcome<K> partial;
};

namespace detail {

struct QKeyLess {
  bool operator()(const std::tuple<Word, Word, Word>& a,
                  const std::tuple<Word, Word, Word>& b) const {
    DeglexLess less;
    const auto& [aw, a1, a2] = a;
    const auto& [bw, b1, b2] = b;
    if (less(aw, bw)) return true;
    if (less(bw, aw)) return false;
    if (less(a1, b1)) return true;
    if (less(b1, a1)) return false;
    return less(a2, b2);
  }
};

template <class K>
CompletionOutcome<K> make_outcome(std::vector<Poly<K>> basis, int bound,
                                  typename CompletionOutcome<K>::Status status) {
  CompletionOutcome<K> out;
  out.basis = std::move(basis);
  for (const auto& g : out.basis) out.obstructions.push_back(g.lead_word());
  out.processed_word_bound = bound;
  out.obstructions_exact_upto = bound / 2;
  out.status = status;
  return out;
}

}  // namespace detail

/// Degree-bounded diamond-lemma completion. Composition words are
/// processed in increasing (length, deglex) order up to max_word_len;
/// nonzero reduced composition results join the basis, which is kept
/// inter-reduced throughout. The obstruction set (the basis leads) is
/// exact for lengths up to floor(max_word_len / 2).
template <class K = Rational>
CompletionOutcome<K> complete(std::span<const Poly<K>> relations, int max_word_len,
                              const CompletionLimits& limits = {}) {
  using Status = typename CompletionOutcome<K>::Status;
  std::vector<Poly<K>> rels;
  int max_degree = 0;
  for (const auto& r : relations) {
    if (r.is_zero()) throw usage_error("zero relation");
    max_degree = std::max(max_degree, static_cast<int>(r.degree()));
    rels.push_back(r);
  }
  if (max_word_len < max_degree)
    throw usage_error("completion bound is below the maximal relation degree");

  std::vector<Poly<K>> basis = interreduce(std::move(rels));

  using QKey = std::tuple<Word, Word, Word>;  // (overlap word, lead1, lead2)
  struct QItem {
    OverlapSplit split;
    Word lead1, lead2;
  };
  std::map<QKey, QItem, detail::QKeyLess> queue;
  std::set<QKey, detail::QKeyLess> done;

  auto enqueue_pairs = [&](const std::vector<Poly<K>>& bs) {
    for (const auto& f : bs) {
      for (const auto& g : bs) {
        if (f.lead_word().empty() || g.lead_word().empty()) continue;
        for (auto& o : overlaps(f.lead_word(), g.lead_word())) {
          Word w = o.word();
          if (static_cast<int>(w.length()) > max_word_len) continue;
          QKey key{w, f.lead_word(), g.lead_word()};
          if (!done.count(key) && !queue.count(key))
            queue.emplace(std::move(key), QItem{std::move(o), f.lead_word(), g.lead_word()});
        }
      }
    }
  };
  enqueue_pairs(basis);

  auto partial = [&](Status st) { return detail::make_outcome(basis, max_word_len, st); };

  size_t steps = 0;
  while (!queue.empty()) {
    if (queue.size() > limits.max_queue)
      throw completion_limit_error<K>("completion queue limit exceeded",
                                      partial(Status::truncated));
    auto it = queue.begin();
    QKey key = it->first;
    QItem item = it->second;
    queue.erase(it);
    done.insert(key);
    if (++steps > limits.max_steps)
      throw completion_limit_error<K>("completion step limit exceeded",
                                      partial(Status::truncated));

    const Poly<K>*f = nullptr, *g = nullptr;
    for (const auto& b : basis) {
      if (b.lead_word() == item.lead1) f = &b;
      if (b.lead_word() == item.lead2) g = &b;
    }
    if (!f || !g) continue;  // stale pair, removed by inter-reduction

    Poly<K> r = normal_form(composition_result(*f, *g, item.split), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    basis = interreduce(std::move(basis));
    if (basis.size() > limits.max_basis)
      throw completion_limit_error<K>("completion basis limit exceeded",
                                      partial(Status::truncated));
    enqueue_pairs(basis);
  }

  // saturated iff no live pair still overlaps beyond the bound
  bool overflow = false;
  for (const auto& f : basis) {
    for (const auto& g : basis) {
      if (f.lead_word().empty() || g.lead_word().empty()) continue;
      for (auto& o : overlaps(f.lead_word(), g.lead_word()))
        if (static_cast<int>(o.word().length()) > max_word_len) overflow = true;
    }
  }
  return partial(overflow ? Status::truncated : Status::saturated);
}

template <class K = Rational>
CompletionOutcome<K> complete(const std::vector<Poly<K>>& relations, int max_word_len,
                              const CompletionLimits& limits = {}) {
  return complete(std::span<const Poly<K>>(relations), max_word_len, limits);
}

/// Obstructions of the algebra up to length n (exact): basis leads of a
/// completion processed to word bound 2n.
template <class K = Rational>
std::vector<Word> obstructions_of_algebra(const std::vector<Poly<K>>& relations, int n,
                                          const CompletionLimits& limits = {}) {
  if (n < 1) throw usage_error("obstruction bound must be at least 1");
  auto outcome = complete(relations, 2 * n, limits);
  std::vector<Word> out;
  for (const auto& w : outcome.obstructions)
    if (static_cast<int>(w.length()) <= n) out.push_back(w);
  return out;
}

/// Cogrowth O_A(1..n): the number of obstructions of length <= k.
template <class K = Rational>
std::vector<int64_t> cogrowth_algebra(const std::vector<Poly<K>>& relations, int n,
                                      const CompletionLimits& limits = {}) {
  auto obs = obstructions_of_algebra(relations, n, limits);
  std::vector<int64_t> out(n, 0);
  for (int k = 1; k <= n; ++k)
    for (const auto& w : obs)
      if (static_cast<int>(w.length()) <= k) ++out[k - 1];
  return out;
}

template <class K = Rational>
struct Certificate {
  enum class Verdict { certified, not_certified };

  Verdict verdict = Verdict::not_certified;
  int N = 0;
  int m = 0;  // maximal relation degree
  std::vector<Poly<K>> witness_basis;      // certified only: leads of length < N
  std::vector<int> obstruction_lengths;    // certified: witness lead lengths;
                                           // otherwise: lengths found in [N, 2N]
};

/// Finite-basis certificate: complete to word bound 2N and certify when
/// no obstruction length falls inside [N, 2N]; the basis elements with
/// lead length below N then form a finite basis of the ideal.
template <class K = Rational>
Certificate<K> certify_finite_basis(const std::vector<Poly<K>>& relations, int N,
                                    const CompletionLimits& limits = {}) {
  int m = 0;
  for (const auto& r : relations) {
    if (r.is_zero()) throw usage_error("zero relation");
    m = std::max(m, static_cast<int>(r.degree()));
  }
  if (N < 1 || N < m) throw usage_error("N must be at least the maximal relation degree");

  auto outcome = complete(relations, 2 * N, limits);
  std::set<int> lens;
  for (const auto& w : outcome.obstructions) lens.insert(static_cast<int>(w.length()));

  Certificate<K> cert;
  cert.N = N;
  cert.m = m;
  std::vector<int> inseg;
  for (int l : lens)
    if (l >= N && l <= 2 * N) inseg.push_back(l);
  if (inseg.empty()) {
    cert.verdict = Certificate<K>::Verdict::certified;
    for (const auto& g : outcome.basis)
      if (static_cast<int>(g.degree()) < N) cert.witness_basis.push_back(g);
    std::set<int> wl;
    for (const auto& g : cert.witness_basis) wl.insert(static_cast<int>(g.degree()));
    cert.obstruction_lengths.assign(wl.begin(), wl.end());
  } else {
    cert.verdict = Certificate<K>::Verdict::not_certified;
    cert.obstruction_lengths = std::move(inseg);
  }
  return cert;
}

/// Key-value serialization of a certificate.
template <class K>
std::string certificate_text(const Certificate<K>& cert) {
  std::ostringstream os;
  os << "verdict: "
     << (cert.verdict == Certificate<K>::Verdict::certified ? "certified" : "not_certified")
     << "\n";
  os << "N: " << cert.N << "\n";
  os << "m: " << cert.m << "\n";
  os << "obstruction_lengths:";
  for (int l : cert.obstruction_lengths) os << " " << l;
  os << "\n";
  for (const auto& g : cert.witness_basis) os << "basis: " << poly_text(g) << "\n";
  return os.str();
}

/// Every word of length <= n over the alphabet, deglex ascending.
inline std::vector<Word> all_words_upto(const AlphabetPtr& alphabet, int n,
                                        size_t limit = (1u << 22)) {
  std::vector<Word> out;
  std::vector<Word> layer{Word(alphabet)};
  out.push_back(layer[0]);
  for (int len = 1; len <= n; ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * alphabet->size());
    for (const auto& w : layer) {
      for (size_t a = 0; a < alphabet->size(); ++a) {
        auto ls = w.letters();
        ls.push_back(static_cast<uint8_t>(a));
        next.emplace_back(alphabet, std::move(ls));
      }
    }
    layer = std::move(next);
    for (const auto& w : layer) {
      out.push_back(w);
      if (out.size() > limit) throw resource_error("word enumeration limit exceeded");
    }
  }
  return out;
}

/// Words of length <= n containing at least one of the given words as a
/// subword (the reducible set determined by an obstruction list).
inline std::vector<Word> reducible_closure(const std::vector<Word>& obstructions,
                                           const AlphabetPtr& alphabet, int n) {
  std::vector<Word> out;
  for (const auto& w : all_words_upto(alphabet, n)) {
    for (const auto& o : obstructions) {
      if (w.contains(o)) {
        out.push_back(w);
        break;
      }
    }
  }
  return out;
}

}  // namespace diamond
