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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "diamond/errors.hpp"

namespace diamond {

// Exact arithmetic only. The default coefficient field is the rationals
// with arbitrary-precision integer numerator/denominator; prime fields are
// available as an alternate template configuration.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {
constexpr bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace detail

/// Prime field of order P. Values are canonical residues in [0, P).
template <uint32_t P>
class Fp {
  static_assert(detail::is_prime(P), "field order must be prime");

 public:
  Fp() : v_(0) {}
  Fp(int64_t n) : v_(static_cast<uint32_t>(((n % P) + P) % P)) {}

  uint32_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + uint64_t(b.v_)) % P); }
  friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + uint64_t(P) - b.v_) % P); }
  friend Fp operator*(Fp a, Fp b) { return from_raw((uint64_t(a.v_) * b.v_) % P); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw usage_error("division by zero in prime field");
    // extended Euclid on (v, P)
    int64_t a = v_, b = P, x0 = 1, x1 = 0;
    while (b != 0) {
      int64_t q = a / b;
      a -= q * b;
      std::swap(a, b);
      x0 -= q * x1;
      std::swap(x0, x1);
    }
    return Fp(x0);
  }

 private:
  static Fp from_raw(uint64_t v) {
    Fp r;
    r.v_ = static_cast<uint32_t>(v);
    return r;
  }
  uint32_t v_;
};

/// Adapter used by the parser and printers: how to build a scalar from an
/// integer fraction and how to render it in the polynomial grammar.
template <class K>
struct scalar_ops;

template <>
struct scalar_ops<Rational> {
  static Rational from_fraction(const Int& num, const Int& den) {
    if (den == 0) throw usage_error("zero denominator in coefficient");
    return Rational(num, den);
  }
  static bool negative(const Rational& c) { return c < 0; }
  static Rational abs(const Rational& c) { return c < 0 ? Rational(-c) : c; }
  static bool is_one(const Rational& c) { return c == 1; }
  static std::string str(const Rational& c) { return c.str(); }
};

template <uint32_t P>
struct scalar_ops<Fp<P>> {
  static Fp<P> from_fraction(const Int& num, const Int& den) {
    auto reduce = [](const Int& n) {
      Int r = n % P;
      if (r < 0) r += P;
      return static_cast<int64_t>(r);
    };
    Fp<P> d(reduce(den));
    if (d == Fp<P>(0)) throw usage_error("coefficient denominator vanishes in the prime field");
    return Fp<P>(reduce(num)) / d;
  }
  static bool negative(const Fp<P>&) { return false; }
  static Fp<P> abs(const Fp<P>& c) { return c; }
  static bool is_one(const Fp<P>& c) { return c == Fp<P>(1); }
  static std::string str(const Fp<P>& c) { return std::to_string(c.value()); }
};

}  // namespace diamond
