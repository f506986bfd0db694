#pragma once

// Truncated-Taylor rings for forward-mode differentiation.
//
//   Dual<T>       a + b·ε            with ε² = 0
//   HyperDual<T>  a + b·ε₁ + c·ε₂ + d·ε₁ε₂   with ε₁² = ε₂² = 0
//
// Seeding ε₁ along e_i and ε₂ along e_j and reading the ε₁ε₂ coefficient
// gives ∂²f/∂x_i∂x_j with no truncation error.

#include <cstdint>
#include <type_traits>

#include "hypercurv/errors.hpp"

namespace hypercurv {

template <typename T>
struct Dual {
  T value{};
  T deriv{};

  constexpr Dual() = default;
  constexpr Dual(T v) : value(v) {}  // NOLINT: constants embed implicitly
  constexpr Dual(T v, T d) : value(v), deriv(d) {}

  constexpr bool operator==(const Dual&) const = default;

  constexpr Dual operator-() const { return {-value, -deriv}; }

  constexpr Dual& operator+=(const Dual& o) {
    value += o.value;
    deriv += o.deriv;
    return *this;
  }
  constexpr Dual& operator-=(const Dual& o) {
    value -= o.value;
    deriv -= o.deriv;
    return *this;
  }
  constexpr Dual& operator*=(const Dual& o) { return *this = *this * o; }
  constexpr Dual& operator/=(const Dual& o) { return *this = *this / o; }

  friend constexpr Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend constexpr Dual operator-(Dual a, const Dual& b) { return a -= b; }

  friend constexpr Dual operator*(const Dual& a, const Dual& b) {
    return {a.value * b.value, a.value * b.deriv + a.deriv * b.value};
  }

  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    if (b.value == T(0)) throw RingDivisionError();
    const T q = a.value / b.value;
    return {q, (a.deriv - q * b.deriv) / b.value};
  }
};

template <typename T>
struct HyperDual {
  T value{};
  T d1{};
  T d2{};
  T d12{};

  constexpr HyperDual() = default;
  constexpr HyperDual(T v) : value(v) {}  // NOLINT
  constexpr HyperDual(T v, T a, T b, T ab) : value(v), d1(a), d2(b), d12(ab) {}

  constexpr bool operator==(const HyperDual&) const = default;

  constexpr HyperDual operator-() const { return {-value, -d1, -d2, -d12}; }

  constexpr HyperDual& operator+=(const HyperDual& o) {
    value += o.value;
    d1 += o.d1;
    d2 += o.d2;
    d12 += o.d12;
    return *this;
  }
  constexpr HyperDual& operator-=(const HyperDual& o) {
    value -= o.value;
    d1 -= o.d1;
    d2 -= o.d2;
    d12 -= o.d12;
    return *this;
  }
  constexpr HyperDual& operator*=(const HyperDual& o) { return *this = *this * o; }
  constexpr HyperDual& operator/=(const HyperDual& o) { return *this = *this / o; }

  friend constexpr HyperDual operator+(HyperDual a, const HyperDual& b) { return a += b; }
  friend constexpr HyperDual operator-(HyperDual a, const HyperDual& b) { return a -= b; }

  friend constexpr HyperDual operator*(const HyperDual& a, const HyperDual& b) {
    return {a.value * b.value,
            a.value * b.d1 + a.d1 * b.value,
            a.value * b.d2 + a.d2 * b.value,
            a.value * b.d12 + a.d1 * b.d2 + a.d2 * b.d1 + a.d12 * b.value};
  }

  // q = a/b solves a = q·b slot by slot.
  friend constexpr HyperDual operator/(const HyperDual& a, const HyperDual& b) {
    if (b.value == T(0)) throw RingDivisionError();
    const T q = a.value / b.value;
    const T q1 = (a.d1 - q * b.d1) / b.value;
    const T q2 = (a.d2 - q * b.d2) / b.value;
    const T q12 = (a.d12 - q * b.d12 - q1 * b.d2 - q2 * b.d1) / b.value;
    return {q, q1, q2, q12};
  }
};

template <typename T>
constexpr T real_part(T x) requires std::is_floating_point_v<T> {
  return x;
}
template <typename T>
constexpr T real_part(const Dual<T>& x) {
  return x.value;
}
template <typename T>
constexpr T real_part(const HyperDual<T>& x) {
  return x.value;
}

/// Ring division shared by every scalar type: a zero real part in the
/// divisor is an error, also for plain reals.
template <typename Ring>
constexpr Ring ring_divide(const Ring& a, const Ring& b) {
  if (real_part(b) == 0) throw RingDivisionError();
  return a / b;
}

/// x^k by binary powering. Uses the same multiplication sequence for every
/// ring, so plain and dual evaluation agree in the value slot.
template <typename Ring>
constexpr Ring ipow(Ring base, std::uint64_t k) {
  Ring result(1);
  bool first = true;
  while (k != 0) {
    if (k & 1U) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

}  // namespace hypercurv
