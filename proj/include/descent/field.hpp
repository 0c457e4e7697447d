#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace descent {

/// The characteristic of a prime field. Only primes up to 97 are accepted so
/// that every product of two residues fits comfortably in 32 bits.
class PrimeChar {
 public:
  static constexpr unsigned kMaxPrime = 97;

  explicit PrimeChar(unsigned p);

  unsigned value() const noexcept { return p_; }

  friend bool operator==(PrimeChar, PrimeChar) = default;
  friend auto operator<=>(PrimeChar, PrimeChar) = default;

 private:
  unsigned p_;
};

bool is_prime(unsigned n) noexcept;

/// True iff n = p^e for some e >= 1.
bool is_positive_power_of(std::uint64_t n, unsigned p) noexcept;

/// True iff n = p^e for some e >= 0 (so 1 counts).
bool is_power_of(std::uint64_t n, unsigned p) noexcept;

// Raw residue arithmetic for the polynomial hot loops. Arguments are assumed
// to be canonical residues in [0, p).
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) noexcept {
  return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return (a * b) % p;
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept;

/// Throws DivisionByZero for a == 0.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

/// Reduces an arbitrary signed integer into [0, p).
std::uint32_t reduce(long long v, std::uint32_t p) noexcept;

}  // namespace fp

/// An element of F_p tagged with its characteristic. Mixing characteristics
/// throws UsageError.
class FpElem {
 public:
  FpElem(PrimeChar ch, long long v) : ch_(ch), v_(fp::reduce(v, ch.value())) {}

  unsigned value() const noexcept { return v_; }
  PrimeChar characteristic() const noexcept { return ch_; }
  bool is_zero() const noexcept { return v_ == 0; }

  FpElem inv() const;
  FpElem pow(std::uint64_t e) const;

  friend FpElem operator+(FpElem a, FpElem b);
  friend FpElem operator-(FpElem a, FpElem b);
  friend FpElem operator*(FpElem a, FpElem b);
  friend FpElem operator/(FpElem a, FpElem b);
  friend FpElem operator-(FpElem a);

  friend bool operator==(FpElem a, FpElem b) = default;

 private:
  PrimeChar ch_;
  std::uint32_t v_;
};

std::ostream& operator<<(std::ostream& os, FpElem a);

}  // namespace descent
