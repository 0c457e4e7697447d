#include "descent/field.hpp"

#include <string>

#include "descent/errors.hpp"

namespace descent {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_power_of(std::uint64_t n, unsigned p) noexcept {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_positive_power_of(std::uint64_t n, unsigned p) noexcept {
  return n > 1 && is_power_of(n, p);
}

PrimeChar::PrimeChar(unsigned p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw UsageError("characteristic must be a prime in [2, " +
                     std::to_string(kMaxPrime) + "], got " + std::to_string(p));
  }
}

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
  std::uint32_t result = 1 % p;
  std::uint32_t base = a % p;
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
  // Fermat: a^(p-2)
  return pow(a, p - 2, p);
}

std::uint32_t reduce(long long v, std::uint32_t p) noexcept {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace fp

namespace {

PrimeChar common(FpElem a, FpElem b) {
  if (a.characteristic() != b.characteristic()) {
    throw UsageError("characteristic mismatch: F_" +
                     std::to_string(a.characteristic().value()) + " vs F_" +
                     std::to_string(b.characteristic().value()));
  }
  return a.characteristic();
}

}  // namespace

FpElem FpElem::inv() const {
  return FpElem(ch_, fp::inv(v_, ch_.value()));
}

FpElem FpElem::pow(std::uint64_t e) const {
  return FpElem(ch_, fp::pow(v_, e, ch_.value()));
}

FpElem operator+(FpElem a, FpElem b) {
  PrimeChar ch = common(a, b);
  return FpElem(ch, fp::add(a.v_, b.v_, ch.value()));
}

FpElem operator-(FpElem a, FpElem b) {
  PrimeChar ch = common(a, b);
  return FpElem(ch, fp::sub(a.v_, b.v_, ch.value()));
}

FpElem operator*(FpElem a, FpElem b) {
  PrimeChar ch = common(a, b);
  return FpElem(ch, fp::mul(a.v_, b.v_, ch.value()));
}

FpElem operator/(FpElem a, FpElem b) {
  PrimeChar ch = common(a, b);
  return FpElem(ch, fp::mul(a.v_, fp::inv(b.v_, ch.value()), ch.value()));
}

FpElem operator-(FpElem a) {
  return FpElem(a.ch_, fp::neg(a.v_, a.ch_.value()));
}

std::ostream& operator<<(std::ostream& os, FpElem a) {
  return os << a.value();
}

}  // namespace descent
