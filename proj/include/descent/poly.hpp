#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descent/field.hpp"

namespace descent {

enum class Ordering {
  /// Degree first, ties broken reverse-lexicographically. A well-ordering.
  GlobalDegRevLex,
  /// Negative degree reverse lexicographic: lower degree is larger, so the
  /// constant monomial is the largest. Realizes the localization at the origin.
  LocalNegDegRevLex,
};

const char* to_string(Ordering ord) noexcept;

/// Exponent vector of fixed length. Storage is inline; rings with more than
/// kMaxVars variables are rejected when the ring is built.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 8;
  static constexpr unsigned kMaxExponent = 0xFFFF;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  std::size_t size() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Throws EngineLimitError if the exponent exceeds kMaxExponent.
  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const noexcept;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// Total order on monomials of equal length; `greater` is the position in a
/// sorted term list (leading term first).
std::strong_ordering compare(const Monomial& a, const Monomial& b, Ordering ord) noexcept;

/// Characteristic, variable names and monomial ordering of a polynomial ring.
class Ring {
 public:
  Ring(PrimeChar ch, std::vector<std::string> varnames, Ordering ord);

  PrimeChar characteristic() const noexcept { return ch_; }
  unsigned p() const noexcept { return ch_.value(); }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& varnames() const noexcept { return vars_; }
  Ordering ordering() const noexcept { return ord_; }

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const noexcept;

  /// Same characteristic and variables; the ordering may differ.
  bool same_ambient(const Ring& other) const noexcept {
    return ch_ == other.ch_ && vars_ == other.vars_;
  }

 private:
  PrimeChar ch_;
  std::vector<std::string> vars_;
  Ordering ord_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(PrimeChar ch, std::vector<std::string> varnames,
                  Ordering ord = Ordering::GlobalDegRevLex);

/// The same ring with another ordering (returns `ring` itself if unchanged).
RingPtr with_ordering(const RingPtr& ring, Ordering ord);

struct Term {
  Monomial mono;
  std::uint32_t coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are kept sorted in decreasing order under
/// the ring's ordering with no zero coefficients; the zero polynomial has no
/// terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, long long c = 1);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  /// Requires !is_zero().
  const Term& leading() const noexcept { return terms_.front(); }
  const Monomial& leading_monomial() const noexcept { return terms_.front().mono; }

  /// Highest total degree of any term; 0 for the zero polynomial.
  unsigned total_degree() const noexcept;
  /// Lowest total degree of any term; 0 for the zero polynomial.
  unsigned order() const noexcept;
  std::uint32_t constant_coeff() const noexcept;
  /// True iff some term contains variable i.
  bool involves(std::size_t i) const noexcept;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial operator-() const;

  Polynomial scaled(std::uint32_t c) const;
  Polynomial monic() const;
  Polynomial mul_term(const Monomial& m, std::uint32_t c) const;

  /// *this -= c * m * g, the elementary reduction step. Terms of degree above
  /// `degree_bound` are discarded.
  void sub_mul_term(std::uint32_t c, const Monomial& m, const Polynomial& g,
                    unsigned degree_bound = UINT32_MAX);

  /// Drops all terms of total degree > bound.
  void truncate_above(unsigned bound);
  /// Removes the leading term.
  void pop_leading();
  /// Appends a term that is smaller than every present term.
  void push_trailing(const Term& t);

  /// Same polynomial re-sorted for another ordering.
  Polynomial in_ordering(Ordering ord) const;
  Polynomial in_ring(const RingPtr& ring) const;

  /// Canonical text: terms in decreasing order, `^` for powers, `*` for
  /// products, coefficients shown only when different from 1.
  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  void check_same(const Polynomial& g) const;
  void sort_terms();

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

Polynomial pow(const Polynomial& f, unsigned k);

/// Formal partial derivative with respect to variable `var`.
Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// f^(p^e). Computed term-wise: exponents and coefficients raised to p^e.
Polynomial frobenius_power(const Polynomial& f, unsigned e);

/// Relabels variable i as variable perm[i]. perm must be a bijection.
Polynomial substitute_rename(const Polynomial& f, std::span<const std::size_t> perm);

}  // namespace descent
