#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "descent/poly.hpp"

namespace descent {

/// Caps guarding against pathological input. Exceeding one raises
/// EngineLimitError; the engine never returns a truncated answer.
struct EngineLimits {
  std::uint64_t max_reduction_steps = 1'000'000;
  std::size_t max_pairs = 1'000'000;
};

/// Dimension of a quotient ring as an F_p-vector space, or infinite.
class QuotientLength {
 public:
  static QuotientLength finite(std::uint64_t n) { return QuotientLength(n); }
  static QuotientLength infinite() { return QuotientLength(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws UsageError when infinite.
  std::uint64_t value() const;
  std::string to_string() const;

  friend bool operator==(const QuotientLength&, const QuotientLength&) = default;

 private:
  QuotientLength() = default;
  explicit QuotientLength(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

/// A monomial ideal given by its minimal generators.
class LeadingIdeal {
 public:
  LeadingIdeal(std::size_t nvars, std::vector<Monomial> gens);

  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t nvars() const noexcept { return nvars_; }

  bool contains(const Monomial& m) const noexcept;
  bool is_unit() const noexcept;
  /// Every variable has a pure power among the generators.
  bool is_dimension_zero() const noexcept;
  /// Number of monomials outside the ideal.
  QuotientLength standard_monomial_count() const;
  /// The monomials outside the ideal. Requires is_dimension_zero().
  std::vector<Monomial> standard_monomials() const;
  /// Largest degree of a standard monomial; nullopt unless zero-dimensional
  /// with at least one standard monomial.
  std::optional<unsigned> max_standard_degree() const;

 private:
  template <class Visit>
  void walk_standard(Visit&& visit) const;

  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// A completed Gröbner basis (global ordering) or standard basis (local
/// ordering): minimal, monic, with every S-polynomial reducing to zero.
class StandardBasis {
 public:
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  Ordering ordering() const noexcept { return ring_->ordering(); }
  const RingPtr& ring() const noexcept { return ring_; }
  const LeadingIdeal& leading_ideal() const noexcept { return leading_; }

  /// Local, zero-dimensional bases only: every monomial of degree greater than
  /// this bound lies in the ideal of the local ring (the highest corner).
  std::optional<unsigned> noether_bound() const noexcept { return noether_; }

 private:
  friend StandardBasis complete_basis(std::span<const Polynomial>, Ordering,
                                      const EngineLimits&);
  StandardBasis(RingPtr ring, std::vector<Polynomial> gens, std::optional<unsigned> noether);

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  LeadingIdeal leading_;
  std::optional<unsigned> noether_;
};

/// Completes `gens` to a standard basis: Buchberger's algorithm for the
/// global ordering, Mora's tangent cone algorithm for the local one.
/// Generators are re-sorted for `ord` if needed. Zero generators are ignored
/// and an all-zero list yields the zero ideal; an empty list is a UsageError.
StandardBasis complete_basis(std::span<const Polynomial> gens, Ordering ord,
                             const EngineLimits& limits = {});

/// Reduces f modulo B.
///
/// Global ordering: fully reduced remainder of the division algorithm.
/// Local ordering with a noether bound: fully reduced representative of the
/// class of f in the local ring modulo the ideal.
/// Local ordering otherwise: Mora's weak normal form. The result is zero iff
/// f lies in the ideal of the local ring, and otherwise has a leading
/// monomial outside the leading ideal; tail terms are not reduced.
Polynomial normal_form(const Polynomial& f, const StandardBasis& B,
                       const EngineLimits& limits = {});

bool is_dimension_zero(const StandardBasis& B);

/// Number of monomials outside the leading ideal (infinite iff not
/// zero-dimensional). For local bases this is the length of the quotient of
/// the local ring at the origin.
QuotientLength standard_monomial_count(const StandardBasis& B);

/// Index pairs (i, j) of basis elements whose S-polynomial does not reduce
/// to zero. Empty for every basis produced by complete_basis.
std::vector<std::pair<std::size_t, std::size_t>> unreduced_spairs(
    const StandardBasis& B, const EngineLimits& limits = {});

/// Result of dividing by a list under a global ordering:
/// f = sum quotients[i] * divisors[i] + remainder.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

Division divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// Gröbner basis (global ordering) in which every element is recorded as an
/// explicit combination of the input generators:
/// basis[k] = sum_j cofactors[k][j] * gens[j].
struct TracedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};

TracedBasis complete_basis_traced(std::span<const Polynomial> gens,
                                  const EngineLimits& limits = {});

}  // namespace descent
