#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "descent/gbasis.hpp"
#include "descent/poly.hpp"

namespace descent {

/// A finite generator list in a fixed polynomial ring. The zero ideal is
/// presented by {0}.
class IdealPresentation {
 public:
  IdealPresentation(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// A hypersurface f = 0 in affine n-space, studied at the origin.
class HypersurfaceGerm {
 public:
  /// Throws UsageError unless f is nonzero and vanishes at the origin.
  explicit HypersurfaceGerm(Polynomial f);

  const Polynomial& equation() const noexcept { return f_; }
  const RingPtr& ring() const noexcept { return f_.ring_ptr(); }
  std::size_t nvars() const noexcept { return f_.ring().nvars(); }
  /// Dimension of the hypersurface, n - 1.
  std::size_t dim() const noexcept { return nvars() - 1; }
  unsigned p() const noexcept { return f_.ring().p(); }

 private:
  Polynomial f_;
};

/// (df/dx_1, ..., df/dx_n, f).
IdealPresentation jacobian_ideal(const HypersurfaceGerm& g);

/// Presents the Frobenius bracket ideal of I/(f) inside O = R/(f): every
/// generator other than f is raised to the power p^e, and f is appended.
/// Throws UsageError if f does not lie in I.
IdealPresentation bracket_ideal(const IdealPresentation& I, const HypersurfaceGerm& g,
                                unsigned e = 1, const EngineLimits& limits = {});

/// Length of O/I O where O is the local ring at the origin: 0 if I contains
/// a unit there, infinite if V(I) has positive dimension at the origin.
QuotientLength local_length(const IdealPresentation& I, const EngineLimits& limits = {});

/// Membership of g in I extended to the local ring at the origin.
bool contains(const IdealPresentation& I, const Polynomial& g, const EngineLimits& limits = {});

/// I is primary to the maximal ideal at the origin: finite positive length.
bool is_parameter_ideal(const IdealPresentation& I, const EngineLimits& limits = {});

/// Outcome of the linear-algebra length computation. `length` is empty when
/// no certified value was found up to the degree cap.
struct OracleResult {
  std::optional<std::uint64_t> length;
  unsigned degree_reached = 0;

  bool stable() const noexcept { return length.has_value(); }
};

/// Length of the local quotient computed without any standard-basis
/// machinery. For a truncation degree D, the span of all products m * g_i
/// (deg m < D) cut off at degree D is row-reduced inside the space of
/// monomials of degree < D, giving c(D) = dim R/(I + m^D). When
/// c(D) = c(D-1), every monomial of degree D-1 lies in I + m^D, so
/// m^(D-1) lies in I locally (Nakayama) and c(D) is the true length.
OracleResult truncation_length_oracle(const IdealPresentation& I, unsigned degree_cap = 64);

}  // namespace descent
