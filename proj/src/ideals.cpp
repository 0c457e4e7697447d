#include "descent/ideals.hpp"

#include <algorithm>
#include <sstream>

#include "descent/errors.hpp"

namespace descent {

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (gens_.empty()) throw UsageError("an ideal presentation needs at least one generator");
  for (auto& g : gens_) {
    if (!g.ring().same_ambient(*ring_)) throw UsageError("generator from a different ring");
    g = g.in_ring(ring_);
  }
}

std::string IdealPresentation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i];
  }
  os << ')';
  return os.str();
}

HypersurfaceGerm::HypersurfaceGerm(Polynomial f) : f_(std::move(f)) {
  if (f_.is_zero()) throw UsageError("hypersurface equation must be nonzero");
  if (f_.constant_coeff() != 0) throw UsageError("hypersurface must pass through the origin");
}

IdealPresentation jacobian_ideal(const HypersurfaceGerm& g) {
  std::vector<Polynomial> gens;
  gens.reserve(g.nvars() + 1);
  for (std::size_t i = 0; i < g.nvars(); ++i) gens.push_back(partial_derivative(g.equation(), i));
  gens.push_back(g.equation());
  return IdealPresentation(g.ring(), std::move(gens));
}

IdealPresentation bracket_ideal(const IdealPresentation& I, const HypersurfaceGerm& g,
                                unsigned e, const EngineLimits& limits) {
  const Polynomial& f = g.equation();
  if (!I.ring()->same_ambient(f.ring())) throw UsageError("bracket_ideal: ring mismatch");
  const Polynomial fi = f.in_ring(I.ring());
  const auto& gens = I.generators();
  const bool literal = std::find(gens.begin(), gens.end(), fi) != gens.end();
  if (!literal && !contains(I, fi, limits)) {
    throw UsageError("bracket_ideal: the equation does not lie in the ideal");
  }
  std::vector<Polynomial> out;
  for (const auto& h : gens) {
    if (h == fi) continue;
    out.push_back(frobenius_power(h, e));
  }
  out.push_back(fi);
  return IdealPresentation(I.ring(), std::move(out));
}

QuotientLength local_length(const IdealPresentation& I, const EngineLimits& limits) {
  StandardBasis B = complete_basis(I.generators(), Ordering::LocalNegDegRevLex, limits);
  return standard_monomial_count(B);
}

bool contains(const IdealPresentation& I, const Polynomial& g, const EngineLimits& limits) {
  if (g.is_zero()) return true;
  StandardBasis B = complete_basis(I.generators(), Ordering::LocalNegDegRevLex, limits);
  return normal_form(g, B, limits).is_zero();
}

bool is_parameter_ideal(const IdealPresentation& I, const EngineLimits& limits) {
  QuotientLength len = local_length(I, limits);
  return len.is_finite() && len.value() > 0;
}

}  // namespace descent
