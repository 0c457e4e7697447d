#pragma once

#include <string>
#include <vector>

#include "descent/parser.hpp"
#include "descent/poly.hpp"

namespace testing_helpers {

using namespace descent;

inline RingPtr xyz(unsigned p, Ordering ord = Ordering::GlobalDegRevLex) {
  return make_ring(PrimeChar(p), {"x", "y", "z"}, ord);
}

inline Polynomial P(const RingPtr& ring, const std::string& s) { return parse_poly(s, ring); }

inline std::vector<Polynomial> Ps(const RingPtr& ring, const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(parse_poly(s, ring));
  return out;
}

}  // namespace testing_helpers
