#include "descent/gbasis.hpp"

#include <algorithm>
#include <climits>
#include <tuple>

#include "descent/errors.hpp"

namespace descent {

// ---------------------------------------------------------------------------
// QuotientLength

std::uint64_t QuotientLength::value() const {
  if (!value_) throw UsageError("quotient length is infinite");
  return *value_;
}

std::string QuotientLength::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("INFINITE");
}

// ---------------------------------------------------------------------------
// LeadingIdeal

LeadingIdeal::LeadingIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  // Keep the first of equal generators and drop proper multiples.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || !gens[j].divides(gens[i])) continue;
      redundant = !(gens[j] == gens[i]) || j < i;
    }
    if (!redundant) gens_.push_back(gens[i]);
  }
  std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, Ordering::GlobalDegRevLex) == std::strong_ordering::less;
  });
}

bool LeadingIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&m](const Monomial& g) { return g.divides(m); });
}

bool LeadingIdeal::is_unit() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

bool LeadingIdeal::is_dimension_zero() const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    bool has_power = std::any_of(gens_.begin(), gens_.end(), [i](const Monomial& g) {
      return g.degree() == g[i];
    });
    if (!has_power) return false;
  }
  return true;
}

// Depth-first walk over the order ideal of standard monomials: once a
// prefix lands in the ideal, every extension does too.
template <class Visit>
void LeadingIdeal::walk_standard(Visit&& visit) const {
  Monomial m(nvars_);
  auto rec = [&](auto&& self, std::size_t var) -> void {
    if (var == nvars_) {
      visit(m);
      return;
    }
    for (unsigned e = 0;; ++e) {
      m.set(var, e);
      if (contains(m)) break;
      self(self, var + 1);
    }
    m.set(var, 0);
  };
  rec(rec, 0);
}

QuotientLength LeadingIdeal::standard_monomial_count() const {
  if (!is_dimension_zero()) return QuotientLength::infinite();
  std::uint64_t n = 0;
  walk_standard([&n](const Monomial&) { ++n; });
  return QuotientLength::finite(n);
}

std::vector<Monomial> LeadingIdeal::standard_monomials() const {
  if (!is_dimension_zero()) throw UsageError("infinitely many standard monomials");
  std::vector<Monomial> out;
  walk_standard([&out](const Monomial& m) { out.push_back(m); });
  return out;
}

std::optional<unsigned> LeadingIdeal::max_standard_degree() const {
  if (!is_dimension_zero() || is_unit()) return std::nullopt;
  unsigned d = 0;
  walk_standard([&d](const Monomial& m) { d = std::max(d, m.degree()); });
  return d;
}

// ---------------------------------------------------------------------------
// Reduction primitives

namespace {

class StepCounter {
 public:
  explicit StepCounter(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (++steps_ > cap_) {
      throw EngineLimitError("reduction step cap of " + std::to_string(cap_) + " exceeded");
    }
  }

 private:
  std::uint64_t cap_;
  std::uint64_t steps_ = 0;
};

unsigned ecart(const Polynomial& f) {
  return f.total_degree() - f.leading_monomial().degree();
}

std::uint32_t ratio(std::uint32_t a, std::uint32_t b, unsigned p) {
  return fp::mul(a, fp::inv(b, p), p);
}

// Division with full reduction of every term. Terminates for global
// orderings, and for local orderings once all terms above `bound` are
// discarded (finitely many monomials remain, leading monomials decrease).
Polynomial reduce_full(Polynomial h, std::span<const Polynomial> basis,
                       std::optional<unsigned> bound, StepCounter& steps) {
  const unsigned b = bound.value_or(UINT_MAX);
  if (bound) h.truncate_above(b);
  const unsigned p = h.ring().p();
  Polynomial rem(h.ring_ptr());
  while (!h.is_zero()) {
    const Term lt = h.leading();
    const Polynomial* red = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lt.mono)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      rem.push_trailing(lt);
      h.pop_leading();
      continue;
    }
    h.sub_mul_term(ratio(lt.coeff, red->leading().coeff, p),
                   red->leading_monomial().quotient_of(lt.mono), *red, b);
    steps.tick();
  }
  return rem;
}

// Mora's normal form: pick the reducer of least ecart; when it exceeds the
// ecart of the current remainder, the remainder joins the reducer set.
Polynomial mora_weak_nf(Polynomial h, std::span<const Polynomial> basis, StepCounter& steps) {
  const unsigned p = h.ring().p();
  std::vector<Polynomial> extra;
  while (!h.is_zero()) {
    const Monomial lm = h.leading_monomial();
    const Polynomial* best = nullptr;
    unsigned best_ecart = 0;
    auto consider = [&](const Polynomial& g) {
      if (!g.leading_monomial().divides(lm)) return;
      unsigned e = ecart(g);
      if (best == nullptr || e < best_ecart) {
        best = &g;
        best_ecart = e;
      }
    };
    for (const auto& g : basis) consider(g);
    for (const auto& g : extra) consider(g);
    if (best == nullptr) break;
    std::optional<Polynomial> keep;
    if (best_ecart > ecart(h)) keep = h;
    h.sub_mul_term(ratio(h.leading().coeff, best->leading().coeff, p),
                   best->leading_monomial().quotient_of(lm), *best);
    if (keep) extra.push_back(std::move(*keep));
    steps.tick();
  }
  return h;
}

Polynomial spoly(const Polynomial& a, const Polynomial& b, unsigned bound) {
  const Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  const unsigned p = a.ring().p();
  Polynomial s = a.mul_term(a.leading_monomial().quotient_of(l), fp::inv(a.leading().coeff, p));
  if (bound != UINT_MAX) s.truncate_above(bound);
  s.sub_mul_term(fp::inv(b.leading().coeff, p), b.leading_monomial().quotient_of(l), b, bound);
  return s;
}

Polynomial reduce_against(const Polynomial& h, std::span<const Polynomial> basis,
                          std::optional<unsigned> noether, StepCounter& steps) {
  if (h.ring().ordering() == Ordering::GlobalDegRevLex || noether) {
    return reduce_full(h, basis, noether, steps);
  }
  return mora_weak_nf(h, basis, steps);
}

// ---------------------------------------------------------------------------
// Completion

class Completion {
 public:
  Completion(RingPtr ring, const EngineLimits& limits)
      : ring_(std::move(ring)), limits_(limits), steps_(limits.max_reduction_steps) {}

  void run(std::span<const Polynomial> gens) {
    for (const auto& g : gens) {
      if (!g.ring().same_ambient(*ring_)) throw UsageError("generators live in different rings");
      Polynomial h = g.in_ring(ring_);
      if (noether_) h.truncate_above(*noether_);
      if (h.is_zero()) continue;
      insert(h.monic());
      if (unit_) return;
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        return std::tuple(a.lcm.degree(), a.j, a.i) < std::tuple(b.lcm.degree(), b.j, b.i);
      });
      const Pair pr = *it;
      pairs_.erase(it);
      // Every term of an S-polynomial has degree at least deg(lcm) under a
      // local degree ordering, so it vanishes beyond the noether bound.
      if (noether_ && pr.lcm.degree() > *noether_) continue;
      Polynomial s = spoly(G_[pr.i], G_[pr.j], noether_.value_or(UINT_MAX));
      Polynomial h = reduce_against(s, G_, noether_, steps_);
      if (h.is_zero()) continue;
      insert(h.monic());
      if (unit_) return;
    }
  }

  std::vector<Polynomial> finish() {
    if (unit_) return G_;
    std::vector<Polynomial> kept;
    for (std::size_t i = 0; i < G_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < G_.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& a = G_[j].leading_monomial();
        const Monomial& b = G_[i].leading_monomial();
        if (a.divides(b)) redundant = !(a == b) || j < i;
      }
      if (!redundant) kept.push_back(G_[i]);
    }
    const bool can_tail_reduce = ring_->ordering() == Ordering::GlobalDegRevLex || noether_;
    if (can_tail_reduce) {
      for (std::size_t i = 0; i < kept.size(); ++i) {
        Polynomial tail = kept[i];
        const Term lt = tail.leading();
        tail.pop_leading();
        Polynomial r = reduce_full(tail, kept, noether_, steps_);
        Polynomial head = Polynomial::monomial(ring_, lt.mono, lt.coeff);
        kept[i] = (head + r).monic();
      }
    }
    return kept;
  }

  std::optional<unsigned> noether() const { return noether_; }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  void insert(Polynomial h) {
    if (h.leading_monomial().is_one()) {
      unit_ = true;
      G_.assign(1, Polynomial::constant(ring_, 1));
      pairs_.clear();
      return;
    }
    const Monomial& lm = h.leading_monomial();
    // Gebauer-Moeller criterion B.
    std::erase_if(pairs_, [&](const Pair& pr) {
      return lm.divides(pr.lcm) && !(G_[pr.i].leading_monomial().lcm(lm) == pr.lcm) &&
             !(G_[pr.j].leading_monomial().lcm(lm) == pr.lcm);
    });
    const std::size_t k = G_.size();
    const bool global = ring_->ordering() == Ordering::GlobalDegRevLex;
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial& li = G_[i].leading_monomial();
      // Buchberger's product criterion.
      if (global && li.coprime(lm)) continue;
      pairs_.push_back({i, k, li.lcm(lm)});
    }
    if (pairs_.size() > limits_.max_pairs) {
      throw EngineLimitError("pair queue exceeded " + std::to_string(limits_.max_pairs));
    }
    G_.push_back(std::move(h));
    if (!global) update_noether();
  }

  // Highest-corner truncation: once the leading monomials already contain
  // every monomial of degree > D, so does the ideal of the local ring, and
  // all later arithmetic may drop those terms.
  void update_noether() {
    std::vector<Monomial> lms;
    lms.reserve(G_.size());
    for (const auto& g : G_) lms.push_back(g.leading_monomial());
    LeadingIdeal L(ring_->nvars(), std::move(lms));
    auto d = L.max_standard_degree();
    if (!d || (noether_ && *d >= *noether_)) return;
    noether_ = *d;
    for (auto& g : G_) {
      if (g.leading_monomial().degree() > *d) {
        g = Polynomial::monomial(ring_, g.leading_monomial(), 1);
      } else {
        g.truncate_above(*d);
      }
    }
  }

  RingPtr ring_;
  EngineLimits limits_;
  StepCounter steps_;
  std::vector<Polynomial> G_;
  std::vector<Pair> pairs_;
  std::optional<unsigned> noether_;
  bool unit_ = false;
};

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& gens) {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.leading_monomial());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// StandardBasis

StandardBasis::StandardBasis(RingPtr ring, std::vector<Polynomial> gens,
                             std::optional<unsigned> noether)
    : ring_(std::move(ring)),
      gens_(std::move(gens)),
      leading_(ring_->nvars(), leading_monomials(gens_)),
      noether_(noether) {}

StandardBasis complete_basis(std::span<const Polynomial> gens, Ordering ord,
                             const EngineLimits& limits) {
  if (gens.empty()) throw UsageError("complete_basis needs at least one generator");
  RingPtr ring = with_ordering(gens.front().ring_ptr(), ord);
  Completion c(ring, limits);
  c.run(gens);
  std::vector<Polynomial> basis = c.finish();
  std::optional<unsigned> noether;
  if (ord == Ordering::LocalNegDegRevLex) {
    LeadingIdeal L(ring->nvars(), leading_monomials(basis));
    noether = L.max_standard_degree();
  }
  return StandardBasis(ring, std::move(basis), noether);
}

Polynomial normal_form(const Polynomial& f, const StandardBasis& B, const EngineLimits& limits) {
  if (!f.ring().same_ambient(*B.ring())) throw UsageError("normal_form: ring mismatch");
  Polynomial h = f.in_ring(B.ring());
  if (h.is_zero()) return h;
  StepCounter steps(limits.max_reduction_steps);
  if (B.leading_ideal().is_unit()) return Polynomial(B.ring());
  return reduce_against(h, B.generators(), B.noether_bound(), steps);
}

bool is_dimension_zero(const StandardBasis& B) { return B.leading_ideal().is_dimension_zero(); }

QuotientLength standard_monomial_count(const StandardBasis& B) {
  return B.leading_ideal().standard_monomial_count();
}

std::vector<std::pair<std::size_t, std::size_t>> unreduced_spairs(const StandardBasis& B,
                                                                  const EngineLimits& limits) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const auto& G = B.generators();
  const unsigned bound = B.noether_bound().value_or(UINT_MAX);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      Polynomial s = spoly(G[i], G[j], bound);
      if (!normal_form(s, B, limits).is_zero()) bad.emplace_back(i, j);
    }
  }
  return bad;
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (f.ring().ordering() != Ordering::GlobalDegRevLex) {
    throw UsageError("divide requires a global ordering");
  }
  const unsigned p = f.ring().p();
  Division d{{}, Polynomial(f.ring_ptr())};
  for (const auto& g : divisors) {
    if (!g.ring().same_ambient(f.ring())) throw UsageError("divide: ring mismatch");
    d.quotients.emplace_back(f.ring_ptr());
  }
  std::vector<Polynomial> divs;
  for (const auto& g : divisors) divs.push_back(g.in_ring(f.ring_ptr()));
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term lt = h.leading();
    bool reduced = false;
    for (std::size_t k = 0; k < divs.size(); ++k) {
      if (divs[k].is_zero() || !divs[k].leading_monomial().divides(lt.mono)) continue;
      const Monomial m = divs[k].leading_monomial().quotient_of(lt.mono);
      const std::uint32_t c = ratio(lt.coeff, divs[k].leading().coeff, p);
      d.quotients[k] += Polynomial::monomial(f.ring_ptr(), m, c);
      h.sub_mul_term(c, m, divs[k]);
      reduced = true;
      break;
    }
    if (!reduced) {
      d.remainder.push_trailing(lt);
      h.pop_leading();
    }
  }
  return d;
}

TracedBasis complete_basis_traced(std::span<const Polynomial> gens, const EngineLimits& limits) {
  if (gens.empty()) throw UsageError("complete_basis_traced needs at least one generator");
  RingPtr ring = with_ordering(gens.front().ring_ptr(), Ordering::GlobalDegRevLex);
  const unsigned p = ring->p();
  const std::size_t r = gens.size();
  StepCounter steps(limits.max_reduction_steps);
  TracedBasis tb;

  auto unit_vector = [&](std::size_t j) {
    std::vector<Polynomial> v(r, Polynomial(ring));
    v[j] = Polynomial::constant(ring, 1);
    return v;
  };
  // Fully reduces (h, cof) against the current basis, keeping the cofactor
  // vector in step with every subtraction.
  auto reduce = [&](Polynomial h, std::vector<Polynomial> cof) {
    Polynomial rem(ring);
    while (!h.is_zero()) {
      const Term lt = h.leading();
      std::size_t k = 0;
      while (k < tb.basis.size() && !tb.basis[k].leading_monomial().divides(lt.mono)) ++k;
      if (k == tb.basis.size()) {
        rem.push_trailing(lt);
        h.pop_leading();
        continue;
      }
      const Monomial m = tb.basis[k].leading_monomial().quotient_of(lt.mono);
      const std::uint32_t c = ratio(lt.coeff, tb.basis[k].leading().coeff, p);
      h.sub_mul_term(c, m, tb.basis[k]);
      for (std::size_t j = 0; j < r; ++j) cof[j].sub_mul_term(c, m, tb.cofactors[k][j]);
      steps.tick();
    }
    return std::pair(rem, cof);
  };
  auto add = [&](Polynomial h, std::vector<Polynomial> cof) {
    const std::uint32_t inv = fp::inv(h.leading().coeff, p);
    for (auto& c : cof) c = c.scaled(inv);
    tb.basis.push_back(h.scaled(inv));
    tb.cofactors.push_back(std::move(cof));
  };

  for (std::size_t j = 0; j < r; ++j) {
    auto [h, cof] = reduce(gens[j].in_ring(ring), unit_vector(j));
    if (!h.is_zero()) add(std::move(h), std::move(cof));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < tb.basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.erase(pairs.begin());
    const Monomial& li = tb.basis[i].leading_monomial();
    const Monomial& lj = tb.basis[j].leading_monomial();
    if (li.coprime(lj)) continue;
    const Monomial l = li.lcm(lj);
    const Monomial mi = li.quotient_of(l);
    const Monomial mj = lj.quotient_of(l);
    Polynomial s = tb.basis[i].mul_term(mi, 1);
    s.sub_mul_term(1, mj, tb.basis[j]);
    std::vector<Polynomial> cof(r, Polynomial(ring));
    for (std::size_t t = 0; t < r; ++t) {
      cof[t] = tb.cofactors[i][t].mul_term(mi, 1);
      cof[t].sub_mul_term(1, mj, tb.cofactors[j][t]);
    }
    auto [h, hc] = reduce(std::move(s), std::move(cof));
    if (h.is_zero()) continue;
    add(std::move(h), std::move(hc));
    const std::size_t k = tb.basis.size() - 1;
    for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
    if (pairs.size() > limits.max_pairs) throw EngineLimitError("pair queue cap exceeded");
  }
  return tb;
}

}  // namespace descent
