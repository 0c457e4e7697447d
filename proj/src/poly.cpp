#include "descent/poly.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "descent/errors.hpp"

namespace descent {

const char* to_string(Ordering ord) noexcept {
  switch (ord) {
    case Ordering::GlobalDegRevLex: return "GLOBAL_DEGREVLEX";
    case Ordering::LocalNegDegRevLex: return "LOCAL_NEG_DEGREVLEX";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxVars) {
    throw UsageError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > kMaxExponent) {
    throw EngineLimitError("exponent " + std::to_string(e) + " exceeds the supported bound " +
                           std::to_string(kMaxExponent));
  }
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const noexcept {
  Monomial q = other;
  for (std::size_t i = 0; i < nvars_; ++i) q.exp_[i] = other.exp_[i] - exp_[i];
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial l = *this;
  l.degree_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    l.exp_[i] = std::max(exp_[i], other.exp_[i]);
    l.degree_ += l.exp_[i];
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
    if (e > Monomial::kMaxExponent) {
      throw EngineLimitError("exponent overflow in monomial product");
    }
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, Ordering ord) noexcept {
  if (a.degree() != b.degree()) {
    return ord == Ordering::GlobalDegRevLex ? a.degree() <=> b.degree()
                                            : b.degree() <=> a.degree();
  }
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(PrimeChar ch, std::vector<std::string> varnames, Ordering ord)
    : ch_(ch), vars_(std::move(varnames)), ord_(ord) {
  if (vars_.empty()) throw UsageError("a ring needs at least one variable");
  if (vars_.size() > Monomial::kMaxVars) {
    throw UsageError("at most " + std::to_string(Monomial::kMaxVars) +
                     " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw UsageError("empty variable name");
    if (!seen.insert(v).second) throw UsageError("duplicate variable name '" + v + "'");
  }
}

int Ring::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr make_ring(PrimeChar ch, std::vector<std::string> varnames, Ordering ord) {
  return std::make_shared<const Ring>(ch, std::move(varnames), ord);
}

RingPtr with_ordering(const RingPtr& ring, Ordering ord) {
  if (ring->ordering() == ord) return ring;
  return make_ring(ring->characteristic(), ring->varnames(), ord);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), one, c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw UsageError("variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, long long c) {
  if (m.size() != ring->nvars()) throw UsageError("monomial length does not match the ring");
  Polynomial f(ring);
  std::uint32_t r = fp::reduce(c, ring->p());
  if (r != 0) f.terms_.push_back({m, r});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  const unsigned p = f.ring_->p();
  for (auto& t : terms) {
    if (t.mono.size() != f.ring_->nvars()) {
      throw UsageError("monomial length does not match the ring");
    }
    t.coeff %= p;
  }
  f.terms_ = std::move(terms);
  f.sort_terms();
  return f;
}

void Polynomial::sort_terms() {
  const Ordering ord = ring_->ordering();
  const unsigned p = ring_->p();
  std::sort(terms_.begin(), terms_.end(), [ord](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, ord) == std::strong_ordering::greater;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = fp::add(merged.back().coeff, t.coeff, p);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Polynomial::order() const noexcept {
  if (terms_.empty()) return 0;
  unsigned d = UINT_MAX;
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::constant_coeff() const noexcept {
  for (const auto& t : terms_) {
    if (t.mono.is_one()) return t.coeff;
  }
  return 0;
}

bool Polynomial::involves(std::size_t i) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(),
                     [i](const Term& t) { return t.mono[i] != 0; });
}

void Polynomial::check_same(const Polynomial& g) const {
  if (ring_ == g.ring_) return;
  if (!ring_->same_ambient(*g.ring_) || ring_->ordering() != g.ring_->ordering()) {
    throw UsageError("polynomials live in different rings");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_same(g);
  const Ordering ord = ring_->ordering();
  const unsigned p = ring_->p();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() && b != g.terms_.end()) {
    auto c = compare(a->mono, b->mono, ord);
    if (c == std::strong_ordering::greater) {
      out.push_back(*a++);
    } else if (c == std::strong_ordering::less) {
      out.push_back(*b++);
    } else {
      std::uint32_t s = fp::add(a->coeff, b->coeff, p);
      if (s != 0) out.push_back({a->mono, s});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, g.terms_.end());
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_same(g);
  return *this += -g;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  const unsigned p = ring_->p();
  for (auto& t : r.terms_) t.coeff = fp::neg(t.coeff, p);
  return r;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_same(g);
  std::vector<Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  const unsigned p = f.ring_->p();
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      prod.push_back({a.mono * b.mono, fp::mul(a.coeff, b.coeff, p)});
    }
  }
  Polynomial r(f.ring_);
  r.terms_ = std::move(prod);
  r.sort_terms();
  return r;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const unsigned p = ring_->p();
  c %= p;
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = fp::mul(t.coeff, c, p);
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().coeff == 1) return *this;
  return scaled(fp::inv(leading().coeff, ring_->p()));
}

Polynomial Polynomial::mul_term(const Monomial& m, std::uint32_t c) const {
  const unsigned p = ring_->p();
  Polynomial r(ring_);
  c %= p;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the relative order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, fp::mul(t.coeff, c, p)});
  return r;
}

void Polynomial::sub_mul_term(std::uint32_t c, const Monomial& m, const Polynomial& g,
                              unsigned degree_bound) {
  const Ordering ord = ring_->ordering();
  const unsigned p = ring_->p();
  const std::uint32_t nc = fp::neg(c % p, p);
  if (nc == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  const unsigned mdeg = m.degree();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b != g.terms_.end() && b->mono.degree() + mdeg > degree_bound) {
      ++b;
      continue;
    }
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    if (a == terms_.end()) {
      out.push_back({bm, fp::mul(b->coeff, nc, p)});
      ++b;
      continue;
    }
    auto cmp = compare(a->mono, bm, ord);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(*a++);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({bm, fp::mul(b->coeff, nc, p)});
      ++b;
    } else {
      std::uint32_t s = fp::add(a->coeff, fp::mul(b->coeff, nc, p), p);
      if (s != 0) out.push_back({bm, s});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

void Polynomial::truncate_above(unsigned bound) {
  std::erase_if(terms_, [bound](const Term& t) { return t.mono.degree() > bound; });
}

void Polynomial::pop_leading() { terms_.erase(terms_.begin()); }

void Polynomial::push_trailing(const Term& t) { terms_.push_back(t); }

Polynomial Polynomial::in_ordering(Ordering ord) const {
  return in_ring(with_ordering(ring_, ord));
}

Polynomial Polynomial::in_ring(const RingPtr& ring) const {
  if (ring == ring_) return *this;
  if (!ring->same_ambient(*ring_)) throw UsageError("cannot move polynomial to a foreign ring");
  Polynomial r(ring);
  r.terms_ = terms_;
  if (ring->ordering() != ring_->ordering()) r.sort_terms();
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << '+';
    first = false;
    bool need_star = false;
    if (t.coeff != 1 || t.mono.is_one()) {
      os << t.coeff;
      need_star = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (need_star) os << '*';
      os << ring_->varnames()[i];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!f.ring_->same_ambient(*g.ring_)) return false;
  if (f.ring_->ordering() == g.ring_->ordering()) return f.terms_ == g.terms_;
  return f.in_ring(g.ring_).terms_ == g.terms_;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------

Polynomial pow(const Polynomial& f, unsigned k) {
  Polynomial result = Polynomial::constant(f.ring_ptr(), 1);
  Polynomial base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring().nvars()) throw UsageError("variable index out of range");
  const unsigned p = f.ring().p();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    std::uint32_t c = fp::mul(t.coeff, e % p, p);
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

Polynomial frobenius_power(const Polynomial& f, unsigned e) {
  if (e == 0) throw UsageError("Frobenius exponent must be positive");
  const unsigned p = f.ring().p();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > Monomial::kMaxExponent) throw EngineLimitError("Frobenius power p^e too large");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(t.mono.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t ex = std::uint64_t{t.mono[i]} * q;
      if (ex > Monomial::kMaxExponent) throw EngineLimitError("exponent overflow in Frobenius power");
      m.set(i, static_cast<unsigned>(ex));
    }
    // c^q = c in F_p.
    out.push_back({m, fp::pow(t.coeff, q, p)});
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

Polynomial substitute_rename(const Polynomial& f, std::span<const std::size_t> perm) {
  const std::size_t n = f.ring().nvars();
  if (perm.size() != n) throw UsageError("permutation length does not match the ring");
  std::vector<bool> hit(n, false);
  for (auto j : perm) {
    if (j >= n || hit[j]) throw UsageError("not a permutation of the variables");
    hit[j] = true;
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(perm[i], t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

}  // namespace descent
