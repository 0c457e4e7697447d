#include "descent/criteria.hpp"

#include <chrono>
#include <functional>

#include "descent/errors.hpp"

namespace descent {

const char* to_string(CriterionId id) noexcept {
  switch (id) {
    case CriterionId::TjurinaPDivisible: return "TJURINA_P_DIVISIBLE";
    case CriterionId::LengthFormula: return "LENGTH_FORMULA";
    case CriterionId::ThetaFree: return "THETA_FREE";
    case CriterionId::InvertibleSummand: return "INVERTIBLE_SUMMAND";
    case CriterionId::Pi1Trivial: return "PI1_TRIVIAL";
    case CriterionId::PicTorsionPGroup: return "PIC_TORSION_P_GROUP";
    case CriterionId::AnPPower: return "AN_P_POWER";
    case CriterionId::ShapeWitness: return "SHAPE_WITNESS";
  }
  return "?";
}

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotApplicable: return "NOT_APPLICABLE";
    case Status::Undecided: return "UNDECIDED";
  }
  return "?";
}

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Descends: return "DESCENDS";
    case Outcome::Blocked: return "BLOCKED";
    case Outcome::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

bool is_necessary(CriterionId id) noexcept { return id != CriterionId::ShapeWitness; }

namespace {

using Json = nlohmann::ordered_json;

CriterionReport report(CriterionId id, Status s, Json witness = Json::object()) {
  return CriterionReport{id, s, std::move(witness)};
}

CriterionReport undecided(CriterionId id, const EngineLimitError& e) {
  return report(id, Status::Undecided, Json{{"engine_limit", e.what()}});
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Lengths of O/J and O/J^[p], computed once and shared by the three
// length-based criteria.
struct JacobianLengths {
  QuotientLength of_j = QuotientLength::infinite();
  std::optional<QuotientLength> of_bracket;  // only when of_j is finite
};

JacobianLengths jacobian_lengths(const HypersurfaceGerm& g, bool need_bracket,
                                 const EngineLimits& limits) {
  JacobianLengths out;
  IdealPresentation J = jacobian_ideal(g);
  out.of_j = local_length(J, limits);
  if (need_bracket && out.of_j.is_finite() && out.of_j.value() > 0) {
    out.of_bracket = local_length(bracket_ideal(J, g, 1, limits), limits);
  }
  return out;
}

std::optional<CriterionReport> not_isolated(CriterionId id, const QuotientLength& lj) {
  if (!lj.is_finite()) {
    return report(id, Status::NotApplicable,
                  Json{{"reason", "singular locus is not isolated at the origin"},
                       {"len_J", "INFINITE"}});
  }
  if (lj.value() == 0) {
    return report(id, Status::NotApplicable,
                  Json{{"reason", "the origin is a smooth point"}, {"len_J", 0}});
  }
  return std::nullopt;
}

CriterionReport tjurina_from(const JacobianLengths& L, unsigned p) {
  if (auto na = not_isolated(CriterionId::TjurinaPDivisible, L.of_j)) return *na;
  const std::uint64_t tau = L.of_j.value();
  return report(CriterionId::TjurinaPDivisible, tau % p == 0 ? Status::Pass : Status::Fail,
                Json{{"tjurina", tau}, {"p", p}});
}

CriterionReport length_formula_from(CriterionId id, const JacobianLengths& L, unsigned p,
                                    std::size_t d) {
  if (auto na = not_isolated(id, L.of_j)) return *na;
  const std::uint64_t lj = L.of_j.value();
  const std::uint64_t expected = ipow(p, d) * lj;
  Json w{{"len_J", lj}};
  if (!L.of_bracket || !L.of_bracket->is_finite()) {
    // J^[p] has the same radical as J, so this cannot happen for finite l(O/J).
    w["len_Jp"] = "INFINITE";
    return report(id, Status::Fail, std::move(w));
  }
  const std::uint64_t ljp = L.of_bracket->value();
  w["len_Jp"] = ljp;
  w["d"] = d;
  w["expected_len_Jp"] = expected;
  return report(id, ljp == expected ? Status::Pass : Status::Fail, std::move(w));
}

CriterionReport theta_free_from(const JacobianLengths& L, unsigned p, std::size_t nvars) {
  if (nvars != 3) {
    return report(CriterionId::ThetaFree, Status::NotApplicable,
                  Json{{"reason", "requires a surface in 3-space"}});
  }
  CriterionReport lf = length_formula_from(CriterionId::ThetaFree, L, p, 2);
  if (lf.status == Status::Pass || lf.status == Status::Fail) {
    lf.witness["via"] = "tangent module is free iff the length formula holds";
  }
  return lf;
}

}  // namespace

CriterionReport tjurina_p_divisible(const HypersurfaceGerm& g, const EngineLimits& limits) {
  try {
    return tjurina_from(jacobian_lengths(g, false, limits), g.p());
  } catch (const EngineLimitError& e) {
    return undecided(CriterionId::TjurinaPDivisible, e);
  }
}

CriterionReport length_formula(const HypersurfaceGerm& g, const EngineLimits& limits) {
  try {
    return length_formula_from(CriterionId::LengthFormula, jacobian_lengths(g, true, limits),
                               g.p(), g.dim());
  } catch (const EngineLimitError& e) {
    return undecided(CriterionId::LengthFormula, e);
  }
}

CriterionReport theta_free(const HypersurfaceGerm& g, const EngineLimits& limits) {
  if (g.nvars() != 3) return theta_free_from(JacobianLengths{}, g.p(), g.nvars());
  try {
    return theta_free_from(jacobian_lengths(g, true, limits), g.p(), g.nvars());
  } catch (const EngineLimitError& e) {
    return undecided(CriterionId::ThetaFree, e);
  }
}

namespace {

CriterionReport invertible_summand_impl(const HypersurfaceGerm& g, const QuotientLength& lj,
                                        const EngineLimits& limits) {
  constexpr CriterionId id = CriterionId::InvertibleSummand;
  if (g.nvars() != 3) {
    return report(id, Status::NotApplicable, Json{{"reason", "requires a surface in 3-space"}});
  }
  if (auto na = not_isolated(id, lj)) return *na;

  const Polynomial& f = g.equation();
  const auto& names = g.ring()->varnames();
  Json attempts = Json::array();
  std::optional<std::size_t> found;
  for (std::size_t w = 0; w < 3; ++w) {
    std::vector<Polynomial> gens;
    for (std::size_t u = 0; u < 3; ++u) {
      if (u != w) gens.push_back(partial_derivative(f, u));
    }
    gens.push_back(f);
    StandardBasis B = complete_basis(gens, Ordering::LocalNegDegRevLex, limits);
    const QuotientLength len = standard_monomial_count(B);
    const bool parameter = len.is_finite() && len.value() > 0;
    const bool member = normal_form(partial_derivative(f, w), B, limits).is_zero();
    Json a{{"omitted", names[w]},
           {"length", len.is_finite() ? Json(len.value()) : Json("INFINITE")},
           {"parameter_ideal", parameter},
           {"contains_f_w", member}};
    if (!parameter) {
      a["failure"] = "not a parameter ideal";
    } else if (!member) {
      a["failure"] = "f_" + names[w] + " not in ideal";
    } else if (!found) {
      found = w;
    }
    attempts.push_back(std::move(a));
  }
  Json w{{"attempts", std::move(attempts)}};
  if (found) {
    w["omitted"] = names[*found];
    return report(id, Status::Pass, std::move(w));
  }
  return report(id, Status::Fail, std::move(w));
}

}  // namespace

CriterionReport invertible_summand(const HypersurfaceGerm& g, const EngineLimits& limits) {
  try {
    QuotientLength lj = g.nvars() == 3 ? local_length(jacobian_ideal(g), limits)
                                       : QuotientLength::infinite();
    return invertible_summand_impl(g, lj, limits);
  } catch (const EngineLimitError& e) {
    return undecided(CriterionId::InvertibleSummand, e);
  }
}

CriterionReport an_p_power(std::uint64_t n, PrimeChar p) {
  if (n == 0) throw UsageError("A_n requires n >= 1");
  const std::uint64_t m = n + 1;
  Json w{{"n_plus_1", m}, {"p", p.value()}};
  if (is_positive_power_of(m, p.value())) {
    unsigned e = 0;
    for (std::uint64_t t = m; t > 1; t /= p.value()) ++e;
    w["exponent"] = e;
    return report(CriterionId::AnPPower, Status::Pass, std::move(w));
  }
  return report(CriterionId::AnPPower, Status::Fail, std::move(w));
}

CriterionReport pic_torsion_p_group(std::uint64_t pic_order, PrimeChar p) {
  if (pic_order == 0) throw UsageError("group order must be positive");
  return report(CriterionId::PicTorsionPGroup,
                is_power_of(pic_order, p.value()) ? Status::Pass : Status::Fail,
                Json{{"pic_order", pic_order}, {"p", p.value()}});
}

CriterionReport pi1_trivial(const std::optional<GroupDescriptor>& pi1) {
  if (!pi1) {
    return report(CriterionId::Pi1Trivial, Status::NotApplicable,
                  Json{{"reason", "local fundamental group not known for this equation"}});
  }
  Json w{{"group", pi1->name}, {"order", pi1->order}};
  if (pi1->tame_char0) w["tame"] = true;
  return report(CriterionId::Pi1Trivial, pi1->trivial() ? Status::Pass : Status::Fail,
                std::move(w));
}

CriterionReport shape_witness(const HypersurfaceGerm& g, std::optional<unsigned> q_only) {
  const Polynomial& f = g.equation();
  const unsigned p = g.p();
  const std::size_t n = g.nvars();
  const unsigned deg = f.total_degree();
  if (q_only && !is_positive_power_of(*q_only, p)) {
    throw UsageError("shape_witness: q must be a positive power of p");
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::uint64_t q = p; q <= deg; q *= p) {
      if (q_only && q != *q_only) continue;
      Monomial vq(n);
      vq.set(v, static_cast<unsigned>(q));
      std::uint32_t c = 0;
      bool ok = true;
      for (const auto& t : f.terms()) {
        if (t.mono == vq) {
          c = t.coeff;
        } else if (t.mono[v] != 0 || t.mono.degree() < 2) {
          ok = false;
          break;
        }
      }
      if (ok && c != 0) {
        return report(CriterionId::ShapeWitness, Status::Pass,
                      Json{{"v0", f.ring().varnames()[v]}, {"q", q}, {"coefficient", c}});
      }
    }
  }
  return report(CriterionId::ShapeWitness, Status::Fail,
                Json{{"reason", "no variable v0 and q = p^e with f = v0^q + g, g free of v0 "
                                "and of order >= 2"}});
}

Verdict aggregate_verdict(std::span<const CriterionReport> reports, bool catalog_fact) {
  Verdict v{Outcome::Undetermined, {}, false};
  std::vector<CriterionReport> failed;
  std::optional<CriterionReport> certificate;
  for (const auto& r : reports) {
    if (is_necessary(r.id) && r.status == Status::Fail) failed.push_back(r);
    if (r.id == CriterionId::ShapeWitness && r.status == Status::Pass) certificate = r;
  }
  const bool descends = certificate.has_value() || catalog_fact;
  if (descends && !failed.empty()) {
    std::string ids;
    for (const auto& r : failed) ids += std::string(ids.empty() ? "" : ", ") + to_string(r.id);
    throw ConsistencyError("descent certificate contradicts failed necessary criteria: " + ids);
  }
  if (!failed.empty()) {
    v.outcome = Outcome::Blocked;
    v.reasons = std::move(failed);
  } else if (descends) {
    v.outcome = Outcome::Descends;
    if (certificate) v.reasons.push_back(*certificate);
    v.from_catalog_fact = !certificate && catalog_fact;
  } else {
    for (const auto& r : reports) {
      if (r.status == Status::Undecided) v.reasons.push_back(r);
    }
  }
  return v;
}

BatteryResult run_battery(const HypersurfaceGerm& g, const GermFacts& facts,
                          const BatteryOptions& options) {
  using Clock = std::chrono::steady_clock;
  BatteryResult out;
  bool stop = false;
  auto run = [&](const std::string& label, const std::function<CriterionReport()>& fn) {
    if (stop) return;
    const auto t0 = Clock::now();
    CriterionReport r = fn();
    const auto t1 = Clock::now();
    out.timings_ms.emplace_back(label, std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (options.short_circuit && is_necessary(r.id) && r.status == Status::Fail) stop = true;
    out.reports.push_back(std::move(r));
  };
  const PrimeChar ch = g.ring()->characteristic();
  const bool surface = g.nvars() == 3;

  if (surface) {
    run(to_string(CriterionId::AnPPower), [&] {
      if (facts.dynkin == 'A' && facts.dynkin_n) return an_p_power(*facts.dynkin_n, ch);
      return report(CriterionId::AnPPower, Status::NotApplicable,
                    Json{{"reason", "not a known A_n singularity"}});
    });
    run(to_string(CriterionId::PicTorsionPGroup), [&] {
      if (facts.pic_order) return pic_torsion_p_group(*facts.pic_order, ch);
      return report(CriterionId::PicTorsionPGroup, Status::NotApplicable,
                    Json{{"reason", "local Picard group not known for this equation"}});
    });
    run(to_string(CriterionId::Pi1Trivial), [&] { return pi1_trivial(facts.pi1); });
  }

  JacobianLengths L;
  std::optional<EngineLimitError> limit_hit;
  if (!stop) {
    const auto t0 = Clock::now();
    try {
      L = jacobian_lengths(g, true, options.limits);
    } catch (const EngineLimitError& e) {
      limit_hit = e;
    }
    out.timings_ms.emplace_back(
        "jacobian_lengths",
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }

  auto guarded = [&](CriterionId id, auto fn) {
    return [&, id, fn] { return limit_hit ? undecided(id, *limit_hit) : fn(); };
  };
  run(to_string(CriterionId::TjurinaPDivisible),
      guarded(CriterionId::TjurinaPDivisible, [&] { return tjurina_from(L, ch.value()); }));
  run(to_string(CriterionId::LengthFormula), guarded(CriterionId::LengthFormula, [&] {
        return length_formula_from(CriterionId::LengthFormula, L, ch.value(), g.dim());
      }));
  if (surface) {
    run(to_string(CriterionId::ThetaFree), guarded(CriterionId::ThetaFree, [&] {
          return theta_free_from(L, ch.value(), g.nvars());
        }));
    run(to_string(CriterionId::InvertibleSummand), guarded(CriterionId::InvertibleSummand, [&] {
          try {
            return invertible_summand_impl(g, L.of_j, options.limits);
          } catch (const EngineLimitError& e) {
            return undecided(CriterionId::InvertibleSummand, e);
          }
        }));
  }
  run(to_string(CriterionId::ShapeWitness), [&] { return shape_witness(g); });

  out.verdict = aggregate_verdict(out.reports, facts.known_descent);
  return out;
}

}  // namespace descent
