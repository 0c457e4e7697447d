#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "descent/gbasis.hpp"
#include "descent/ideals.hpp"
#include "json.hpp"

namespace descent {

enum class CriterionId {
  TjurinaPDivisible,
  LengthFormula,
  ThetaFree,
  InvertibleSummand,
  Pi1Trivial,
  PicTorsionPGroup,
  AnPPower,
  ShapeWitness,
};

enum class Status { Pass, Fail, NotApplicable, Undecided };

const char* to_string(CriterionId id) noexcept;
const char* to_string(Status s) noexcept;

/// Necessary conditions for descent; a FAIL among them blocks descent.
/// SHAPE_WITNESS is the only sufficient one.
bool is_necessary(CriterionId id) noexcept;

struct CriterionReport {
  CriterionId id;
  Status status;
  /// Structured detail (lengths, the permutation found, group orders, ...).
  /// Keys keep insertion order so serialization is deterministic.
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
};

enum class Outcome { Descends, Blocked, Undetermined };

const char* to_string(Outcome o) noexcept;

struct Verdict {
  Outcome outcome;
  /// BLOCKED: the failed necessary criteria. DESCENDS: the passing
  /// certificate, if any. UNDETERMINED: the undecided criteria.
  std::vector<CriterionReport> reasons;
  /// Descent rests on a stored, externally proven fact.
  bool from_catalog_fact = false;
};

/// Local fundamental group as stored in the catalog.
struct GroupDescriptor {
  std::string name;
  std::uint64_t order = 1;
  /// Only the characteristic-zero order is known; the group is tame.
  bool tame_char0 = false;

  bool trivial() const noexcept { return order == 1; }
};

// -- individual criteria ----------------------------------------------------

/// PASS iff p divides the Tjurina number l(O/J).
CriterionReport tjurina_p_divisible(const HypersurfaceGerm& g, const EngineLimits& limits = {});

/// PASS iff l(O/J^[p]) = p^d l(O/J) with d = n - 1.
CriterionReport length_formula(const HypersurfaceGerm& g, const EngineLimits& limits = {});

/// Freeness of the tangent module of a normal surface hypersurface, decided
/// through its equivalence with the length formula. Requires n = 3.
CriterionReport theta_free(const HypersurfaceGerm& g, const EngineLimits& limits = {});

/// For each omitted variable w: is (f_u, f_v, f) a parameter ideal of the
/// local ring, and does f_w lie in it? PASS iff some w satisfies both.
CriterionReport invertible_summand(const HypersurfaceGerm& g, const EngineLimits& limits = {});

/// PASS iff n + 1 is a positive power of p.
CriterionReport an_p_power(std::uint64_t n, PrimeChar p);

/// PASS iff the local Picard group order is a power of p (1 included).
CriterionReport pic_torsion_p_group(std::uint64_t pic_order, PrimeChar p);

/// PASS iff the stored local fundamental group is trivial; NOT_APPLICABLE
/// when nothing is stored.
CriterionReport pi1_trivial(const std::optional<GroupDescriptor>& pi1);

/// Sufficient shape test: f = c v0^q + g with q = p^e, e >= 1, where g does
/// not involve v0 and has no constant or linear terms. Searches every
/// variable and every q <= deg f unless q is given.
CriterionReport shape_witness(const HypersurfaceGerm& g, std::optional<unsigned> q = std::nullopt);

/// Combines reports. Throws ConsistencyError if a descent certificate (shape
/// witness or catalog fact) coexists with a failed necessary criterion.
Verdict aggregate_verdict(std::span<const CriterionReport> reports, bool catalog_fact);

// -- battery ------------------------------------------------------------------

/// What is known about a germ beyond its equation.
struct GermFacts {
  std::optional<char> dynkin;  // 'A', 'D' or 'E'
  std::optional<std::uint64_t> dynkin_n;
  std::optional<GroupDescriptor> pi1;
  std::optional<std::uint64_t> pic_order;
  bool known_descent = false;
};

struct BatteryOptions {
  bool short_circuit = false;
  EngineLimits limits;
};

struct BatteryResult {
  std::vector<CriterionReport> reports;
  Verdict verdict;
  std::vector<std::pair<std::string, double>> timings_ms;
};

/// Runs every applicable criterion, cheapest first: the stored group data,
/// then the Tjurina number, the length formula, tangent freeness, the
/// invertible summand test and finally the shape witness.
BatteryResult run_battery(const HypersurfaceGerm& g, const GermFacts& facts,
                          const BatteryOptions& options = {});

}  // namespace descent
