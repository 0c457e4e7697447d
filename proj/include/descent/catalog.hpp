#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "descent/criteria.hpp"
#include "descent/poly.hpp"

namespace descent {

/// One concrete rational double point in one characteristic.
struct SingularityRecord {
  char dynkin = 'A';  // 'A', 'D' or 'E'
  unsigned n = 1;
  std::optional<unsigned> r;
  PrimeChar ch{2};
  Polynomial equation;
  /// The equation as written in the data file.
  std::string equation_text;
  std::optional<GroupDescriptor> pi1;
  std::uint64_t pic_order = 1;
  std::optional<std::uint64_t> len_j;
  std::optional<std::uint64_t> len_jp;
  std::optional<bool> theta_free;
  Outcome verdict = Outcome::Blocked;
  std::string citation;
  /// Descent is established by an explicit construction rather than by the
  /// shape test.
  bool known_descent = false;
  /// A conflicting statement recorded alongside the default verdict.
  std::optional<std::string> discrepancy;

  /// "A_3", "D_6^1", "E_8^3", or "E_6" when no co-index applies.
  std::string name() const;
  GermFacts facts() const;
  HypersurfaceGerm germ() const { return HypersurfaceGerm(equation); }
};

/// Rows of the data file. Concrete rows give one equation; family rows use
/// n = "n", "2m" or "2m+1", r = "r" for 1 <= r <= m-1, and braces in the
/// equation for exponents: {n+1}, {m}, {m-r}.
class Catalog {
 public:
  struct Row {
    std::size_t line = 0;
    char dynkin = 'A';
    std::string n;
    std::string r;
    std::string p;
    std::string equation;
    std::string pi1;
    std::string pic;
    std::string len_j;
    std::string len_jp;
    std::string theta;
    std::string verdict;
    std::string citation;
  };

  /// Throws UsageError naming the line on malformed or inconsistent rows.
  static Catalog parse(std::string_view text, std::string source = "<catalog>");
  static Catalog load(const std::string& path);
  /// The data file shipped with the library, loaded once.
  static const Catalog& builtin();

  /// Throws UsageError with the valid range when no row matches.
  SingularityRecord instantiate(char dynkin, unsigned n, std::optional<unsigned> r,
                                PrimeChar ch) const;

  /// E rows as stored, then A_1..A_max_n, then D_4..D_max_n with all co-indices
  /// (families only when the data has rows for them).
  std::vector<SingularityRecord> all_records(PrimeChar ch, unsigned max_n = 12) const;

  /// The record whose equation equals f exactly (variables x, y, z).
  std::optional<SingularityRecord> lookup(const Polynomial& f) const;

  const std::vector<Row>& rows() const noexcept { return rows_; }
  /// Comment lines starting with "#:" carry remarks about the data.
  const std::vector<std::string>& remarks() const noexcept { return remarks_; }

 private:
  std::vector<Row> rows_;
  std::vector<std::string> remarks_;
};

/// Expected Picard group order for the Dynkin type.
std::uint64_t expected_pic_order(char dynkin, unsigned n);

}  // namespace descent
