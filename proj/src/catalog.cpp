#include "descent/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "descent/errors.hpp"
#include "descent/parser.hpp"

#ifndef DESCENT_CATALOG_PATH
#define DESCENT_CATALOG_PATH "data/catalog.txt"
#endif

namespace descent {

std::string SingularityRecord::name() const {
  std::string s = std::string(1, dynkin) + "_" + std::to_string(n);
  if (r) s += "^" + std::to_string(*r);
  return s;
}

GermFacts SingularityRecord::facts() const {
  GermFacts f;
  f.dynkin = dynkin;
  f.dynkin_n = n;
  f.pi1 = pi1;
  f.pic_order = pic_order;
  f.known_descent = known_descent;
  return f;
}

std::uint64_t expected_pic_order(char dynkin, unsigned n) {
  switch (dynkin) {
    case 'A': return std::uint64_t{n} + 1;
    case 'D': return 4;
    case 'E': return n == 6 ? 3 : n == 7 ? 2 : 1;
  }
  throw UsageError(std::string("unknown Dynkin type '") + dynkin + "'");
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

[[noreturn]] void row_error(const Catalog::Row& row, const std::string& msg) {
  throw UsageError("catalog line " + std::to_string(row.line) + ": " + msg);
}

bool is_family_n(const std::string& n) { return n == "n" || n == "2m" || n == "2m+1"; }

bool row_matches_char(const Catalog::Row& row, unsigned p) {
  if (row.p == "*") return true;
  if (row.p.starts_with(">=")) return p >= *to_uint(std::string_view(row.p).substr(2));
  return p == *to_uint(row.p);
}

bool row_matches_n(const Catalog::Row& row, unsigned n) {
  if (row.n == "n") return n >= 1;
  if (row.n == "2m") return n >= 4 && n % 2 == 0;
  if (row.n == "2m+1") return n >= 5 && n % 2 == 1;
  return n == *to_uint(row.n);
}

bool row_matches_r(const Catalog::Row& row, unsigned n, std::optional<unsigned> r) {
  if (row.r == "-") return !r || *r == 0;
  if (row.r == "r") return r && *r >= 1 && *r + 1 <= n / 2;
  return r && *r == *to_uint(row.r);
}

std::string expand(const std::string& tmpl, unsigned n, unsigned r) {
  const unsigned m = n / 2;
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '{') {
      out += tmpl[i];
      continue;
    }
    const auto close = tmpl.find('}', i);
    const std::string key = tmpl.substr(i + 1, close - i - 1);
    unsigned v = 0;
    if (key == "n+1") v = n + 1;
    else if (key == "m") v = m;
    else if (key == "m-r") v = m - r;
    else throw UsageError("unknown placeholder {" + key + "}");
    if (v == 1 && out.ends_with('^')) out.pop_back();
    else out += std::to_string(v);
    i = close;
  }
  return out;
}

std::optional<GroupDescriptor> parse_group(const Catalog::Row& row) {
  if (row.pi1 == "-") return std::nullopt;
  const auto colon = row.pi1.rfind(':');
  if (colon == std::string::npos) row_error(row, "pi1 must be name:order");
  auto order = to_uint(std::string_view(row.pi1).substr(colon + 1));
  if (!order || *order == 0) row_error(row, "bad group order in '" + row.pi1 + "'");
  GroupDescriptor g;
  g.name = row.pi1.substr(0, colon);
  g.order = *order;
  g.tame_char0 = g.name == "tame";
  if (g.order == 1 && g.name != "0") row_error(row, "trivial group must be named 0");
  return g;
}

std::optional<std::uint64_t> optional_uint(const Catalog::Row& row, const std::string& s,
                                           const char* what) {
  if (s == "-") return std::nullopt;
  auto v = to_uint(s);
  if (!v || *v == 0) row_error(row, std::string(what) + " must be a positive integer or -");
  return v;
}

SingularityRecord build(const Catalog::Row& row, unsigned n, std::optional<unsigned> r,
                        PrimeChar ch) {
  static const std::vector<std::string> kVars{"x", "y", "z"};
  auto ring = make_ring(ch, kVars, Ordering::GlobalDegRevLex);
  const unsigned rv = row.r == "r" ? r.value_or(0) : 0;
  std::string text = expand(row.equation, n, rv);
  std::optional<unsigned> rec_r;
  if (row.r == "r") rec_r = rv;
  else if (row.r != "-") rec_r = static_cast<unsigned>(*to_uint(row.r));
  const auto bang = row.citation.find(" ! ");
  SingularityRecord rec{
      .dynkin = row.dynkin,
      .n = n,
      .r = rec_r,
      .ch = ch,
      .equation = parse_poly(text, ring),
      .equation_text = text,
      .pi1 = parse_group(row),
      .pic_order = row.pic == "n+1" ? std::uint64_t{n} + 1 : *to_uint(row.pic),
      .len_j = optional_uint(row, row.len_j, "lenJ"),
      .len_jp = optional_uint(row, row.len_jp, "lenJp"),
      .theta_free = row.theta == "-" ? std::nullopt : std::optional<bool>(row.theta == "yes"),
      .verdict = Outcome::Blocked,
      .citation = row.citation.substr(0, bang),
      .known_descent = false,
      .discrepancy = std::nullopt,
  };
  if (row.verdict == "PPOWER") {
    rec.verdict = is_positive_power_of(std::uint64_t{n} + 1, ch.value()) ? Outcome::Descends
                                                                          : Outcome::Blocked;
  } else {
    rec.verdict = row.verdict == "DESCENDS" ? Outcome::Descends : Outcome::Blocked;
  }
  if (bang != std::string::npos) rec.discrepancy = row.citation.substr(bang + 3);
  rec.known_descent = rec.citation.starts_with("construction:");
  return rec;
}

void validate(const Catalog::Row& row) {
  if (row.dynkin != 'A' && row.dynkin != 'D' && row.dynkin != 'E') {
    row_error(row, "type must be A, D or E");
  }
  unsigned n = 0;
  if (is_family_n(row.n)) {
    if ((row.n == "n") != (row.dynkin == 'A')) row_error(row, "family index does not fit type");
    n = row.n == "n" ? 3 : row.n == "2m" ? 6 : 7;
  } else {
    auto v = to_uint(row.n);
    if (!v) row_error(row, "bad index '" + row.n + "'");
    n = static_cast<unsigned>(*v);
    if (row.dynkin == 'E' && (n < 6 || n > 8)) row_error(row, "E index must be 6, 7 or 8");
    if (row.dynkin == 'D' && n < 4) row_error(row, "D index must be at least 4");
    if (row.dynkin == 'A' && n < 1) row_error(row, "A index must be positive");
  }
  if (row.r != "-" && row.r != "r" && !to_uint(row.r)) row_error(row, "bad co-index");
  if (row.r == "r" && row.dynkin != 'D') row_error(row, "co-index family only for D");

  unsigned p = 0;
  if (row.p == "*") {
    p = 2;
  } else {
    auto v = to_uint(row.p.starts_with(">=") ? std::string_view(row.p).substr(2)
                                             : std::string_view(row.p));
    if (!v || *v > 97 || !is_prime(static_cast<unsigned>(*v))) row_error(row, "bad prime");
    p = static_cast<unsigned>(*v);
  }
  if (row.pic != "n+1" && !to_uint(row.pic)) row_error(row, "bad Picard order");
  if (row.pic == "n+1" && row.dynkin != 'A') row_error(row, "Picard order n+1 only for A");
  if (row.theta != "-" && row.theta != "yes" && row.theta != "no") {
    row_error(row, "theta must be yes, no or -");
  }
  if (row.verdict != "DESCENDS" && row.verdict != "BLOCKED" && row.verdict != "PPOWER") {
    row_error(row, "verdict must be DESCENDS, BLOCKED or PPOWER");
  }

  SingularityRecord rec = [&] {
    try {
      return build(row, n, row.r == "r" ? std::optional<unsigned>(1) : std::nullopt,
                   PrimeChar(p));
    } catch (const ParseError& e) {
      row_error(row, "equation: " + std::string(e.what()));
    }
  }();
  if (rec.pic_order != expected_pic_order(row.dynkin, n)) {
    row_error(row, "Picard order " + std::to_string(rec.pic_order) + " does not match type");
  }
  const Polynomial& f = rec.equation;
  if (f.is_zero() || f.order() < 2) {
    row_error(row, "equation must vanish at the origin with zero linear part");
  }
  if (parse_poly(f.to_string(), f.ring_ptr()) != f) row_error(row, "equation does not round-trip");
  if (rec.len_j && rec.len_jp && rec.theta_free) {
    const bool formula = *rec.len_jp == std::uint64_t{p} * p * *rec.len_j;
    if (formula != *rec.theta_free) row_error(row, "theta column contradicts the lengths");
  }
}

}  // namespace

Catalog Catalog::parse(std::string_view text, std::string source) {
  Catalog cat;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.starts_with("#:")) {
      cat.remarks_.push_back(trim(std::string_view(t).substr(2)));
      continue;
    }
    if (t.empty() || t.starts_with("#")) continue;
    auto f = split(t, ';');
    if (f.size() != 12) {
      throw UsageError(source + ": catalog line " + std::to_string(lineno) + ": expected 12 fields, got " +
                       std::to_string(f.size()));
    }
    for (auto& s : f) s = trim(s);
    Row row{lineno, f[0].size() == 1 ? f[0][0] : '?', f[1], f[2], f[3], f[4], f[5],
            f[6],   f[7],  f[8], f[9], f[10], f[11]};
    try {
      validate(row);
    } catch (const UsageError& e) {
      throw UsageError(source + ": " + e.what());
    }
    cat.rows_.push_back(std::move(row));
  }
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open catalog file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = load(DESCENT_CATALOG_PATH);
  return cat;
}

SingularityRecord Catalog::instantiate(char dynkin, unsigned n, std::optional<unsigned> r,
                                       PrimeChar ch) const {
  for (const Row& row : rows_) {
    if (row.dynkin == dynkin && row_matches_char(row, ch.value()) && row_matches_n(row, n) &&
        row_matches_r(row, n, r)) {
      return build(row, n, r, ch);
    }
  }
  std::string valid;
  switch (dynkin) {
    case 'A':
      valid = "A_n with n >= 1 and no co-index";
      break;
    case 'D':
      valid = ch.value() == 2 ? "D_n^r with n >= 4 and 0 <= r <= floor(n/2)-1"
                              : "D_n with n >= 4 and no co-index";
      break;
    case 'E':
      for (const Row& row : rows_) {
        if (row.dynkin == 'E' && row_matches_char(row, ch.value())) {
          valid += (valid.empty() ? "" : ", ") + build(row, *to_uint(row.n), std::nullopt, ch).name();
        }
      }
      if (valid.empty()) valid = "none";
      break;
    default:
      throw UsageError(std::string("unknown Dynkin type '") + dynkin + "'; expected A, D or E");
  }
  std::string requested = std::string(1, dynkin) + "_" + std::to_string(n);
  if (r) requested += "^" + std::to_string(*r);
  throw UsageError("no rational double point " + requested + " in characteristic " +
                   std::to_string(ch.value()) + "; valid: " + valid);
}

std::vector<SingularityRecord> Catalog::all_records(PrimeChar ch, unsigned max_n) const {
  std::vector<SingularityRecord> out;
  for (const Row& row : rows_) {
    if (row.dynkin == 'E' && row_matches_char(row, ch.value())) {
      out.push_back(build(row, static_cast<unsigned>(*to_uint(row.n)), std::nullopt, ch));
    }
  }
  auto has_family = [&](char t) {
    return std::any_of(rows_.begin(), rows_.end(), [&](const Row& row) {
      return row.dynkin == t && is_family_n(row.n) && row_matches_char(row, ch.value());
    });
  };
  if (has_family('A')) {
    for (unsigned n = 1; n <= max_n; ++n) out.push_back(instantiate('A', n, std::nullopt, ch));
  }
  if (!has_family('D')) return out;
  for (unsigned n = 4; n <= max_n; ++n) {
    if (ch.value() == 2) {
      for (unsigned r = 0; r + 1 <= n / 2; ++r) out.push_back(instantiate('D', n, r, ch));
    } else {
      out.push_back(instantiate('D', n, std::nullopt, ch));
    }
  }
  return out;
}

std::optional<SingularityRecord> Catalog::lookup(const Polynomial& f) const {
  const auto& vars = f.ring().varnames();
  if (vars != std::vector<std::string>{"x", "y", "z"} || f.is_zero()) return std::nullopt;
  const unsigned max_n = 2 * f.total_degree() + 2;
  for (auto& rec : all_records(f.ring().characteristic(), max_n)) {
    if (rec.equation == f) return rec;
  }
  return std::nullopt;
}

}  // namespace descent
