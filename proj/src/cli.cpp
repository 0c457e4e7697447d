#include "descent/cli.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "descent/criteria.hpp"
#include "descent/errors.hpp"
#include "descent/ideals.hpp"
#include "descent/parser.hpp"

namespace descent::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

// Left-aligned columns separated by two spaces; trailing blanks trimmed.
std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line.substr(0, line.find_last_not_of(' ') + 1) + "\n";
  }
  return out;
}

Json report_json(const CriterionReport& r) {
  return Json{{"id", to_string(r.id)}, {"status", to_string(r.status)}, {"witness", r.witness}};
}

Json reason_ids(const Verdict& v) {
  Json ids = Json::array();
  for (const auto& r : v.reasons) ids.push_back(to_string(r.id));
  return ids;
}

std::string verdict_line(const Verdict& v) {
  std::string s = to_string(v.outcome);
  std::vector<std::string> ids;
  for (const auto& r : v.reasons) ids.emplace_back(to_string(r.id));
  if (v.from_catalog_fact) ids.emplace_back("known construction");
  if (!ids.empty()) s += " (" + join(ids, ", ") + ")";
  return s;
}

std::string discrepancy_note(const SingularityRecord& rec) {
  return rec.name() + " in characteristic " + std::to_string(rec.ch.value()) +
         ": default verdict " + to_string(rec.verdict) + "; conflicting statement: " +
         *rec.discrepancy;
}

// Lengths reported by the length-formula criterion, if it produced them.
std::pair<std::optional<std::uint64_t>, std::optional<std::uint64_t>> lengths_of(
    const BatteryResult& br) {
  for (const auto& r : br.reports) {
    if (r.id != CriterionId::LengthFormula) continue;
    std::optional<std::uint64_t> lj, ljp;
    if (r.witness.contains("len_J") && r.witness["len_J"].is_number()) lj = r.witness["len_J"];
    if (r.witness.contains("len_Jp") && r.witness["len_Jp"].is_number()) ljp = r.witness["len_Jp"];
    return {lj, ljp};
  }
  return {};
}

std::optional<bool> theta_of(const BatteryResult& br) {
  for (const auto& r : br.reports) {
    if (r.id == CriterionId::ThetaFree && (r.status == Status::Pass || r.status == Status::Fail)) {
      return r.status == Status::Pass;
    }
  }
  return std::nullopt;
}

struct RowEval {
  std::optional<BatteryResult> battery;
  std::string error;
};

template <class F>
void parallel_for(std::size_t n, F&& f) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, n);
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
    });
  }
}

std::vector<RowEval> evaluate_rows(const std::vector<SingularityRecord>& recs,
                                   const BatteryOptions& options) {
  std::vector<RowEval> out(recs.size());
  parallel_for(recs.size(), [&](std::size_t i) {
    try {
      out[i].battery = run_battery(recs[i].germ(), recs[i].facts(), options);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  });
  return out;
}

std::string opt_str(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string pair_str(const std::optional<std::uint64_t>& a, const std::optional<std::uint64_t>& b) {
  if (!a && !b) return "-";
  return opt_str(a) + "," + opt_str(b);
}

std::string yes_no(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "-"; }

Json opt_json(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

void require_table_char(PrimeChar ch) {
  if (ch.value() != 2 && ch.value() != 3 && ch.value() != 5) {
    throw UsageError("tables exist for characteristic 2, 3 and 5 only");
  }
}

}  // namespace

CommandResult cmd_analyze(const AnalyzeRequest& req, const Catalog& catalog) {
  RingPtr ring = make_ring(PrimeChar(req.p), req.vars);
  Polynomial f = parse_poly(req.poly, ring);
  HypersurfaceGerm g(f);
  std::optional<SingularityRecord> match = catalog.lookup(f);
  GermFacts facts = match ? match->facts() : GermFacts{};
  BatteryResult br = run_battery(g, facts, BatteryOptions{req.short_circuit, req.limits});

  CommandResult res;
  Json criteria = Json::array();
  for (const auto& r : br.reports) criteria.push_back(report_json(r));
  Json verdict{{"outcome", to_string(br.verdict.outcome)}, {"reasons", reason_ids(br.verdict)}};
  if (br.verdict.from_catalog_fact) verdict["catalog_fact"] = match->citation;
  std::vector<std::string> notes;
  if (match && match->discrepancy) notes.push_back(discrepancy_note(*match));
  if (!notes.empty()) verdict["notes"] = notes;
  Json timings = Json::object();
  if (req.timings) {
    for (const auto& [label, ms] : br.timings_ms) timings[label] = ms;
  }
  res.json = Json{{"input",
                   {{"poly", req.poly},
                    {"equation", f.to_string()},
                    {"char", req.p},
                    {"vars", req.vars},
                    {"catalog", match ? Json(match->name()) : Json(nullptr)}}},
                  {"criteria", std::move(criteria)},
                  {"verdict", std::move(verdict)},
                  {"timings_ms", std::move(timings)}};

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"equation", f.to_string()});
  rows.push_back({"char", std::to_string(req.p)});
  rows.push_back({"vars", join(req.vars, ",")});
  rows.push_back({"catalog", match ? match->name() : "-"});
  res.text = format_table(rows) + "\n";
  rows.clear();
  rows.push_back({"criterion", "status", "witness"});
  for (const auto& r : br.reports) rows.push_back({to_string(r.id), to_string(r.status), r.witness.dump()});
  res.text += format_table(rows) + "\n";
  rows.clear();
  rows.push_back({"verdict", verdict_line(br.verdict)});
  for (const auto& n : notes) rows.push_back({"note", n});
  if (req.timings) {
    for (const auto& [label, ms] : br.timings_ms) {
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << ms << " ms";
      rows.push_back({"time", label + " " + t.str()});
    }
  }
  res.text += format_table(rows);

  const bool undecided = std::any_of(br.reports.begin(), br.reports.end(), [](const auto& r) {
    return r.status == Status::Undecided;
  });
  if (br.verdict.outcome == Outcome::Blocked) {
    res.exit_code = kBlocked;
  } else if (undecided) {
    res.exit_code = kEngineLimit;
  }
  if (res.exit_code != kOk) {
    res.diagnostics = "verdict " + verdict_line(br.verdict) +
                      (res.exit_code == kEngineLimit ? "; engine limit reached" : "") + "\n";
  }
  return res;
}

CommandResult cmd_tables(PrimeChar ch, unsigned max_n, const Catalog& catalog,
                         const EngineLimits& limits) {
  require_table_char(ch);
  const auto recs = catalog.all_records(ch, max_n);
  const auto evals = evaluate_rows(recs, BatteryOptions{false, limits});

  CommandResult res;
  std::vector<std::string> diffs;
  Json rows_json = Json::array();
  std::vector<std::vector<std::string>> table;
  table.push_back({"row", "equation", "pi1", "lengths", "stored", "theta", "stored", "verdict",
                   "stored", "match"});
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& rec = recs[i];
    const auto& ev = evals[i];
    std::optional<std::uint64_t> lj, ljp;
    std::optional<bool> theta;
    std::string verdict = "ERROR";
    std::vector<std::string> row_diffs;
    if (ev.battery) {
      std::tie(lj, ljp) = lengths_of(*ev.battery);
      theta = theta_of(*ev.battery);
      verdict = to_string(ev.battery->verdict.outcome);
    } else {
      row_diffs.push_back(rec.name() + ": evaluation failed: " + ev.error);
    }
    auto cmp = [&](const char* what, const std::string& got, const std::string& want) {
      if (got != want) {
        row_diffs.push_back(rec.name() + " " + what + ": computed " + got + ", stored " + want);
      }
    };
    if (ev.battery) {
      if (rec.len_j) cmp("lenJ", opt_str(lj), opt_str(rec.len_j));
      if (rec.len_jp) cmp("lenJp", opt_str(ljp), opt_str(rec.len_jp));
      if (rec.theta_free) cmp("theta", yes_no(theta), yes_no(rec.theta_free));
      cmp("verdict", verdict, to_string(rec.verdict));
    }
    const bool ok = row_diffs.empty();
    diffs.insert(diffs.end(), row_diffs.begin(), row_diffs.end());
    const std::string pi1 = rec.pi1 ? rec.pi1->name : "-";
    table.push_back({rec.name(), rec.equation_text, pi1, pair_str(lj, ljp),
                     pair_str(rec.len_j, rec.len_jp), yes_no(theta), yes_no(rec.theta_free),
                     verdict, to_string(rec.verdict), ok ? "ok" : "DIFF"});
    rows_json.push_back(Json{
        {"row", rec.name()},
        {"equation", rec.equation_text},
        {"pi1", rec.pi1 ? Json(rec.pi1->name) : Json(nullptr)},
        {"computed",
         {{"len_J", opt_json(lj)}, {"len_Jp", opt_json(ljp)}, {"theta_free", opt_json(theta)},
          {"verdict", verdict}}},
        {"stored",
         {{"len_J", opt_json(rec.len_j)},
          {"len_Jp", opt_json(rec.len_jp)},
          {"theta_free", opt_json(rec.theta_free)},
          {"verdict", to_string(rec.verdict)}}},
        {"match", ok}});
  }
  res.text = format_table(table);
  for (const auto& d : diffs) res.text += "diff " + d + "\n";
  res.text += std::to_string(recs.size()) + " rows, " + std::to_string(diffs.size()) +
              " differences\n";
  res.json = Json{{"char", ch.value()}, {"max_n", max_n}, {"rows", std::move(rows_json)},
                  {"differences", diffs}};
  if (!diffs.empty()) {
    res.exit_code = kBlocked;
    res.diagnostics = std::to_string(diffs.size()) + " table cells differ from the catalog\n";
  }
  return res;
}

CommandResult cmd_classify(PrimeChar ch, unsigned max_n, const Catalog& catalog,
                           const EngineLimits& limits) {
  require_table_char(ch);
  auto recs = catalog.all_records(ch, max_n);
  // Summary order: A, D, E.
  std::stable_sort(recs.begin(), recs.end(),
                   [](const auto& a, const auto& b) { return a.dynkin < b.dynkin; });
  const auto evals = evaluate_rows(recs, BatteryOptions{true, limits});

  CommandResult res;
  std::vector<std::string> descending, notes, diffs;
  Json records = Json::array();
  std::vector<std::vector<std::string>> table;
  table.push_back({"row", "verdict", "because", "stored"});
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& rec = recs[i];
    const auto& ev = evals[i];
    std::string verdict = "ERROR";
    std::string because = ev.error;
    Json reasons = Json::array();
    if (ev.battery) {
      const Verdict& v = ev.battery->verdict;
      verdict = to_string(v.outcome);
      reasons = reason_ids(v);
      std::vector<std::string> ids;
      for (const auto& r : v.reasons) ids.emplace_back(to_string(r.id));
      if (v.from_catalog_fact) ids.emplace_back("known construction");
      because = join(ids, ", ");
      if (v.outcome == Outcome::Descends) descending.push_back(rec.name());
    }
    if (verdict != to_string(rec.verdict)) {
      diffs.push_back(rec.name() + ": computed " + verdict + ", stored " + to_string(rec.verdict));
    }
    if (rec.discrepancy) notes.push_back(discrepancy_note(rec));
    table.push_back({rec.name(), verdict, because, to_string(rec.verdict)});
    records.push_back(Json{{"row", rec.name()},
                           {"verdict", verdict},
                           {"reasons", reasons},
                           {"stored_verdict", to_string(rec.verdict)}});
  }
  res.text = format_table(table) + "\n";
  res.text += "descending in characteristic " + std::to_string(ch.value()) + " (n <= " +
              std::to_string(max_n) + "): " + join(descending, ", ") + "\n";
  for (const auto& n : notes) res.text += "note: " + n + "\n";
  for (const auto& d : diffs) res.text += "diff " + d + "\n";
  res.json = Json{{"char", ch.value()}, {"max_n", max_n},     {"records", std::move(records)},
                  {"descending", descending}, {"notes", notes}, {"differences", diffs}};
  if (!diffs.empty()) {
    res.exit_code = kBlocked;
    res.diagnostics = std::to_string(diffs.size()) + " verdicts differ from the catalog\n";
  }
  return res;
}

CommandResult cmd_oracle(const OracleRequest& req) {
  RingPtr ring = make_ring(PrimeChar(req.p), req.vars);
  if (req.gens.empty()) throw UsageError("no generators given");
  std::vector<Polynomial> gens;
  for (const auto& s : req.gens) gens.push_back(parse_poly(s, ring));
  std::optional<IdealPresentation> ideal;
  if (req.ideal) {
    if (gens.size() != 1) throw UsageError("--ideal takes exactly one equation");
    HypersurfaceGerm g(gens.front());
    if (*req.ideal == "jacobian") {
      ideal = jacobian_ideal(g);
    } else if (*req.ideal == "bracket") {
      ideal = bracket_ideal(jacobian_ideal(g), g, 1, req.limits);
    } else {
      throw UsageError("--ideal must be jacobian or bracket");
    }
  } else {
    ideal.emplace(ring, gens);
  }
  const QuotientLength engine = local_length(*ideal, req.limits);
  const OracleResult oracle = truncation_length_oracle(*ideal, req.degree_cap);

  CommandResult res;
  const std::string e = engine.to_string();
  std::string o = oracle.stable() ? std::to_string(*oracle.length)
                                  : "UNSTABLE (degree cap " + std::to_string(req.degree_cap) +
                                        " reached)";
  bool match = false;
  if (oracle.stable() && engine.is_finite()) {
    match = *oracle.length == engine.value();
    if (!match) res.exit_code = kBlocked;
  } else if (!oracle.stable() && engine.is_finite()) {
    res.exit_code = kEngineLimit;
  }
  res.text = e + (match || !oracle.stable() ? " = " : " != ") + o + "\n";
  if (!oracle.stable() && !engine.is_finite()) res.text = e + " = " + o + "\n";
  Json gens_json = Json::array();
  for (const auto& g : ideal->generators()) gens_json.push_back(g.to_string());
  res.json = Json{{"input",
                   {{"char", req.p},
                    {"vars", req.vars},
                    {"ideal", req.ideal ? Json(*req.ideal) : Json(nullptr)},
                    {"generators", std::move(gens_json)}}},
                  {"engine", engine.is_finite() ? Json(engine.value()) : Json("INFINITE")},
                  {"oracle", oracle.stable() ? Json(*oracle.length) : Json("UNSTABLE")},
                  {"degree_reached", oracle.degree_reached},
                  {"match", match}};
  if (res.exit_code == kBlocked) res.diagnostics = "engine and oracle disagree: " + res.text;
  if (res.exit_code == kEngineLimit) {
    res.diagnostics = "oracle did not stabilize below degree " + std::to_string(req.degree_cap) + "\n";
  }
  return res;
}

namespace {

struct Common {
  unsigned p = 0;
  std::string vars = "x,y,z";
  bool json = false;
  std::uint64_t step_cap = EngineLimits{}.max_reduction_steps;
  std::string catalog_path;
};

void emit_error(std::ostream& err, bool json, const std::string& kind, const std::string& msg,
                std::optional<std::size_t> pos = std::nullopt, const std::string& input = {}) {
  if (json) {
    Json e{{"kind", kind}, {"message", msg}};
    if (pos) e["position"] = *pos;
    err << Json{{"error", e}}.dump() << "\n";
    return;
  }
  err << "error: " << kind << ": " << msg;
  if (pos) err << " at position " << *pos;
  err << "\n";
  if (pos && !input.empty()) err << "  " << input << "\n  " << std::string(*pos, ' ') << "^\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Descent criteria for rational double points and other hypersurface germs",
               "rdp-descent"};
  app.require_subcommand(1);
  Common c;
  std::string poly, gens, ideal;
  unsigned max_n = 12, degree_cap = 64;
  bool short_circuit = false, timings = false;

  auto common = [&](CLI::App* sub, bool with_vars) {
    sub->add_option("--char", c.p, "prime characteristic (at most 97)")->required();
    if (with_vars) sub->add_option("--vars", c.vars, "comma-separated variable names");
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_option("--step-cap", c.step_cap, "reduction step budget of the basis engine");
  };
  auto catalog_opt = [&](CLI::App* sub) {
    sub->add_option("--catalog", c.catalog_path, "catalog data file");
  };

  auto* analyze = app.add_subcommand("analyze", "run the criterion battery on one equation");
  common(analyze, true);
  catalog_opt(analyze);
  analyze->add_option("--poly", poly, "equation f")->required();
  analyze->add_flag("--short-circuit", short_circuit, "stop at the first failed necessary criterion");
  analyze->add_flag("--timings", timings, "report per-criterion wall time");

  auto* tables = app.add_subcommand("tables", "recompute the E-type tables and compare");
  common(tables, false);
  catalog_opt(tables);
  tables->add_option("--max-n", max_n, "largest A/D index");

  auto* classify = app.add_subcommand("classify", "verdict for every catalog row");
  common(classify, false);
  catalog_opt(classify);
  classify->add_option("--max-n", max_n, "largest A/D index");

  auto* oracle = app.add_subcommand("oracle", "engine length next to the linear-algebra length");
  common(oracle, true);
  oracle->add_option("--gens", gens, "comma-separated generators");
  oracle->add_option("--poly", poly, "equation, used with --ideal");
  oracle->add_option("--ideal", ideal, "jacobian or bracket ideal of --poly")
      ->check(CLI::IsMember({"jacobian", "bracket"}));
  oracle->add_option("--degree-cap", degree_cap, "largest truncation degree (1..255)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  }

  const std::string* input = &poly;
  try {
    if (max_n < 1) throw UsageError("--max-n must be positive");
    EngineLimits limits;
    limits.max_reduction_steps = c.step_cap;
    auto load_catalog = [&]() -> const Catalog& {
      static std::optional<Catalog> custom;
      if (c.catalog_path.empty()) return Catalog::builtin();
      custom = Catalog::load(c.catalog_path);
      return *custom;
    };
    CommandResult res;
    if (*analyze) {
      AnalyzeRequest req{c.p, split_list(c.vars), poly, short_circuit, timings, limits};
      res = cmd_analyze(req, load_catalog());
    } else if (*tables) {
      res = cmd_tables(PrimeChar(c.p), max_n, load_catalog(), limits);
    } else if (*classify) {
      res = cmd_classify(PrimeChar(c.p), max_n, load_catalog(), limits);
    } else {
      OracleRequest req;
      req.p = c.p;
      req.vars = split_list(c.vars);
      req.degree_cap = degree_cap;
      req.limits = limits;
      if (!ideal.empty()) {
        if (poly.empty()) throw UsageError("--ideal requires --poly");
        req.ideal = ideal;
        req.gens = {poly};
      } else {
        if (gens.empty()) throw UsageError("give --gens, or --poly with --ideal");
        req.gens = split_list(gens);
        input = &gens;
      }
      res = cmd_oracle(req);
    }
    if (c.json) {
      out << res.json.dump(2) << "\n";
    } else {
      out << res.text;
    }
    if (!res.diagnostics.empty()) {
      if (c.json) {
        err << Json{{"exit", res.exit_code}, {"message", res.diagnostics.substr(0, res.diagnostics.size() - 1)}}.dump()
            << "\n";
      } else {
        err << res.diagnostics;
      }
    }
    return res.exit_code;
  } catch (const ParseError& e) {
    emit_error(err, c.json, "parse", e.message(), e.position(), *input);
    return kUsage;
  } catch (const UsageError& e) {
    emit_error(err, c.json, "usage", e.what());
    return kUsage;
  } catch (const DivisionByZero& e) {
    emit_error(err, c.json, "usage", e.what());
    return kUsage;
  } catch (const EngineLimitError& e) {
    emit_error(err, c.json, "engine-limit", e.what());
    return kEngineLimit;
  } catch (const ConsistencyError& e) {
    emit_error(err, c.json, "consistency", e.what());
    return kInconsistent;
  } catch (const std::exception& e) {
    emit_error(err, c.json, "internal", e.what());
    return kInconsistent;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace descent::cli
