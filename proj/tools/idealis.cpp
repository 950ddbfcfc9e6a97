// idealis: classify ideals, survey ideal lattices, run the theorem checks
// and print witnesses.
//
// Exit codes: 0 ok, 1 other failure (including failed checks), 2 usage or
// parse error, 3 non-proper ideal, 4 resource cap exceeded, 5 engines
// disagree.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "idealis/classify.hpp"
#include "idealis/oracle.hpp"
#include "idealis/parse.hpp"
#include "idealis/serialize.hpp"
#include "idealis/theorems.hpp"

namespace {

using namespace idealis;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotProper = 3;
constexpr int kExitCap = 4;
constexpr int kExitDisagree = 5;

struct UsageError : Error {
  using Error::Error;
};

std::size_t max_ideals_from_env() {
  const char* v = std::getenv("IDEALIS_MAX_IDEALS");
  if (v == nullptr || *v == '\0') return kDefaultMaxIdeals;
  try {
    std::size_t pos = 0;
    const unsigned long long n = std::stoull(v, &pos);
    if (pos != std::string(v).size() || n == 0) throw std::invalid_argument("bad");
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw UsageError(std::string("IDEALIS_MAX_IDEALS must be a positive integer, got '") + v + "'");
  }
}

ClassifyOptions options(unsigned threads) {
  ClassifyOptions o;
  o.oracle.max_ideals = max_ideals_from_env();
  o.oracle.threads = threads;
  return o;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string provenance_text(const Provenance& p) {
  std::string s(provenance_kind_name(p.kind));
  if (!p.rule.empty()) s += " (" + p.rule + ")";
  return s;
}

void print_table(const Classification& c, const std::string& title) {
  std::cout << title << "\n";
  for (Predicate p : kAllPredicates) {
    std::string name(flag_name(p));
    name.resize(31, ' ');
    std::cout << "  " << name << " " << (c[p] ? "true " : "false") << "  " << provenance_text(c.provenance[predicate_index(p)]) << "\n";
  }
}

Classification run_engine(const Ideal& I, const std::string& engine, const ClassifyOptions& opt) {
  if (engine == "oracle") return classify_oracle(I, opt);
  return classify(I, opt);
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
  std::string ring, ideal, format = "json", engine = "structural";
  unsigned threads = 1;
};

int cmd_classify(const ClassifyArgs& a) {
  const RingSpec ring = parse_ring(a.ring);
  const Ideal I = parse_ideal(ring, a.ideal);
  const ClassifyOptions opt = options(a.threads);
  Json payload;
  payload["ring"] = format_ring(ring);
  payload["ideal"] = format_ideal(I);
  payload["engine"] = a.engine;
  if (a.engine != "both") {
    const Classification c = run_engine(I, a.engine, opt);
    if (a.format == "table") {
      print_table(c, format_ring(ring) + "  " + format_ideal(I));
      return kExitOk;
    }
    payload["classification"] = to_json(c);
    emit(document("classify", payload));
    return kExitOk;
  }
  const Classification s = classify(I, opt);
  const Classification o = classify_oracle(I, opt);
  const auto diff = disagreements(s, o);
  if (a.format == "table") {
    print_table(s, format_ring(ring) + "  " + format_ideal(I) + "  structural");
    print_table(o, format_ring(ring) + "  " + format_ideal(I) + "  oracle");
    std::cout << (diff.empty() ? "engines agree" : "engines disagree") << "\n";
  } else {
    payload["agree"] = diff.empty();
    Json d = Json::array();
    for (Predicate p : diff) d.push_back(std::string(field_name(p)));
    payload["disagreements"] = std::move(d);
    payload["structural"] = to_json(s);
    payload["oracle"] = to_json(o);
    emit(document("classify", payload));
  }
  if (!diff.empty()) {
    std::cerr << "error: structural and oracle engines disagree\n";
    return kExitDisagree;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SurveyArgs {
  std::string ring, format = "json", engine = "structural";
  long long max_generator = -1;
  unsigned threads = 1;
};

std::vector<Ideal> survey_ideals(const RingSpec& ring, long long bound, std::size_t cap) {
  std::vector<Ideal> out;
  if (ring.is_finite()) {
    for (auto& I : enumerate_ideals(ring, cap)) {
      if (is_proper(I)) out.push_back(std::move(I));
    }
    return out;
  }
  if (ring.is_product()) throw UsageError("survey of a product with an infinite component is not supported");
  if (bound < 0) throw UsageError("survey of " + format_ring(ring) + " needs --max-generator");
  if (std::holds_alternative<Integers>(ring.component(0))) {
    out.push_back(zero_ideal(ring));
    for (long long g = 2; g <= bound; ++g) out.push_back(make_ideal(ring, {static_cast<Natural>(g)}));
    return out;
  }
  // GF(p)[x]: the bound is a degree.
  const auto p = std::get<PolyRing>(ring.component(0)).characteristic;
  if (bound > 12) throw UsageError("polynomial survey degree bound is at most 12");
  out.push_back(zero_ideal(ring));
  for (long long d = 1; d <= bound; ++d) {
    for (auto& f : monic_polys_of_degree(p, static_cast<unsigned>(d))) out.push_back(make_ideal(ring, {std::move(f)}));
  }
  if (out.size() > cap) throw CapExceededError("survey has " + std::to_string(out.size()) + " rows, cap is " + std::to_string(cap));
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_survey(const SurveyArgs& a) {
  const RingSpec ring = parse_ring(a.ring);
  const ClassifyOptions opt = options(a.threads);
  const auto ideals = survey_ideals(ring, a.max_generator, opt.oracle.max_ideals);
  std::vector<Classification> rows;
  bool agree = true;
  for (const auto& I : ideals) {
    if (a.engine == "both") {
      const Classification s = classify(I, opt);
      if (!disagreements(s, classify_oracle(I, opt)).empty()) {
        agree = false;
        std::cerr << "error: engines disagree on " << format_ideal(I) << "\n";
      }
      rows.push_back(s);
    } else {
      rows.push_back(run_engine(I, a.engine, opt));
    }
  }
  if (a.format == "csv") {
    std::cout << "ideal";
    for (Predicate p : kAllPredicates) std::cout << "," << field_name(p);
    std::cout << ",provenance\n";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      std::cout << csv_escape(format_ideal(ideals[i]));
      for (Predicate p : kAllPredicates) std::cout << "," << bool_text(rows[i][p]);
      std::cout << "," << provenance_summary(rows[i]) << "\n";
    }
  } else if (a.format == "table") {
    std::size_t width = 5;
    for (const auto& I : ideals) width = std::max(width, format_ideal(I).size());
    std::cout << std::string(width, ' ');
    for (Predicate p : kAllPredicates) std::cout << " " << flag_name(p);
    std::cout << "\n";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      std::string name = format_ideal(ideals[i]);
      name.resize(width, ' ');
      std::cout << name;
      for (Predicate p : kAllPredicates) {
        std::string cell = rows[i][p] ? "T" : ".";
        cell.resize(flag_name(p).size(), ' ');
        std::cout << " " << cell;
      }
      std::cout << "\n";
    }
  } else {
    Json payload;
    payload["ring"] = format_ring(ring);
    payload["engine"] = a.engine;
    Json out_rows = Json::array();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      Json row;
      row["ideal"] = format_ideal(ideals[i]);
      row["classification"] = to_json(rows[i]);
      out_rows.push_back(std::move(row));
    }
    payload["rows"] = std::move(out_rows);
    emit(document("survey", payload));
  }
  return agree ? kExitOk : kExitDisagree;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all", report, format = "json";
  long long max_n = -1, max_deg = -1;
  bool mutate = false;
  unsigned threads = 1;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

int cmd_verify(const VerifyArgs& a) {
  SuiteConfig config;
  config.classify = options(a.threads);
  if (a.mutate) config.classify.two_component_limit = 3;
  if (a.max_n >= 0) {
    if (a.max_n < 2) throw UsageError("--max-n must be at least 2");
    config.max_n = static_cast<Natural>(a.max_n);
    config.extra_moduli.clear();
    config.triple_cover_max_n = std::min<Natural>(config.triple_cover_max_n, config.max_n);
    config.comaximal_max_n = std::min<Natural>(config.comaximal_max_n, config.max_n);
  }
  if (a.max_deg >= 0) {
    if (a.max_deg < 1 || a.max_deg > 8) throw UsageError("--max-deg must be between 1 and 8");
    config.gf2_max_deg = static_cast<unsigned>(a.max_deg);
    config.gf3_max_deg = std::min(3u, static_cast<unsigned>(a.max_deg));
  }
  std::vector<std::string> ids;
  if (a.suite != "all") {
    ids = split_list(a.suite);
    if (ids.empty()) throw UsageError("--suite lists no checks");
    const auto known = check_ids();
    for (const auto& id : ids) {
      if (std::find(known.begin(), known.end(), id) == known.end()) throw UsageError("unknown check id: " + id);
    }
  }
  const auto reports = run_suite(config, ids);
  const Json doc = document("verify", to_json(reports));
  if (!a.report.empty()) {
    std::ofstream out(a.report);
    if (!out) throw Error("cannot write report to " + a.report);
    out << doc.dump(2) << "\n";
  }
  if (a.format == "csv") {
    std::cout << "theorem_id,cases,status\n";
    for (const auto& r : reports) std::cout << r.theorem_id << "," << r.cases << "," << check_status_name(r.status) << "\n";
  } else if (a.format == "table") {
    for (const auto& r : reports) {
      std::string id = r.theorem_id;
      id.resize(46, ' ');
      std::cout << id << " " << check_status_name(r.status) << "  " << r.cases << " cases";
      if (r.counterexample) std::cout << "  " << format_ring(r.counterexample->ring) << ": " << r.counterexample->detail;
      if (r.status == CheckStatus::Error) std::cout << "  " << r.error;
      std::cout << "\n";
    }
  } else {
    emit(doc);
  }
  for (const auto& r : reports) {
    if (r.status != CheckStatus::Pass) std::cerr << r.theorem_id << ": " << check_status_name(r.status) << "\n";
  }
  return all_passed(reports) ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

struct WitnessArgs {
  std::string ring, ideal, predicate, format = "json";
  unsigned threads = 1;
};

int cmd_witness(const WitnessArgs& a) {
  const RingSpec ring = parse_ring(a.ring);
  const Ideal I = parse_ideal(ring, a.ideal);
  const auto pred = predicate_from_flag(a.predicate);
  if (!pred) throw UsageError("unknown predicate: " + a.predicate);
  if (!is_proper(I)) throw NotProperError("ideal " + format_ideal(I) + " is not proper");
  const ClassifyOptions opt = options(a.threads);
  RingSpec eval_ring = ring;
  Ideal eval_ideal = I;
  const bool transfer = !ring.is_finite();
  if (transfer) std::tie(eval_ring, eval_ideal) = detail::transfer_surrogate(I);
  const IdealTable t(eval_ring, opt.oracle);
  const PredicateResult r = evaluate_bf(t, t.index_of(eval_ideal), *pred);
  if (a.format == "table") {
    if (r.holds) {
      std::cout << "holds (" << r.cases_checked << " cases checked)\n";
    } else {
      const Witness& w = *r.witness;
      std::cout << "fails after " << r.cases_checked << " cases; " << witness_kind_name(w.kind) << ":";
      for (const auto& e : w.elements) std::cout << " " << format_element(eval_ring, e);
      for (const auto& i : w.ideals) std::cout << " " << format_ideal(i);
      std::cout << "\n";
    }
    return kExitOk;
  }
  Json payload;
  payload["ring"] = format_ring(ring);
  payload["ideal"] = format_ideal(I);
  payload["predicate"] = std::string(flag_name(*pred));
  payload["provenance"] = transfer ? "transfer-oracle" : "oracle";
  if (transfer) {
    payload["transfer_ring"] = format_ring(eval_ring);
    payload["transfer_ideal"] = format_ideal(eval_ideal);
  }
  payload["holds"] = r.holds;
  payload["cases_checked"] = r.cases_checked;
  payload["witness"] = r.witness ? to_json(eval_ring, *r.witness) : Json(nullptr);
  emit(document("witness", payload));
  return kExitOk;
}

std::string predicate_help() {
  std::string s = "predicate name, one of:";
  for (Predicate p : kAllPredicates) s += " " + std::string(flag_name(p));
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify ideals of Z, Z/n, GF(p)[x], GF(p)[x]/(f) and finite products"};
  app.require_subcommand(1);
  app.footer(
      "Environment: IDEALIS_MAX_IDEALS overrides the oracle ideal cap (default 512).\n"
      "Exit codes: 0 ok, 1 failure, 2 usage/parse error, 3 non-proper ideal, 4 cap exceeded, 5 engines disagree.");

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one proper ideal on all ten predicates");
  classify_cmd->add_option("--ring", ca.ring, "ring, e.g. Z/12 or \"Z/4 x Z/9\"")->required();
  classify_cmd->add_option("--ideal", ca.ideal, "ideal, e.g. (6) or ([2],[3])")->required();
  classify_cmd->add_option("--format", ca.format)->check(CLI::IsMember({"json", "table"}));
  classify_cmd->add_option("--engine", ca.engine)->check(CLI::IsMember({"structural", "oracle", "both"}));
  classify_cmd->add_option("--threads", ca.threads, "oracle worker threads")->check(CLI::Range(1u, 256u));

  SurveyArgs sa;
  auto* survey_cmd = app.add_subcommand("survey", "Classify every proper ideal of a ring");
  survey_cmd->add_option("--ring", sa.ring)->required();
  survey_cmd->add_option("--format", sa.format)->check(CLI::IsMember({"json", "csv", "table"}));
  survey_cmd->add_option("--engine", sa.engine)->check(CLI::IsMember({"structural", "oracle", "both"}));
  survey_cmd->add_option("--max-generator", sa.max_generator,
                         "generator bound for Z (generators 0, 2..B) or degree bound for GF(p)[x]");
  survey_cmd->add_option("--threads", sa.threads)->check(CLI::Range(1u, 256u));

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks");
  verify_cmd->add_option("--suite", va.suite, "all, or a comma-separated list of check ids");
  verify_cmd->add_option("--max-n", va.max_n, "largest n for Z/n families (drops the extra moduli)");
  verify_cmd->add_option("--max-deg", va.max_deg, "degree bound for GF(2)[x]/(f); GF(3) uses min(D, 3)");
  verify_cmd->add_option("--report", va.report, "also write the JSON report to this path");
  verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv", "table"}));
  verify_cmd->add_flag("--mutate", va.mutate, "loosen the two-component rule to three components");
  verify_cmd->add_option("--threads", va.threads)->check(CLI::Range(1u, 256u));

  WitnessArgs wa;
  auto* witness_cmd = app.add_subcommand("witness", "Print the first violating tuple of a predicate");
  witness_cmd->add_option("--ring", wa.ring)->required();
  witness_cmd->add_option("--ideal", wa.ideal)->required();
  witness_cmd->add_option("--predicate", wa.predicate, predicate_help())->required();
  witness_cmd->add_option("--format", wa.format)->check(CLI::IsMember({"json", "table"}));
  witness_cmd->add_option("--threads", wa.threads)->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(ca);
    if (*survey_cmd) return cmd_survey(sa);
    if (*verify_cmd) return cmd_verify(va);
    if (*witness_cmd) return cmd_witness(wa);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotProperError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotProper;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
