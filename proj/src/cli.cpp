#include "mixedforms/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "mixedforms/corollaries.hpp"
#include "mixedforms/local.hpp"
#include "mixedforms/regression.hpp"
#include "mixedforms/twoadic.hpp"

namespace mixedforms {

namespace {

using json = nlohmann::json;

constexpr std::uint64_t kDefaultVerifyBound = 50'000;

json form_fields(const MixedForm& f) {
  return json{{"kind", std::string(kind_tag(f.kind))}, {"a", f.a}, {"b", f.b}, {"c", f.c}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct FormArgs {
  std::string kind;
  std::vector<std::uint64_t> coefficients;

  void attach(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "form family: sst, stt or ttt")
        ->required()
        ->check(CLI::IsMember({"sst", "stt", "ttt"}));
    cmd->add_option("coefficients", coefficients, "coefficients a b c")->expected(3)->required();
  }

  MixedForm form() const {
    return MixedForm::make(parse_kind(kind), coefficients[0], coefficients[1], coefficients[2]);
  }
};

void print_classification(const Classification& c, std::ostream& out) {
  const auto& n = c.normalized.form;
  out << "form: " << to_string(c.form) << '\n';
  out << "normalized: " << to_string(n) << '\n';
  out << "universal: " << yes_no(c.universal) << '\n';
  out << "asymptotically universal: " << yes_no(c.asymptotically_universal) << '\n';
  out << "almost universal: " << verdict_tag(c.almost_universal.value);
  if (c.almost_universal.gap_tag) out << " (" << *c.almost_universal.gap_tag << ')';
  out << '\n';
  out << "trace:\n";
  for (const auto& e : c.trace) {
    out << "  " << e.clause << " [" << e.inputs << "] -> " << (e.outcome ? "true" : "false") << '\n';
  }
  for (const auto& note : c.notes) out << "note: " << note << '\n';
}

int run_verify(std::uint64_t bound, unsigned jobs, const std::string& fixtures_path, std::ostream& out,
               std::ostream& err) {
  std::string text;
  if (fixtures_path.empty()) {
    text = std::string(builtin_fixture_text());
  } else {
    std::ifstream in(fixtures_path);
    if (!in) {
      err << "cannot read fixture file " << fixtures_path << '\n';
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::vector<Fixture> fixtures;
  try {
    fixtures = parse_fixtures(text);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 2;
  }
  const auto results = check_fixtures(fixtures, bound, jobs);
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.detail << '\n';
    if (r.passed) ++passed;
  }
  out << passed << '/' << results.size() << " fixtures passed (bound " << bound << ")\n";
  out << "note: exceptional sets are verified only up to the bound; completeness beyond it is not certified\n";
  return passed == results.size() ? 0 : 1;
}

}  // namespace

std::string classification_json(const Classification& c) {
  json j = form_fields(c.form);
  j["universal"] = c.universal;
  j["asymptotically_universal"] = c.asymptotically_universal;
  j["almost_universal"] = json{{"value", std::string(verdict_tag(c.almost_universal.value))},
                               {"gap_tag", c.almost_universal.gap_tag ? json(*c.almost_universal.gap_tag) : json()}};
  json trace = json::array();
  for (const auto& e : c.trace) trace.push_back(json{{"clause", e.clause}, {"inputs", e.inputs}, {"outcome", e.outcome}});
  j["trace"] = trace;
  j["normalized"] = form_fields(c.normalized.form);
  j["notes"] = c.notes;
  return j.dump();
}

std::string exceptions_json(const ExceptionalSetReport& report) {
  json j = form_fields(report.form);
  j["bound"] = report.bound;
  j["exceptions"] = report.exceptions;
  j["complete_below_bound"] = report.complete_below_bound;
  j["caveat"] = report.caveat;
  return j.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universality of mixed sums of squares and triangular numbers", "mixedforms"};
  app.require_subcommand(1);

  FormArgs classify_args;
  bool classify_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "universal / asymptotically / almost universal verdicts");
  classify_args.attach(classify_cmd);
  classify_cmd->add_flag("--json", classify_json, "emit JSON");

  FormArgs exc_args;
  std::uint64_t exc_bound = 10'000;
  unsigned exc_jobs = 1;
  bool exc_json = false, exc_csv = false;
  auto* exc_cmd = app.add_subcommand("exceptions", "integers up to a bound that the form misses");
  exc_args.attach(exc_cmd);
  exc_cmd->add_option("--bound", exc_bound, "largest integer examined")
      ->check(CLI::Range(std::uint64_t{0}, kMaxSieveBound));
  exc_cmd->add_option("--jobs", exc_jobs, "worker threads")->check(CLI::PositiveNumber);
  auto* json_flag = exc_cmd->add_flag("--json", exc_json, "emit JSON");
  exc_cmd->add_flag("--csv", exc_csv, "emit CSV")->excludes(json_flag);

  FormArgs local_args;
  bool local_json = false;
  auto* local_cmd = app.add_subcommand("local", "local solvability conditions");
  local_args.attach(local_cmd);
  local_cmd->add_flag("--json", local_json, "emit JSON");

  std::int64_t alpha = 1;
  unsigned r = 1;
  auto* spinor_cmd = app.add_subcommand("spinor", "spinor norms of the binary lattice <1, 2^r alpha> over Z_2");
  spinor_cmd->add_option("--alpha", alpha, "odd unit alpha")->required();
  spinor_cmd->add_option("--r", r, "exponent r >= 1")->required()->check(CLI::PositiveNumber);

  std::string pattern;
  std::vector<std::uint64_t> params;
  auto* cor_cmd = app.add_subcommand("corollary", "closed-form criterion for a named subfamily");
  cor_cmd->add_option("--pattern", pattern, "subfamily pattern, e.g. ax2+y2+Tz")->required();
  cor_cmd->add_option("params", params, "parameters in pattern order")->required();

  std::uint64_t verify_bound = kDefaultVerifyBound;
  unsigned verify_jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string fixtures_path;
  auto* verify_cmd = app.add_subcommand("verify-paper", "recompute the bundled regression corpus");
  verify_cmd->add_option("--bound", verify_bound, "sieve bound")->check(CLI::Range(std::uint64_t{1}, kMaxSieveBound));
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--fixtures", fixtures_path, "fixture file replacing the built-in corpus");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*classify_cmd) {
      const Classification c = classify(classify_args.form());
      if (classify_json) {
        out << classification_json(c) << '\n';
      } else {
        print_classification(c, out);
      }
      return 0;
    }
    if (*exc_cmd) {
      const auto report = exceptional_set(exc_args.form(), exc_bound, exc_jobs);
      if (exc_json) {
        out << exceptions_json(report) << '\n';
      } else if (exc_csv) {
        out << "n\n";
        for (auto n : report.exceptions) out << n << '\n';
      } else {
        for (auto n : report.exceptions) out << n << '\n';
        err << "note: " << report.caveat << '\n';
      }
      return 0;
    }
    if (*local_cmd) {
      const MixedForm f = local_args.form();
      const LocalReport rep = local_report(f);
      if (local_json) {
        json j = form_fields(f);
        j["odd_condition_holds"] = rep.odd_condition_holds;
        j["failing_odd_primes"] = rep.failing_odd_primes;
        j["two_adic_holds"] = rep.two_adic_holds;
        j["vf"] = rep.vf;
        out << j.dump() << '\n';
      } else {
        out << "form: " << to_string(f) << '\n';
        out << "odd primes: " << (rep.odd_condition_holds ? "locally universal" : "obstructed");
        for (auto p : rep.failing_odd_primes) out << ' ' << p;
        out << '\n';
        out << "2-adic clause: " << (rep.two_adic_holds ? "holds" : "fails") << '\n';
        out << "v_f: " << rep.vf << '\n';
      }
      return 0;
    }
    if (*spinor_cmd) {
      out << binary_spinor_norm(alpha, r).to_string() << '\n';
      return 0;
    }
    if (*cor_cmd) {
      const MixedForm f = corollary_form(pattern, params);
      const auto verdict = corollary_predicate(pattern, params);
      out << "form: " << to_string(f) << '\n';
      if (!verdict) {
        out << "almost universal: hypotheses not met\n";
      } else {
        out << "almost universal: " << verdict_tag(verdict->value);
        if (verdict->gap_tag) out << " (" << *verdict->gap_tag << ')';
        out << '\n';
      }
      return 0;
    }
    if (*verify_cmd) return run_verify(verify_bound, verify_jobs, fixtures_path, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace mixedforms
