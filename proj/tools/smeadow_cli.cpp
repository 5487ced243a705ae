// smeadow: command-line front end for the signed-meadow toolkit.
//
// Exit codes: 0 success / true / all pass, 1 false / failures found, 2 usage or parse error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smeadow/report_json.hpp"
#include "smeadow/smeadow.hpp"

namespace {

using nlohmann::json;
using namespace smeadow;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  unsigned digits = 10;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json with_schema(json j) {
  j["schema_version"] = kJsonSchemaVersion;
  return j;
}

int run_eval(const Globals& g, const std::string& text) {
  const Term t = parse(text);
  Session session;
  const Real value = eval_exact(t, session);
  const std::string canonical = serialize(value);
  const std::string decimal = approx_decimal(value, g.digits);
  if (g.json) {
    emit(with_schema({{"term", render(t)},
                      {"canonical", canonical},
                      {"decimal", decimal},
                      {"rational", value.is_rational()},
                      {"depth", session.depth()}}));
  } else {
    std::cout << canonical << '\n';
    if (!value.is_rational()) std::cout << "~ " << decimal << '\n';
  }
  return kOk;
}

int run_simplify(const Globals& g, const std::string& text, std::size_t steps) {
  const auto r = rewrite_simplify(parse(text), steps);
  if (g.json) {
    json trace = json::array();
    for (const auto& t : r.trace) trace.push_back(render(t));
    emit(with_schema({{"term", render(r.term)},
                      {"steps", r.steps},
                      {"truncated", r.truncated},
                      {"rules", r.rules_applied},
                      {"trace", trace}}));
  } else {
    std::cout << render(r.term) << '\n';
    if (r.truncated) std::cerr << "stopped after " << r.steps << " steps\n";
  }
  return kOk;
}

int run_equal(const Globals& g, const std::string& lhs, const std::string& rhs) {
  const bool equal = decide_closed_eq(parse(lhs), parse(rhs));
  if (g.json)
    emit(with_schema({{"lhs", lhs}, {"rhs", rhs}, {"equal", equal}}));
  else
    std::cout << (equal ? "true" : "false") << '\n';
  return equal ? kOk : kFalse;
}

int run_sign(const Globals& g, const std::string& text) {
  const int s = to_int(sign_of_closed(parse(text)));
  if (g.json)
    emit(with_schema({{"term", text}, {"sign", s}}));
  else
    std::cout << s << '\n';
  return kOk;
}

void print_report(const CheckReport& r) {
  std::cout << (r.pass() ? "PASS " : "FAIL ") << r.equation << "  [" << r.model << ", " << mode_name(r.mode)
            << "] trials=" << r.trials;
  if (r.conditional) std::cout << " satisfied=" << r.satisfied << " skipped=" << r.skipped;
  if (!r.pass()) std::cout << " failures=" << r.failure_count;
  for (const auto& [name, count] : r.counters) std::cout << ' ' << name << '=' << count;
  std::cout << '\n';
  for (const auto& f : r.failures) {
    std::cout << "    at";
    for (const auto& [name, v] : f.valuation) std::cout << ' ' << name << " = " << v.term;
    std::cout << ": " << f.lhs.term << " (" << f.lhs.decimal << ") != " << f.rhs.term << " (" << f.rhs.decimal
              << ")\n";
  }
}

int run_check(const Globals& g, const std::string& suite, const std::string& model_name, bool exhaustive,
              bool randomized) {
  const AxiomSet set = axioms::find(suite);
  const TargetModel model = TargetModel::parse(model_name);
  CheckParams params;
  params.trials = g.trials;
  params.seed = g.seed;
  if (exhaustive) params.mode = Mode::exhaustive;
  if (randomized) params.mode = Mode::randomized;
  const auto reports = run_suite(set, model, params);
  if (g.json) {
    emit(to_json(reports, set.name));
  } else {
    for (const auto& r : reports) print_report(r);
    std::cout << (all_pass(reports) ? "all pass" : "failures found") << '\n';
  }
  return all_pass(reports) ? kOk : kFalse;
}

int run_propagation(const Globals& g, const std::string& kind, std::size_t size) {
  PropagationParams params;
  params.trials = g.trials;
  params.seed = g.seed;
  params.max_term_size = size;
  const auto report =
      check_propagation(kind == "unit" ? PropagationKind::pseudo_unit : PropagationKind::pseudo_zero, params);
  if (g.json)
    emit(to_json(report));
  else
    print_report(report);
  return report.pass() ? kOk : kFalse;
}

int run_scan(const Globals& g, int n, std::uint64_t limit) {
  const auto scan = scan_lagrange(n, limit);
  if (g.json) {
    emit(to_json(scan));
    return kOk;
  }
  std::cout << "holds (" << scan.holds.size() << "):";
  for (auto p : scan.holds) std::cout << ' ' << p;
  std::cout << '\n';
  for (const auto& [p, w] : scan.counterexample_sample) {
    std::cout << "  p=" << p << " witness";
    for (auto x : w) std::cout << ' ' << x;
    std::cout << '\n';
  }
  return kOk;
}

int run_f3(const Globals& g) {
  const auto r = verify_f3_argument();
  if (g.json) {
    emit(to_json(r));
  } else {
    std::cout << "squares mod 3:";
    for (auto v : r.squares) std::cout << ' ' << v;
    std::cout << "\nLagrange1 holds in F3: " << (r.lagrange1_holds ? "yes" : "no") << '\n';
    std::cout << "Md + Lagrange1 exhaustive over F3: " << (r.md_and_l1_pass ? "pass" : "fail") << '\n';
    std::cout << "(1+1+1)/(1+1+1) = " << r.finite_value << " in F3, " << r.exact_value.get_str()
              << " over the rationals\n";
    std::cout << "F3 is a homomorphic image of the rationals: " << (r.blocks_homomorphism ? "no" : "undecided")
              << '\n';
  }
  return r.pass() ? kOk : kFalse;
}

Signature signature_named(const std::string& name) {
  if (name == "meadow") return Signature::meadow();
  if (name == "signed") return Signature::signed_meadow();
  if (name == "sqrt") return Signature::sqrt_meadow();
  return Signature::complex_meadow();
}

int run_gen(const Globals& g, std::size_t size, const std::string& sig, const std::vector<std::string>& vars) {
  const Term t = gen_random_term(g.seed, size, signature_named(sig), vars);
  if (g.json)
    emit(with_schema({{"seed", g.seed}, {"size", t.size()}, {"term", render(t)}}));
  else
    std::cout << render(t) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact signed-meadow arithmetic, axiom checking and Lagrange scans."};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--trials", g.trials, "Randomized trials")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--digits", g.digits, "Decimal digits")->capture_default_str()->check(CLI::Range(1u, 10000u));

  std::string term_a, term_b;

  auto* eval = app.add_subcommand("eval", "Evaluate a closed term: canonical form and decimal");
  eval->add_option("term", term_a)->required();

  std::size_t steps = 1000;
  auto* simplify = app.add_subcommand("simplify", "Rewrite a term with the sound rule set");
  simplify->add_option("term", term_a)->required();
  simplify->add_option("--steps", steps, "Step limit")->capture_default_str();

  auto* equal = app.add_subcommand("equal", "Decide equality of two closed terms");
  equal->add_option("lhs", term_a)->required();
  equal->add_option("rhs", term_b)->required();

  auto* sign = app.add_subcommand("sign", "Sign of a closed term: -1, 0 or 1");
  sign->add_option("term", term_a)->required();

  std::string suite, model = "exact";
  bool exhaustive = false, randomized = false;
  auto* check = app.add_subcommand("check", "Check an axiom suite (names may be joined with '+')");
  check->add_option("suite", suite)->required();
  check->add_option("--model", model, "exact, complex or fp:<prime>")->capture_default_str();
  auto* ex_flag = check->add_flag("--exhaustive", exhaustive, "Enumerate every valuation (finite fields)");
  check->add_flag("--randomized", randomized, "Sample valuations")->excludes(ex_flag);

  std::string kind;
  std::size_t prop_size = 6;
  auto* propagation = app.add_subcommand("propagation", "Random instances of the propagation properties");
  propagation->add_option("--kind", kind)->required()->check(CLI::IsMember({"unit", "zero"}));
  propagation->add_option("--size", prop_size, "Maximum size of t, r and the context")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  int n = 1;
  std::uint64_t limit = 2;
  auto* scan = app.add_subcommand("scan-lagrange", "Primes p <= limit where Lagrange(n) holds in F_p");
  scan->add_option("--n", n)->required()->check(CLI::Range(1, 4));
  scan->add_option("--limit", limit)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));

  auto* f3 = app.add_subcommand("f3-demo", "Why F3 is not a homomorphic image of the rationals");

  std::size_t gen_size = 10;
  std::string gen_sig = "sqrt";
  std::vector<std::string> gen_vars{"x", "y", "z"};
  auto* gen = app.add_subcommand("gen", "Print a random term");
  gen->add_option("--size", gen_size, "Maximum node count")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--signature", gen_sig)
      ->capture_default_str()
      ->check(CLI::IsMember({"meadow", "signed", "sqrt", "complex"}));
  gen->add_option("--vars", gen_vars, "Variable names; pass none for closed terms")
      ->delimiter(',')
      ->expected(0, -1)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return run_eval(g, term_a);
    if (*simplify) return run_simplify(g, term_a, steps);
    if (*equal) return run_equal(g, term_a, term_b);
    if (*sign) return run_sign(g, term_a);
    if (*check) return run_check(g, suite, model, exhaustive, randomized);
    if (*propagation) return run_propagation(g, kind, prop_size);
    if (*scan) return run_scan(g, n, limit);
    if (*f3) return run_f3(g);
    if (*gen) return run_gen(g, gen_size, gen_sig, gen_vars);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
