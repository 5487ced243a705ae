#pragma once

// Checks equations of the axiom bank against a model: exhaustively over a totalized prime
// field, or on seeded random valuations over the exact or complex model.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "smeadow/approx.hpp"
#include "smeadow/axioms.hpp"
#include "smeadow/canonical.hpp"
#include "smeadow/eval.hpp"
#include "smeadow/finite_field.hpp"
#include "smeadow/random.hpp"

namespace smeadow {

struct TargetModel {
  enum class Kind { exact, finite, complex };

  Kind kind = Kind::exact;
  std::uint64_t p = 0;

  static TargetModel exact() { return {Kind::exact, 0}; }
  static TargetModel finite(std::uint64_t p) { return {Kind::finite, p}; }
  static TargetModel complex() { return {Kind::complex, 0}; }

  // "exact", "complex" or "fp:<p>".
  static TargetModel parse(const std::string& text) {
    if (text == "exact") return exact();
    if (text == "complex") return complex();
    if (text.rfind("fp:", 0) == 0) {
      const std::string digits = text.substr(3);
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 12)
        return finite(std::stoull(digits));
    }
    throw std::invalid_argument("unknown model '" + text + "' (valid: exact, complex, fp:<prime>)");
  }

  std::string name() const {
    switch (kind) {
      case Kind::exact: return "exact";
      case Kind::complex: return "complex";
      case Kind::finite: return "fp:" + std::to_string(p);
    }
    return "?";
  }
};

enum class Mode { exhaustive, randomized };

inline const char* mode_name(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "randomized"; }

struct CheckParams {
  // Unset: exhaustive for finite fields within the cap, randomized otherwise.
  std::optional<Mode> mode;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_cap = 10'000'000;
};

struct RenderedValue {
  std::string term;
  std::string decimal;

  friend bool operator<(const RenderedValue& a, const RenderedValue& b) {
    return std::tie(a.term, a.decimal) < std::tie(b.term, b.decimal);
  }
};

struct Failure {
  std::vector<std::pair<std::string, RenderedValue>> valuation;
  RenderedValue lhs;
  RenderedValue rhs;

  friend bool operator<(const Failure& a, const Failure& b) {
    return std::tie(a.valuation, a.lhs, a.rhs) < std::tie(b.valuation, b.lhs, b.rhs);
  }
};

struct CheckReport {
  static constexpr std::size_t kMaxFailures = 20;

  std::string equation;
  std::string model;
  Mode mode = Mode::randomized;
  bool conditional = false;
  // Valuations examined. satisfied counts those meeting every premise (all of them for plain
  // equations), so satisfied + skipped == trials.
  std::size_t trials = 0;
  std::size_t satisfied = 0;
  std::size_t skipped = 0;
  // First kMaxFailures failures, sorted; failure_count is the full number.
  std::vector<Failure> failures;
  std::size_t failure_count = 0;
  // Extra named counters (e.g. how many propagation contexts contained a root).
  std::map<std::string, std::size_t> counters;

  bool pass() const { return failure_count == 0; }
};

namespace detail {

inline constexpr unsigned kReportDigits = 12;

inline RenderedValue rendered(const Real& v) { return {serialize(v), approx_decimal(v, kReportDigits)}; }

inline RenderedValue rendered(Residue v) { return {std::to_string(v), std::to_string(v)}; }

inline RenderedValue rendered(const Complex& v) {
  return {"complex(" + serialize(v.re()) + ", " + serialize(v.im()) + ")",
          approx_decimal(v.re(), kReportDigits) + " + " + approx_decimal(v.im(), kReportDigits) + "i"};
}

inline bool same(const Real& a, const Real& b) { return eq(a, b); }
inline bool same(Residue a, Residue b) { return a == b; }
inline bool same(const Complex& a, const Complex& b) { return a == b; }

class ReportBuilder {
 public:
  ReportBuilder(std::string equation, const TargetModel& model, Mode mode, bool conditional) {
    report_.equation = std::move(equation);
    report_.model = model.name();
    report_.mode = mode;
    report_.conditional = conditional;
  }

  template <typename Valuation, typename Value>
  void fail(const Valuation& val, const Value& lhs, const Value& rhs) {
    ++report_.failure_count;
    if (report_.failures.size() >= CheckReport::kMaxFailures) return;
    Failure f;
    for (const auto& [name, v] : val) f.valuation.emplace_back(name, rendered(v));
    f.lhs = rendered(lhs);
    f.rhs = rendered(rhs);
    report_.failures.push_back(std::move(f));
  }

  CheckReport& report() { return report_; }

  CheckReport finish() {
    std::sort(report_.failures.begin(), report_.failures.end());
    return std::move(report_);
  }

 private:
  CheckReport report_;
};

inline void reject_unsupported(const std::vector<Term>& terms, const TargetModel& model) {
  for (const auto& t : terms) {
    if (model.kind == TargetModel::Kind::finite) {
      for (Op op : {Op::sign, Op::sqrt, Op::conj, Op::re})
        if (contains_op(t, op)) throw unsupported_symbol(std::string(op_name(op)), model.name());
    } else if (model.kind == TargetModel::Kind::exact) {
      for (Op op : {Op::conj, Op::re})
        if (contains_op(t, op)) throw unsupported_symbol(std::string(op_name(op)), model.name());
    }
  }
}

inline Mode resolve_mode(const TargetModel& model, std::size_t nvars, const CheckParams& params) {
  std::uint64_t count = 1;
  bool within_cap = model.kind == TargetModel::Kind::finite;
  if (within_cap) {
    for (std::size_t i = 0; i < nvars; ++i) {
      if (count > params.exhaustive_cap / model.p) {
        within_cap = false;
        break;
      }
      count *= model.p;
    }
  }
  if (!params.mode) return within_cap ? Mode::exhaustive : Mode::randomized;
  if (*params.mode == Mode::exhaustive) {
    if (model.kind != TargetModel::Kind::finite)
      throw std::invalid_argument("exhaustive checking needs a finite model");
    if (!within_cap) throw std::invalid_argument("too many valuations for exhaustive checking");
  }
  return *params.mode;
}

// An equation or conditional equation, flattened for the shared driver.
struct Subject {
  std::string name;
  std::vector<std::string> vars;
  std::vector<Premise> premises;
  Term lhs;
  Term rhs;
  std::vector<Coupling> couplings;
  bool conditional = false;

  std::vector<Term> all_terms() const {
    std::vector<Term> out{lhs, rhs};
    for (const auto& p : premises) {
      out.push_back(p.lhs);
      out.push_back(p.rhs);
    }
    for (const auto& c : couplings) out.push_back(c.value);
    return out;
  }
};

template <typename Model, typename Valuation>
void check_one(const Subject& subject, const Model& model, const Valuation& val, ReportBuilder& out) {
  auto& report = out.report();
  ++report.trials;
  for (const auto& p : subject.premises) {
    const bool equal = same(evaluate(p.lhs, model), evaluate(p.rhs, model));
    if (equal != (p.relation == Relation::equal)) {
      ++report.skipped;
      return;
    }
  }
  ++report.satisfied;
  const auto lhs = evaluate(subject.lhs, model);
  const auto rhs = evaluate(subject.rhs, model);
  if (!same(lhs, rhs)) out.fail(val, lhs, rhs);
}

inline CheckReport check_subject(const Subject& subject, const TargetModel& model, const CheckParams& params) {
  reject_unsupported(subject.all_terms(), model);
  const Mode mode = resolve_mode(model, subject.vars.size(), params);
  ReportBuilder out(subject.name, model, mode, subject.conditional);

  if (model.kind == TargetModel::Kind::finite) {
    const PrimeField field(model.p);
    ResidueValuation val;
    for (const auto& v : subject.vars) val[v] = 0;
    const model::Finite m{val, field};
    if (mode == Mode::exhaustive) {
      // Odometer over [0, p)^vars.
      for (;;) {
        check_one(subject, m, val, out);
        std::size_t i = subject.vars.size();
        while (i > 0) {
          auto& digit = val[subject.vars[i - 1]];
          if (++digit < field.modulus()) break;
          digit = 0;
          --i;
        }
        if (i == 0) break;
      }
    } else {
      Rng rng(params.seed);
      for (std::size_t trial = 0; trial < params.trials; ++trial) {
        for (const auto& v : subject.vars) val[v] = rng.below(field.modulus());
        if (trial % 2 == 1)
          for (const auto& c : subject.couplings) val[c.var] = evaluate(c.value, m);
        check_one(subject, m, val, out);
      }
    }
    return out.finish();
  }

  Rng rng(params.seed);
  for (std::size_t trial = 0; trial < params.trials; ++trial) {
    Session session;
    if (model.kind == TargetModel::Kind::exact) {
      ExactValuation val;
      for (const auto& v : subject.vars) val.emplace(v, random_real(rng, session));
      const model::Exact m{val, session};
      if (trial % 2 == 1)
        for (const auto& c : subject.couplings) val.insert_or_assign(c.var, evaluate(c.value, m));
      check_one(subject, m, val, out);
    } else {
      ComplexValuation val;
      for (const auto& v : subject.vars) val.emplace(v, random_complex(rng, session));
      const model::ComplexModel m{val, session};
      if (trial % 2 == 1)
        for (const auto& c : subject.couplings) val.insert_or_assign(c.var, evaluate(c.value, m));
      check_one(subject, m, val, out);
    }
  }
  return out.finish();
}

}  // namespace detail

inline CheckReport check_equation(const Equation& eq, const TargetModel& model, const CheckParams& params = {}) {
  detail::Subject subject{eq.name, eq.vars, {}, eq.lhs, eq.rhs, {}, false};
  return detail::check_subject(subject, model, params);
}

// Valuations violating a premise are skipped and counted; the conclusion must hold on the rest.
inline CheckReport check_conditional(const ConditionalEquation& ceq, const TargetModel& model,
                                     const CheckParams& params = {}) {
  detail::Subject subject{ceq.name,
                          ceq.vars,
                          ceq.premises,
                          ceq.conclusion.lhs,
                          ceq.conclusion.rhs,
                          ceq.couplings,
                          true};
  return detail::check_subject(subject, model, params);
}

// Evaluates both sides of `eq` under one exact valuation.
inline bool holds_at(const Equation& e, const ExactValuation& val, const Session& session) {
  return eq(eval_exact(e.lhs, val, session), eval_exact(e.rhs, val, session));
}

inline std::vector<CheckReport> run_suite(const AxiomSet& set, const TargetModel& model, const CheckParams& params = {}) {
  std::vector<CheckReport> reports;
  std::uint64_t index = 0;
  for (const auto& e : set.equations) {
    CheckParams p = params;
    p.seed = params.seed * 1000003u + index++;
    reports.push_back(check_equation(e, model, p));
  }
  for (const auto& c : set.conditionals) {
    CheckParams p = params;
    p.seed = params.seed * 1000003u + index++;
    reports.push_back(check_conditional(c, model, p));
  }
  return reports;
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass(); });
}

enum class PropagationKind { pseudo_unit, pseudo_zero };

// 1_t · C[r] = 1_t · C[1_t · r]   (resp. with 0_t)
inline Equation propagation_equation(PropagationKind kind, const Term& t, const Term& r, const Term& context) {
  const Term p = kind == PropagationKind::pseudo_unit ? term::pseudo_unit(t) : term::pseudo_zero(t);
  Equation e;
  e.name = kind == PropagationKind::pseudo_unit ? "propagation_pseudo_unit" : "propagation_pseudo_zero";
  e.lhs = term::mul(p, fill(context, r));
  e.rhs = term::mul(p, fill(context, term::mul(p, r)));
  e.source = "propagation property";
  e.vars = vars_of({e.lhs, e.rhs});
  return e;
}

struct PropagationParams {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t max_term_size = 6;
};

// Random (t, r, C, valuation) instances of the propagation property over the exact model.
inline CheckReport check_propagation(PropagationKind kind, const PropagationParams& params = {}) {
  const TargetModel model = TargetModel::exact();
  detail::ReportBuilder out(kind == PropagationKind::pseudo_unit ? "propagation_pseudo_unit"
                                                                   : "propagation_pseudo_zero",
                            model, Mode::randomized, false);
  if (params.trials == 0) throw std::invalid_argument("propagation check needs at least one trial");
  const std::vector<std::string> vars{"x", "y", "z"};
  Rng rng(params.seed);
  TermGenerator gen(rng, Signature::sqrt_meadow(), vars);
  auto& counters = out.report().counters;
  counters["context_with_sqrt"] = 0;
  counters["context_with_sign"] = 0;
  counters["pseudo_factor_zero"] = 0;

  for (std::size_t trial = 0; trial < params.trials; ++trial) {
    const Term t = gen.term(params.max_term_size);
    const Term r = gen.term(params.max_term_size);
    const Term c = gen.context(params.max_term_size);
    if (contains_op(c, Op::sqrt)) ++counters["context_with_sqrt"];
    if (contains_op(c, Op::sign)) ++counters["context_with_sign"];

    Session session;
    ExactValuation val;
    for (const auto& v : vars) val.emplace(v, random_real(rng, session));
    const model::Exact m{val, session};
    const Equation e = propagation_equation(kind, t, r, c);
    const Real factor = evaluate(kind == PropagationKind::pseudo_unit ? term::pseudo_unit(t) : term::pseudo_zero(t), m);
    if (factor.is_zero()) ++counters["pseudo_factor_zero"];

    auto& report = out.report();
    ++report.trials;
    ++report.satisfied;
    const Real lhs = evaluate(e.lhs, m);
    const Real rhs = evaluate(e.rhs, m);
    if (!eq(lhs, rhs)) out.fail(val, lhs, rhs);
  }
  return out.finish();
}

}  // namespace smeadow
