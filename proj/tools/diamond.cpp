#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "diamond/ambiguity.hpp"
#include "diamond/completion.hpp"
#include "diamond/errors.hpp"
#include "diamond/io.hpp"
#include "diamond/rewriting.hpp"
#include "diamond/series.hpp"

namespace {

using diamond::RewritingSystem;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBudget = 2;
constexpr int kInput = 3;

struct Options {
  std::string file;
  std::string expr;
  std::string output;
  std::string format = "text";
  int max_degree = 12;
  std::size_t max_rules = 500;
  std::size_t max_steps = diamond::kDefaultStepBudget;
  int precision = 0;
  bool trail = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RewritingSystem load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return diamond::parse_system(buf.str());
  } catch (const diamond::ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

diamond::Element expression(const RewritingSystem& sys, const std::string& s) {
  try {
    return diamond::parse_element(sys, s);
  } catch (const diamond::ParseError& e) {
    throw InputError("expression:" + std::string(e.what()));
  }
}

bool json_lines(const Options& o) { return o.format == "json-lines"; }

json ambiguity_json(const RewritingSystem& sys, const diamond::Ambiguity& a) {
  const auto& th = sys.theory();
  return {{"rule1", a.rule1 + 1},
          {"rule2", a.rule2 + 1},
          {"lead1", th.format(sys.rules()[a.rule1].lead)},
          {"lead2", th.format(sys.rules()[a.rule2].lead)},
          {"context1", th.format(a.context1)},
          {"context2", th.format(a.context2)},
          {"superposition", th.format(a.superposition)},
          {"kind", diamond::to_string(a.kind)},
          {"inner", a.inner}};
}

std::string describe(const RewritingSystem& sys, const diamond::Ambiguity& a) {
  const auto& th = sys.theory();
  return std::string(diamond::to_string(a.kind)) + " of rule " +
         std::to_string(a.rule1 + 1) + " (" +
         th.format(sys.rules()[a.rule1].lead) + ") and rule " +
         std::to_string(a.rule2 + 1) + " (" +
         th.format(sys.rules()[a.rule2].lead) + ") at " +
         th.format(a.superposition);
}

diamond::ConfluenceOptions confluence_options(const Options& o) {
  diamond::ConfluenceOptions c;
  c.max_steps = o.max_steps;
  if (o.precision > 0) c.precision = o.precision;
  return c;
}

int run_check(const Options& o) {
  auto sys = load(o.file);
  auto v = diamond::check_confluence(sys, confluence_options(o));
  if (json_lines(o)) {
    json j{{"type", "check"},
           {"status", diamond::to_string(v.status)},
           {"pairs_checked", v.pairs_checked}};
    if (v.witness) {
      j["witness"] = ambiguity_json(sys, *v.witness);
      j["remainder"] = diamond::format_element(sys, v.remainder);
    }
    if (!v.reason.empty()) j["reason"] = v.reason;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << diamond::to_string(v.status) << " (" << v.pairs_checked
              << " pairs checked)\n";
    if (v.witness) {
      std::cout << "witness: " << describe(sys, *v.witness) << "\n"
                << "remainder: " << diamond::format_element(sys, v.remainder)
                << "\n";
    }
    if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
  }
  switch (v.status) {
    case diamond::ConfluenceStatus::Confluent: return kOk;
    case diamond::ConfluenceStatus::NotConfluent: return kNegative;
    case diamond::ConfluenceStatus::Inconclusive: return kBudget;
  }
  return kOk;
}

int run_complete(const Options& o) {
  auto sys = load(o.file);
  diamond::CompletionLimits lim;
  lim.max_degree = o.max_degree;
  lim.max_rules = o.max_rules;
  lim.max_steps = o.max_steps;
  auto rep = diamond::complete(sys, lim);
  const auto& fin = rep.system;
  const auto& th = fin.theory();
  const std::string text = diamond::format_system(fin);
  if (!o.output.empty()) {
    std::ofstream out(o.output);
    if (!out) throw InputError(o.output + ": cannot write");
    out << text;
  }
  if (json_lines(o)) {
    json rules = json::array(), added = json::array(), dropped = json::array();
    for (const auto& r : fin.rules()) rules.push_back(diamond::format_rule(fin, r));
    for (const auto& a : rep.added) {
      added.push_back({{"rule", diamond::format_rule(fin, a.rule)},
                       {"lead1", th.format(a.source.lead1)},
                       {"lead2", th.format(a.source.lead2)},
                       {"superposition", th.format(a.source.superposition)}});
    }
    for (const auto& d : rep.dropped) {
      dropped.push_back({{"rule", diamond::format_rule(fin, d.rule)},
                         {"reducer", th.format(d.reducer)}});
    }
    std::cout << json{{"type", "complete"},
                      {"status", diamond::to_string(rep.status)},
                      {"pairs_processed", rep.pairs_processed},
                      {"rules", rules},
                      {"added", added},
                      {"dropped", dropped}}
                     .dump()
              << "\n";
  } else {
    std::cout << "# " << diamond::to_string(rep.status) << ": "
              << rep.added.size() << " added, " << rep.dropped.size()
              << " dropped, " << rep.pairs_processed << " pairs processed\n";
    if (o.output.empty()) std::cout << text;
  }
  return rep.status == diamond::CompletionStatus::Complete ? kOk : kBudget;
}

int run_nf(const Options& o) {
  auto sys = load(o.file);
  auto a = expression(sys, o.expr);
  if (sys.series_mode() || o.precision > 0) {
    const int n = o.precision > 0 ? o.precision : 16;
    auto r = diamond::truncated_normal_form(sys, a, n, o.max_steps);
    const std::string s = diamond::format_element(sys, r.representative);
    if (json_lines(o)) {
      std::cout << json{{"type", "nf"},
                        {"input", diamond::format_element(sys, a)},
                        {"normal_form", s},
                        {"precision", n},
                        {"truncated", r.truncated},
                        {"steps", r.steps}}
                       .dump()
                << "\n";
    } else {
      if (o.trail) std::cout << "steps: " << r.steps << "\n";
      std::cout << s << (r.truncated ? " + O(B_" + std::to_string(n) + ")" : "")
                << "\n";
    }
    return kOk;
  }
  diamond::ReductionOptions ro;
  ro.max_steps = o.max_steps;
  ro.record_trail = o.trail;
  auto nf = diamond::normal_form(sys, a, ro);
  const auto& th = sys.theory();
  if (json_lines(o)) {
    for (std::size_t k = 0; k < nf.trail.size(); ++k) {
      const auto& st = nf.trail[k];
      std::cout << json{{"type", "step"},
                        {"index", k + 1},
                        {"rule", st.rule + 1},
                        {"context", th.format(st.context)},
                        {"coefficient", st.coefficient.to_string()},
                        {"monomial", th.format(st.monomial)}}
                       .dump()
                << "\n";
    }
    std::cout << json{{"type", "nf"},
                      {"input", diamond::format_element(sys, a)},
                      {"normal_form", diamond::format_element(sys, nf.value)},
                      {"steps", nf.steps}}
                     .dump()
              << "\n";
  } else {
    for (std::size_t k = 0; k < nf.trail.size(); ++k) {
      const auto& st = nf.trail[k];
      std::cout << "step " << k + 1 << ": rule " << st.rule + 1 << " in "
                << th.format(st.context) << " rewrites " << th.format(st.monomial)
                << " (coefficient " << st.coefficient.to_string() << ")\n";
    }
    std::cout << diamond::format_element(sys, nf.value) << "\n";
  }
  return kOk;
}

int run_pairs(const Options& o) {
  auto sys = load(o.file);
  bool all = true;
  for (const auto& a : diamond::critical_ambiguities(sys)) {
    auto cert = diamond::resolve(sys, a, o.max_steps,
                                 o.precision > 0 ? o.precision : 16);
    all = all && cert.resolved;
    const std::string s = diamond::format_element(sys, cert.s_polynomial);
    const std::string r = diamond::format_element(sys, cert.remainder);
    if (json_lines(o)) {
      json j = ambiguity_json(sys, a);
      j["type"] = "pair";
      j["s_polynomial"] = s;
      j["remainder"] = r;
      j["resolved"] = cert.resolved;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << describe(sys, a) << "\n  s-polynomial: " << s
                << "\n  remainder: " << r
                << (cert.resolved ? "  (resolved)" : "  (not resolved)")
                << "\n";
    }
  }
  return all ? kOk : kNegative;
}

int run_irr(const Options& o) {
  auto sys = load(o.file);
  const int d = o.max_degree;
  auto desc = diamond::irr_description(sys);
  auto counts = diamond::count_irreducible(sys, d);
  const bool factor =
      desc.semantics == diamond::IrrDescription::Semantics::Factor;
  json forbidden = json::array();
  for (const auto& m : desc.forbidden) forbidden.push_back(sys.theory().format(m));
  if (json_lines(o)) {
    std::cout << json{{"type", "irr"},
                      {"semantics", factor ? "factor" : "divisibility"},
                      {"forbidden", forbidden},
                      {"counts", counts}}
                     .dump()
              << "\n";
  } else {
    std::cout << (factor ? "forbidden factors:" : "forbidden divisors:");
    for (const auto& m : desc.forbidden) std::cout << " " << sys.theory().format(m);
    std::cout << "\nirreducible monomials per degree 0.." << d << ":";
    for (auto c : counts) std::cout << " " << c;
    std::cout << "\n";
  }
  return kOk;
}

int run_member(const Options& o) {
  auto sys = load(o.file);
  auto a = expression(sys, o.expr);
  auto cert = diamond::ConfluentSystem::certify(sys, confluence_options(o));
  if (!cert) {
    std::cerr << "error: the system is not known to be confluent; run "
                 "'complete' first\n";
    return kNegative;
  }
  diamond::ReductionOptions ro;
  ro.max_steps = o.max_steps;
  auto nf = diamond::normal_form(cert->system(), a, ro);
  const bool member = nf.value.is_zero();
  if (json_lines(o)) {
    std::cout << json{{"type", "member"},
                      {"input", diamond::format_element(sys, a)},
                      {"member", member},
                      {"normal_form", diamond::format_element(sys, nf.value)}}
                     .dump()
              << "\n";
  } else {
    std::cout << (member ? "member" : "not a member") << " (normal form "
              << diamond::format_element(sys, nf.value) << ")\n";
  }
  return member ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rewriting systems, normal forms and completion"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "system file")->required();
    sub->add_option("--max-steps", o.max_steps, "reduction step budget");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json-lines"}));
  };

  auto* check = app.add_subcommand("check", "decide confluence");
  common(check);
  check->add_option("--precision", o.precision, "series precision n");

  auto* comp = app.add_subcommand("complete", "complete into a Groebner basis");
  common(comp);
  comp->add_option("-o,--output", o.output, "write the completed system");
  comp->add_option("--max-degree", o.max_degree, "superposition degree cap");
  comp->add_option("--max-rules", o.max_rules, "rule count cap");

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  common(nf);
  nf->add_option("expr", o.expr, "expression")->required();
  nf->add_flag("--trail", o.trail, "print every rewrite step");
  nf->add_option("--precision", o.precision, "series precision n");

  auto* pairs = app.add_subcommand("pairs", "list and resolve critical pairs");
  common(pairs);
  pairs->add_option("--precision", o.precision, "series precision n");

  auto* irr = app.add_subcommand("irr", "describe irreducible monomials");
  common(irr);
  o.max_degree = 12;
  irr->add_option("--max-degree", o.max_degree, "count up to this degree");

  auto* member = app.add_subcommand("member", "ideal membership");
  common(member);
  member->add_option("expr", o.expr, "expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  if (irr->parsed() && irr->count("--max-degree") == 0) o.max_degree = 6;

  try {
    if (check->parsed()) return run_check(o);
    if (comp->parsed()) return run_complete(o);
    if (nf->parsed()) return run_nf(o);
    if (pairs->parsed()) return run_pairs(o);
    if (irr->parsed()) return run_irr(o);
    if (member->parsed()) return run_member(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const diamond::StepBudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const diamond::OrientationError& e) {
    std::cerr << "error: cannot orient a remainder: " << e.what() << "\n";
    return kInput;
  } catch (const diamond::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
