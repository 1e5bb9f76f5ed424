// ltcol: command-line front end for L(t,1)-colouring.
//
// Exit codes: 0 ok, 1 invalid input, 2 budget exceeded / unresolved audit
// instance, 3 audit discrepancy.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ltcol/audit.hpp"
#include "ltcol/checker.hpp"
#include "ltcol/families.hpp"
#include "ltcol/io.hpp"
#include "ltcol/solver.hpp"

namespace {

using namespace ltcol;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kBudget = 2;
constexpr int kDiscrepancy = 3;

struct GraphSource {
  std::string file;
  std::string family;
};

Graph load_graph(const GraphSource& src) {
  if (src.file.empty() == src.family.empty()) {
    throw InvalidInput("give exactly one of a graph file or --family");
  }
  if (!src.family.empty()) return generate(parse_family(src.family));
  std::ifstream in(src.file);
  if (!in) throw InvalidInput("cannot open graph file '" + src.file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> warnings;
  Graph g = parse_graph(buf.str(), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return g;
}

Budget make_budget(std::uint64_t nodes, double secs) {
  Budget b;
  b.max_nodes = nodes;
  b.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(secs * 1000.0));
  return b;
}

void print_violations(const std::vector<Violation>& vs) {
  for (const auto& v : vs) {
    std::cout << to_string(v.kind) << ' ' << v.u << ' ' << v.v << ' '
              << (v.kind == ViolationKind::AdjacentDiffInT ? "diff=" : "colour=")
              << v.detail << "\n";
  }
}

// --------------------------------------------------------------------------

struct SpanArgs {
  GraphSource src;
  std::string tset;
  std::string method = "exact";
  std::string strategy = "iterative";
  std::string order = "degree";
  std::uint64_t seed = 0;
  std::uint64_t budget_nodes = Budget{}.max_nodes;
  double budget_secs = 60.0;
  unsigned workers = 1;
  Colour max_span = 12;
  bool allow_large = false;
  bool json = false;
};

int cmd_span(const SpanArgs& a) {
  const Graph g = load_graph(a.src);
  const TSet t = parse_tset(a.tset);
  SpanResult res;
  try {
    if (a.method == "exact") {
      ExactOptions opts;
      opts.budget = make_budget(a.budget_nodes, a.budget_secs);
      opts.strategy = a.strategy == "binary" ? SpanStrategy::binary
                                             : SpanStrategy::iterative;
      opts.workers = a.workers;
      res = exact_span(g, t, opts);
    } else if (a.method == "brute") {
      BruteForceGuard guard;
      if (a.allow_large) {
        guard.max_vertices = g.order();
        guard.max_span = a.max_span;
      }
      res = brute_force_span(g, t, a.max_span, guard);
    } else {
      GreedyOrder order;
      order.policy = a.order == "id"       ? OrderPolicy::id_asc
                     : a.order == "random" ? OrderPolicy::random
                                           : OrderPolicy::degree_desc;
      order.seed = a.seed;
      res = greedy_upper_bound(g, t, order);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (lower bound "
              << e.lower_bound;
    if (e.upper_bound) std::cerr << ", upper bound " << *e.upper_bound;
    std::cerr << ", " << e.nodes_explored << " nodes)\n";
    return kBudget;
  }

  if (a.json) {
    std::cout << emit_result(res, g, t) << "\n";
  } else {
    std::cout << "lambda: " << res.lambda << " (" << to_string(res.method)
              << (res.method == Method::greedy ? ", upper bound" : "") << ")\n"
              << "colours: " << format_colour_list(res.witness.values()) << "\n"
              << "T: {" << format_tset(t) << "}  sigma: " << t.sigma() << "\n"
              << "nodes: " << res.nodes_explored << "  elapsed: "
              << res.elapsed_ms() << " ms\n";
  }
  return kOk;
}

// --------------------------------------------------------------------------

struct CheckArgs {
  GraphSource src;
  std::string tset;
  std::string colours;
};

int cmd_check(const CheckArgs& a) {
  const Graph g = load_graph(a.src);
  const TSet t = parse_tset(a.tset);
  const Colouring c(parse_colour_list(a.colours));
  const auto vs = validate(g, t, c);
  print_violations(vs);
  return vs.empty() ? kOk : kInvalid;
}

// --------------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::string tset;
  bool json = false;
};

int cmd_construct(const ConstructArgs& a) {
  const FamilySpec spec = parse_family(a.family);
  const TSet t = parse_tset(a.tset);
  const Graph g = generate(spec);
  Colouring c;
  json out;
  out["family"] = a.family;
  out["tset"] = t.elements();
  std::optional<StarPrediction> prediction;
  std::optional<Colour> bound;
  if (const auto* star = std::get_if<family::Star>(&spec)) {
    c = star_colouring(star->leaves, t);
    prediction = star_span_predicted(star->leaves, t);
  } else if (const auto* kp = std::get_if<family::CompleteMultipartite>(&spec)) {
    c = kpartite_colouring(kp->sizes, t);
    bound = kpartite_upper_bound(kp->sizes, t);
  } else {
    throw InvalidInput("construct supports star:n and kpartite:s1,s2,...");
  }
  const auto vs = validate(g, t, c);
  if (!vs.empty()) {
    std::cerr << "internal error: construction failed validation\n";
    print_violations(vs);
    return kInvalid;
  }

  if (a.json) {
    out["colours"] = c.values();
    out["c_span"] = c_span(c);
    out["valid"] = true;
    if (prediction) {
      out["prediction"] = {{"mode", std::string(to_string(prediction->mode))},
                           {"value", prediction->value}};
    }
    if (bound) out["bound"] = *bound;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "colours: " << format_colour_list(c.values()) << "\n"
              << "c-span: " << c_span(c) << "\n";
    if (prediction) {
      std::cout << "prediction: "
                << (prediction->mode == StarPrediction::Mode::Exact ? "= " : "< ")
                << prediction->value << "\n";
    }
    if (bound) std::cout << "bound: <= " << *bound << "\n";
  }
  return kOk;
}

// --------------------------------------------------------------------------

struct AuditArgs {
  std::string suite = "all";
  std::optional<Colour> max_r;
  std::optional<std::size_t> max_n;
  std::uint64_t budget_nodes = Budget{}.max_nodes;
  double budget_secs = 60.0;
  bool json = false;
};

int cmd_audit(const AuditArgs& a) {
  struct Suite {
    std::string name;
    Colour max_r;
    std::size_t max_n;
    std::vector<audit::Record> (*run)(const audit::Config&);
  };
  const std::vector<Suite> suites = {
      {"stars", 4, 7, &audit::run_stars},
      {"kpartite", 3, 6, &audit::run_kpartite},
      {"remarks", 3, 6, &audit::run_remarks},
  };

  std::vector<audit::Record> records;
  bool matched = false;
  for (const auto& s : suites) {
    if (a.suite != "all" && a.suite != s.name) continue;
    matched = true;
    audit::Config cfg;
    cfg.max_r = a.max_r.value_or(s.max_r);
    cfg.max_n = a.max_n.value_or(s.max_n);
    cfg.budget = make_budget(a.budget_nodes, a.budget_secs);
    auto part = s.run(cfg);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (!matched) throw InvalidInput("unknown suite '" + a.suite + "'");

  const auto sum = audit::summarize(records);
  if (a.json) {
    json out;
    out["suite"] = a.suite;
    out["records"] = json::array();
    for (const auto& r : records) out["records"].push_back(audit::to_json(r));
    out["summary"] = {{"total", sum.total},
                      {"agreed", sum.agreed},
                      {"discrepancies", sum.discrepancies},
                      {"unresolved", sum.unresolved}};
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& r : records) {
      const char* tag = !r.agree ? "UNRESOLVED" : *r.agree ? "ok" : "DISCREPANCY";
      std::cout << tag << "  " << r.claim << "  " << r.instance
                << "  predicted " << r.predicted << "  exact "
                << (r.exact ? std::to_string(*r.exact) : "?");
      if (!r.notes.empty()) std::cout << "  (" << r.notes << ")";
      std::cout << "\n";
    }
    std::cout << "summary: " << sum.total << " instances, " << sum.agreed
              << " agree, " << sum.discrepancies << " discrepancies, "
              << sum.unresolved << " unresolved\n";
  }
  if (sum.discrepancies > 0) return kDiscrepancy;
  if (sum.unresolved > 0) return kBudget;
  return kOk;
}

// --------------------------------------------------------------------------

struct ComplementArgs {
  GraphSource src;
  std::string tset;
  std::string colours;
  Colour j = 0;
};

int cmd_complement(const ComplementArgs& a) {
  const Graph g = load_graph(a.src);
  const TSet t = parse_tset(a.tset);
  const Colouring c(parse_colour_list(a.colours));
  const auto bad = validate(g, t, c);
  if (!bad.empty()) {
    std::cerr << "input colouring is not valid; complement not emitted\n";
    for (const auto& v : bad) {
      std::cerr << to_string(v.kind) << ' ' << v.u << ' ' << v.v << "\n";
    }
    return kInvalid;
  }
  const Colouring comp = complement(c, a.j);
  const bool ok = is_valid(g, t, comp);
  std::cout << format_colour_list(comp.values()) << "\n"
            << "c-span: " << c_span(c) << " -> " << c_span(comp) << "\n"
            << "valid: " << (ok ? "yes" : "no") << "\n";
  return ok ? kOk : kInvalid;
}

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("graph", src.file, "Graph file (DIMACS 'p edge' format)");
  cmd->add_option("--family", src.family,
                  "Generated graph: star:n, complete:n, kpartite:a,b,..., "
                  "path:n, cycle:n, random:n,p,seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L(t,1)-colouring: spans, checks, constructions and audits"};
  app.require_subcommand(1);

  SpanArgs span;
  auto* span_cmd = app.add_subcommand("span", "Compute the L(t,1)-span");
  add_graph_source(span_cmd, span.src);
  span_cmd->add_option("--tset", span.tset, "Forbidden differences, e.g. 0,1,3")->required();
  span_cmd->add_option("--method", span.method)
      ->check(CLI::IsMember({"exact", "brute", "greedy"}));
  span_cmd->add_option("--strategy", span.strategy, "Exact search over spans")
      ->check(CLI::IsMember({"iterative", "binary"}));
  span_cmd->add_option("--order", span.order, "Greedy vertex order")
      ->check(CLI::IsMember({"degree", "id", "random"}));
  span_cmd->add_option("--seed", span.seed, "Seed for --order random");
  span_cmd->add_option("--budget-nodes", span.budget_nodes);
  span_cmd->add_option("--budget-secs", span.budget_secs);
  span_cmd->add_option("--workers", span.workers, "Threads for exact search")
      ->check(CLI::PositiveNumber);
  span_cmd->add_option("--max-span", span.max_span, "Brute-force span ceiling");
  span_cmd->add_flag("--allow-large", span.allow_large,
                     "Lift the brute-force size guard");
  span_cmd->add_flag("--json", span.json);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Validate a colouring");
  add_graph_source(check_cmd, check.src);
  check_cmd->add_option("--tset", check.tset)->required();
  check_cmd->add_option("--colours", check.colours, "Colour per vertex, e.g. 0,3,1")
      ->required();

  ConstructArgs construct;
  auto* construct_cmd =
      app.add_subcommand("construct", "Constructive colouring for stars and k-partite graphs");
  construct_cmd->add_option("--family", construct.family, "star:n or kpartite:a,b,...")
      ->required();
  construct_cmd->add_option("--tset", construct.tset)->required();
  construct_cmd->add_flag("--json", construct.json);

  AuditArgs aud;
  auto* audit_cmd = app.add_subcommand("audit", "Check the span claims against exact search");
  audit_cmd->add_option("--suite", aud.suite)
      ->check(CLI::IsMember({"stars", "kpartite", "remarks", "all"}));
  audit_cmd->add_option("--max-r", aud.max_r);
  audit_cmd->add_option("--max-n", aud.max_n);
  audit_cmd->add_option("--budget-nodes", aud.budget_nodes, "Per instance");
  audit_cmd->add_option("--budget-secs", aud.budget_secs, "Per instance");
  audit_cmd->add_flag("--json", aud.json);

  ComplementArgs comp;
  auto* comp_cmd = app.add_subcommand("complement", "Complementary colouring s + j - c(v)");
  add_graph_source(comp_cmd, comp.src);
  comp_cmd->add_option("--tset", comp.tset)->required();
  comp_cmd->add_option("--colours", comp.colours)->required();
  comp_cmd->add_option("--j", comp.j, "Shift j >= 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*span_cmd) return cmd_span(span);
    if (*check_cmd) return cmd_check(check);
    if (*construct_cmd) return cmd_construct(construct);
    if (*audit_cmd) return cmd_audit(aud);
    if (*comp_cmd) return cmd_complement(comp);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
