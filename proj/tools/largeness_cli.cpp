// largeness_cli: command-line access to the largeness library.
//
// Output is a JSON run report on stdout (or a short text summary with
// --plain). Exit codes: 0 pass/true, 1 fail/false, 2 usage or parse error,
// 3 budget exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "largeness/largeness.hpp"
#include "largeness/hardy.hpp"
#include "largeness/ordinal_io.hpp"
#include "largeness/partition.hpp"
#include "largeness/ramsey.hpp"
#include "largeness/suites.hpp"

using namespace largeness;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct Globals {
  std::optional<std::uint64_t> budget;
  bool plain = false;
  bool json_out = false;
  std::uint64_t seed = SuiteOptions{}.seed;
  unsigned workers = 1;
};

// Integers wider than 53 bits go out as decimal strings.
json num(const Nat& n) {
  if (n >= 0 && bit_length(n) <= 53) return static_cast<std::int64_t>(to_u64(n));
  return n.str();
}
json num(std::uint64_t n) { return num(Nat(n)); }

json set_json(const FinSet& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(num(x));
  return out;
}

json blocks_json(const BlockSequence& b) {
  json out = json::array();
  for (const auto& block : b.blocks()) out.push_back(set_json(block));
  return out;
}

json coloring_table(const Coloring& f) {
  json table = json::array();
  const auto& c = f.carrier();
  if (f.arity() == 1) {
    for (std::size_t i = 0; i < c.size(); ++i) table.push_back({num(c[i]), f.at(i)});
  } else {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) table.push_back({num(c[i]), num(c[j]), f.at(i, j)});
  }
  return table;
}

/// What a command hands back before it is wrapped into the run report.
struct Outcome {
  json verdict;
  json witness;  // null when the command has none
  std::uint64_t checks = 1;
  int exit_code = exit_true;
  std::string plain;
};

Outcome boolean(bool v, std::uint64_t checks = 1) {
  return Outcome{v, nullptr, checks, v ? exit_true : exit_false, v ? "true" : "false"};
}

Nat parse_point(const std::string& s) { return parse_nat(s); }

unsigned parse_small(const std::string& s, const char* what) {
  const Nat n = parse_nat(s);
  require(fits_u64(n) && n <= 64, ErrorCode::PreconditionViolated, std::string(what) + " must be at most 64");
  return static_cast<unsigned>(to_u64(n));
}

/// A growth function by name, or else an ordinal.
SparsityBound parse_bound(const std::string& text) {
  static const std::map<std::string, std::function<GrowthFunction()>> named{
      {"x", GrowthFunction::identity},
      {"x+1", GrowthFunction::successor},
      {"2x", GrowthFunction::doubling},
      {"x*2^x", GrowthFunction::x_times_2_pow_x},
      {"x^R_x(2x+2)", GrowthFunction::pow_ramsey},
      {"x^R_x(2x)", GrowthFunction::pow_ramsey_2x},
  };
  if (auto it = named.find(text); it != named.end()) return it->second();
  return parse_ordinal(text);
}

Nat json_nat(const json& j, const char* what) {
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Nat(j.get<std::int64_t>());
  if (j.is_string()) return parse_nat(j.get<std::string>());
  fail(ErrorCode::ParseError, std::string(what) + " must be a natural number");
}

/// Reads {"carrier", "k", "arity", "table"} and insists that the table
/// colors every point (arity 1) or every pair x < y (arity 2) exactly once.
Coloring load_coloring(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), ErrorCode::ParseError, "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
  for (const char* key : {"carrier", "k", "arity", "table"})
    require(doc.contains(key), ErrorCode::ParseError, std::string("coloring file lacks \"") + key + "\"");
  std::vector<Nat> pts;
  for (const auto& x : doc["carrier"]) pts.push_back(json_nat(x, "carrier element"));
  const FinSet carrier = FinSet::of(pts);
  require(carrier.size() == pts.size(), ErrorCode::ParseError, "carrier has repeated elements");
  const Nat k = json_nat(doc["k"], "k");
  const Nat arity = json_nat(doc["arity"], "arity");
  require(k >= 1 && k <= 1u << 16, ErrorCode::ParseError, "k out of range");
  require(arity == 1 || arity == 2, ErrorCode::WrongArity, "arity must be 1 or 2");
  const auto colors = static_cast<Coloring::Color>(to_u64(k));
  const std::size_t width = arity == 1 ? 2 : 3;

  std::map<std::pair<Nat, Nat>, Coloring::Color> seen;
  for (const auto& row : doc["table"]) {
    require(row.is_array() && row.size() == width, ErrorCode::ParseError,
            "table rows must have " + std::to_string(width) + " entries");
    const Nat x = json_nat(row[0], "table point");
    const Nat y = width == 3 ? json_nat(row[1], "table point") : Nat(0);
    const Nat c = json_nat(row[width - 1], "color");
    require(carrier.contains(x) && (width == 2 || carrier.contains(y)), ErrorCode::NotSubset,
            "table mentions a point outside the carrier");
    require(width == 2 || x < y, ErrorCode::ParseError, "table pairs must be written x < y");
    require(c < k, ErrorCode::PreconditionViolated, "color " + c.str() + " is not below k");
    const bool fresh = seen.emplace(std::pair{x, y}, static_cast<Coloring::Color>(to_u64(c))).second;
    require(fresh, ErrorCode::ParseError, "table colors " + x.str() + (width == 3 ? "," + y.str() : "") + " twice");
  }
  auto missing = [](const std::string& what) { fail(ErrorCode::ParseError, "table is not total: no color for " + what); };
  if (arity == 1)
    return Coloring::points(carrier, colors, [&](const Nat& x) {
      auto it = seen.find({x, Nat(0)});
      if (it == seen.end()) missing(x.str());
      return it->second;
    });
  return Coloring::pairs(carrier, colors, [&](const Nat& x, const Nat& y) {
    auto it = seen.find({x, y});
    if (it == seen.end()) missing(x.str() + "," + y.str());
    return it->second;
  });
}

// ---------------------------------------------------------------------------

Outcome cmd_ord(const std::string& expr, const std::string& op, const std::vector<std::string>& rest) {
  const Ordinal a = parse_ordinal(expr);
  auto arg = [&]() -> const std::string& {
    require(rest.size() == 1, ErrorCode::ParseError, "ord " + op + " takes one argument");
    return rest.front();
  };
  auto value = [](const json& v, std::string text) { return Outcome{v, nullptr, 1, exit_true, std::move(text)}; };
  if (op == "eval-step") {
    const std::string r = to_string(fundamental_step(a, parse_point(arg())));
    return value(r, r);
  }
  if (op == "walk") {
    const std::string r = to_string(fundamental_walk(a, parse_finset(arg())));
    return value(r, r);
  }
  if (op == "psn") {
    require(rest.empty(), ErrorCode::ParseError, "ord psn takes no argument");
    const Nat p = pseudo_norm(a);
    return value(num(p), p.str());
  }
  if (op == "nsum") {
    const std::string r = to_string(natural_sum(a, parse_ordinal(arg())));
    return value(r, r);
  }
  if (op == "cmp") {
    const auto c = a <=> parse_ordinal(arg());
    const int r = c < 0 ? -1 : c > 0 ? 1 : 0;
    return value(r, std::to_string(r));
  }
  fail(ErrorCode::ParseError, "unknown ord operation '" + op + "'");
}

Outcome cmd_large(const std::string& set, const std::string& alpha, const std::string& mode,
                  const std::vector<std::string>& rest) {
  const FinSet xs = parse_finset(set);
  const Ordinal a = parse_ordinal(alpha);
  if (mode != "sparse") require(rest.empty(), ErrorCode::ParseError, "large " + mode + " takes no extra argument");
  if (mode == "large") return boolean(is_large(xs, a));
  if (mode == "atmost") return boolean(is_at_most_large(xs, a));
  if (mode == "exact") return boolean(is_exactly_large(xs, a));
  if (mode == "sparse") {
    require(rest.size() == 1, ErrorCode::ParseError, "large sparse takes a bound");
    const SparsityBound bound = parse_bound(rest.front());
    const bool large = is_large(xs, a), sparse = is_sparse(xs, bound);
    Outcome out = boolean(large && sparse, 2);
    out.witness = json{{"large", large}, {"sparse", sparse}, {"bound", to_string(bound)}};
    return out;
  }
  fail(ErrorCode::ParseError, "unknown largeness mode '" + mode + "'");
}

Outcome cmd_hardy(const std::string& set, const std::string& alpha, const std::string& point) {
  const HardyFrame frame(parse_finset(set));
  const Ordinal a = parse_ordinal(alpha);
  const Nat x = parse_point(point);
  const auto r = hardy_eval(frame, a, x);
  json trace = json::array();
  for (const auto& [o, p] : hardy_trace(frame, a, x)) trace.push_back({{"ordinal", to_string(o)}, {"point", num(p)}});
  Outcome out{r.is_defined() ? num(r.value()) : json(nullptr), trace, trace.size(),
              r.is_defined() ? exit_true : exit_false, r.is_defined() ? r.value().str() : "undefined"};
  return out;
}

Outcome cmd_split(const std::string& set, const std::string& a, const std::string& b) {
  const auto w = split(parse_finset(set), parse_ordinal(a), parse_ordinal(b));
  return Outcome{true, json::array({set_json(w.left), set_json(w.right)}), 1, exit_true,
                 to_string(w.left) + " | " + to_string(w.right)};
}

std::string blocks_text(const BlockSequence& b) {
  std::string out;
  for (const auto& block : b.blocks()) out += (out.empty() ? "" : " ") + to_string(block);
  return out;
}

Outcome cmd_deconstruct(const std::string& set, const std::string& n, const std::string& m, unsigned k,
                        unsigned l) {
  const FinSet xs = parse_finset(set);
  const unsigned nn = parse_small(n, "n"), mm = parse_small(m, "m");
  const BlockSequence b = k == 1 && l == 1 ? deconstruct(xs, nn, mm) : deconstruct_general(xs, nn, mm, k, l);
  return Outcome{true, blocks_json(b), b.size(), exit_true, blocks_text(b)};
}

Outcome cmd_sparse_subset(const std::string& set, const std::string& m, const std::string& l) {
  const FinSet y = sparse_large_subset(parse_finset(set), parse_small(m, "m"), parse_small(l, "l"));
  return Outcome{true, set_json(y), 1, exit_true, to_string(y)};
}

StatementKind parse_kind(const std::string& s) {
  if (s == "RT1") return StatementKind::RT1;
  if (s == "RT2") return StatementKind::RT2;
  if (s == "fEM") return StatementKind::FEM;
  if (s == "trRT2") return StatementKind::TRRT2;
  fail(ErrorCode::ParseError, "unknown statement '" + s + "' (RT1, RT2, fEM, trRT2)");
}

Outcome cmd_stmt(const Globals& g, const std::string& set, const std::string& kind, const std::string& alpha,
                 std::optional<unsigned> colors, const std::string& resume) {
  const FinSet xs = parse_finset(set);
  const Statement stmt{parse_kind(kind), colors};
  StatementOptions opt;
  if (g.budget) opt.budget = *g.budget;
  opt.workers = g.workers;
  if (!resume.empty()) {
    const Nat r = parse_nat(resume);
    require(fits_u64(r), ErrorCode::PreconditionViolated, "resume point out of range");
    opt.resume_from = to_u64(r);
  }
  // The library calls an over-budget enumeration infeasible; here it is a
  // budget overrun, so it is checked up front.
  const unsigned arity = stmt.kind == StatementKind::RT1 ? 1 : 2;
  const std::size_t n = xs.size();
  const std::size_t cells = arity == 1 ? n : n * (n - (n > 0)) / 2;
  const Nat k = colors ? Nat(*colors) : (xs.empty() ? Nat(1) : xs.min());
  if (cells > 0 && k >= 1) {
    const Capped total = capped_pow(k, Nat(cells), 64);
    require(total && *total <= Nat(opt.budget), ErrorCode::BudgetExceeded,
            k.str() + "^" + std::to_string(cells) + " colorings exceed the budget of " + std::to_string(opt.budget));
  }
  const StatementResult r = is_stmt_alpha_large(xs, stmt, parse_ordinal(alpha), opt);
  Outcome out = boolean(r.holds, r.colorings_checked);
  json w{{"statement", to_string(stmt)}, {"colorings_checked", num(r.colorings_checked)},
         {"colorings_skipped", num(r.colorings_skipped)}};
  if (r.counterexample) {
    const auto kk = static_cast<Coloring::Color>(std::max<std::uint64_t>(1, to_u64(k)));
    w["counterexample_code"] = num(*r.counterexample);
    w["counterexample"] = coloring_table(Coloring::from_code(xs, arity, kk, *r.counterexample));
    out.plain += " (counterexample code " + std::to_string(*r.counterexample) + ")";
  }
  out.witness = std::move(w);
  return out;
}

WitnessKind parse_witness_kind(const std::string& s) {
  if (s == "homogeneous") return WitnessKind::Homogeneous;
  if (s == "transitive") return WitnessKind::Transitive;
  if (s == "fallow") return WitnessKind::Fallow;
  fail(ErrorCode::ParseError, "unknown witness kind '" + s + "'");
}

Outcome cmd_homogeneous(const std::string& path, const std::string& alpha, const std::string& kind) {
  const Coloring f = load_coloring(path);
  const auto w = find_large_homogeneous(f, parse_ordinal(alpha), parse_witness_kind(kind));
  if (!w) return Outcome{false, nullptr, 1, exit_false, "none"};
  json witness{{"subset", set_json(w->subset)}, {"kind", to_string(w->kind)}};
  if (w->color) witness["color"] = *w->color;
  return Outcome{true, witness, 1, exit_true, to_string(w->subset)};
}

Outcome cmd_verify(const Globals& g, const std::string& suite) {
  SuiteOptions opt;
  if (g.budget) opt.budget = *g.budget;
  opt.seed = g.seed;
  std::vector<std::function<SuiteReport()>> parts;
  if (suite == "thm1") parts = {[&] { return suites::union_bound(opt); }};
  else if (suite == "splitting") parts = {[&] { return suites::splitting(opt); }};
  else if (suite == "pigeonhole") parts = {[&] { return suites::pigeonhole(opt); }};
  else if (suite == "hardy")
    parts = {[&] { return suites::hardy_bridge(opt); }, [&] { return suites::optimal_growth(opt); }};
  else if (suite == "blocks") parts = {[&] { return suites::blocks(opt); }};
  else if (suite == "arrows") parts = {[&] { return suites::arrows(opt); }};
  else if (suite == "rt-micro") parts = {[&] { return suites::rt_micro(opt); }};
  else if (suite == "em-micro")
    parts = {[&] { return suites::grouping_micro(opt); }, [&] { return suites::fallow_transitive(opt); },
             [&] { return suites::pipelines(opt); }};
  else
    fail(ErrorCode::ParseError, "unknown suite '" + suite +
                                    "' (thm1, splitting, pigeonhole, hardy, blocks, arrows, rt-micro, em-micro)");

  bool pass = true;
  std::uint64_t cases = 0;
  json reports = json::array();
  std::optional<std::string> first;
  for (const auto& run : parts) {
    const SuiteReport r = run();
    pass = pass && r.passed();
    cases += r.cases();
    if (!first && r.counterexample()) first = r.name() + ": " + *r.counterexample();
    reports.push_back({{"suite", r.name()},
                       {"passed", r.passed()},
                       {"cases", num(r.cases())},
                       {"failures", num(r.failures())},
                       {"counterexample", r.counterexample() ? json(*r.counterexample()) : json(nullptr)},
                       {"notes", r.notes()}});
  }
  std::string text = std::string(pass ? "pass" : "fail") + ", " + std::to_string(cases) + " cases";
  if (first) text += "; first counterexample: " + *first;
  return Outcome{pass ? "pass" : "fail", reports, cases, pass ? exit_true : exit_false, text};
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NonCanonical:
    case ErrorCode::WrongArity: return exit_usage;
    case ErrorCode::BudgetExceeded: return exit_budget;
    default: return exit_false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Largeness below epsilon_0: ordinals, fundamental sequences, largeness and Ramsey checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "Most cases or colorings to examine");
  auto* plain = app.add_flag("--plain", g.plain, "Print a short text summary");
  app.add_flag("--json", g.json_out, "Print the JSON run report (default)")->excludes(plain);
  app.add_option("--seed", g.seed, "Seed for sampled suites");
  app.add_option("--workers", g.workers, "Worker threads for coloring enumeration")->check(CLI::Range(1u, 256u));

  json inputs = json::object();
  std::function<Outcome()> action;
  std::string command;

  auto* ord = app.add_subcommand("ord", "Ordinal operations: eval-step x | walk X | psn | nsum b | cmp b");
  std::string o_expr, o_op;
  std::vector<std::string> o_rest;
  ord->add_option("expr", o_expr)->required();
  ord->add_option("op", o_op)->required();
  ord->add_option("args", o_rest);
  ord->callback([&] {
    command = "ord";
    inputs = {{"expr", o_expr}, {"op", o_op}, {"args", o_rest}};
    action = [&] { return cmd_ord(o_expr, o_op, o_rest); };
  });

  auto* large = app.add_subcommand("large", "Largeness of a set: large | atmost | exact | sparse BOUND");
  std::string l_set, l_alpha, l_mode;
  std::vector<std::string> l_rest;
  large->add_option("set", l_set)->required();
  large->add_option("alpha", l_alpha)->required();
  large->add_option("mode", l_mode)->required();
  large->add_option("args", l_rest);
  large->callback([&] {
    command = "large";
    inputs = {{"set", l_set}, {"alpha", l_alpha}, {"mode", l_mode}, {"args", l_rest}};
    action = [&] { return cmd_large(l_set, l_alpha, l_mode, l_rest); };
  });

  auto* hardy = app.add_subcommand("hardy", "Hardy function of a set at a point, with its trace");
  std::string h_set, h_alpha, h_x;
  hardy->add_option("set", h_set)->required();
  hardy->add_option("alpha", h_alpha)->required();
  hardy->add_option("x", h_x)->required();
  hardy->callback([&] {
    command = "hardy";
    inputs = {{"set", h_set}, {"alpha", h_alpha}, {"x", h_x}};
    action = [&] { return cmd_hardy(h_set, h_alpha, h_x); };
  });

  auto* sp = app.add_subcommand("split", "Split an (a (+) b)-large set into a-large and b-large parts");
  std::string s_set, s_a, s_b;
  sp->add_option("set", s_set)->required();
  sp->add_option("a", s_a)->required();
  sp->add_option("b", s_b)->required();
  sp->callback([&] {
    command = "split";
    inputs = {{"set", s_set}, {"a", s_a}, {"b", s_b}};
    action = [&] { return cmd_split(s_set, s_a, s_b); };
  });

  auto* dec = app.add_subcommand("deconstruct", "Blocks of a w^(n+m)-large set (w^n*k blocks, w^m*l maxima)");
  std::string d_set, d_n, d_m;
  unsigned d_k = 1, d_l = 1;
  dec->add_option("set", d_set)->required();
  dec->add_option("n", d_n)->required();
  dec->add_option("m", d_m)->required();
  dec->add_option("--k", d_k, "Block coefficient")->check(CLI::Range(1u, 64u));
  dec->add_option("--l", d_l, "Maxima coefficient")->check(CLI::Range(1u, 64u));
  dec->callback([&] {
    command = "deconstruct";
    inputs = {{"set", d_set}, {"n", d_n}, {"m", d_m}, {"k", d_k}, {"l", d_l}};
    action = [&] { return cmd_deconstruct(d_set, d_n, d_m, d_k, d_l); };
  });

  auto* sps = app.add_subcommand("sparse-subset", "A (w^2*3)-sparse (w^m*l + 1)-large subset");
  std::string ss_set, ss_m, ss_l;
  sps->add_option("set", ss_set)->required();
  sps->add_option("m", ss_m)->required();
  sps->add_option("l", ss_l)->required();
  sps->callback([&] {
    command = "sparse-subset";
    inputs = {{"set", ss_set}, {"m", ss_m}, {"l", ss_l}};
    action = [&] { return cmd_sparse_subset(ss_set, ss_m, ss_l); };
  });

  auto* st = app.add_subcommand("stmt", "Decide RT1 | RT2 | fEM | trRT2 largeness by enumerating colorings");
  std::string t_set, t_kind, t_alpha, t_resume;
  std::optional<unsigned> t_colors;
  st->add_option("set", t_set)->required();
  st->add_option("statement", t_kind)->required();
  st->add_option("alpha", t_alpha)->required();
  st->add_option("--colors", t_colors, "Number of colors (default min X)");
  st->add_option("--resume", t_resume, "Base-k coloring code to start from");
  st->callback([&] {
    command = "stmt";
    inputs = {{"set", t_set}, {"statement", t_kind}, {"alpha", t_alpha},
              {"colors", t_colors ? json(*t_colors) : json(nullptr)}, {"resume", t_resume}};
    action = [&] { return cmd_stmt(g, t_set, t_kind, t_alpha, t_colors, t_resume); };
  });

  auto* hom = app.add_subcommand("homogeneous", "Largest a-large homogeneous, transitive or fallow subset");
  std::string m_file, m_alpha, m_kind = "homogeneous";
  hom->add_option("coloring", m_file, "Coloring file (JSON)")->required();
  hom->add_option("alpha", m_alpha)->required();
  hom->add_option("--kind", m_kind, "homogeneous | transitive | fallow");
  hom->callback([&] {
    command = "homogeneous";
    inputs = {{"coloring", m_file}, {"alpha", m_alpha}, {"kind", m_kind}};
    action = [&] { return cmd_homogeneous(m_file, m_alpha, m_kind); };
  });

  auto* ver = app.add_subcommand("verify", "Run a property suite");
  std::string v_suite;
  ver->add_option("suite", v_suite, "thm1 | splitting | pigeonhole | hardy | blocks | arrows | rt-micro | em-micro")
      ->required();
  ver->callback([&] {
    command = "verify";
    inputs = {{"suite", v_suite}};
    action = [&] { return cmd_verify(g, v_suite); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (g.budget) inputs["budget"] = num(*g.budget);
  const auto t0 = std::chrono::steady_clock::now();
  json report{{"command", command}, {"inputs", inputs}};
  int code = exit_true;
  std::string text;
  try {
    Outcome out = action();
    report["verdict"] = out.verdict;
    if (!out.witness.is_null()) report["witness"] = out.witness;
    report["checks_performed"] = num(out.checks);
    report["budget_exhausted"] = false;
    code = out.exit_code;
    text = out.plain;
  } catch (const Error& e) {
    code = exit_for(e.code());
    report["verdict"] = nullptr;
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) report["error"]["position"] = pe->position();
    report["checks_performed"] = 0;
    report["budget_exhausted"] = e.code() == ErrorCode::BudgetExceeded;
    text = std::string("error: ") + e.what();
  }
  report["duration_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

  if (g.plain) {
    (code == exit_usage || report.contains("error") ? std::cerr : std::cout) << text << '\n';
  } else {
    std::cout << report.dump(2) << '\n';
  }
  return code;
}
