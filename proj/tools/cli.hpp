#pragma once

// Command-line front end. `run` is separate from main so tests can drive it
// with their own streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rivercross/report.hpp"
#include "rivercross/rivercross.hpp"

namespace rivercross::cli {

enum ExitCode : int { kSolvable = 0, kUsage = 1, kUnsolvable = 2 };

struct Common {
  std::string format = "text";
  bool deterministic = false;
};

struct Emitter {
  std::ostream& out;
  const Common& common;
  std::string command;
  nlohmann::json parameters;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  bool json() const { return common.format == "json"; }

  void emit_json(nlohmann::json payload) const {
    nlohmann::json meta = {{"version", kToolVersion}, {"parameters", parameters}};
    if (!common.deterministic) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      meta["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    nlohmann::json envelope = {{"command", command}, {"payload", std::move(payload)}, {"metadata", meta}};
    out << envelope.dump(2) << "\n";
  }
};

inline std::string format_path(const SolutionPath& path) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < path.states.size(); ++i) os << (i ? ", " : "") << path.states[i];
  os << "]";
  return os.str();
}

inline McParams checked(const McParams& p) {
  require_valid(p);
  return p;
}

inline int cmd_solve(const McParams& p, bool all, Emitter& em) {
  const auto sols = solve_mc(checked(p));
  SolveResult result{p, std::nullopt, 0, {}};
  if (sols) {
    result.crossings = sols->crossings;
    result.count = sols->solutions.size();
    if (all) {
      result.solutions = sols->solutions;
    } else {
      result.solutions.push_back(sols->solutions.front());
    }
  }
  if (em.json()) {
    em.emit_json(result);
  } else if (!sols) {
    em.out << "UNSOLVABLE: no sequence of crossings solves " << p << "\n";
  } else {
    em.out << "Shortest solution: " << *result.crossings << (*result.crossings == 1 ? " crossing\n" : " crossings\n");
    em.out << "Number of shortest solutions: " << result.count << "\n";
    for (std::size_t i = 0; i < result.solutions.size(); ++i)
      em.out << "#" << (i + 1) << " " << format_path(result.solutions[i]) << "\n";
  }
  return sols ? kSolvable : kUnsolvable;
}

inline int cmd_spell(const McParams& p, std::size_t index, Emitter& em) {
  const auto sols = solve_mc(checked(p));
  if (!sols) {
    if (em.json()) em.emit_json({{"params", p}, {"solvable", false}});
    else em.out << "UNSOLVABLE: no sequence of crossings solves " << p << "\n";
    return kUnsolvable;
  }
  if (index >= sols->solutions.size())
    throw std::invalid_argument("solution index " + std::to_string(index) + " out of range (" +
                                std::to_string(sols->solutions.size()) + " solutions)");
  const auto& sol = sols->solutions[index];
  const std::string text = spell_out(p, sol);
  if (em.json()) {
    em.emit_json({{"params", p}, {"index", index}, {"solution", sol}, {"transcript", text}});
  } else {
    em.out << text;
  }
  return kSolvable;
}

inline CountResult count_with(const McParams& p, const std::string& method) {
  CountResult r{p, method, std::nullopt, 0};
  if (method == "graph") {
    const McGraph g = mc_graph(p);
    if (auto paths = all_shortest_paths(g.graph, g.source(), g.sink())) {
      r.crossings = paths->length;
      r.count = paths->paths.size();
    }
  } else if (method == "matrix") {
    const McGraph g = mc_graph(p);
    if (auto w = count_shortest_walks(g.graph, g.source(), g.sink())) {
      r.crossings = w->length;
      r.count = w->count;
    }
  } else {
    const auto outcome = solve_by_transfer(mc_species(p));
    if (const auto* s = std::get_if<TransferSolvable>(&outcome)) {
      r.crossings = s->crossings;
      r.count = s->count;
    }
  }
  return r;
}

inline int cmd_count(const McParams& p, const std::string& method, Emitter& em) {
  const CountResult r = count_with(checked(p), method);
  if (em.json()) {
    em.emit_json(r);
  } else if (!r.crossings) {
    em.out << "UNSOLVABLE\n";
  } else {
    em.out << "crossings: " << *r.crossings << "\n";
    em.out << "count: " << r.count << "\n";
  }
  return r.crossings ? kSolvable : kUnsolvable;
}

inline int cmd_trace(const McParams& p, std::optional<std::size_t> steps, Emitter& em) {
  const SpeciesPuzzle sp = mc_species(checked(p));
  nlohmann::json stages = nlohmann::json::array();
  std::ostringstream text;
  auto record = [&](const std::string& name, std::size_t i, const SparsePolynomial& poly) {
    text << name << "_" << i << " = " << poly.to_string() << "\n";
    stages.push_back({{"name", name}, {"i", i}, {"polynomial", poly.to_string()}});
  };

  SparsePolynomial f = initial_polynomial(sp);
  record("f", 0, f);
  nlohmann::json outcome;
  int code = kSolvable;
  if (steps) {
    for (const auto& stage : transfer_trace(sp, *steps)) {
      if (stage.index == 0) continue;
      record("g", stage.index, *stage.g);
      record("f", stage.index, stage.f);
    }
    outcome = {{"status", "partial"}, {"steps", *steps}};
  } else {
    const std::size_t bound = transfer_state_bound(sp);
    outcome = {{"status", "unsolvable"}, {"states_bound", bound}, {"iterations_run", bound + 1}};
    code = kUnsolvable;
    for (std::size_t i = 1; i <= bound + 1; ++i) {
      SparsePolynomial g = transfer_step(f, sp, Direction::Forward);
      record("g", i, g);
      if (BigInt constant = g.constant_term(); constant != 0) {
        text << "g_" << i << " has constant term " << constant << ": " << (2 * i - 1)
             << " crossings, " << constant << " solutions\n";
        outcome = {{"status", "solvable"}, {"i", i}, {"crossings", 2 * i - 1}, {"count", count_to_json(constant)}};
        code = kSolvable;
        break;
      }
      if (g.is_zero() || i == bound + 1) {
        text << "UNSOLVABLE: no g_i has a non-zero constant term for i <= " << i << " (" << bound
             << " legal states)\n";
        outcome["iterations_run"] = i;
        break;
      }
      f = transfer_step(g, sp, Direction::Back);
      record("f", i, f);
    }
  }
  if (em.json()) em.emit_json({{"params", p}, {"stages", stages}, {"outcome", outcome}});
  else em.out << text.str();
  return code;
}

inline int cmd_sequence(const FamilySpec& fs, Emitter& em) {
  const auto terms = family_counts(fs);
  if (em.json()) {
    em.emit_json({{"family", fs}, {"terms", terms}});
    return kSolvable;
  }
  em.out << "[";
  std::vector<int> unsolvable;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    em.out << (k ? ", " : "") << terms[k].count;
    if (!terms[k].solvable()) unsolvable.push_back(terms[k].index);
  }
  em.out << "]\n";
  if (!unsolvable.empty()) {
    em.out << "unsolvable for i =";
    for (int i : unsolvable) em.out << " " << i;
    em.out << "\n";
  }
  return kSolvable;
}

inline int cmd_conjecture(const FamilySpec& fs, std::size_t max_order, Emitter& em) {
  const auto report = conjecture_report(fs, max_order);
  if (em.json()) em.emit_json(to_json_value(report));
  else em.out << report.text();
  return kSolvable;
}

inline int cmd_strategy(const McParams& p, const std::string& name, Emitter& em) {
  const auto applicable = applicability(checked(p));
  std::vector<std::string> names;
  for (auto s : applicable) names.emplace_back(to_string(s));
  if (name.empty()) {
    if (em.json()) {
      em.emit_json({{"params", p}, {"applicable", names}});
    } else {
      em.out << "Applicable strategies:";
      if (names.empty()) em.out << " none";
      for (const auto& n : names) em.out << " " << n;
      em.out << "\n";
    }
    return kSolvable;
  }
  const auto which = strategy_from_string(name);
  if (!which) throw std::invalid_argument("unknown strategy '" + name + "'");
  const auto script = build_strategy(p, *which);
  if (em.json()) {
    nlohmann::json payload = {{"params", p}, {"applicable", names}, {"strategy", name}};
    payload["moves"] = script ? nlohmann::json(*script) : nlohmann::json(nullptr);
    em.emit_json(payload);
  } else if (!script) {
    em.out << "NotApplicable: the condition for " << name << " does not hold for " << p << "\n";
  } else {
    for (const auto& mv : *script) em.out << mv << "\n";
    em.out << "moves: " << script->size() << "\n";
  }
  return script ? kSolvable : kUnsolvable;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve, count and analyse missionaries-and-cannibals river crossing puzzles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_flag("--deterministic", common.deterministic, "Omit timing from JSON metadata");
  };

  McParams p;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("M", p.missionaries, "Missionaries")->required();
    sub->add_option("C", p.cannibals, "Cannibals")->required();
    sub->add_option("B", p.boat_capacity, "Boat capacity")->required();
    sub->add_option("d", p.margin, "Safety margin")->required();
  };

  FamilySpec fs;
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("r", fs.surplus, "Missionary surplus (term i has i+r missionaries, i cannibals)")->required();
    sub->add_option("B", fs.boat_capacity, "Boat capacity")->required();
    sub->add_option("d", fs.margin, "Safety margin")->required();
    sub->add_option("K", fs.terms, "Number of terms")->required();
    sub->add_option("--first", fs.first, "Index of the first term")->capture_default_str();
  };

  bool all = false;
  std::size_t index = 0;
  std::string method = "transfer";
  std::optional<std::size_t> steps;
  std::size_t max_order = 4;
  std::string strategy;

  auto* solve = app.add_subcommand("solve", "Shortest solutions by graph search");
  add_params(solve);
  solve->add_flag("--all", all, "Print every shortest solution");
  add_common(solve);

  auto* spell = app.add_subcommand("spell", "Verbose transcript of one shortest solution");
  add_params(spell);
  spell->add_option("--index", index, "Solution index in lexicographic order")->capture_default_str();
  add_common(spell);

  auto* count = app.add_subcommand("count", "Shortest length and number of shortest solutions");
  add_params(count);
  count->add_option("--method", method, "Counting method")
      ->check(CLI::IsMember({"graph", "matrix", "transfer"}))
      ->capture_default_str();
  add_common(count);

  auto* trace = app.add_subcommand("trace", "Polynomials of the transfer iteration");
  add_params(trace);
  trace->add_option("--steps", steps, "Number of (g_i, f_i) stages; default runs until decided");
  add_common(trace);

  auto* sequence = app.add_subcommand("sequence", "Solution counts along a puzzle family");
  add_family(sequence);
  add_common(sequence);

  auto* conjecture = app.add_subcommand("conjecture", "Fit a recurrence and generating function to a family");
  add_family(conjecture);
  conjecture->add_option("--max-order", max_order, "Largest recurrence order to try")->capture_default_str();
  add_common(conjecture);

  auto* strat = app.add_subcommand("strategy", "Applicable strategies or one strategy's move script");
  add_params(strat);
  strat->add_option("--name", strategy, "Strategy to build");
  add_common(strat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    Emitter em{out, common, sub->get_name(), nullptr};
    if (sub == solve) {
      em.parameters = {{"params", p}, {"all", all}};
      return cmd_solve(p, all, em);
    }
    if (sub == spell) {
      em.parameters = {{"params", p}, {"index", index}};
      return cmd_spell(p, index, em);
    }
    if (sub == count) {
      em.parameters = {{"params", p}, {"method", method}};
      return cmd_count(p, method, em);
    }
    if (sub == trace) {
      em.parameters = {{"params", p}, {"steps", steps ? nlohmann::json(*steps) : nlohmann::json(nullptr)}};
      return cmd_trace(p, steps, em);
    }
    if (sub == sequence) {
      em.parameters = {{"family", fs}};
      return cmd_sequence(fs, em);
    }
    if (sub == conjecture) {
      em.parameters = {{"family", fs}, {"max_order", max_order}};
      return cmd_conjecture(fs, max_order, em);
    }
    em.parameters = {{"params", p}, {"name", strategy}};
    return cmd_strategy(p, strategy, em);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace rivercross::cli
