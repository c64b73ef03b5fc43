// Command-line front end: evaluate drawings, decompose and check them, verify
// the closed form on canonical drawings, generate inputs, and run searches.
// Exit codes: 0 success, 1 bad input or parameters, 2 broken internal
// invariant (the two evaluation routes disagreeing, an identity check
// failing, or a verification mismatch).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orchard/analysis.hpp"
#include "orchard/drawing.hpp"
#include "orchard/generators.hpp"
#include "orchard/json_io.hpp"
#include "orchard/search.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << text;
}

std::string render(const ordered_json& j) { return j.dump(2) + "\n"; }

orchard::ColoredDrawing load_drawing(const std::string& input_path) {
  return orchard::drawing_from_json(nlohmann::json::parse(read_input(input_path)));
}

ordered_json checks_to_json(const orchard::IdentityReport& report) {
  ordered_json arr = ordered_json::array();
  for (const auto& check : report.checks) {
    ordered_json c{{"name", check.name},
                   {"kind", orchard::to_string(check.kind)},
                   {"status", orchard::to_string(check.status)}};
    c["witnesses"] = check.witnesses;
    arr.push_back(std::move(c));
  }
  return arr;
}

void render_checks_text(std::ostream& os, const orchard::IdentityReport& report) {
  for (const auto& check : report.checks) {
    os << "  [" << orchard::to_string(check.status) << "] "
       << orchard::to_string(check.kind) << " " << check.name << "\n";
    for (const auto& w : check.witnesses) os << "      " << w << "\n";
  }
}

ordered_json type_tables_to_json(const orchard::TypeTables& t) {
  ordered_json out{{"line_class", orchard::to_string(t.line_class)},
                   {"n", t.n},
                   {"cap", t.cap}};
  out["y"] = t.y;
  out["x"] = t.x;
  return out;
}

ordered_json profiles_to_json(const orchard::ProfileTables& p) {
  ordered_json out{{"line_class", orchard::to_string(p.line_class)},
                   {"n", p.n},
                   {"cap", p.cap},
                   {"vertex_total", p.vertex_total}};
  ordered_json entries = ordered_json::array();
  for (const auto& e : p.entries) {
    ordered_json je{{"t", e.t}, {"s", e.s}};
    je["sequence"] = e.sorted_sequence;
    je["vertices"] = e.vertices;
    je["multiplicity"] = e.multiplicity;
    entries.push_back(std::move(je));
  }
  out["entries"] = std::move(entries);
  return out;
}

ordered_json line_to_json(const orchard::LineRecord& r) {
  return ordered_json{{"u", r.u},
                      {"v", r.v},
                      {"line_class", orchard::to_string(r.line_class)},
                      {"black_left", r.black_left},
                      {"white_left", r.white_left},
                      {"black_right", r.black_right},
                      {"white_right", r.white_right},
                      {"type_i", r.type_i},
                      {"type_j", r.type_j},
                      {"separated_bw_pairs", r.separated_bw_pairs}};
}

struct CommonOpts {
  std::string input = "-";
  std::string output = "-";
  bool json = false;
};

int cmd_eval(const CommonOpts& opts) {
  const orchard::ColoredDrawing d = load_drawing(opts.input);
  const std::int64_t direct = orchard::crossing_number(d);
  const std::int64_t quad = orchard::crossing_number_by_quadruples(d);
  const bool agree = direct == quad;
  if (opts.json) {
    write_output(opts.output, render(ordered_json{{"crossing_number", direct},
                                                  {"by_quadruples", quad},
                                                  {"agree", agree}}));
  } else {
    std::ostringstream ss;
    ss << "crossing_number: " << direct << "\n"
       << "by_quadruples: " << quad << "\n"
       << "agree: " << (agree ? "yes" : "no") << "\n";
    write_output(opts.output, ss.str());
  }
  if (!agree) {
    std::cerr << "eval: edge-sum and quadruple evaluations disagree\n";
    return 2;
  }
  return 0;
}

int cmd_decompose(const CommonOpts& opts, bool with_lines, bool with_tables) {
  const orchard::ColoredDrawing d = load_drawing(opts.input);
  const orchard::Decomposition dec = orchard::abc_decomposition(d);
  const orchard::IdentityReport report = orchard::check_identities(d);
  const std::size_t n = d.count(orchard::Color::black);
  const std::array<orchard::LineClass, 3> classes{orchard::LineClass::bw,
                                                  orchard::LineClass::white_white,
                                                  orchard::LineClass::black_black};
  if (opts.json) {
    ordered_json out{{"n", n},
                     {"a", dec.a},
                     {"b", dec.b},
                     {"c", dec.c},
                     {"total", dec.total}};
    out["checks"] = checks_to_json(report);
    out["identities_passed"] = report.identities_passed();
    out["bounds_satisfied"] = report.bounds_satisfied();
    if (with_lines) {
      ordered_json lines = ordered_json::array();
      for (const auto& r : dec.lines) lines.push_back(line_to_json(r));
      out["lines"] = std::move(lines);
    }
    if (with_tables) {
      ordered_json tt = ordered_json::array();
      ordered_json pp = ordered_json::array();
      for (auto cls : classes) {
        tt.push_back(type_tables_to_json(orchard::type_tables(d, cls)));
        pp.push_back(profiles_to_json(orchard::vertex_profiles(d, cls)));
      }
      out["type_tables"] = std::move(tt);
      out["profiles"] = std::move(pp);
    }
    write_output(opts.output, render(out));
  } else {
    std::ostringstream ss;
    ss << "n: " << n << "\n"
       << "a: " << dec.a << "\nb: " << dec.b << "\nc: " << dec.c << "\n"
       << "total: " << dec.total << "\n";
    if (with_lines) {
      ss << "lines:\n";
      for (const auto& r : dec.lines) {
        ss << "  (" << r.u << "," << r.v << ") " << orchard::to_string(r.line_class)
           << " left " << r.black_left << "b/" << r.white_left << "w right "
           << r.black_right << "b/" << r.white_right << " type (" << r.type_i << ","
           << r.type_j << ") separates " << r.separated_bw_pairs << "\n";
      }
    }
    if (with_tables) {
      for (auto cls : classes) {
        const auto t = orchard::type_tables(d, cls);
        ss << "type tables (" << orchard::to_string(cls) << "), cap " << t.cap
           << ":\n  y:";
        for (auto v : t.y) ss << " " << v;
        ss << "\n";
        for (std::size_t i = 0; i < t.x.size(); ++i) {
          ss << "  x[" << i << "]:";
          for (auto v : t.x[i]) ss << " " << v;
          ss << "\n";
        }
        const auto p = orchard::vertex_profiles(d, cls);
        ss << "profiles (" << orchard::to_string(cls) << "), " << p.vertex_total
           << " vertices:\n";
        for (const auto& e : p.entries) {
          ss << "  t=" << e.t << " s=" << e.s << " seq=(";
          for (std::size_t i = 0; i < e.sorted_sequence.size(); ++i) {
            ss << (i ? "," : "") << e.sorted_sequence[i];
          }
          ss << ") vertices=" << e.vertices.size() << " z:";
          for (auto z : e.multiplicity) ss << " " << z;
          ss << "\n";
        }
      }
    }
    ss << "checks:\n";
    render_checks_text(ss, report);
    ss << "identities_passed: " << (report.identities_passed() ? "yes" : "no") << "\n"
       << "bounds_satisfied: " << (report.bounds_satisfied() ? "yes" : "no") << "\n";
    write_output(opts.output, ss.str());
  }
  // A failed identity means the evaluator itself is broken. A violated
  // bound is a legitimate property of the supplied drawing and is already
  // visible in the report, so it does not change the exit code.
  if (!report.identities_passed()) {
    std::cerr << "decompose: identity checks failed\n";
    return 2;
  }
  return 0;
}

int cmd_verify(std::int64_t max_n, const CommonOpts& opts) {
  if (max_n < 1) throw std::invalid_argument("verify: --max-n must be at least 1");
  ordered_json results = ordered_json::array();
  std::ostringstream text;
  text << "n formula value identities match\n";
  bool all_match = true;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const std::int64_t formula = orchard::formula_ocn_knn(n);
    const orchard::ColoredDrawing d =
        orchard::convex_alternating(static_cast<std::size_t>(n));
    const std::int64_t value = orchard::crossing_number(d);
    const bool identities = orchard::check_identities(d).all_passed();
    const bool match = value == formula && identities;
    all_match = all_match && match;
    if (opts.json) {
      results.push_back(ordered_json{{"n", n},
                                     {"formula", formula},
                                     {"value", value},
                                     {"identities_passed", identities},
                                     {"match", match}});
    } else {
      text << n << " " << formula << " " << value << " "
           << (identities ? "pass" : "fail") << " " << (match ? "yes" : "no") << "\n";
    }
  }
  if (opts.json) {
    write_output(opts.output,
                 render(ordered_json{{"results", std::move(results)},
                                     {"all_match", all_match}}));
  } else {
    text << "all_match: " << (all_match ? "yes" : "no") << "\n";
    write_output(opts.output, text.str());
  }
  if (!all_match) {
    std::cerr << "verify: closed form not reproduced\n";
    return 2;
  }
  return 0;
}

struct GenOpts {
  std::string kind = "convex";
  std::int64_t n = 0;
  std::int64_t black = -1;
  std::int64_t white = -1;
  std::int64_t range = -1;
  std::uint64_t seed = 0;
  std::string output = "-";
};

int cmd_gen(const GenOpts& g) {
  if (g.kind == "convex") {
    if (g.n < 1) throw std::invalid_argument("gen: --n >= 1 required for convex drawings");
    write_output(g.output, render(orchard::drawing_to_json(
                               orchard::convex_alternating(static_cast<std::size_t>(g.n)))));
    return 0;
  }
  std::int64_t black = g.black >= 0 ? g.black : g.n;
  std::int64_t white = g.white >= 0 ? g.white : g.n;
  if (black < 0 || white < 0 || black + white < 1) {
    throw std::invalid_argument("gen: give --n, or --black and --white, at least 1 total");
  }
  const std::int64_t range = g.range >= 0 ? g.range : 5 * (black + white);
  const orchard::ColoredDrawing d =
      orchard::random_generic(static_cast<std::size_t>(black),
                              static_cast<std::size_t>(white), range, g.seed);
  write_output(g.output, render(orchard::drawing_to_json(d)));
  return 0;
}

struct SearchOpts {
  std::string family = "knn";
  std::int64_t n = 0;
  std::string objective = "minimize";
  std::string strategy = "anneal";
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;
  std::string grid;
  std::uint64_t enumeration_budget = orchard::ColoredConfigStream::kDefaultBudget;
  double t0 = -1;
  double cooling = 0.995;
  std::int64_t radius = 3;
  std::int64_t coord_max = -1;
  int retries = 32;
  int restarts = 1;
  std::string output = "-";
  bool json = false;
};

orchard::GridSpec parse_grid(const std::string& text) {
  const auto sep = text.find('x');
  if (sep == std::string::npos || sep == 0 || sep + 1 >= text.size()) {
    throw std::invalid_argument("search: --grid expects WIDTHxHEIGHT, e.g. 4x4");
  }
  orchard::GridSpec grid;
  std::size_t used = 0;
  grid.width = std::stoll(text.substr(0, sep), &used);
  if (used != sep) throw std::invalid_argument("search: bad grid width");
  const std::string rest = text.substr(sep + 1);
  grid.height = std::stoll(rest, &used);
  if (used != rest.size()) throw std::invalid_argument("search: bad grid height");
  return grid;
}

int cmd_search(const SearchOpts& s) {
  if (s.n < 1) throw std::invalid_argument("search: --n >= 1 required");
  orchard::SearchTask task;
  if (s.family == "knn") {
    task.family = orchard::GraphFamily::knn(static_cast<std::size_t>(s.n));
  } else if (s.family == "complete") {
    task.family = orchard::GraphFamily::complete(static_cast<std::size_t>(s.n));
  } else {
    throw std::invalid_argument("search: --family must be knn or complete");
  }
  if (s.objective == "minimize" || s.objective == "min") {
    task.objective = orchard::Objective::minimize;
  } else if (s.objective == "maximize" || s.objective == "max") {
    task.objective = orchard::Objective::maximize;
  } else {
    throw std::invalid_argument("search: --objective must be minimize or maximize");
  }
  if (s.strategy == "exhaustive") {
    task.strategy = orchard::Strategy::exhaustive;
  } else if (s.strategy == "anneal") {
    task.strategy = orchard::Strategy::anneal;
  } else {
    throw std::invalid_argument("search: --strategy must be exhaustive or anneal");
  }
  task.seed = s.seed;
  task.budget = s.budget;
  if (task.strategy == orchard::Strategy::exhaustive) {
    if (s.grid.empty()) {
      throw std::invalid_argument("search: exhaustive strategy requires --grid");
    }
    task.grid = parse_grid(s.grid);
  }
  task.enumeration_budget = s.enumeration_budget;
  task.anneal.initial_temperature = s.t0;
  task.anneal.cooling = s.cooling;
  task.anneal.perturbation_radius = s.radius;
  task.anneal.coord_max = s.coord_max;
  task.anneal.proposal_retries = s.retries;
  task.anneal.restarts = s.restarts;
  const orchard::SearchResult result = orchard::search(task);
  if (s.json) {
    ordered_json out{{"family", s.family},
                     {"n", s.n},
                     {"vertices", task.family.vertex_count},
                     {"objective", orchard::to_string(task.objective)},
                     {"strategy", orchard::to_string(task.strategy)},
                     {"seed", task.seed}};
    if (task.strategy == orchard::Strategy::exhaustive) {
      out["grid"] = ordered_json{{"width", task.grid.width}, {"height", task.grid.height}};
      out["enumeration_budget"] = task.enumeration_budget;
    } else {
      out["budget"] = task.budget;
    }
    out["best_value"] = result.best_value;
    out["evaluations"] = result.evaluations;
    out["certificate"] = orchard::to_string(result.certificate);
    ordered_json trace = ordered_json::array();
    for (const auto& tp : result.trace) {
      trace.push_back(ordered_json{{"evaluation", tp.evaluation}, {"value", tp.value}});
    }
    out["trace"] = std::move(trace);
    out["best"] = orchard::drawing_to_json(result.best);
    write_output(s.output, render(out));
  } else {
    std::ostringstream ss;
    ss << "family: " << s.family << " n=" << s.n << "\n"
       << "objective: " << orchard::to_string(task.objective) << "\n"
       << "strategy: " << orchard::to_string(task.strategy) << "\n"
       << "best_value: " << result.best_value << "\n"
       << "evaluations: " << result.evaluations << "\n"
       << "certificate: " << orchard::to_string(result.certificate) << "\n"
       << "trace:\n";
    for (const auto& tp : result.trace) {
      ss << "  evaluation " << tp.evaluation << ": " << tp.value << "\n";
    }
    write_output(s.output, ss.str());
  }
  return 0;
}

int cmd_formula(std::int64_t n, std::int64_t max_n, const CommonOpts& opts) {
  if ((n >= 1) == (max_n >= 1)) {
    throw std::invalid_argument("formula: give exactly one of --n or --max-n");
  }
  const std::int64_t lo = n >= 1 ? n : 1;
  const std::int64_t hi = n >= 1 ? n : max_n;
  ordered_json values = ordered_json::array();
  std::ostringstream text;
  for (std::int64_t k = lo; k <= hi; ++k) {
    const std::int64_t v = orchard::formula_ocn_knn(k);
    if (opts.json) {
      values.push_back(ordered_json{{"n", k}, {"value", v}});
    } else {
      text << "ocn_knn(" << k << ") = " << v << "\n";
    }
  }
  if (opts.json) {
    write_output(opts.output, render(ordered_json{{"values", std::move(values)}}));
  } else {
    write_output(opts.output, text.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orchard crossing numbers of rectilinear colored drawings"};
  app.require_subcommand(1);

  CommonOpts eval_opts;
  auto* eval = app.add_subcommand("eval", "Evaluate a drawing by both routes");
  eval->add_option("--input", eval_opts.input, "Drawing document path, - for stdin");
  eval->add_option("--output", eval_opts.output, "Output path, - for stdout");
  eval->add_flag("--json", eval_opts.json, "Emit JSON");

  CommonOpts dec_opts;
  bool dec_lines = false;
  bool dec_tables = false;
  auto* dec = app.add_subcommand(
      "decompose", "Split the crossing number by line class and check identities");
  dec->add_option("--input", dec_opts.input, "Drawing document path, - for stdin");
  dec->add_option("--output", dec_opts.output, "Output path, - for stdout");
  dec->add_flag("--json", dec_opts.json, "Emit JSON");
  dec->add_flag("--lines", dec_lines, "Include per-line records");
  dec->add_flag("--tables", dec_tables, "Include type and profile tables");

  CommonOpts verify_opts;
  std::int64_t verify_max_n = 0;
  auto* verify = app.add_subcommand(
      "verify", "Reproduce the closed form on convex alternating drawings");
  verify->add_option("--max-n", verify_max_n, "Verify n = 1..max-n")->required();
  verify->add_option("--output", verify_opts.output, "Output path, - for stdout");
  verify->add_flag("--json", verify_opts.json, "Emit JSON");

  GenOpts gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a drawing document");
  gen->add_option("--kind", gen_opts.kind, "convex or random")
      ->check(CLI::IsMember({"convex", "random"}));
  gen->add_option("--n", gen_opts.n, "Side size (n black, n white)");
  gen->add_option("--black", gen_opts.black, "Black point count (random)");
  gen->add_option("--white", gen_opts.white, "White point count (random)");
  gen->add_option("--range", gen_opts.range, "Coordinates drawn from [0, range]");
  gen->add_option("--seed", gen_opts.seed, "Random seed");
  gen->add_option("--output", gen_opts.output, "Output path, - for stdout");

  SearchOpts search_opts;
  auto* search = app.add_subcommand("search", "Search drawings for extreme values");
  search->add_option("--family", search_opts.family, "knn or complete");
  search->add_option("--n", search_opts.n, "Side size (knn) or vertex count")->required();
  search->add_option("--objective", search_opts.objective, "minimize or maximize");
  search->add_option("--strategy", search_opts.strategy, "exhaustive or anneal");
  search->add_option("--seed", search_opts.seed, "Random seed");
  search->add_option("--budget", search_opts.budget, "Annealing step budget");
  search->add_option("--grid", search_opts.grid, "Exhaustive grid, WIDTHxHEIGHT");
  search->add_option("--enumeration-budget", search_opts.enumeration_budget,
                     "Largest enumeration the exhaustive strategy will accept");
  search->add_option("--t0", search_opts.t0, "Initial temperature (default: derived)");
  search->add_option("--cooling", search_opts.cooling, "Cooling factor per step");
  search->add_option("--radius", search_opts.radius, "Perturbation radius");
  search->add_option("--coord-max", search_opts.coord_max,
                     "Coordinate box upper bound (default: derived)");
  search->add_option("--retries", search_opts.retries, "Proposal retries per step");
  search->add_option("--restarts", search_opts.restarts, "Annealing restarts");
  search->add_option("--output", search_opts.output, "Output path, - for stdout");
  search->add_flag("--json", search_opts.json, "Emit JSON");

  CommonOpts formula_opts;
  std::int64_t formula_n = 0;
  std::int64_t formula_max_n = 0;
  auto* formula = app.add_subcommand("formula", "Closed-form K_{n,n} values");
  formula->add_option("--n", formula_n, "Single value");
  formula->add_option("--max-n", formula_max_n, "Table for n = 1..max-n");
  formula->add_option("--output", formula_opts.output, "Output path, - for stdout");
  formula->add_flag("--json", formula_opts.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_opts);
    if (dec->parsed()) return cmd_decompose(dec_opts, dec_lines, dec_tables);
    if (verify->parsed()) return cmd_verify(verify_max_n, verify_opts);
    if (gen->parsed()) return cmd_gen(gen_opts);
    if (search->parsed()) return cmd_search(search_opts);
    if (formula->parsed()) return cmd_formula(formula_n, formula_max_n, formula_opts);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
