// constsub: command-line front end.
//
// Exit codes: 0 success, 1 parse or input error, 2 precondition failure,
// 3 budget exceeded. Errors are also written to stderr as JSON.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "constsub/error.hpp"
#include "constsub/parse.hpp"
#include "constsub/report.hpp"

namespace {

using constsub::Json;

struct Common {
  std::string path;
  bool        json = false;
  std::size_t max_word = constsub::kDefaultWordBudget;
  std::size_t horizon = 0;
  std::size_t window = constsub::kDefaultWindow;
  std::size_t brute_bound = 0;
  std::size_t orbit_bound = 0;
  std::string x, y, csv;
  std::size_t n = 0;
  std::size_t depth = 2;
  std::size_t tower_horizon = 19683;
};

constsub::ReportOptions options(Common const& c) {
  constsub::ReportOptions o;
  o.max_word = c.max_word;
  o.horizon = c.horizon;
  o.window = c.window;
  if (c.brute_bound) o.brute_bound = c.brute_bound;
  if (c.orbit_bound) o.orbit_bound = c.orbit_bound;
  return o;
}

// A literal is inline JSON or, prefixed with '@', a file holding it.
std::string read_literal(std::string const& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw constsub::ParseError("cannot read point literal file " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scalar_text(Json const& v) {
  if (v.is_string()) return v.get<std::string>().empty() ? "''" : v.get<std::string>();
  return v.dump();
}

// Dotted keys and scalar values, one per line, keys padded to a column.
void flatten(Json const& v, std::string const& key, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto const& [k, x] : v.items()) flatten(x, key.empty() ? k : key + "." + k, out);
  } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](Json const& x) {
               return x.is_structured();
             })) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], key + "[" + std::to_string(i) + "]", out);
  } else if (v.is_array()) {
    std::string s;
    for (auto const& x : v) s += (s.empty() ? "" : " ") + scalar_text(x);
    out.emplace_back(key, s.empty() ? "-" : s);
  } else {
    out.emplace_back(key, v.is_null() ? "-" : scalar_text(v));
  }
}

void print_text(Json const& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (auto const& r : rows) width = std::max(width, r.first.size());
  for (auto const& [k, v] : rows) {
    std::cout << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
}

void print_tower_table(Json const& report) {
  std::cout << "depth " << report["depth"] << ", horizon " << report["horizon"] << ", distal entries "
            << report["distal_entries"] << ", pattern "
            << (report["matches_pattern"].get<bool>() ? "matches" : "does not match") << '\n';
  char const* head[] = {"pair", "level", "expected", "class", "rule", "agrees"};
  std::vector<std::vector<std::string>> rows;
  rows.emplace_back(std::begin(head), std::end(head));
  for (auto const& c : report["cells"]) {
    rows.push_back({"(" + c["first"].dump() + "," + c["second"].dump() + ")", c["level"].dump(),
                    c["expected"].get<std::string>(), c["class"].get<std::string>(),
                    c["rule"].get<std::string>(), c["agrees"].get<bool>() ? "yes" : "no"});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (auto const& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (auto const& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::cout << r[i] << (i + 1 < r.size() ? std::string(width[i] - r[i].size() + 2, ' ') : "");
    }
    std::cout << '\n';
  }
}

void emit(Json const& report, bool json) {
  if (json) {
    std::cout << report.dump(2) << '\n';
  } else if (report["command"] == "tower") {
    print_tower_table(report);
  } else {
    print_text(report);
  }
}

void write_csv(std::string const& path, std::vector<std::size_t> const& profile) {
  std::ofstream out(path);
  if (!out) throw constsub::ParseError("cannot write " + path);
  out << "n,radius\n";
  for (std::size_t n = 0; n < profile.size(); ++n) out << n << ',' << profile[n] << '\n';
}

int fail(std::string const& kind, std::string const& message, int code, std::size_t line = 0,
         std::size_t column = 0) {
  std::cerr << constsub::error_json(kind, message, line, column).dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-length substitution subshifts: finiteness, Li-Yorke pairs, pair classes"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub, bool with_path) {
    if (with_path) sub->add_option("substitution", c.path, "Substitution file")->required();
    sub->add_flag("--json", c.json, "JSON output");
    sub->add_option("--max-word", c.max_word, "Largest word any expansion may build")
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "Full pipeline report");
  add_common(analyze, true);
  analyze->add_option("--brute-bound", c.brute_bound, "Also scan tau^m directly while p^m <= bound");
  analyze->add_option("--orbit-bound", c.orbit_bound, "Period bound for orbit enumeration");

  auto* decide = app.add_subcommand("decide", "Finiteness and Li-Yorke decisions");
  add_common(decide, true);
  decide->add_option("--brute-bound", c.brute_bound, "Also scan tau^m directly while p^m <= bound");

  auto* reduce = app.add_subcommand("reduce", "One-to-one reduction");
  add_common(reduce, true);

  auto* classify = app.add_subcommand("classify", "Classify a pair of points");
  add_common(classify, true);
  classify->add_option("--x", c.x, "Point literal (JSON, or @file)")->required();
  classify->add_option("--y", c.y, "Point literal (JSON, or @file)")->required();
  classify->add_option("--horizon", c.horizon, "Simulation horizon (default p^10, capped)");
  classify->add_option("--window", c.window, "Agreement window W")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Finite-horizon evidence for a pair");
  add_common(simulate, true);
  simulate->add_option("--x", c.x, "Point literal (JSON, or @file)")->required();
  simulate->add_option("--y", c.y, "Point literal (JSON, or @file)")->required();
  simulate->add_option("--horizon", c.horizon, "Simulation horizon (default p^10, capped)");
  simulate->add_option("--window", c.window, "Agreement window W")->capture_default_str();
  simulate->add_option("--csv", c.csv, "Write n,radius samples to this file");

  auto* tower = app.add_subcommand("tower", "Scrambled set verdict matrix of the tower");
  add_common(tower, false);
  tower->add_option("--depth", c.depth, "Number of set elements")->capture_default_str();
  tower->add_option("--horizon", c.tower_horizon, "Simulation horizon")->capture_default_str();
  tower->add_option("--window", c.window, "Agreement window W")->capture_default_str();

  auto* lang = app.add_subcommand("language", "Words of length n");
  add_common(lang, true);
  lang->add_option("n", c.n, "Word length")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    return fail("usage", e.what(), 1);
  }
  try {
    auto const opts = options(c);
    if (tower->parsed()) {
      emit(constsub::tower_report(c.depth, c.tower_horizon, c.window), c.json);
      return 0;
    }
    auto const s = constsub::share(constsub::load_substitution(c.path));
    Json report;
    if (analyze->parsed()) {
      report = constsub::analyze_report(*s, c.path, opts);
    } else if (decide->parsed()) {
      report = constsub::decide_report(*s, c.path, opts);
    } else if (reduce->parsed()) {
      report = constsub::reduce_report(*s, c.path);
    } else if (lang->parsed()) {
      report = constsub::language_report(*s, c.path, c.n, opts);
    } else {
      auto const x = constsub::parse_point_literal(s, read_literal(c.x));
      auto const y = constsub::parse_point_literal(s, read_literal(c.y));
      if (classify->parsed()) {
        report = constsub::classify_report(s, c.path, x, y, opts);
      } else {
        report = constsub::simulate_report(s, c.path, x, y, opts);
        if (!c.csv.empty()) {
          std::size_t const H = report["evidence"]["horizon"].get<std::size_t>();
          write_csv(c.csv, constsub::agreement_profile(x, y, H, c.window, c.max_word));
        }
      }
    }
    emit(report, c.json);
    return 0;
  } catch (constsub::ParseError const& e) {
    return fail("parse", e.what(), 1, e.line(), e.column());
  } catch (constsub::ValidationError const& e) {
    return fail("validation", e.what(), 1);
  } catch (constsub::PreconditionError const& e) {
    return fail("precondition", e.what(), 2);
  } catch (constsub::BudgetError const& e) {
    return fail("budget", e.what(), 3);
  }
}
