// graceful-lab: command-line front end for the graceful labeling library.
//
// Every command prints JSON (or edge lists / DOT where noted) to stdout.
// Exit codes: 0 success, 1 expectation failed or hunt found a failure,
// 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graceful/graceful.hpp"

namespace {

using namespace graceful;

constexpr int kExitExpectation = 1;
constexpr int kExitUsage = 2;

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return read_stream(in);
}

/// "-" reads stdin; an existing file wins over a fixture name.
Tree load_tree(const std::string& source) {
  if (source == "-") return parse_tree(read_stream(std::cin));
  if (std::filesystem::is_regular_file(source)) return parse_tree(read_file(source));
  if (auto t = fixtures::by_name(source)) return *t;
  throw Error("no tree file or fixture named '" + source + "'");
}

Labeling load_labeling(const std::string& source) {
  if (!source.empty() && (source.front() == '[' || source.front() == '{')) return parse_labeling(source);
  return parse_labeling(read_file(source));
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct FilterFlags {
  std::optional<int> diameter;
  std::optional<int> min_diameter;
  std::optional<int> max_diameter;
  std::optional<int> max_k;
  std::optional<int> centers;
  std::optional<std::string> center_degree;

  void attach(CLI::App* cmd) {
    cmd->add_option("--diameter", diameter, "exact diameter");
    cmd->add_option("--min-diameter", min_diameter);
    cmd->add_option("--max-diameter", max_diameter);
    cmd->add_option("--max-k", max_k, "k-distance ceiling (1 caterpillar, 2 lobster)");
    cmd->add_option("--centers", centers)->check(CLI::IsMember({1, 2}));
    cmd->add_option("--center-degree", center_degree)->check(CLI::IsMember({"even", "odd"}));
  }

  FamilyFilter build() const {
    FamilyFilter f;
    f.min_diameter = diameter ? diameter : min_diameter;
    f.max_diameter = diameter ? diameter : max_diameter;
    f.max_k_distance = max_k;
    f.center_count = centers;
    if (center_degree) f.center_degree = *center_degree == "even" ? Parity::even : Parity::odd;
    return f;
  }
};

std::pair<Vertex, Label> parse_fix(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw Error("--fix expects v=l, got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, eq)), std::stoi(text.substr(eq + 1))};
  } catch (const std::exception&) {
    throw Error("--fix expects integers v=l, got '" + text + "'");
  }
}

int check_expect(const std::optional<std::string>& expect, bool sat) {
  if (!expect) return 0;
  return (*expect == "sat") == sat ? 0 : kExitExpectation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graceful and alpha-labeling search for trees"};
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for the search engine")
      ->envname("GRACEFUL_LAB_THREADS")
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "check a labeling against a tree");
  std::string verify_tree, verify_labeling;
  verify->add_option("tree", verify_tree, "edge-list file, '-' for stdin, or fixture name")->required();
  verify->add_option("labeling", verify_labeling, "JSON array, {\"labels\": [...]}, or a file")->required();

  // search
  auto* search = app.add_subcommand("search", "constrained exhaustive search");
  std::string search_tree = "-";
  bool alpha = false;
  bool use_oracle = false;
  std::vector<std::string> fixes;
  std::optional<int> max_on, critical_on, zero_on;
  std::string mode = "first";
  std::optional<std::string> search_expect;
  search->add_option("tree", search_tree, "edge-list file, '-' for stdin, or fixture name");
  search->add_flag("--alpha", alpha, "require an alpha-labeling");
  search->add_option("--fix", fixes, "pin vertex v to label l (v=l)");
  search->add_option("--max-on", max_on);
  search->add_option("--critical-on", critical_on, "vertex carrying the critical number (implies --alpha)");
  search->add_option("--zero-on", zero_on);
  search->add_option("--mode", mode)->check(CLI::IsMember({"first", "all", "count"}));
  search->add_flag("--oracle", use_oracle, "use the brute-force permutation oracle (n <= 9)");
  search->add_option("--expect", search_expect)->check(CLI::IsMember({"sat", "unsat"}));

  // probe
  auto* probe = app.add_subcommand("probe", "run one of the conjecture probes on a tree");
  std::string probe_id, probe_tree = "-";
  std::optional<std::string> probe_expect;
  probe->add_option("probe", probe_id, "q1 | q2 | q3 | zero")->required();
  probe->add_option("tree", probe_tree, "edge-list file, '-' for stdin, or fixture name");
  probe->add_option("--expect", probe_expect, "sat: some case SAT; unsat: applicable and all cases UNSAT")
      ->check(CLI::IsMember({"sat", "unsat"}));

  // hunt
  auto* hunt_cmd = app.add_subcommand("hunt", "run a probe over every tree class in a family");
  int hunt_n_max = 0;
  std::string hunt_probe;
  FilterFlags hunt_filters;
  hunt_cmd->add_option("--n-max", hunt_n_max)->required();
  hunt_cmd->add_option("--probe", hunt_probe)->required();
  hunt_filters.attach(hunt_cmd);

  // gen
  auto* gen = app.add_subcommand("gen", "list one tree per isomorphism class");
  int gen_n = 0;
  FilterFlags gen_filters;
  gen->add_option("--n", gen_n)->required();
  gen_filters.attach(gen);

  // fixtures
  auto* fixture_cmd = app.add_subcommand("fixtures", "print a built-in tree as an edge list");
  std::string fixture_name;
  fixture_cmd->add_option("name", fixture_name)->required()->check(CLI::IsMember({"T", "S", "P6"}));

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "structural profile of a tree");
  std::string profile_tree = "-";
  profile_cmd->add_option("tree", profile_tree);

  // dot
  auto* dot = app.add_subcommand("dot", "Graphviz rendering of a tree");
  std::string dot_tree = "-";
  std::optional<std::string> dot_labeling;
  dot->add_option("tree", dot_tree);
  dot->add_option("--labeling", dot_labeling);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const SearchOptions base_options{SearchMode::first, threads};

  try {
    if (*verify) {
      const Tree tree = load_tree(verify_tree);
      print(weight_report(tree, load_labeling(verify_labeling)));
      return 0;
    }

    if (*search) {
      const Tree tree = load_tree(search_tree);
      ConstraintSet cs;
      cs.require_alpha = alpha;
      for (const auto& f : fixes) {
        auto [v, l] = parse_fix(f);
        if (!cs.fixed.emplace(v, l).second) throw ConstraintError("vertex " + std::to_string(v) + " fixed twice");
      }
      if (max_on) cs.max_on = *max_on;
      if (critical_on) cs.critical_on = *critical_on;
      if (zero_on) cs.zero_on = *zero_on;
      SearchOptions options = base_options;
      options.mode = parse_search_mode(mode);
      const auto cert = use_oracle ? brute_force_oracle(tree, cs) : search_graceful(tree, cs, options);
      print(to_json(cert));
      return check_expect(search_expect, cert.sat());
    }

    if (*probe) {
      const auto kind = parse_probe_kind(probe_id);
      const auto verdict = run_probe(kind, load_tree(probe_tree), base_options);
      print(to_json(verdict));
      if (!probe_expect) return 0;
      const bool ok = *probe_expect == "sat" ? verdict.any_sat() : verdict.failure();
      return ok ? 0 : kExitExpectation;
    }

    if (*hunt_cmd) {
      const auto report = hunt(hunt_n_max, hunt_filters.build(), parse_probe_kind(hunt_probe), base_options);
      print(to_json(report));
      return report.failures().empty() ? 0 : kExitExpectation;
    }

    if (*gen) {
      const auto filter = gen_filters.build();
      for (const Tree& t : generate_trees(gen_n))
        if (filter.accepts(t)) std::cout << to_edge_list(t, true) << '\n';
      return 0;
    }

    if (*fixture_cmd) {
      std::cout << to_edge_list(*fixtures::by_name(fixture_name));
      return 0;
    }

    if (*profile_cmd) {
      const Tree tree = load_tree(profile_tree);
      const auto p = profile(tree);
      print(Json{{"tree", to_json(tree)},
                 {"code", canonical_code(tree)},
                 {"diameter", p.diameter},
                 {"centers", p.centers},
                 {"almost_central", p.almost_central},
                 {"k_distance", p.k_distance},
                 {"longest_paths", p.longest_paths},
                 {"paths_truncated", p.paths_truncated},
                 {"bipartition", {p.bipartition.first, p.bipartition.second}}});
      return 0;
    }

    if (*dot) {
      const Tree tree = load_tree(dot_tree);
      if (dot_labeling) {
        const Labeling l = load_labeling(*dot_labeling);
        std::cout << export_dot(tree, &l);
      } else {
        std::cout << export_dot(tree);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
