#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ikg/ikg.hpp"

namespace {

using nlohmann::json;

struct Common {
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t seed = 42;
};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("KNOT_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw CLI::ValidationError("KNOT_SEED", "not an unsigned integer: " + std::string(s));
    }
  }
  return 42;
}

ikg::MultiGraph load_graph(const std::string& source) {
  if (ikg::is_graph_fixture(source)) return ikg::graph_fixture(source);
  std::ifstream in(source);
  if (!in) throw std::runtime_error("cannot open graph file '" + source + "'");
  return ikg::parse_edge_list(in);
}

json header(const std::string& command, const Common& c) {
  return {{"tool", "ikg"}, {"version", ikg::kVersion}, {"command", command}, {"seed", c.seed}};
}

json report_json(const ikg::Report& r) {
  return {{"id", r.id}, {"pass", r.pass}, {"summary", r.summary}, {"evidence", r.evidence}};
}

void print_report(const ikg::Report& r, const Common& c, json head) {
  if (c.format == "json") {
    head["result"] = report_json(r);
    std::cout << head.dump(2) << "\n";
    return;
  }
  std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.summary << "\n";
  if (r.evidence.contains("table")) {
    for (const auto& row : r.evidence["table"])
      std::cout << "  " << row["name"].get<std::string>() << "  vertices " << row["vertices"] << "  gamma3_empty "
                << row["gamma3_empty"] << "  dy_only " << row["dy_only_reachable"] << "\n";
  }
  if (r.evidence.contains("per_trial")) {
    for (const auto& row : r.evidence["per_trial"])
      if (!row["ok"].get<bool>()) std::cout << "  trial " << row["trial"] << " failed: " << row["witness"].get<std::string>() << "\n";
  }
  std::cout << "  seed " << c.seed << ", ikg " << ikg::kVersion << "\n";
}

// Names for closures of K6 and K7 come from the full families.
void name_records(ikg::Closure& c, const std::string& seed_name, unsigned jobs) {
  std::optional<ikg::Closure> ref;
  if (seed_name == "K7") ref = ikg::heawood_family(jobs);
  if (seed_name == "K6") ref = ikg::petersen_family(jobs);
  if (!ref) {
    ikg::assign_index_names(c);
    return;
  }
  for (auto& r : c.records)
    if (auto i = ref->find(r.certificate)) {
      r.name = ref->records[*i].name;
      r.heuristic_name = ref->records[*i].heuristic_name;
    }
}

int cmd_families(const std::string& seed_name, const std::string& moves, const std::string& out, const std::string& dot,
                 const Common& c) {
  auto seed = load_graph(seed_name);
  auto family = ikg::closure(seed, ikg::MoveSet::parse(moves), ikg::ClosureOptions{false, c.jobs});
  ikg::annotate_closure(family, seed);
  name_records(family, seed_name, c.jobs);
  if (!out.empty()) ikg::write_family(family, out);
  if (!dot.empty()) {
    std::ofstream f(dot);
    if (!f) throw std::runtime_error("cannot write " + dot);
    f << ikg::provenance_dot(family);
  }
  if (c.format == "json") {
    json j = header("families", c);
    j["input_certificate"] = ikg::canonical_form(seed).hex();
    j["moves"] = moves;
    j["classes"] = family.records.size();
    j["manifest"] = ikg::manifest_json(family);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << family.records.size() << " classes\n";
    for (const auto& r : family.records)
      std::cout << "  " << r.name.value_or("?") << "  vertices " << r.vertex_count << "  edges " << r.edge_count
                << (r.gamma3_empty ? "" : "  gamma3 non-empty") << "\n";
    if (!out.empty()) std::cout << "wrote " << out << "/manifest.json\n";
  }
  return 0;
}

int cmd_verify(const std::string& claim, std::size_t trials, const Common& c) {
  ikg::RunOptions opt{trials, c.seed, c.jobs, false};
  std::vector<std::string> ids;
  if (claim == "all") ids = ikg::claim_ids();
  else ids = {claim};
  bool all = true;
  for (const auto& id : ids) {
    auto r = ikg::run_claim(id, opt);
    all = all && r.pass;
    json head = header("verify", c);
    json inputs;
    for (const auto& f : {"N9", "N'10"}) inputs[f] = ikg::canonical_form(ikg::graph_fixture(f)).hex();
    head["input_certificates"] = inputs;
    print_report(r, c, head);
  }
  return all ? 0 : 1;
}

int cmd_spatial(const std::string& graph, const std::string& check, std::size_t trials, bool enumerate,
                const std::string& diagram_out, const Common& c) {
  auto g = load_graph(graph);
  ikg::RunOptions opt{trials, c.seed, c.jobs, enumerate};
  auto r = ikg::run_spatial(check, g, opt);
  if (!diagram_out.empty()) {
    std::ofstream f(diagram_out);
    if (!f) throw std::runtime_error("cannot write " + diagram_out);
    auto d = check == "d4-lemma" && ikg::is_isomorphic(g, ikg::d4_graph()) ? ikg::d4_lemma_diagram()
                                                                            : ikg::build_convex_diagram(g);
    f << ikg::to_json(d).dump(2) << "\n";
  }
  json head = header("spatial", c);
  head["graph"] = graph;
  head["input_certificate"] = ikg::canonical_form(g).hex();
  print_report(r, c, head);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exchange families, minors and sampled spatial invariants of small graphs"};
  app.require_subcommand(1);
  Common c;
  try {
    c.seed = default_seed();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Random seed (default: $KNOT_SEED or 42)");

  std::string seed_name = "K7", moves = "dy,yd", out, dot;
  auto* fam = app.add_subcommand("families", "Exchange closure of a seed graph");
  fam->add_option("--seed-graph,--from", seed_name, "K6, K7, K3311 or an edge-list file");
  fam->add_option("--moves", moves, "Comma-separated subset of dy,yd");
  fam->add_option("--out", out, "Directory for manifest.json and edge lists");
  fam->add_option("--dot", dot, "Write the ΔY provenance graph in DOT format");

  std::string claim;
  std::size_t trials = 0;
  auto* ver = app.add_subcommand("verify", "Check one claim, or all");
  ver->add_option("claim", claim, "Claim id or 'all'")->required();
  ver->add_option("--trials", trials, "Trials for sampled claims (0 = default)");

  std::string graph, check, diagram_out;
  bool enumerate = false;
  auto* sp = app.add_subcommand("spatial", "Sampled or exhaustive spatial-embedding checks");
  sp->add_option("--graph", graph, "Fixture name or edge-list file")->required();
  sp->add_option("--check", check, "Check to run")->required()->check(CLI::IsMember(ikg::spatial_checks()));
  sp->add_option("--trials", trials, "Number of trials (0 = default)");
  sp->add_flag("--enumerate", enumerate, "All over/under assignments (D4 only)");
  sp->add_option("--diagram", diagram_out, "Write the projection as JSON");

  // `families --seed K7` reads naturally; route a subcommand-level --seed to the seed graph.
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "families") {
      for (int j = i + 1; j < argc; ++j)
        if (std::string(argv[j]) == "--seed") argv[j] = const_cast<char*>("--from");
      break;
    }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*fam) return cmd_families(seed_name, moves, out, dot, c);
    if (*ver) {
      const auto& ids = ikg::claim_ids();
      if (claim != "all" && std::find(ids.begin(), ids.end(), claim) == ids.end()) {
        std::cerr << "error: unknown claim '" << claim << "'; known:";
        for (const auto& id : ids) std::cerr << " " << id;
        std::cerr << "\n";
        return 2;
      }
      return cmd_verify(claim, trials, c);
    }
    if (*sp) return cmd_spatial(graph, check, trials, enumerate, diagram_out, c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
