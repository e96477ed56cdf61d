// metricdim: generate, measure, verify and audit the regular bipartite
// graph families handled by the library.
//
// Exit codes: 0 success / agreement, 1 semantic negative (not resolving,
// table disagreement), 2 usage or input error, 3 I/O error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metricdim/metricdim.hpp"
#include "metricdim/serialize.hpp"

namespace md = metricdim;
using nlohmann::json;

namespace {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::uint64_t search_budget() {
  if (const char* env = std::getenv("METRICDIM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    md::fail(md::errc::bad_format, "METRICDIM_BUDGET must be a positive integer");
  }
  return md::kDefaultSearchBudget;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw io_error("write to " + path + " failed");
}

/// Graph plus the family metadata needed for x/y landmark notation and
/// gap audits; file inputs carry no cycle layouts.
struct LoadedGraph {
  md::Graph graph;
  std::optional<md::FamilySpec> spec;
  std::vector<md::CycleLayout> cycles;
};

LoadedGraph load_from_spec(const std::string& spec_text) {
  md::FamilySpec spec = md::parse_family_spec(spec_text);
  md::FamilyInstance inst = md::gen_family(spec);
  return {std::move(inst.graph), std::move(spec), std::move(inst.cycles)};
}

LoadedGraph load_from_file(const std::string& path) {
  const std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) md::fail(md::errc::bad_format, path + " is empty");
  if (text[first] == '{') return {md::graph_from_json(json::parse(text)), std::nullopt, {}};
  return {md::decode_graph6(text), std::nullopt, {}};
}

LoadedGraph load_input(const std::string& spec_text, const std::string& in_path) {
  if (!spec_text.empty() && !in_path.empty())
    md::fail(md::errc::bad_format, "give either a family spec or --in, not both");
  if (!spec_text.empty()) return load_from_spec(spec_text);
  if (!in_path.empty()) return load_from_file(in_path);
  md::fail(md::errc::bad_format, "an input is required: a family spec or --in <file>");
}

/// Landmark lists accept raw ids plus x/y notation ("x1,y2"), resolved
/// through the bipartition: x_i is the i-th smallest vertex of side one.
std::vector<int> parse_landmarks(const std::string& text, const md::Graph& g) {
  std::vector<int> side1, side2;
  if (g.has_parts()) {
    side1 = g.side_vertices(md::Side::one);
    side2 = g.side_vertices(md::Side::two);
  }
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) md::fail(md::errc::bad_landmark, "empty landmark token");
    try {
      if (token[0] == 'x' || token[0] == 'y') {
        if (!g.has_parts())
          md::fail(md::errc::bad_landmark, "x/y notation needs a bipartite input");
        const auto& side = token[0] == 'x' ? side1 : side2;
        const int idx = std::stoi(token.substr(1));
        if (idx < 1 || idx > static_cast<int>(side.size()))
          md::fail(md::errc::bad_landmark, "no vertex " + token);
        out.push_back(side[idx - 1]);
      } else {
        const int v = std::stoi(token);
        if (v < 0 || v >= g.num_vertices())
          md::fail(md::errc::bad_landmark, "vertex id " + token + " out of range");
        out.push_back(v);
      }
    } catch (const std::invalid_argument&) {
      md::fail(md::errc::bad_landmark, "cannot parse landmark '" + token + "'");
    } catch (const std::out_of_range&) {
      md::fail(md::errc::bad_landmark, "cannot parse landmark '" + token + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string xy_notation(const md::Graph& g, const std::vector<int>& ids) {
  if (!g.has_parts()) return {};
  std::vector<int> side1 = g.side_vertices(md::Side::one);
  std::vector<int> side2 = g.side_vertices(md::Side::two);
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out.push_back(',');
    const int v = ids[i];
    if (g.side(v) == md::Side::one) {
      auto it = std::lower_bound(side1.begin(), side1.end(), v);
      out += "x" + std::to_string(it - side1.begin() + 1);
    } else {
      auto it = std::lower_bound(side2.begin(), side2.end(), v);
      out += "y" + std::to_string(it - side2.begin() + 1);
    }
  }
  return out;
}

json make_report(const std::string& command, const LoadedGraph& input,
                 const std::string& in_path) {
  json j;
  j["command"] = command;
  if (input.spec)
    j["input"] = md::format_family_spec(*input.spec);
  else
    j["input"] = in_path;
  j["version"] = md::kVersion;
  return j;
}

void print_report(json& j, const Timer& timer) {
  j["timings_ms"] = {{"total", timer.ms()}};
  std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_gen(const std::string& spec_text, const std::string& format, const std::string& out_path) {
  md::FamilySpec spec = md::parse_family_spec(spec_text);
  md::FamilyInstance inst = md::gen_family(spec);

  std::string payload;
  if (format == "graph6") {
    payload = md::encode_graph6(inst.graph) + "\n";
  } else {
    json j = md::graph_to_json(inst.graph);
    if (!inst.cycles.empty()) {
      auto cycles = json::array();
      for (const auto& c : inst.cycles) cycles.push_back(c.order);
      j["cycles"] = std::move(cycles);
    }
    if (!inst.removed_matching.empty()) {
      auto matching = json::array();
      for (auto [x, y] : inst.removed_matching) matching.push_back(json::array({x, y}));
      j["removed_matching"] = std::move(matching);
    }
    payload = j.dump(2) + "\n";
  }

  if (out_path.empty()) {
    std::cout << payload;
  } else {
    write_file(out_path, payload);
    if (format == "graph6" && !inst.cycles.empty()) {
      json side;
      auto cycles = json::array();
      for (const auto& c : inst.cycles) cycles.push_back(c.order);
      side["cycles"] = std::move(cycles);
      write_file(out_path + ".cycles.json", side.dump(2) + "\n");
    }
  }
  return 0;
}

int cmd_dim(const std::string& spec_text, const std::string& in_path, bool exact, bool greedy,
            bool formula, bool force) {
  Timer timer;
  if (exact + greedy + formula != 1)
    md::fail(md::errc::bad_format, "pick exactly one of --exact, --greedy, --formula");

  if (formula) {
    if (spec_text.empty())
      md::fail(md::errc::bad_format, "FormulaNeedsFamilySpec: --formula works on family specs only");
    md::FamilySpec spec = md::parse_family_spec(spec_text);
    json result;
    if (auto* c = std::get_if<md::CrownSpec>(&spec)) {
      result["beta"] = md::crown_beta(c->n);
      result["case"] = "crown";
    } else if (auto* h = std::get_if<md::HamCompSpec>(&spec)) {
      result["beta"] = md::hamcomp_beta(h->m);
      result["case"] = h->m == 4 ? "even-cycle" : "cycle-complement";
    } else {
      result = md::to_json(md::multicycle_beta(std::get<md::MultiCycleSpec>(spec).parts));
    }
    json j;
    j["command"] = "dim";
    j["mode"] = "formula";
    j["input"] = md::format_family_spec(spec);
    j["version"] = md::kVersion;
    j["result"] = std::move(result);
    print_report(j, timer);
    return 0;
  }

  LoadedGraph input = load_input(spec_text, in_path);
  if (!md::is_connected(input.graph))
    md::fail(md::errc::disconnected_graph, "dimension needs a connected graph");
  json j = make_report("dim", input, in_path);

  auto dm = md::all_pairs_distances(input.graph);
  if (exact) {
    if (input.graph.num_vertices() > 24 && !force)
      md::fail(md::errc::bad_format,
               "exact mode refuses instances over 24 vertices; pass --force to override");
    j["mode"] = "exact";
    auto res = md::exact_metric_dimension(dm, search_budget());
    j["result"] = {{"beta", res.beta}, {"basis", res.basis}};
    const std::string xy = xy_notation(input.graph, res.basis);
    if (!xy.empty()) j["result"]["basis_xy"] = xy;
  } else {
    j["mode"] = "greedy";
    auto w = md::greedy_resolving(dm);
    j["result"] = {{"upper_bound", w.size()}, {"landmarks", w}};
    const std::string xy = xy_notation(input.graph, w);
    if (!xy.empty()) j["result"]["landmarks_xy"] = xy;
  }
  print_report(j, timer);
  return 0;
}

int cmd_verify(const std::string& spec_text, const std::string& in_path,
               const std::string& landmark_text) {
  Timer timer;
  LoadedGraph input = load_input(spec_text, in_path);
  if (!md::is_connected(input.graph))
    md::fail(md::errc::disconnected_graph, "verification needs a connected graph");
  std::vector<int> landmarks = parse_landmarks(landmark_text, input.graph);
  auto dm = md::all_pairs_distances(input.graph);
  auto report = md::verify_resolving(dm, landmarks);

  json j = make_report("verify", input, in_path);
  j["result"] = md::to_json(report);
  const std::string xy = xy_notation(input.graph, report.landmarks);
  if (!xy.empty()) j["result"]["landmarks_xy"] = xy;
  print_report(j, timer);
  return report.resolving ? 0 : 1;
}

int cmd_gaps(const std::string& spec_text, const std::string& landmark_text) {
  Timer timer;
  md::FamilySpec spec = md::parse_family_spec(spec_text);
  if (std::holds_alternative<md::CrownSpec>(spec))
    md::fail(md::errc::not_a_complement_family, "gap audits need a removed-cycle layout");
  md::FamilyInstance inst = md::gen_family(spec);
  std::vector<int> landmarks = parse_landmarks(landmark_text, inst.graph);

  std::vector<md::GapAudit> audits;
  std::vector<md::GapStructure> structures;
  for (const auto& cycle : inst.cycles) {
    structures.push_back(md::gap_decompose(cycle, landmarks));
    audits.push_back(md::check_facts(structures.back()));
  }
  md::GapAudit merged =
      inst.cycles.size() > 1
          ? md::check_multicycle_conditions(audits)
          : md::check_facts(std::span<const md::GapStructure>(structures.data(), structures.size()));

  LoadedGraph input{std::move(inst.graph), spec, {}};
  json j = make_report("gaps", input, "");
  j["result"] = md::to_json(merged);
  j["result"]["landmarks"] = landmarks;
  print_report(j, timer);
  return 0;
}

struct TableRow {
  std::string family;
  std::string params;
  int vertices = 0;
  int formula = 0;
  int construction = 0;
  std::optional<int> exact;
  bool skipped = false;
};

TableRow table_row(const md::FamilySpec& spec, int check_exact_limit) {
  TableRow row;
  row.vertices = md::family_vertex_count(spec);
  std::vector<int> basis;
  if (auto* c = std::get_if<md::CrownSpec>(&spec)) {
    row.family = "crown";
    row.params = "n=" + std::to_string(c->n);
    row.formula = md::crown_beta(c->n);
    basis = md::crown_basis(c->n);
  } else if (auto* h = std::get_if<md::HamCompSpec>(&spec)) {
    row.family = "hamcomp";
    row.params = "m=" + std::to_string(h->m);
    row.formula = md::hamcomp_beta(h->m);
    basis = md::hamcomp_basis(h->m);
  } else {
    const auto& parts = std::get<md::MultiCycleSpec>(spec).parts;
    row.family = "multi";
    row.params = "m=";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) row.params.push_back('+');
      row.params += std::to_string(parts[i]);
    }
    row.formula = md::multicycle_beta(parts).beta;
    basis = md::multicycle_basis(parts);
  }
  row.construction = static_cast<int>(basis.size());
  if (row.vertices <= check_exact_limit) {
    auto dm = md::all_pairs_distances(md::gen_family(spec).graph);
    row.exact = md::exact_metric_dimension(dm, search_budget()).beta;
  } else {
    row.skipped = true;
  }
  return row;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) md::fail(md::errc::bad_format, "empty range " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    md::fail(md::errc::bad_format, "cannot parse range '" + text + "'");
  } catch (const std::out_of_range&) {
    md::fail(md::errc::bad_format, "cannot parse range '" + text + "'");
  }
}

void ascending_partitions(int n, int min_part, std::vector<int>& current,
                          std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int p = min_part; p <= n; ++p) {
    current.push_back(p);
    ascending_partitions(n - p, p, current, out);
    current.pop_back();
  }
}

int cmd_table(const std::string& family, const std::string& range_text, int check_exact_limit) {
  auto [lo, hi] = parse_range(range_text);
  std::vector<md::FamilySpec> specs;
  if (family == "crown") {
    for (int n = lo; n <= hi; ++n) specs.push_back(md::CrownSpec{n});
  } else if (family == "hamcomp") {
    for (int m = lo; m <= hi; ++m) specs.push_back(md::HamCompSpec{m});
  } else if (family == "multi") {
    for (int n = lo; n <= hi; ++n) {
      std::vector<std::vector<int>> partitions;
      std::vector<int> current;
      ascending_partitions(n, 2, current, partitions);
      for (auto& parts : partitions) {
        md::FamilySpec spec = md::MultiCycleSpec{parts};
        try {
          md::validate(spec);
        } catch (const md::error&) {
          continue;  // disconnected layouts are not instances
        }
        specs.push_back(std::move(spec));
      }
    }
  } else {
    md::fail(md::errc::bad_format, "unknown family '" + family + "'");
  }
  for (const auto& spec : specs) md::validate(spec);

  std::cout << "family,params,vertices,formula_beta,construction_size,exact_beta,agree\n";
  bool disagreement = false;
  for (const auto& spec : specs) {
    TableRow row = table_row(spec, check_exact_limit);
    std::string exact = row.skipped ? "-" : std::to_string(*row.exact);
    std::string agree;
    if (row.skipped)
      agree = row.formula == row.construction ? "skipped" : "no";
    else
      agree = (row.formula == row.construction && row.formula == *row.exact) ? "yes" : "no";
    if (agree == "no") disagreement = true;
    std::cout << row.family << ',' << row.params << ',' << row.vertices << ',' << row.formula
              << ',' << row.construction << ',' << exact << ',' << agree << "\n";
  }
  return disagreement ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric dimension toolkit for regular bipartite graph families"};
  app.set_version_flag("--version", std::string("metricdim ") + md::kVersion);
  app.require_subcommand(1);

  std::string gen_spec, gen_format = "graph6", gen_out;
  auto* gen = app.add_subcommand("gen", "generate a family instance");
  gen->add_option("spec", gen_spec, "family spec, e.g. crown:n=5 | hamcomp:m=7 | multi:m=2,3")
      ->required();
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"graph6", "json"}));
  gen->add_option("--out", gen_out, "output path (stdout when omitted)");

  std::string dim_spec, dim_in;
  bool dim_exact = false, dim_greedy = false, dim_formula = false, dim_force = false;
  auto* dim = app.add_subcommand("dim", "compute the metric dimension");
  dim->add_option("spec", dim_spec, "family spec");
  dim->add_option("--in", dim_in, "graph file (graph6 or JSON edge list)");
  dim->add_flag("--exact", dim_exact, "exact branch-and-bound");
  dim->add_flag("--greedy", dim_greedy, "greedy upper bound");
  dim->add_flag("--formula", dim_formula, "closed-form value (family specs only)");
  dim->add_flag("--force", dim_force, "allow exact mode beyond 24 vertices");

  std::string verify_spec, verify_in, verify_landmarks;
  auto* verify = app.add_subcommand("verify", "check whether a landmark set resolves the graph");
  verify->add_option("spec", verify_spec, "family spec");
  verify->add_option("--in", verify_in, "graph file (graph6 or JSON edge list)");
  verify->add_option("--landmarks", verify_landmarks, "comma-separated ids or x/y names")
      ->required();

  std::string gaps_spec, gaps_landmarks;
  auto* gaps = app.add_subcommand("gaps", "audit the gap structure of a landmark set");
  gaps->add_option("spec", gaps_spec, "complement-family spec (hamcomp or multi)")->required();
  gaps->add_option("--landmarks", gaps_landmarks, "comma-separated ids or x/y names")->required();

  std::string table_family, table_range;
  int table_check_exact = 0;
  auto* table = app.add_subcommand("table", "tabulate formula vs construction vs exact dimension");
  table->add_option("--family", table_family, "crown | hamcomp | multi")->required();
  table->add_option("--range", table_range, "n or m range, e.g. 3..6")->required();
  table->add_option("--check-exact", table_check_exact,
                    "run the exact solver on instances up to this many vertices");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_gen(gen_spec, gen_format, gen_out);
    if (dim->parsed()) return cmd_dim(dim_spec, dim_in, dim_exact, dim_greedy, dim_formula, dim_force);
    if (verify->parsed()) return cmd_verify(verify_spec, verify_in, verify_landmarks);
    if (gaps->parsed()) return cmd_gaps(gaps_spec, gaps_landmarks);
    if (table->parsed()) return cmd_table(table_family, table_range, table_check_exact);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const md::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
