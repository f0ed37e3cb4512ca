// Command-line front end: graph ingestion, ideal/prime/polyhedron
// computations, theorem verification campaigns, conjecture reports.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 input error, 3 domain error (e.g. edgeless graph), 4 resource guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympoly/invariants.hpp"
#include "sympoly/serialize.hpp"

using namespace sympoly;
using nlohmann::json;

namespace {

struct GuardTripped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph6_file, edges_file, family;
  std::string kind = "gin";
  std::string format = "text";
  std::string corpus;
  std::string ideal_file;
  int m = 1;
  int workers = 0;
  int max_n = 6;
  bool force = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int strict_int(const std::string& s) {
  size_t pos = 0;
  int value = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
  return value;
}

Graph parse_family_spec(const std::string& spec) {
  size_t colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  if (name == "net") {
    if (colon != std::string::npos) throw std::invalid_argument("family net takes no parameters");
    return make_net();
  }
  if (colon == std::string::npos) throw std::invalid_argument("family spec needs parameters: " + spec);
  std::string params = spec.substr(colon + 1);
  if (name == "kpartite") {
    std::vector<int> sizes;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) sizes.push_back(strict_int(item));
    return make_complete_multipartite(sizes);
  }
  int n = strict_int(params);
  if (name == "path") return make_path(n);
  if (name == "cycle") return make_cycle(n);
  if (name == "complete") return make_complete(n);
  throw std::invalid_argument("unknown family: " + name);
}

Graph load_graph(const Options& opt) {
  int sources = !opt.graph6_file.empty() + !opt.edges_file.empty() + !opt.family.empty();
  if (sources != 1)
    throw std::invalid_argument("exactly one of --graph6, --edges, --family is required");
  if (!opt.family.empty()) return parse_family_spec(opt.family);
  if (!opt.edges_file.empty()) return parse_edge_list(read_file(opt.edges_file));
  std::stringstream ss(read_file(opt.graph6_file));
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) return parse_graph6(line);
  throw std::invalid_argument("graph6 file is empty");
}

int resolve_workers(const Options& opt) {
  if (opt.workers > 0) return opt.workers;
  if (const char* env = std::getenv("SYMPOLY_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 0;  // library picks hardware concurrency
}

void emit(const json& j, const Options& opt, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_ideal(const Options& opt) {
  Graph g = load_graph(opt);
  MonomialIdeal ideal = make_ideal(g, kind_from_string(opt.kind));
  std::string text;
  for (const Monomial& m : ideal.gens) text += monomial_to_string(m, g.order()) + "\n";
  emit(ideal_json(ideal), opt, text);
  return 0;
}

int cmd_primes(const Options& opt) {
  Graph g = load_graph(opt);
  std::vector<LabeledPrime> primes = make_primes(g, kind_from_string(opt.kind));
  std::string text;
  for (const LabeledPrime& p : primes) {
    text += "{";
    for (size_t k = 0; k < p.support.members.size(); ++k)
      text += (k ? "," : "") + std::to_string(p.support.members[k]);
    text += "}";
    const PrimeWitness& w = p.witnesses.front();
    if (w.from_cover) {
      text += "  cover={";
      for (size_t k = 0; k < w.cover.size(); ++k) text += (k ? "," : "") + std::to_string(w.cover[k]);
      text += "}";
    } else {
      text += "  T={";
      for (size_t k = 0; k < w.cut_set.size(); ++k)
        text += (k ? "," : "") + std::to_string(w.cut_set[k]);
      text += "} U={";
      for (size_t k = 0; k < w.reps.size(); ++k) text += (k ? "," : "") + std::to_string(w.reps[k]);
      text += "}";
    }
    text += "\n";
  }
  emit(primes_json(primes), opt, text);
  return 0;
}

int cmd_sp_vertices(const Options& opt) {
  Graph g = load_graph(opt);
  IdealKind kind = kind_from_string(opt.kind);
  HPolyhedron sp = make_sp(g, kind);
  std::vector<QVector> vs = enumerate_vertices(sp);
  std::string text;
  int n = g.order();
  for (const QVector& v : vs) {
    bool full = true;
    text += "(";
    for (size_t k = 0; k < v.size(); ++k) text += (k ? "," : "") + rat_to_string(v[k]);
    for (int k = 1; k <= n && full; ++k)
      if (v[k - 1] + v[n + k - 1] == 0) full = false;
    text += ")  sum=" + rat_to_string(coord_sum(v)) + (full ? "  full" : "") + "\n";
  }
  emit(vertices_json(g, kind, sp, vs), opt, text);
  return 0;
}

int cmd_invariants(const Options& opt) {
  Graph g = load_graph(opt);
  InvariantReport r = invariant_report(g, kind_from_string(opt.kind));
  std::string text;
  text += "graph: " + r.graph_id + "\n";
  text += "kind: " + kind_name(r.kind) + "\n";
  text += "waldschmidt: " + rat_to_string(r.waldschmidt_value) + "\n";
  text += "areg: " + rat_to_string(r.areg_value) + "\n";
  text += "vertices: " + std::to_string(r.vertex_count) + "\n";
  text += "full vertices: " + std::to_string(r.full_vertex_count) + "\n";
  text += "ell: " + std::to_string(r.ell) + "\n";
  text += "ell_lex: " + std::to_string(r.ell_lex) + "\n";
  emit(invariant_report_json(r), opt, text);
  return 0;
}

int cmd_sympower(const Options& opt) {
  if (opt.ideal_file.empty()) throw std::invalid_argument("sympower requires --ideal FILE");
  MonomialIdeal ideal = ideal_from_json(read_file(opt.ideal_file));
  std::vector<PrimeSupport> primes = brute_force_primes(ideal);
  MonomialIdeal power = symbolic_power(primes, opt.m);
  std::string text;
  for (const Monomial& m : power.gens) text += monomial_to_string(m) + "\n";
  emit(ideal_json(power), opt, text);
  return 0;
}

int cmd_verify(const Options& opt, const std::string& theorem) {
  const std::string ac = "all-connected:";
  if (opt.corpus.rfind(ac, 0) == 0 && !opt.force) {
    int max_n = std::stoi(opt.corpus.substr(ac.size()));
    if (max_n > opt.max_n)
      throw GuardTripped("corpus bound " + std::to_string(max_n) + " exceeds --max-n " +
                         std::to_string(opt.max_n) + " (use --force to override)");
  }
  Corpus corpus = parse_corpus_spec(opt.corpus);
  std::optional<IdealKind> kind;
  if (!opt.kind.empty() && opt.kind != "auto") kind = kind_from_string(opt.kind);
  TheoremReport report =
      verify_theorem(theorem, corpus.graphs, corpus.name, kind, resolve_workers(opt));
  if (opt.format == "json") {
    for (const TheoremFailure& f : report.failures)
      std::cout << json{{"graph", f.graph_id}, {"detail", f.detail}}.dump() << "\n";
    std::cout << theorem_report_json(report).dump() << "\n";
  } else {
    for (const TheoremFailure& f : report.failures)
      std::cout << "FAIL " << f.graph_id << ": " << f.detail << "\n";
    std::cout << (report.passed ? "pass" : "FAIL") << " " << report.theorem << " on "
              << report.corpus << " (" << report.checked << " checked)\n";
  }
  return report.passed ? 0 : 1;
}

int cmd_conjectures(const Options& opt) {
  Graph g = load_graph(opt);
  ConjectureReport r = conjecture_report(g);
  std::string text;
  text += "graph: " + r.graph_id + "\n";
  text += "areg(gin) = " + rat_to_string(r.areg_gin) + "  vs  ell = " + std::to_string(r.ell) +
          "\n";
  text += "areg(inid) = " + rat_to_string(r.areg_inid) +
          "  vs  ell_lex = " + std::to_string(r.ell_lex) + "\n";
  emit(conjecture_report_json(r), opt, text);
  return 0;
}

void add_graph_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--graph6", opt.graph6_file, "file with one graph6 line");
  cmd->add_option("--edges", opt.edges_file, "edge list file (n <count>, then i j lines)");
  cmd->add_option("--family", opt.family, "path:n | cycle:n | complete:n | kpartite:c1,c2,... | net");
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--workers", opt.workers, "worker threads (default: SYMPOLY_WORKERS or hardware)");
  cmd->add_option("--max-n", opt.max_n, "guard bound for exhaustive corpora");
  cmd->add_flag("--force", opt.force, "override the max-n guard");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic polyhedra of graph-derived monomial ideals"};
  app.require_subcommand(1);
  Options opt;
  std::string theorem;

  CLI::App* ideal = app.add_subcommand("ideal", "print the chosen monomial ideal");
  CLI::App* primes = app.add_subcommand("primes", "print its minimal primes with witnesses");
  CLI::App* spv = app.add_subcommand("sp-vertices", "vertices of the symbolic polyhedron");
  CLI::App* inv = app.add_subcommand("invariants", "waldschmidt constant, asymptotic regularity");
  CLI::App* sym = app.add_subcommand("sympower", "symbolic power of a squarefree ideal");
  CLI::App* ver = app.add_subcommand("verify", "run a named check over a corpus");
  CLI::App* conj = app.add_subcommand("conjectures", "report areg against the path bounds");

  for (CLI::App* cmd : {ideal, primes, spv, inv, conj}) {
    add_graph_flags(cmd, opt);
    add_common_flags(cmd, opt);
  }
  for (CLI::App* cmd : {ideal, primes, spv, inv})
    cmd->add_option("--kind", opt.kind, "edge | gin | inid")
        ->check(CLI::IsMember({"edge", "gin", "inid"}));

  sym->add_option("--ideal", opt.ideal_file, "ideal JSON file {dim, gens}")->required();
  sym->add_option("-m,--power", opt.m, "symbolic power exponent")->required();
  add_common_flags(sym, opt);

  ver->add_option("theorem", theorem, "check id; see docs")->required();
  ver->add_option("--corpus", opt.corpus, "all-connected:N | family:NAME:A[..B] | graph6 file")
      ->required();
  ver->add_option("--kind", opt.kind, "restrict kind where applicable")->default_val("auto");
  add_common_flags(ver, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*ideal) return cmd_ideal(opt);
    if (*primes) return cmd_primes(opt);
    if (*spv) return cmd_sp_vertices(opt);
    if (*inv) return cmd_invariants(opt);
    if (*sym) return cmd_sympower(opt);
    if (*ver) return cmd_verify(opt, theorem);
    if (*conj) return cmd_conjectures(opt);
  } catch (const GuardTripped& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 2;
}
