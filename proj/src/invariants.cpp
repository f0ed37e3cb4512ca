#include "sympoly/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sympoly {

std::string kind_name(IdealKind kind) {
  switch (kind) {
    case IdealKind::edge: return "edge";
    case IdealKind::gin: return "gin";
    case IdealKind::inid: return "inid";
  }
  return "?";
}

IdealKind kind_from_string(const std::string& name) {
  if (name == "edge") return IdealKind::edge;
  if (name == "gin") return IdealKind::gin;
  if (name == "inid") return IdealKind::inid;
  throw std::invalid_argument("unknown ideal kind: " + name);
}

MonomialIdeal make_ideal(const Graph& g, IdealKind kind) {
  switch (kind) {
    case IdealKind::edge: return edge_ideal(g);
    case IdealKind::gin: return gin_ideal(g);
    case IdealKind::inid: return inid_ideal(g);
  }
  throw std::invalid_argument("bad ideal kind");
}

std::vector<LabeledPrime> make_primes(const Graph& g, IdealKind kind) {
  switch (kind) {
    case IdealKind::edge: return edge_ideal_primes(g);
    case IdealKind::gin: return gin_primes(g);
    case IdealKind::inid: return inid_primes(g);
  }
  throw std::invalid_argument("bad ideal kind");
}

HPolyhedron make_sp(const Graph& g, IdealKind kind) {
  return build_sp(supports_of(make_primes(g, kind)), 2 * g.order());
}

namespace {

// Memo for vertex sets keyed by labeled graph and kind.  Purely an internal
// accelerator for corpus sweeps: results are immutable and shared.
class VertexCache {
 public:
  std::shared_ptr<const std::vector<QVector>> get(const Graph& g, IdealKind kind) {
    std::tuple<int, std::uint64_t, int> key{g.order(), g.edge_mask(), static_cast<int>(kind)};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const std::vector<QVector>>(
        enumerate_vertices(make_sp(g, kind)));
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, value).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, std::uint64_t, int>, std::shared_ptr<const std::vector<QVector>>> map_;
};

std::shared_ptr<const std::vector<QVector>> cached_vertices(const Graph& g, IdealKind kind) {
  static VertexCache cache;
  return cache.get(g, kind);
}

Rat min_sum_of(const std::vector<QVector>& vs) {
  Rat best = coord_sum(vs.front());
  for (const QVector& v : vs) best = std::min(best, coord_sum(v));
  return best;
}

Rat max_sum_of(const std::vector<QVector>& vs) {
  Rat best = coord_sum(vs.front());
  for (const QVector& v : vs) best = std::max(best, coord_sum(v));
  return best;
}

std::vector<QVector> full_of(const std::vector<QVector>& vs, int n) {
  std::vector<QVector> out;
  for (const QVector& a : vs) {
    bool full = true;
    for (int j = 1; j <= n && full; ++j)
      if (a[j - 1] + a[n + j - 1] == 0) full = false;
    if (full) out.push_back(a);
  }
  return out;
}

}  // namespace

Rat waldschmidt(const Graph& g, IdealKind kind) {
  HPolyhedron sp = make_sp(g, kind);
  Rat via_vertices = min_coord_sum(sp);
  Rat via_lp = lp_min_sum(sp);
  if (via_vertices != via_lp)
    throw std::logic_error("waldschmidt: vertex minimum disagrees with LP optimum");
  return via_vertices;
}

Rat areg(const Graph& g, IdealKind kind) { return max_vertex_coord_sum(make_sp(g, kind)); }

QVector embed_coords(const QVector& sub, const std::vector<int>& new_to_old, int host_n) {
  int m = static_cast<int>(new_to_old.size());
  if (static_cast<int>(sub.size()) != 2 * m)
    throw std::invalid_argument("embed_coords: dimension mismatch");
  QVector out(2 * host_n, Rat(0));
  for (int k = 1; k <= m; ++k) {
    out[new_to_old[k - 1] - 1] = sub[k - 1];
    out[host_n + new_to_old[k - 1] - 1] = sub[m + k - 1];
  }
  return out;
}

InvariantReport invariant_report(const Graph& g, IdealKind kind) {
  HPolyhedron sp = make_sp(g, kind);
  std::vector<QVector> vs = enumerate_vertices(sp);
  InvariantReport r;
  r.graph_id = to_graph6(g);
  r.kind = kind;
  r.waldschmidt_value = min_sum_of(vs);
  Rat via_lp = lp_min_sum(sp);
  if (r.waldschmidt_value != via_lp)
    throw std::logic_error("invariant_report: vertex minimum disagrees with LP optimum");
  r.areg_value = max_sum_of(vs);
  r.vertex_count = static_cast<int>(vs.size());
  r.full_vertex_count = static_cast<int>(full_of(vs, g.order()).size());
  r.ell = longest_induced_path_order(g);
  r.ell_lex = longest_admissible_path_order(g);
  return r;
}

// ----- decompositions -------------------------------------------------------------

namespace {

std::vector<std::vector<int>> connected_edged_subgraph_sets(const Graph& g) {
  int n = g.order();
  if (n > 20) throw std::invalid_argument("subgraph enumeration: order too large");
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
    std::vector<int> w;
    for (int v = 1; v <= n; ++v)
      if (m >> (v - 1) & 1) w.push_back(v);
    if (w.size() < 2) continue;
    InducedSubgraph sub = induced_subgraph(g, w);
    if (sub.graph.edge_count() == 0) continue;
    if (connected_components(sub.graph).size() != 1) continue;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

DecompositionReport subgraph_decomposition(const Graph& g, IdealKind kind) {
  if (kind == IdealKind::edge)
    throw std::invalid_argument("subgraph_decomposition: supported for gin and inid");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("subgraph_decomposition: graph must be connected");
  if (g.edge_count() == 0) throw std::domain_error("subgraph_decomposition: edgeless graph");

  DecompositionReport rep;
  rep.graph_id = to_graph6(g);
  rep.kind = kind;
  std::vector<QVector> all;
  for (const std::vector<int>& w : connected_edged_subgraph_sets(g)) {
    InducedSubgraph sub = induced_subgraph(g, w);
    auto vs = cached_vertices(sub.graph, kind);
    DecompositionPart part;
    part.vertices = w;
    for (const QVector& v : full_of(*vs, sub.graph.order()))
      part.embedded.push_back(embed_coords(v, sub.new_to_old, g.order()));
    for (const QVector& v : part.embedded) all.push_back(v);
    rep.parts.push_back(std::move(part));
  }
  std::sort(all.begin(), all.end(), lex_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  rep.reconstructed = std::move(all);
  rep.direct = *cached_vertices(g, kind);
  rep.match = rep.reconstructed == rep.direct;
  return rep;
}

PartitionReport disconnected_partition(const Graph& g, IdealKind kind) {
  std::vector<std::vector<int>> comps = connected_components(g);
  if (comps.size() < 2)
    throw std::invalid_argument("disconnected_partition: graph must be disconnected");
  if (g.edge_count() == 0) throw std::domain_error("disconnected_partition: edgeless graph");

  PartitionReport rep;
  rep.graph_id = to_graph6(g);
  rep.kind = kind;
  std::vector<QVector> all;
  bool disjoint = true;
  for (const std::vector<int>& comp : comps) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    if (sub.graph.edge_count() == 0) continue;  // edge-free components contribute nothing
    auto vs = cached_vertices(sub.graph, kind);
    DecompositionPart part;
    part.vertices = comp;
    for (const QVector& v : *vs)
      part.embedded.push_back(embed_coords(v, sub.new_to_old, g.order()));
    for (const QVector& v : part.embedded) {
      if (std::find(all.begin(), all.end(), v) != all.end()) disjoint = false;
      all.push_back(v);
    }
    rep.parts.push_back(std::move(part));
  }
  std::sort(all.begin(), all.end(), lex_less);
  rep.direct = *cached_vertices(g, kind);
  rep.disjoint = disjoint;
  rep.match = disjoint && all == rep.direct;
  return rep;
}

// ----- theorem verification ----------------------------------------------------------

namespace {

struct CheckOutcome {
  bool applicable = true;
  std::optional<std::string> failure;
};

CheckOutcome pass() { return CheckOutcome{true, std::nullopt}; }
CheckOutcome skip() { return CheckOutcome{false, std::nullopt}; }
CheckOutcome fail(std::string detail) { return CheckOutcome{true, std::move(detail)}; }

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

// Parts of a complete multipartite graph are the components of the
// complement; validates the shape and returns the part count, or 0.
int multipartite_part_count(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> co_edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!g.adjacent(i, j)) co_edges.emplace_back(i, j);
  Graph complement(n, std::move(co_edges));
  std::vector<std::vector<int>> parts = connected_components(complement);
  for (const std::vector<int>& part : parts)
    for (size_t a = 0; a < part.size(); ++a)
      for (size_t b = a + 1; b < part.size(); ++b)
        if (g.adjacent(part[a], part[b])) return 0;  // part not independent
  return static_cast<int>(parts.size());
}

CheckOutcome check_wald_equality(const Graph& g) {
  Rat w_gin = waldschmidt(g, IdealKind::gin);
  Rat w_edge = waldschmidt(g, IdealKind::edge);
  if (w_gin == w_edge) return pass();
  return fail("wald(gin)=" + rat_to_string(w_gin) + " wald(edge)=" + rat_to_string(w_edge));
}

CheckOutcome check_chi_omega(const Graph& g) {
  int chi = chromatic_number(g), omega = clique_number(g);
  Rat w = waldschmidt(g, IdealKind::edge);
  Rat lo(chi, chi - 1), hi(omega, omega - 1);
  if (lo <= w && w <= hi) return pass();
  return fail("chi=" + std::to_string(chi) + " omega=" + std::to_string(omega) +
              " wald(edge)=" + rat_to_string(w));
}

CheckOutcome check_kpartite(const Graph& g) {
  int k = multipartite_part_count(g);
  if (k < 2) return skip();
  Rat w = waldschmidt(g, IdealKind::gin);
  if (w == Rat(k, k - 1)) return pass();
  return fail("k=" + std::to_string(k) + " wald(gin)=" + rat_to_string(w));
}

CheckOutcome check_partite_containment(const Graph& g) {
  if (!is_connected(g)) return skip();
  std::vector<int> color = proper_coloring(g);
  int k = *std::max_element(color.begin() + 1, color.end());
  if (k < 2) return skip();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= g.order(); ++i)
    for (int j = i + 1; j <= g.order(); ++j)
      if (color[i] != color[j]) edges.emplace_back(i, j);
  Graph super(g.order(), std::move(edges));
  HPolyhedron sp_super = make_sp(super, IdealKind::gin);
  for (const QVector& v : *cached_vertices(g, IdealKind::gin))
    if (!contains(sp_super, v)) {
      std::string coords;
      for (const Rat& c : v) coords += (coords.empty() ? "" : ",") + rat_to_string(c);
      return fail("vertex (" + coords + ") escapes the multipartite polyhedron");
    }
  return pass();
}

CheckOutcome check_bipartite(const Graph& g) {
  if (chromatic_number(g) != 2) return skip();
  Rat w = waldschmidt(g, IdealKind::gin);
  if (w == 2) return pass();
  return fail("bipartite graph with wald(gin)=" + rat_to_string(w));
}

CheckOutcome check_weakly_perfect(const Graph& g) {
  int chi = chromatic_number(g), omega = clique_number(g);
  if (chi != omega) return skip();
  Rat w = waldschmidt(g, IdealKind::gin);
  if (w == Rat(chi, chi - 1)) return pass();
  return fail("chi=omega=" + std::to_string(chi) + " but wald(gin)=" + rat_to_string(w));
}

CheckOutcome check_wald_inid_two(const Graph& g) {
  Rat w = waldschmidt(g, IdealKind::inid);
  if (w == 2) return pass();
  return fail("wald(inid)=" + rat_to_string(w));
}

CheckOutcome check_closed_areg_two(const Graph& g) {
  if (!is_closed_labeling(g)) return skip();
  Rat r = areg(g, IdealKind::inid);
  if (r == 2) return pass();
  return fail("closed labeling but areg(inid)=" + rat_to_string(r));
}

std::vector<IdealKind> kinds_for(std::optional<IdealKind> kind, bool include_edge) {
  if (kind) return {*kind};
  if (include_edge) return {IdealKind::edge, IdealKind::gin, IdealKind::inid};
  return {IdealKind::gin, IdealKind::inid};
}

CheckOutcome check_vertex_containment(const Graph& g, std::optional<IdealKind> kind) {
  for (IdealKind k : kinds_for(kind, false)) {
    auto host = cached_vertices(g, k);
    std::set<QVector> host_set(host->begin(), host->end());
    int n = g.order();
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
      std::vector<int> w;
      for (int v = 1; v <= n; ++v)
        if (m >> (v - 1) & 1) w.push_back(v);
      if (w.size() < 2 || w.size() == static_cast<size_t>(n)) continue;
      InducedSubgraph sub = induced_subgraph(g, w);
      if (sub.graph.edge_count() == 0) continue;
      for (const QVector& v : *cached_vertices(sub.graph, k)) {
        QVector e = embed_coords(v, sub.new_to_old, n);
        if (!host_set.count(e)) {
          std::string ws;
          for (int x : w) ws += (ws.empty() ? "" : ",") + std::to_string(x);
          return fail(kind_name(k) + ": subgraph {" + ws + "} vertex missing upstairs");
        }
      }
    }
  }
  return pass();
}

CheckOutcome check_zero_one_vertices(const Graph& g, std::optional<IdealKind> kind) {
  for (IdealKind k : kinds_for(kind, true)) {
    MonomialIdeal ideal = make_ideal(g, k);
    std::set<std::vector<Int>> gen_exps;
    for (const Monomial& m : ideal.gens) gen_exps.insert(m.exps);
    std::set<std::vector<Int>> zero_one;
    for (const QVector& v : *cached_vertices(g, k)) {
      bool is01 = true;
      std::vector<Int> z;
      for (const Rat& c : v) {
        if (c != 0 && c != 1) {
          is01 = false;
          break;
        }
        z.push_back(c == 1 ? 1 : 0);
      }
      if (is01) zero_one.insert(std::move(z));
    }
    if (zero_one != gen_exps)
      return fail(kind_name(k) + ": 0/1 vertices and minimal generators differ");
  }
  return pass();
}

CheckOutcome check_vertex_to_generator(const Graph& g, std::optional<IdealKind> kind) {
  for (IdealKind k : kinds_for(kind, true)) {
    std::vector<PrimeSupport> primes = supports_of(make_primes(g, k));
    for (const QVector& v : *cached_vertices(g, k)) {
      Int q = common_denominator(v);
      std::vector<Int> exps;
      for (const Rat& c : v) exps.push_back(rat_num(c) * (q / rat_den(c)));
      Monomial z(static_cast<int>(v.size()), std::move(exps));
      long long qq = q.convert_to<long long>();
      if (!is_minimal_generator(primes, static_cast<int>(qq), z))
        return fail(kind_name(k) + ": vertex with denominator " + q.str() +
                    " is not a minimal generator of the symbolic power");
    }
  }
  return pass();
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "wald_equality",      "chi_omega",        "kpartite",
      "partite_containment", "bipartite",        "weakly_perfect",
      "wald_inid_two",      "closed_areg_two",  "vertex_containment",
      "zero_one_vertices",  "vertex_to_generator"};
  return ids;
}

TheoremReport verify_theorem(const std::string& theorem_id, const std::vector<Graph>& corpus,
                             const std::string& corpus_name, std::optional<IdealKind> kind,
                             int workers) {
  using Checker = CheckOutcome (*)(const Graph&, std::optional<IdealKind>);
  Checker checker = nullptr;
  if (theorem_id == "wald_equality")
    checker = [](const Graph& g, std::optional<IdealKind>) { return check_wald_equality(g); };
  else if (theorem_id == "chi_omega")
    checker = [](const Graph& g, std::optional<IdealKind>) { return check_chi_omega(g); };
  else if (theorem_id == "kpartite")
    checker = [](const Graph& g, std::optional<IdealKind>) { return check_kpartite(g); };
  else if (theorem_id == "partite_containment")
    checker = [](const Graph& g, std::optional<IdealKind>) { return check_partite_containment(g); };
  else if (theorem_id == "bipartite")
    checker = [](const Graph& g, std::optional<IdealKind>) { return check_bipartite(g); };
  else if (theorem_id == "weakly_perfect")
    checker = [](const Graph& g, std::optional<IdealKind>) { return check_weakly_perfect(g); };
  else if (theorem_id == "wald_inid_two")
    checker = [](const Graph& g, std::optional<IdealKind>) { return check_wald_inid_two(g); };
  else if (theorem_id == "closed_areg_two")
    checker = [](const Graph& g, std::optional<IdealKind>) { return check_closed_areg_two(g); };
  else if (theorem_id == "vertex_containment")
    checker = check_vertex_containment;
  else if (theorem_id == "zero_one_vertices")
    checker = check_zero_one_vertices;
  else if (theorem_id == "vertex_to_generator")
    checker = check_vertex_to_generator;
  else
    throw std::invalid_argument("unknown theorem id: " + theorem_id);

  std::vector<CheckOutcome> outcomes(corpus.size());
  int nthreads = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  nthreads = std::min(nthreads, static_cast<int>(std::max<std::size_t>(corpus.size(), 1)));
  std::atomic<size_t> cursor{0};
  auto work = [&]() {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= corpus.size()) break;
      try {
        outcomes[i] = checker(corpus[i], kind);
      } catch (const std::exception& e) {
        outcomes[i] = fail(std::string("exception: ") + e.what());
      }
    }
  };
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  TheoremReport report;
  report.theorem = theorem_id;
  report.corpus = corpus_name;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (!outcomes[i].applicable) continue;
    ++report.checked;
    if (outcomes[i].failure) {
      report.passed = false;
      report.failures.push_back(TheoremFailure{to_graph6(corpus[i]), *outcomes[i].failure});
    }
  }
  return report;
}

ConjectureReport conjecture_report(const Graph& g) {
  if (g.edge_count() == 0) throw std::domain_error("conjecture_report: edgeless graph");
  ConjectureReport r;
  r.graph_id = to_graph6(g);
  r.ell = longest_induced_path_order(g);
  r.ell_lex = longest_admissible_path_order(g);
  r.areg_gin = areg(g, IdealKind::gin);
  r.areg_inid = areg(g, IdealKind::inid);
  return r;
}

// ----- corpora --------------------------------------------------------------------

namespace {

int strict_int(const std::string& s) {
  size_t pos = 0;
  int value = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("corpus: bad integer " + s);
  return value;
}

std::vector<int> parse_int_list(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) throw std::invalid_argument("corpus: bad integer list");
    out.push_back(strict_int(item));
  }
  if (out.empty()) throw std::invalid_argument("corpus: empty integer list");
  return out;
}

FamilyKind family_kind_from(const std::string& name) {
  if (name == "path") return FamilyKind::path;
  if (name == "cycle") return FamilyKind::cycle;
  if (name == "complete") return FamilyKind::complete;
  if (name == "kpartite") return FamilyKind::complete_multipartite;
  if (name == "net") return FamilyKind::net;
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace

Corpus parse_corpus_spec(const std::string& spec) {
  Corpus corpus;
  corpus.name = spec;
  const std::string ac = "all-connected:";
  const std::string fam = "family:";
  if (spec.rfind(ac, 0) == 0) {
    int max_n = strict_int(spec.substr(ac.size()));
    if (max_n < 2 || max_n > 7)
      throw std::invalid_argument("corpus: all-connected supports 2..7");
    corpus.graphs = corpus_all_connected(max_n);
    return corpus;
  }
  if (spec.rfind(fam, 0) == 0) {
    std::string rest = spec.substr(fam.size());
    size_t colon = rest.find(':');
    std::string name = rest.substr(0, colon);
    FamilyKind kind = family_kind_from(name);
    if (kind == FamilyKind::net) {
      if (colon != std::string::npos)
        throw std::invalid_argument("corpus: family net takes no parameters");
      corpus.graphs.push_back(make_net());
      return corpus;
    }
    if (colon == std::string::npos) throw std::invalid_argument("corpus: family needs parameters");
    std::string params = rest.substr(colon + 1);
    if (kind == FamilyKind::complete_multipartite) {
      corpus.graphs.push_back(make_complete_multipartite(parse_int_list(params, ',')));
      return corpus;
    }
    size_t dots = params.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
      lo = hi = strict_int(params);
    } else {
      lo = strict_int(params.substr(0, dots));
      hi = strict_int(params.substr(dots + 2));
    }
    if (lo > hi) throw std::invalid_argument("corpus: empty family range");
    for (int n = lo; n <= hi; ++n) corpus.graphs.push_back(make_family(kind, {n}));
    return corpus;
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("corpus: cannot open file " + spec);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    corpus.graphs.push_back(parse_graph6(line));
  }
  if (corpus.graphs.empty()) throw std::invalid_argument("corpus: no graphs in file");
  return corpus;
}

std::vector<Graph> corpus_two_component(int max_total) {
  std::vector<Graph> out;
  for (int n = 3; n <= max_total; ++n)
    for (Graph& g : all_graphs(n)) {
      if (g.edge_count() == 0) continue;
      if (connected_components(g).size() != 2) continue;
      out.push_back(std::move(g));
    }
  return out;
}

}  // namespace sympoly
