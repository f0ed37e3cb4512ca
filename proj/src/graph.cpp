#include "sympoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sympoly {

namespace {

void check_vertex(int v, int n) {
  if (v < 1 || v > n) throw std::invalid_argument("vertex out of range 1..n");
}

// Component count of the subgraph induced on the vertices with alive[v] set.
int component_count_alive(const Graph& g, const std::vector<char>& alive) {
  int n = g.order();
  std::vector<char> seen(n + 1, 0);
  int count = 0;
  std::vector<int> stack;
  for (int s = 1; s <= n; ++s) {
    if (!alive[s] || seen[s]) continue;
    ++count;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 1; u <= n; ++u)
        if (alive[u] && !seen[u] && g.adjacent(v, u)) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return count;
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph order must be positive");
  if (n > 4096) throw std::invalid_argument("graph order too large");
  adj_.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (auto& [a, b] : edges) {
    check_vertex(a, n);
    check_vertex(b, n);
    if (a == b) throw std::invalid_argument("loop edge not allowed");
    if (a > b) std::swap(a, b);
    adj_[static_cast<size_t>(a) * (n + 1) + b] = 1;
    adj_[static_cast<size_t>(b) * (n + 1) + a] = 1;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Graph::adjacent(int i, int j) const {
  check_vertex(i, n_);
  check_vertex(j, n_);
  return adj_[static_cast<size_t>(i) * (n_ + 1) + j] != 0;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v, n_);
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (adj_[static_cast<size_t>(v) * (n_ + 1) + u]) out.push_back(u);
  return out;
}

int edge_bit_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return (j - 1) * (j - 2) / 2 + (i - 1);
}

std::uint64_t Graph::edge_mask() const {
  if (n_ * (n_ - 1) / 2 > 64) throw std::invalid_argument("edge_mask needs n(n-1)/2 <= 64");
  std::uint64_t m = 0;
  for (auto [a, b] : edges_) m |= std::uint64_t{1} << edge_bit_index(a, b);
  return m;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (mask >> edge_bit_index(i, j) & 1) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

// ----- graph6 ---------------------------------------------------------------

Graph parse_graph6(const std::string& text) {
  std::string line = text;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line = line.substr(header.size());
  if (line.empty()) throw std::invalid_argument("graph6: empty input");
  int c0 = static_cast<unsigned char>(line[0]);
  if (c0 == 126) throw std::invalid_argument("graph6: long form (n > 62) not supported");
  if (c0 < 63 || c0 > 125) throw std::invalid_argument("graph6: malformed header byte");
  int n = c0 - 63;
  if (n == 0) throw std::invalid_argument("graph6: graph order 0");
  int bits = n * (n - 1) / 2;
  size_t body = static_cast<size_t>((bits + 5) / 6);
  if (line.size() != 1 + body) throw std::invalid_argument("graph6: wrong length / trailing garbage");
  std::vector<std::pair<int, int>> edges;
  for (int b = 0; b < bits; ++b) {
    int ch = static_cast<unsigned char>(line[1 + b / 6]);
    if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: byte out of range");
    int bit = (ch - 63) >> (5 - b % 6) & 1;
    if (bit) {
      // bit b encodes the pair with edge_bit_index == b; invert the index
      int j = 2;
      while ((j) * (j - 1) / 2 <= b) ++j;
      int i = b - (j - 1) * (j - 2) / 2 + 1;
      edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6: n > 62 not supported");
  int bits = n * (n - 1) / 2;
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  for (int base = 0; base < bits; base += 6) {
    int val = 0;
    for (int k = 0; k < 6; ++k) {
      int b = base + k;
      int bit = 0;
      if (b < bits) {
        int j = 2;
        while ((j) * (j - 1) / 2 <= b) ++j;
        int i = b - (j - 1) * (j - 2) / 2 + 1;
        bit = g.adjacent(i, j) ? 1 : 0;
      }
      val = val << 1 | bit;
    }
    out.push_back(static_cast<char>(63 + val));
  }
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok) || tok != "n") throw std::invalid_argument("edge list: expected leading \"n <count>\"");
  long long n = 0;
  if (!(in >> n) || n < 1) throw std::invalid_argument("edge list: bad vertex count");
  std::vector<std::pair<int, int>> edges;
  long long a, b;
  while (in >> a) {
    if (!(in >> b)) throw std::invalid_argument("edge list: dangling endpoint");
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("edge list: endpoint out of range");
    if (a == b) throw std::invalid_argument("edge list: loop edge");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!in.eof()) throw std::invalid_argument("edge list: unparsable line");
  return Graph(static_cast<int>(n), std::move(edges));
}

// ----- subgraphs and components ---------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> w) {
  if (w.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (int v : w) check_vertex(v, g.order());
  std::vector<int> old_to_new(g.order() + 1, 0);
  for (size_t k = 0; k < w.size(); ++k) old_to_new[w[k]] = static_cast<int>(k) + 1;
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    if (old_to_new[a] && old_to_new[b]) edges.emplace_back(old_to_new[a], old_to_new[b]);
  return InducedSubgraph{Graph(static_cast<int>(w.size()), std::move(edges)), w,
                         std::move(old_to_new)};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.order();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u = 1; u <= n; ++u)
        if (!seen[u] && g.adjacent(v, u)) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // discovery from ascending s sorts by minimum element
}

int component_count_after_removal(const Graph& g, const std::vector<int>& t) {
  std::vector<char> alive(g.order() + 1, 1);
  alive[0] = 0;
  for (int v : t) {
    check_vertex(v, g.order());
    alive[v] = 0;
  }
  return component_count_alive(g, alive);
}

// ----- disconnecting sets -----------------------------------------------------

std::vector<DisconnectingSet> enumerate_ids(const Graph& g) {
  int n = g.order();
  if (n > 24) throw std::invalid_argument("enumerate_ids: order too large for subset scan");
  std::uint32_t total = std::uint32_t{1} << n;
  std::vector<int> count(total);
  std::vector<char> alive(n + 1, 0);
  for (std::uint32_t m = 0; m < total; ++m) {
    for (int v = 1; v <= n; ++v) alive[v] = (m >> (v - 1) & 1) ? 0 : 1;
    count[m] = component_count_alive(g, alive);
  }
  std::vector<DisconnectingSet> out;
  for (std::uint32_t m = 0; m < total; ++m) {
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v)
      if (m >> (v - 1) & 1)
        if (count[m] <= count[m & ~(std::uint32_t{1} << (v - 1))]) ok = false;
    if (!ok) continue;
    std::vector<int> members;
    for (int v = 1; v <= n; ++v)
      if (m >> (v - 1) & 1) members.push_back(v);
    out.push_back(DisconnectingSet{std::move(members), count[m]});
  }
  std::sort(out.begin(), out.end(), [](const DisconnectingSet& a, const DisconnectingSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

// ----- paths ------------------------------------------------------------------

namespace {

void sort_paths(std::vector<VertexPath>& paths) {
  std::sort(paths.begin(), paths.end(), [](const VertexPath& a, const VertexPath& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
}

void extend_induced(const Graph& g, std::vector<int>& path, std::vector<char>& used,
                    std::vector<VertexPath>& out) {
  int last = path.back();
  if (path.size() >= 2 && path.front() < last)
    out.push_back(VertexPath{path, PathKind::induced});
  for (int u : g.neighbors(last)) {
    if (used[u]) continue;
    bool chord = false;
    for (size_t k = 0; k + 1 < path.size() && !chord; ++k)
      if (g.adjacent(path[k], u)) chord = true;
    if (chord) continue;
    used[u] = 1;
    path.push_back(u);
    extend_induced(g, path, used, out);
    path.pop_back();
    used[u] = 0;
  }
}

// Does the order-preserving subsequence i, sub..., j run along edges?
bool subsequence_is_path(const Graph& g, int i, const std::vector<int>& interior,
                         std::uint32_t keep, int j) {
  int prev = i;
  for (size_t k = 0; k < interior.size(); ++k)
    if (keep >> k & 1) {
      if (!g.adjacent(prev, interior[k])) return false;
      prev = interior[k];
    }
  return g.adjacent(prev, j);
}

bool has_shortcut(const Graph& g, int i, const std::vector<int>& interior, int j) {
  std::uint32_t full = (std::uint32_t{1} << interior.size()) - 1;
  for (std::uint32_t keep = 0; keep < full; ++keep)  // proper subsets only
    if (subsequence_is_path(g, i, interior, keep, j)) return true;
  return false;
}

void extend_admissible(const Graph& g, int i, int j, std::vector<int>& interior,
                       std::vector<char>& used, std::vector<VertexPath>& out) {
  int last = interior.empty() ? i : interior.back();
  if (g.adjacent(last, j)) {
    bool ok = interior.empty() ? true : !has_shortcut(g, i, interior, j);
    if (ok) {
      std::vector<int> seq;
      seq.push_back(i);
      seq.insert(seq.end(), interior.begin(), interior.end());
      seq.push_back(j);
      out.push_back(VertexPath{std::move(seq), PathKind::admissible});
    }
  }
  for (int u : g.neighbors(last)) {
    if (used[u] || u == j) continue;
    if (u > i && u < j) continue;  // interior vertices stay outside [i, j]
    used[u] = 1;
    interior.push_back(u);
    extend_admissible(g, i, j, interior, used, out);
    interior.pop_back();
    used[u] = 0;
  }
}

}  // namespace

std::vector<VertexPath> enumerate_induced_paths(const Graph& g) {
  std::vector<VertexPath> out;
  std::vector<char> used(g.order() + 1, 0);
  std::vector<int> path;
  for (int s = 1; s <= g.order(); ++s) {
    used[s] = 1;
    path.push_back(s);
    extend_induced(g, path, used, out);
    path.pop_back();
    used[s] = 0;
  }
  sort_paths(out);
  return out;
}

std::vector<VertexPath> enumerate_admissible_paths(const Graph& g) {
  std::vector<VertexPath> out;
  std::vector<char> used(g.order() + 1, 0);
  std::vector<int> interior;
  for (int i = 1; i <= g.order(); ++i)
    for (int j = i + 1; j <= g.order(); ++j) {
      used[i] = used[j] = 1;
      extend_admissible(g, i, j, interior, used, out);
      used[i] = used[j] = 0;
    }
  sort_paths(out);
  return out;
}

int longest_induced_path_order(const Graph& g) {
  int best = 0;
  for (const VertexPath& p : enumerate_induced_paths(g))
    best = std::max(best, static_cast<int>(p.vertices.size()));
  return best;
}

int longest_admissible_path_order(const Graph& g) {
  int best = 0;
  for (const VertexPath& p : enumerate_admissible_paths(g))
    best = std::max(best, static_cast<int>(p.vertices.size()));
  return best;
}

// ----- covers, coloring, cliques ----------------------------------------------

std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g) {
  int n = g.order();
  if (n > 24) throw std::invalid_argument("minimal_vertex_covers: order too large");
  std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::uint32_t> covers;
  for (std::uint32_t m = 0; m < total; ++m) {
    bool ok = true;
    for (auto [a, b] : g.edges())
      if (!(m >> (a - 1) & 1) && !(m >> (b - 1) & 1)) {
        ok = false;
        break;
      }
    if (ok) covers.push_back(m);
  }
  std::vector<std::vector<int>> out;
  for (std::uint32_t m : covers) {
    bool minimal = true;
    for (std::uint32_t other : covers)
      if (other != m && (other & m) == other) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    std::vector<int> c;
    for (int v = 1; v <= n; ++v)
      if (m >> (v - 1) & 1) c.push_back(v);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

bool k_colorable(const Graph& g, int k, std::vector<int>& color, int v, int used) {
  if (v > g.order()) return true;
  int limit = std::min(k, used + 1);  // new colors introduced in order
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (int u = 1; u < v && ok; ++u)
      if (color[u] == c && g.adjacent(u, v)) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (k_colorable(g, k, color, v + 1, std::max(used, c))) return true;
    color[v] = 0;
  }
  return false;
}

void clique_search(const Graph& g, std::vector<int>& cand, int size, int& best) {
  if (size > best) best = size;
  if (size + static_cast<int>(cand.size()) <= best) return;
  for (size_t idx = 0; idx < cand.size(); ++idx) {
    if (size + static_cast<int>(cand.size() - idx) <= best) return;
    int v = cand[idx];
    std::vector<int> next;
    for (size_t k = idx + 1; k < cand.size(); ++k)
      if (g.adjacent(v, cand[k])) next.push_back(cand[k]);
    clique_search(g, next, size + 1, best);
  }
}

}  // namespace

int clique_number(const Graph& g) {
  std::vector<int> cand(g.order());
  std::iota(cand.begin(), cand.end(), 1);
  int best = 1;
  clique_search(g, cand, 0, best);
  return best;
}

int chromatic_number(const Graph& g) {
  if (g.edge_count() == 0) return 1;
  std::vector<int> color(g.order() + 1, 0);
  for (int k = clique_number(g); k <= g.order(); ++k) {
    std::fill(color.begin(), color.end(), 0);
    if (k_colorable(g, k, color, 1, 0)) return k;
  }
  return g.order();
}

std::vector<int> proper_coloring(const Graph& g) {
  std::vector<int> color(g.order() + 1, 0);
  if (g.edge_count() == 0) {
    std::fill(color.begin() + 1, color.end(), 1);
    return color;
  }
  for (int k = clique_number(g); k <= g.order(); ++k) {
    std::fill(color.begin(), color.end(), 0);
    if (k_colorable(g, k, color, 1, 0)) return color;
  }
  throw std::logic_error("proper_coloring: unreachable");
}

bool is_closed_labeling(const Graph& g) {
  const auto& es = g.edges();
  for (size_t a = 0; a < es.size(); ++a)
    for (size_t b = a + 1; b < es.size(); ++b) {
      auto [i, j] = es[a];
      auto [k, l] = es[b];
      if (i == k && j != l && !g.adjacent(j, l)) return false;
      if (j == l && i != k && !g.adjacent(i, k)) return false;
    }
  return true;
}

// ----- named families ----------------------------------------------------------

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return Graph(n, std::move(e));
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph make_complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw std::invalid_argument("multipartite: at least one part");
  int n = 0;
  std::vector<int> part_of;
  part_of.push_back(0);
  for (size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw std::invalid_argument("multipartite: part sizes >= 1");
    for (int k = 0; k < part_sizes[p]; ++k) part_of.push_back(static_cast<int>(p));
    n += part_sizes[p];
  }
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (part_of[i] != part_of[j]) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph make_net() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 6}});
}

Graph make_family(FamilyKind kind, const std::vector<int>& params) {
  auto one = [&]() {
    if (params.size() != 1) throw std::invalid_argument("family: expected a single size");
    return params[0];
  };
  switch (kind) {
    case FamilyKind::path: return make_path(one());
    case FamilyKind::cycle: return make_cycle(one());
    case FamilyKind::complete: return make_complete(one());
    case FamilyKind::complete_multipartite: return make_complete_multipartite(params);
    case FamilyKind::net:
      if (!params.empty()) throw std::invalid_argument("family: net takes no parameters");
      return make_net();
  }
  throw std::invalid_argument("family: unknown kind");
}

// ----- corpora ------------------------------------------------------------------

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("all_graphs: supported for 1 <= n <= 7");
  std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  std::vector<Graph> out;
  out.reserve(total);
  for (std::uint64_t m = 0; m < total; ++m) out.push_back(graph_from_mask(n, m));
  return out;
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (connected_components(g).size() == 1) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> corpus_all_connected(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n)
    for (Graph& g : all_connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace sympoly
