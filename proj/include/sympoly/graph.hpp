#ifndef SYMPOLY_GRAPH_HPP
#define SYMPOLY_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sympoly {

// Simple labeled graph on vertices 1..n.  Labels are significant: the path
// and ideal constructions downstream depend on the vertex order, so graphs
// are never silently relabeled.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Edge list with i < j, sorted ascending.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const;
  std::vector<int> neighbors(int v) const;

  /// Packs the upper-triangle adjacency into a bit mask; usable as a cache
  /// key together with order().  Requires n*(n-1)/2 <= 64.
  std::uint64_t edge_mask() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint8_t> adj_;  // (n+1)*(n+1) matrix
};

/// Bit index of edge {i,j} (i<j) in the packed upper-triangle order used by
/// edge_mask and the graph6 format.
int edge_bit_index(int i, int j);
Graph graph_from_mask(int n, std::uint64_t mask);

// ----- ingestion -----------------------------------------------------------

/// Decodes one line of short-form graph6 (n <= 62).
Graph parse_graph6(const std::string& text);
/// Short-form graph6 encoding, zero padding bits.
std::string to_graph6(const Graph& g);

/// Parses "n <count>" followed by "i j" lines; duplicate edges collapse.
Graph parse_edge_list(const std::string& text);

// ----- subgraphs and components --------------------------------------------

struct InducedSubgraph {
  Graph graph;                  // on 1..|w|, order-preserving relabeling
  std::vector<int> new_to_old;  // new_to_old[k-1] = original label of k
  std::vector<int> old_to_new;  // size n+1; 0 where absent
};

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> w);

/// Partition of 1..n into maximal connected subsets, each sorted, the list
/// sorted by minimum element.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Number of connected components of the subgraph induced on [n] \ t.
/// Removing every vertex yields 0.
int component_count_after_removal(const Graph& g, const std::vector<int>& t);

// ----- disconnecting sets ---------------------------------------------------

struct DisconnectingSet {
  std::vector<int> members;  // sorted
  int component_count;       // components of g minus members
};

/// All vertex subsets T such that removing any member strictly decreases the
/// component count of g minus T.  Includes the empty set.  Ordered by size,
/// then lexicographically.
std::vector<DisconnectingSet> enumerate_ids(const Graph& g);

// ----- paths ----------------------------------------------------------------

enum class PathKind { induced, admissible };

struct VertexPath {
  std::vector<int> vertices;  // endpoints first() < back()
  PathKind kind;
};

/// Paths whose vertex set induces a path graph; one orientation per path,
/// smaller endpoint first.  Ordered by (length, sequence).
std::vector<VertexPath> enumerate_induced_paths(const Graph& g);

/// Paths i .. j with i < j whose interior vertices lie outside [i, j] and
/// that admit no order-preserving interior shortcut which is again a path
/// (the empty shortcut counts: if {i,j} is an edge, only the edge survives).
std::vector<VertexPath> enumerate_admissible_paths(const Graph& g);

/// Maximum vertex count over the respective path family; 0 if no edges.
int longest_induced_path_order(const Graph& g);
int longest_admissible_path_order(const Graph& g);

// ----- covers, coloring, cliques -------------------------------------------

/// Inclusion-minimal vertex sets meeting every edge; [{}] for edgeless g.
std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g);

int chromatic_number(const Graph& g);
int clique_number(const Graph& g);

/// A proper coloring with chromatic_number(g) colors; color[v] in 1..chi for
/// v in 1..n (index 0 unused).  Deterministic.
std::vector<int> proper_coloring(const Graph& g);

/// Checks the closedness condition for the labeling as given: for edges
/// {i,j}, {k,l} with i<j, k<l, i=k forces {j,l} in E and j=l forces {i,k}.
bool is_closed_labeling(const Graph& g);

// ----- named families -------------------------------------------------------

enum class FamilyKind { path, cycle, complete, complete_multipartite, net };

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
/// Parts labeled contiguously in the given order; edges join distinct parts.
Graph make_complete_multipartite(const std::vector<int>& part_sizes);
/// Triangle 1,2,3 with pendant vertices 4,5,6 attached to 1,2,3.
Graph make_net();
Graph make_family(FamilyKind kind, const std::vector<int>& params);

// ----- corpora ---------------------------------------------------------------

/// All labeled graphs on n vertices, ordered by edge mask.
std::vector<Graph> all_graphs(int n);
/// All connected labeled graphs on exactly n vertices.
std::vector<Graph> all_connected_graphs(int n);
/// All connected labeled graphs with 2 <= order <= max_n (every such graph
/// has at least one edge).
std::vector<Graph> corpus_all_connected(int max_n);

}  // namespace sympoly

#endif
