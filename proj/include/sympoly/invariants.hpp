#ifndef SYMPOLY_INVARIANTS_HPP
#define SYMPOLY_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "sympoly/graph.hpp"
#include "sympoly/ideal.hpp"
#include "sympoly/polyhedron.hpp"
#include "sympoly/primes.hpp"

namespace sympoly {

enum class IdealKind { edge, gin, inid };

std::string kind_name(IdealKind kind);
IdealKind kind_from_string(const std::string& name);

MonomialIdeal make_ideal(const Graph& g, IdealKind kind);
std::vector<LabeledPrime> make_primes(const Graph& g, IdealKind kind);
HPolyhedron make_sp(const Graph& g, IdealKind kind);

/// Minimum coordinate sum over the vertices of the symbolic polyhedron of the
/// chosen ideal; cross-checked against the exact LP optimum on every call.
Rat waldschmidt(const Graph& g, IdealKind kind);
/// Maximum coordinate sum over the vertices (the polyhedron is unbounded, so
/// only vertices participate).
Rat areg(const Graph& g, IdealKind kind);

/// Push coordinates of a 2|W|-dimensional vector into the 2n-dimensional
/// ambient along the label map W = new_to_old, zero elsewhere.
QVector embed_coords(const QVector& sub, const std::vector<int>& new_to_old, int host_n);

struct InvariantReport {
  std::string graph_id;  // graph6 encoding
  IdealKind kind;
  Rat waldschmidt_value;
  Rat areg_value;
  int vertex_count = 0;
  int full_vertex_count = 0;
  int ell = 0;      // longest induced path, vertex count
  int ell_lex = 0;  // longest admissible path, vertex count
};

InvariantReport invariant_report(const Graph& g, IdealKind kind);

// ----- vertex-set decompositions ---------------------------------------------

struct DecompositionPart {
  std::vector<int> vertices;      // the contributing induced subgraph
  std::vector<QVector> embedded;  // its vertices, pushed into 2n coordinates
};

struct DecompositionReport {
  std::string graph_id;
  IdealKind kind;
  std::vector<DecompositionPart> parts;
  std::vector<QVector> reconstructed;  // sorted union over parts
  std::vector<QVector> direct;         // enumerate_vertices of the whole graph
  bool match = false;
};

/// Rebuilds the vertex set of SP from the full vertices of every connected
/// induced subgraph with an edge; requires g connected.  Kinds: gin or inid.
DecompositionReport subgraph_decomposition(const Graph& g, IdealKind kind);

struct PartitionReport {
  std::string graph_id;
  IdealKind kind;
  std::vector<DecompositionPart> parts;  // per component with >= 1 edge
  std::vector<QVector> direct;
  bool disjoint = false;
  bool match = false;
};

/// Checks that the vertex set of a disconnected graph's polyhedron is the
/// disjoint union of the embedded per-component vertex sets.  Components
/// without edges contribute nothing.
PartitionReport disconnected_partition(const Graph& g, IdealKind kind);

// ----- theorem verification -----------------------------------------------------

struct TheoremFailure {
  std::string graph_id;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  std::string corpus;
  int checked = 0;  // graphs the hypothesis applied to
  bool passed = true;
  std::vector<TheoremFailure> failures;
};

const std::vector<std::string>& theorem_ids();

/// Runs one named check over the corpus; graphs that miss the hypothesis are
/// skipped.  Work is distributed over `workers` threads (0 = hardware);
/// output is independent of the schedule.
TheoremReport verify_theorem(const std::string& theorem_id, const std::vector<Graph>& corpus,
                             const std::string& corpus_name,
                             std::optional<IdealKind> kind = std::nullopt, int workers = 0);

struct ConjectureReport {
  std::string graph_id;
  int ell = 0;
  int ell_lex = 0;
  Rat areg_gin;
  Rat areg_inid;
};

/// Non-asserting: reports the asymptotic regularities next to the two path
/// bounds and leaves the comparison to the reader.
ConjectureReport conjecture_report(const Graph& g);

// ----- corpora -------------------------------------------------------------------

struct Corpus {
  std::string name;
  std::vector<Graph> graphs;
};

/// "all-connected:N", "family:NAME:A[..B]", "family:kpartite:c1,c2,...",
/// or a path to a file of graph6 lines.
Corpus parse_corpus_spec(const std::string& spec);

/// Graphs with exactly two connected components and at least one edge, over
/// all orders up to max_total.
std::vector<Graph> corpus_two_component(int max_total);

}  // namespace sympoly

#endif
