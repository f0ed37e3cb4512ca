#ifndef SYMPOLY_POLYHEDRON_HPP
#define SYMPOLY_POLYHEDRON_HPP

#include <vector>

#include "sympoly/ideal.hpp"
#include "sympoly/rational.hpp"

namespace sympoly {

// H-polyhedron of symbolic-polyhedron shape inside the nonnegative orthant:
//   { a >= 0 : sum_{i in M} a_i >= 1  for every listed support M }.
// The coordinate bounds are implicit zero-facets; the supports are one-facets.
struct HPolyhedron {
  int dim = 0;
  std::vector<PrimeSupport> one_facets;  // pairwise incomparable, sorted
};

/// Builds the polyhedron from minimal prime supports.  Throws on an empty
/// list or on comparable supports (a sign the input was not a minimal
/// decomposition).
HPolyhedron build_sp(const std::vector<PrimeSupport>& primes, int dim);

bool contains(const HPolyhedron& p, const QVector& a);

/// Exact vertex set, deduplicated, sorted lexicographically.  Computed by the
/// double description method on the homogenization cone over the nonnegative
/// orthant; every output has dim linearly independent tight constraints.
std::vector<QVector> enumerate_vertices(const HPolyhedron& p);

/// Vertices with a_j + a_{n+j} != 0 for every 1 <= j <= n.  Requires
/// p.dim == 2n.
std::vector<QVector> full_vertices(const HPolyhedron& p, int n);

/// Minimum / maximum coordinate sum over the vertex set.  The polyhedron is
/// unbounded upward, so the maximum is taken over vertices only, never via an
/// optimizer.
Rat min_coord_sum(const HPolyhedron& p);
Rat max_vertex_coord_sum(const HPolyhedron& p);

/// Exact optimum of: minimize sum a_i over p.  Solved by exact rational
/// simplex pivoting (Bland's rule) on the dual program, which starts from a
/// trivial feasible basis; strong duality gives the primal value.
Rat lp_min_sum(const HPolyhedron& p);

struct TightInfo {
  int tight_count = 0;  // tight zero- and one-facets at the point
  int rank = 0;         // rank of their normal vectors
};

/// Requires contains(p, a).
TightInfo tight_constraint_count(const HPolyhedron& p, const QVector& a);

/// Test oracle: enumerate every dim-subset of facet normals, solve the square
/// system, keep feasible solutions.  Exponential; only for small instances.
std::vector<QVector> enumerate_vertices_by_tight_sets(const HPolyhedron& p);

}  // namespace sympoly

#endif
