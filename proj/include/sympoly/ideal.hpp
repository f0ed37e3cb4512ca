#ifndef SYMPOLY_IDEAL_HPP
#define SYMPOLY_IDEAL_HPP

#include <string>
#include <vector>

#include "sympoly/graph.hpp"
#include "sympoly/rational.hpp"

namespace sympoly {

// Monomial as an exponent vector over an explicit ambient variable set.
// Convention used throughout: in a 2n-dimensional ambient coming from a graph
// on n vertices, variable index i in 1..n is x_i and index n+i is y_i.
struct Monomial {
  int dim = 0;
  std::vector<Int> exps;  // length dim, entries >= 0

  Monomial() = default;
  Monomial(int d, std::vector<Int> e);
  /// Squarefree monomial with exponent 1 exactly on the given 1-based indices.
  static Monomial squarefree(int dim, const std::vector<int>& indices);

  Int degree() const;
  bool divides(const Monomial& other) const;
  bool is_squarefree() const;
  std::vector<int> support() const;  // 1-based indices with positive exponent

  bool operator==(const Monomial& o) const { return dim == o.dim && exps == o.exps; }
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);

/// Canonical generator order: total degree, then exponent vector lexicographic.
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialIdeal {
  int dim = 0;
  std::vector<Monomial> gens;  // canonical order when minimal
  bool minimal = false;
};

// Monomial prime ideal (x_i | i in members), as a support set.
struct PrimeSupport {
  int dim = 0;
  std::vector<int> members;  // sorted, nonempty, within 1..dim

  PrimeSupport() = default;
  PrimeSupport(int d, std::vector<int> m);
  bool contains(const PrimeSupport& o) const;  // o.members subset of members
  bool operator==(const PrimeSupport& o) const { return dim == o.dim && members == o.members; }
  bool operator<(const PrimeSupport& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
  }
};

/// Inclusion-minimal generating set: deduplicated divisibility antichain in
/// canonical order.
MonomialIdeal minimalize(const std::vector<Monomial>& gens);

// ----- graph-derived ideals --------------------------------------------------
// All three live in the 2n-variable ambient of the host graph and reject
// edgeless graphs (initial degree would be undefined).

/// (x_a x_b over edges {a,b}).
MonomialIdeal edge_ideal(const Graph& g);

/// Generated by y_{v_1}...y_{v_s} x_i x_j over paths; the minimal generators
/// are exactly the induced-path monomials, which is what gets returned (and
/// checked to be an antichain).
MonomialIdeal gin_ideal(const Graph& g);

/// Lex leading terms of the reduced Groebner basis elements indexed by
/// admissible paths: u x_i y_j with u collecting x over interior vertices
/// above j and y over those below i.
MonomialIdeal inid_ideal(const Graph& g);

// ----- degrees ----------------------------------------------------------------

/// Minimum generator degree; throws std::domain_error on the zero ideal.
Int alpha(const MonomialIdeal& ideal);
/// Maximum generator degree of a minimalized ideal.
Int max_gen_degree(const MonomialIdeal& ideal);

// ----- symbolic powers ----------------------------------------------------------

/// z lies in the m-th symbolic power iff its exponent sum over every prime
/// support reaches m.
bool symbolic_membership(const std::vector<PrimeSupport>& primes, int m, const Monomial& z);

/// Minimal generators of the intersection of the m-th prime powers, computed
/// by iterated pairwise intersection (componentwise max) with minimalization.
MonomialIdeal symbolic_power(const std::vector<PrimeSupport>& primes, int m);

/// Minimalized products of m generators.
MonomialIdeal ordinary_power(const MonomialIdeal& ideal, int m);

/// z is in the q-th symbolic power and no single-coordinate decrement is.
bool is_minimal_generator(const std::vector<PrimeSupport>& primes, int q, const Monomial& z);

// ----- serialization -------------------------------------------------------------

/// "x1^2*y3" style; indices above n_split print as y_{i-n_split}.  Degree-zero
/// monomials print as "1".
std::string monomial_to_string(const Monomial& m, int n_split = 0);

std::string ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const std::string& text);

}  // namespace sympoly

#endif
