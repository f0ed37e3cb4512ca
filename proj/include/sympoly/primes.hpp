#ifndef SYMPOLY_PRIMES_HPP
#define SYMPOLY_PRIMES_HPP

#include <vector>

#include "sympoly/graph.hpp"
#include "sympoly/ideal.hpp"

namespace sympoly {

// Combinatorial witness for a minimal prime: either a minimal vertex cover
// (edge ideal) or a disconnecting set plus one representative vertex per
// remaining component (initial / generic initial ideal).
struct PrimeWitness {
  bool from_cover = false;
  std::vector<int> cover;    // when from_cover
  std::vector<int> cut_set;  // otherwise: the disconnecting set T
  std::vector<int> reps;     // and the component representatives U
};

struct LabeledPrime {
  PrimeSupport support;
  std::vector<PrimeWitness> witnesses;  // all witnesses producing this support
};

/// One prime per minimal vertex cover C: support {i : i in C} inside dim 2n.
std::vector<LabeledPrime> edge_ideal_primes(const Graph& g);

/// Supports of (x_i, y_i | i in T) + sum over components (x_i | i != u_i),
/// over disconnecting sets T and representative tuples U.  Deduplicated by
/// support; incomparability of the result is asserted.
std::vector<LabeledPrime> gin_primes(const Graph& g);

/// Supports of (x_i, y_i | i in T) + per-component (x_i | i < u_i) +
/// (y_i | i > u_i), same enumeration scheme.
std::vector<LabeledPrime> inid_primes(const Graph& g);

/// Evaluate the prime formula for one explicit (T, U) choice.  T need not be
/// irredundant; U must pick one vertex from each component of g minus T.
PrimeSupport gin_prime_for(const Graph& g, const std::vector<int>& cut_set,
                           const std::vector<int>& reps);
PrimeSupport inid_prime_for(const Graph& g, const std::vector<int>& cut_set,
                            const std::vector<int>& reps);

/// Oracle: minimal primes of a squarefree monomial ideal are the minimal
/// transversals of its generator supports.
std::vector<PrimeSupport> brute_force_primes(const MonomialIdeal& ideal);

std::vector<PrimeSupport> supports_of(const std::vector<LabeledPrime>& primes);

}  // namespace sympoly

#endif
