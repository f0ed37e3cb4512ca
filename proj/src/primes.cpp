#include "sympoly/primes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sympoly {

namespace {

void require_edges(const Graph& g) {
  if (g.edge_count() == 0) throw std::domain_error("primes: edgeless graph");
}

std::vector<std::vector<int>> components_after(const Graph& g, const std::vector<int>& cut) {
  std::vector<char> removed(g.order() + 1, 0);
  for (int v : cut) removed[v] = 1;
  std::vector<int> rest;
  for (int v = 1; v <= g.order(); ++v)
    if (!removed[v]) rest.push_back(v);
  if (rest.empty()) return {};
  InducedSubgraph sub = induced_subgraph(g, rest);
  std::vector<std::vector<int>> comps;
  for (const std::vector<int>& c : connected_components(sub.graph)) {
    std::vector<int> orig;
    for (int v : c) orig.push_back(sub.new_to_old[v - 1]);
    comps.push_back(std::move(orig));
  }
  return comps;
}

void check_reps(const std::vector<std::vector<int>>& comps, const std::vector<int>& reps) {
  if (reps.size() != comps.size())
    throw std::invalid_argument("primes: one representative per component required");
  for (size_t k = 0; k < comps.size(); ++k)
    if (!std::binary_search(comps[k].begin(), comps[k].end(), reps[k]))
      throw std::invalid_argument("primes: representative not in its component");
}

PrimeSupport prime_support_for(const Graph& g, const std::vector<int>& cut_set,
                               const std::vector<std::vector<int>>& comps,
                               const std::vector<int>& reps, bool gin_shape) {
  int n = g.order();
  std::vector<int> members;
  for (int v : cut_set) {
    members.push_back(v);
    members.push_back(n + v);
  }
  for (size_t k = 0; k < comps.size(); ++k)
    for (int v : comps[k]) {
      if (v == reps[k]) continue;
      if (gin_shape)
        members.push_back(v);
      else
        members.push_back(v < reps[k] ? v : n + v);
    }
  return PrimeSupport(2 * n, std::move(members));
}

// Enumerate all (T, U) primes for either shape, dedupe by support.
std::vector<LabeledPrime> tu_primes(const Graph& g, bool gin_shape) {
  require_edges(g);
  std::map<PrimeSupport, std::vector<PrimeWitness>> by_support;
  for (const DisconnectingSet& ids : enumerate_ids(g)) {
    std::vector<std::vector<int>> comps = components_after(g, ids.members);
    // representative tuples in lexicographic order over the component order
    std::vector<size_t> pick(comps.size(), 0);
    for (bool more = true; more;) {
      std::vector<int> reps;
      for (size_t k = 0; k < comps.size(); ++k) reps.push_back(comps[k][pick[k]]);
      PrimeSupport sup = prime_support_for(g, ids.members, comps, reps, gin_shape);
      by_support[sup].push_back(PrimeWitness{false, {}, ids.members, reps});
      more = false;
      for (size_t k = comps.size(); k-- > 0;) {
        if (++pick[k] < comps[k].size()) {
          more = true;
          break;
        }
        pick[k] = 0;
      }
    }
  }
  std::vector<LabeledPrime> out;
  for (auto& [sup, wits] : by_support) out.push_back(LabeledPrime{sup, std::move(wits)});
  for (size_t a = 0; a < out.size(); ++a)
    for (size_t b = 0; b < out.size(); ++b)
      if (a != b && out[a].support.contains(out[b].support))
        throw std::logic_error("primes: enumerated supports are not an antichain");
  return out;  // map order is the canonical (size, lex) order
}

}  // namespace

std::vector<LabeledPrime> edge_ideal_primes(const Graph& g) {
  require_edges(g);
  int dim = 2 * g.order();
  std::vector<LabeledPrime> out;
  for (const std::vector<int>& cover : minimal_vertex_covers(g)) {
    PrimeWitness w;
    w.from_cover = true;
    w.cover = cover;
    out.push_back(LabeledPrime{PrimeSupport(dim, cover), {std::move(w)}});
  }
  std::sort(out.begin(), out.end(),
            [](const LabeledPrime& a, const LabeledPrime& b) { return a.support < b.support; });
  return out;
}

std::vector<LabeledPrime> gin_primes(const Graph& g) { return tu_primes(g, true); }

std::vector<LabeledPrime> inid_primes(const Graph& g) { return tu_primes(g, false); }

PrimeSupport gin_prime_for(const Graph& g, const std::vector<int>& cut_set,
                           const std::vector<int>& reps) {
  std::vector<std::vector<int>> comps = components_after(g, cut_set);
  check_reps(comps, reps);
  return prime_support_for(g, cut_set, comps, reps, true);
}

PrimeSupport inid_prime_for(const Graph& g, const std::vector<int>& cut_set,
                            const std::vector<int>& reps) {
  std::vector<std::vector<int>> comps = components_after(g, cut_set);
  check_reps(comps, reps);
  return prime_support_for(g, cut_set, comps, reps, false);
}

std::vector<PrimeSupport> brute_force_primes(const MonomialIdeal& ideal) {
  if (ideal.gens.empty()) throw std::invalid_argument("brute_force_primes: zero ideal");
  for (const Monomial& m : ideal.gens)
    if (!m.is_squarefree()) throw std::invalid_argument("brute_force_primes: ideal not squarefree");

  // Berge expansion: maintain the minimal transversals of the supports seen
  // so far, extend by each element of the next support, re-minimalize.
  std::vector<std::vector<int>> partial{{}};
  for (const Monomial& m : ideal.gens) {
    std::vector<int> sup = m.support();
    std::vector<std::vector<int>> grown;
    for (const std::vector<int>& t : partial) {
      bool hits = false;
      for (int v : sup)
        if (std::binary_search(t.begin(), t.end(), v)) {
          hits = true;
          break;
        }
      if (hits) {
        grown.push_back(t);
        continue;
      }
      for (int v : sup) {
        std::vector<int> ext = t;
        ext.insert(std::lower_bound(ext.begin(), ext.end(), v), v);
        grown.push_back(std::move(ext));
      }
    }
    std::sort(grown.begin(), grown.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    partial.clear();
    for (const std::vector<int>& c : grown) {
      bool minimal = true;
      for (const std::vector<int>& k : partial)
        if (std::includes(c.begin(), c.end(), k.begin(), k.end())) {
          minimal = false;
          break;
        }
      if (minimal) partial.push_back(c);
    }
  }
  std::vector<PrimeSupport> out;
  for (std::vector<int>& t : partial) out.push_back(PrimeSupport(ideal.dim, std::move(t)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeSupport> supports_of(const std::vector<LabeledPrime>& primes) {
  std::vector<PrimeSupport> out;
  out.reserve(primes.size());
  for (const LabeledPrime& p : primes) out.push_back(p.support);
  return out;
}

}  // namespace sympoly
