#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sympoly/primes.hpp"

using namespace sympoly;

namespace {

std::set<std::vector<int>> support_sets(const std::vector<LabeledPrime>& primes) {
  std::set<std::vector<int>> out;
  for (const LabeledPrime& p : primes) out.insert(p.support.members);
  return out;
}

std::set<std::vector<int>> support_sets(const std::vector<PrimeSupport>& primes) {
  std::set<std::vector<int>> out;
  for (const PrimeSupport& p : primes) out.insert(p.members);
  return out;
}

}  // namespace

TEST_CASE("edge ideal primes") {
  CHECK(support_sets(edge_ideal_primes(make_complete(3))) ==
        std::set<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(support_sets(edge_ideal_primes(make_complete(2))) ==
        std::set<std::vector<int>>{{1}, {2}});
  CHECK(support_sets(edge_ideal_primes(make_path(3))) ==
        std::set<std::vector<int>>{{2}, {1, 3}});
  CHECK_THROWS_AS(edge_ideal_primes(Graph(2, {})), std::domain_error);
}

TEST_CASE("gin primes") {
  // P3 in dim 6: three choices over the whole path, then T={2} forcing {x2,y2}
  CHECK(support_sets(gin_primes(make_path(3))) ==
        std::set<std::vector<int>>{{2, 3}, {1, 3}, {1, 2}, {2, 5}});
  for (int n = 2; n <= 5; ++n) {
    std::set<std::vector<int>> expect;
    for (int u = 1; u <= n; ++u) {
      std::vector<int> sup;
      for (int i = 1; i <= n; ++i)
        if (i != u) sup.push_back(i);
      expect.insert(sup);
    }
    CHECK(support_sets(gin_primes(make_complete(n))) == expect);
  }
  CHECK(support_sets(gin_primes(make_complete(2))) == std::set<std::vector<int>>{{1}, {2}});
}

TEST_CASE("inid primes") {
  // triangle: (y2,y3), (x1,y3), (x1,x2) with y_i at n+i
  CHECK(support_sets(inid_primes(make_complete(3))) ==
        std::set<std::vector<int>>{{5, 6}, {1, 6}, {1, 2}});
  CHECK(support_sets(inid_primes(make_complete(2))) == std::set<std::vector<int>>{{1}, {4}});
}

TEST_CASE("formula evaluation for explicit cut set and representatives") {
  // net graph, T = {1,2,3}: singleton components force U = (4,5,6) and the
  // support collects every x and y over T
  PrimeSupport net_prime = inid_prime_for(make_net(), {1, 2, 3}, {4, 5, 6});
  CHECK(net_prime.members == std::vector<int>{1, 2, 3, 7, 8, 9});
  PrimeSupport net_gin = gin_prime_for(make_net(), {1, 2, 3}, {4, 5, 6});
  CHECK(net_gin.members == std::vector<int>{1, 2, 3, 7, 8, 9});

  // P3 with T = {2}
  CHECK(gin_prime_for(make_path(3), {2}, {1, 3}).members == std::vector<int>{2, 5});

  CHECK_THROWS_AS(gin_prime_for(make_path(3), {2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(gin_prime_for(make_path(3), {2}, {1, 1}), std::invalid_argument);
}

TEST_CASE("brute force transversals") {
  MonomialIdeal sample = minimalize({Monomial::squarefree(4, {1, 2, 3}),
                                     Monomial::squarefree(4, {1, 2, 4}),
                                     Monomial::squarefree(4, {3, 4})});
  CHECK(support_sets(brute_force_primes(sample)) ==
        std::set<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

  CHECK(support_sets(brute_force_primes(minimalize({Monomial::squarefree(2, {1, 2})}))) ==
        std::set<std::vector<int>>{{1}, {2}});

  CHECK(support_sets(brute_force_primes(inid_ideal(make_complete(3)))) ==
        std::set<std::vector<int>>{{5, 6}, {1, 6}, {1, 2}});

  MonomialIdeal fat{2, {Monomial(2, {Int(2), Int(0)})}, true};
  CHECK_THROWS_AS(brute_force_primes(fat), std::invalid_argument);
}

TEST_CASE("oracle equivalence on all connected graphs, n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      CHECK(support_sets(gin_primes(g)) == support_sets(brute_force_primes(gin_ideal(g))));
      CHECK(support_sets(inid_primes(g)) == support_sets(brute_force_primes(inid_ideal(g))));
      CHECK(support_sets(edge_ideal_primes(g)) ==
            support_sets(brute_force_primes(edge_ideal(g))));
    }
}

TEST_CASE("oracle equivalence on disconnected graphs, n <= 5") {
  for (int n = 3; n <= 5; ++n)
    for (const Graph& g : all_graphs(n)) {
      if (g.edge_count() == 0) continue;
      if (connected_components(g).size() < 2) continue;
      CHECK(support_sets(gin_primes(g)) == support_sets(brute_force_primes(gin_ideal(g))));
      CHECK(support_sets(inid_primes(g)) == support_sets(brute_force_primes(inid_ideal(g))));
      CHECK(support_sets(edge_ideal_primes(g)) ==
            support_sets(brute_force_primes(edge_ideal(g))));
    }
}

TEST_CASE("prime supports are antichains") {
  for (const Graph& g : {make_net(), make_cycle(5), make_path(5), make_complete(4)}) {
    for (auto primes : {gin_primes(g), inid_primes(g), edge_ideal_primes(g)})
      for (size_t a = 0; a < primes.size(); ++a)
        for (size_t b = 0; b < primes.size(); ++b)
          if (a != b) CHECK_FALSE(primes[a].support.contains(primes[b].support));
  }
}

TEST_CASE("subgraph primes embed into host primes, n <= 4") {
  // for every connected induced subgraph H and every minimal prime downstairs
  // there is a minimal prime upstairs containing its image
  for (int n = 3; n <= 4; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
        std::vector<int> w;
        for (int v = 1; v <= n; ++v)
          if (m >> (v - 1) & 1) w.push_back(v);
        if (w.size() < 2) continue;
        InducedSubgraph sub = induced_subgraph(g, w);
        if (sub.graph.edge_count() == 0) continue;
        if (connected_components(sub.graph).size() != 1) continue;
        int hn = sub.graph.order();
        for (int kind = 0; kind < 3; ++kind) {
          auto down = kind == 0   ? edge_ideal_primes(sub.graph)
                      : kind == 1 ? gin_primes(sub.graph)
                                  : inid_primes(sub.graph);
          auto up = kind == 0   ? edge_ideal_primes(g)
                    : kind == 1 ? gin_primes(g)
                                : inid_primes(g);
          for (const LabeledPrime& dp : down) {
            std::vector<int> image;
            for (int i : dp.support.members)
              image.push_back(i <= hn ? sub.new_to_old[i - 1] : n + sub.new_to_old[i - hn - 1]);
            std::sort(image.begin(), image.end());
            PrimeSupport embedded(2 * n, image);
            bool contained = false;
            for (const LabeledPrime& hp : up)
              if (hp.support.contains(embedded)) {
                contained = true;
                break;
              }
            CHECK(contained);
          }
        }
      }
    }
}

TEST_CASE("distinct cut-set choices never collide on a support, n <= 5") {
  // the support determines (T, U): T is readable off the y-block (gin) or the
  // doubled indices (inid), and each representative is the one component
  // member the support misses
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : all_graphs(n)) {
      if (g.edge_count() == 0) continue;
      for (const LabeledPrime& p : gin_primes(g)) CHECK(p.witnesses.size() == 1);
      for (const LabeledPrime& p : inid_primes(g)) CHECK(p.witnesses.size() == 1);
    }
}

TEST_CASE("the net cut-set prime contains every triangle prime") {
  PrimeSupport big = inid_prime_for(make_net(), {1, 2, 3}, {4, 5, 6});
  // triangle primes live in dim 6; re-index into the net's dim 12 ambient
  for (const LabeledPrime& p : inid_primes(make_complete(3))) {
    std::vector<int> image;
    for (int i : p.support.members) image.push_back(i <= 3 ? i : 6 + (i - 3));
    CHECK(PrimeSupport(12, big.members).contains(PrimeSupport(12, image)));
  }
}

TEST_CASE("witnesses recorded for every support") {
  for (const LabeledPrime& p : gin_primes(make_net())) {
    CHECK_FALSE(p.witnesses.empty());
    for (const PrimeWitness& w : p.witnesses) {
      CHECK_FALSE(w.from_cover);
      CHECK(gin_prime_for(make_net(), w.cut_set, w.reps) == p.support);
    }
  }
  for (const LabeledPrime& p : edge_ideal_primes(make_net())) {
    CHECK(p.witnesses.size() == 1);
    CHECK(p.witnesses.front().from_cover);
    CHECK(p.witnesses.front().cover == p.support.members);
  }
}
