#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "sympoly/polyhedron.hpp"
#include "sympoly/primes.hpp"

#include "support.hpp"

using namespace sympoly;
using testsupport::qv;
using testsupport::qv_scaled;

namespace {

HPolyhedron worked_example_sp() {
  return build_sp({PrimeSupport(4, {1, 3}), PrimeSupport(4, {1, 4}), PrimeSupport(4, {2, 3}),
                   PrimeSupport(4, {2, 4}), PrimeSupport(4, {3, 4})},
                  4);
}

HPolyhedron sp_of(const Graph& g, int kind) {
  auto primes = kind == 0   ? edge_ideal_primes(g)
                : kind == 1 ? gin_primes(g)
                            : inid_primes(g);
  return build_sp(supports_of(primes), 2 * g.order());
}

std::set<QVector> vset(const std::vector<QVector>& vs) { return {vs.begin(), vs.end()}; }

}  // namespace

TEST_CASE("build_sp validation") {
  CHECK_THROWS_AS(build_sp({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_sp({PrimeSupport(3, {1}), PrimeSupport(3, {1, 2})}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_sp({PrimeSupport(3, {1})}, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_sp({PrimeSupport(3, {1}), PrimeSupport(3, {1})}, 3),
                  std::invalid_argument);
  HPolyhedron p = build_sp({PrimeSupport(3, {2}), PrimeSupport(3, {1, 3})}, 3);
  CHECK(p.one_facets.size() == 2);
}

TEST_CASE("containment") {
  HPolyhedron tri = sp_of(make_complete(3), 0);
  CHECK(contains(tri, qv({"1/2", "1/2", "1/2", "0", "0", "0"})));
  CHECK_FALSE(contains(tri, qv({"1/2", "1/2", "0", "0", "0", "0"})));
  CHECK(contains(tri, qv({"1", "1", "1", "1", "1", "1"})));
  CHECK_FALSE(contains(tri, qv({"1", "1", "-1", "0", "0", "0"})));
  CHECK_THROWS_AS(contains(tri, qv({"1", "1"})), std::invalid_argument);
}

TEST_CASE("vertices of the published example polyhedron") {
  std::vector<QVector> vs = enumerate_vertices(worked_example_sp());
  std::set<QVector> expect{qv({"1", "1", "1", "0"}), qv({"1", "1", "0", "1"}),
                           qv({"0", "0", "1", "1"}), qv({"1/2", "1/2", "1/2", "1/2"})};
  CHECK(vset(vs) == expect);
  CHECK(min_coord_sum(worked_example_sp()) == 2);
  CHECK(max_vertex_coord_sum(worked_example_sp()) == 3);
  CHECK(lp_min_sum(worked_example_sp()) == 2);
}

TEST_CASE("vertices sorted lexicographically and deduplicated") {
  std::vector<QVector> vs = enumerate_vertices(worked_example_sp());
  for (size_t k = 0; k + 1 < vs.size(); ++k) CHECK(lex_less(vs[k], vs[k + 1]));
}

TEST_CASE("double description agrees with the tight-set oracle") {
  std::vector<HPolyhedron> cases;
  cases.push_back(worked_example_sp());
  for (int kind = 0; kind < 3; ++kind) {
    cases.push_back(sp_of(make_complete(3), kind));
    cases.push_back(sp_of(make_path(3), kind));
    cases.push_back(sp_of(make_path(4), kind));
    cases.push_back(sp_of(make_cycle(4), kind));
  }
  for (const HPolyhedron& p : cases)
    CHECK(vset(enumerate_vertices(p)) == vset(enumerate_vertices_by_tight_sets(p)));
}

TEST_CASE("gin of K2 has the single vertex (1,1,0,0)") {
  std::vector<QVector> vs = enumerate_vertices(sp_of(make_complete(2), 1));
  CHECK(vs == std::vector<QVector>{qv({"1", "1", "0", "0"})});
}

TEST_CASE("full vertices of complete graphs") {
  for (int n = 2; n <= 5; ++n) {
    HPolyhedron p = sp_of(make_complete(n), 1);
    std::vector<int> ones(n, 1), zeros(n, 0);
    std::vector<int> entries = ones;
    entries.insert(entries.end(), zeros.begin(), zeros.end());
    QVector expected = qv_scaled(Rat(1, n - 1), entries);
    CHECK(full_vertices(p, n) == std::vector<QVector>{expected});
    CHECK(min_coord_sum(p) == Rat(n, n - 1));
    CHECK(lp_min_sum(p) == Rat(n, n - 1));
  }
  CHECK_THROWS_AS(full_vertices(worked_example_sp(), 3), std::invalid_argument);
}

TEST_CASE("full vertices of gin of P3") {
  HPolyhedron p = sp_of(make_path(3), 1);
  std::set<QVector> expect{qv({"1", "0", "1", "0", "1", "0"}),
                           qv({"1/2", "1/2", "1/2", "0", "1/2", "0"})};
  CHECK(vset(full_vertices(p, 3)) == expect);
}

TEST_CASE("the eleven vertices of gin of P4") {
  HPolyhedron p = sp_of(make_path(4), 1);
  std::vector<QVector> vs = enumerate_vertices(p);
  std::set<QVector> expect{
      qv_scaled(1, {1, 1, 0, 0, 0, 0, 0, 0}),
      qv_scaled(1, {0, 1, 1, 0, 0, 0, 0, 0}),
      qv_scaled(1, {0, 0, 1, 1, 0, 0, 0, 0}),
      qv_scaled(1, {1, 0, 1, 0, 0, 1, 0, 0}),
      qv_scaled(1, {0, 1, 0, 1, 0, 0, 1, 0}),
      qv_scaled(1, {1, 0, 0, 1, 0, 1, 1, 0}),
      qv_scaled(Rat(1, 2), {1, 1, 1, 0, 0, 1, 0, 0}),
      qv_scaled(Rat(1, 2), {0, 1, 1, 1, 0, 0, 1, 0}),
      qv_scaled(Rat(1, 2), {1, 1, 0, 1, 0, 1, 1, 0}),
      qv_scaled(Rat(1, 2), {1, 0, 1, 1, 0, 1, 1, 0}),
      qv_scaled(Rat(1, 3), {1, 1, 1, 1, 0, 1, 1, 0})};
  CHECK(vset(vs) == expect);
  // every coordinate counts toward the sums: the minimum over this list is
  // 2 (P4 is bipartite), and the maximum is the induced-path vertex at 4
  CHECK(min_coord_sum(p) == 2);
  CHECK(lp_min_sum(p) == 2);
  CHECK(max_vertex_coord_sum(p) == 4);
}

TEST_CASE("lp matches vertex minimum across a corpus") {
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : all_connected_graphs(n))
      for (int kind = 0; kind < 3; ++kind) {
        HPolyhedron p = sp_of(g, kind);
        CHECK(lp_min_sum(p) == min_coord_sum(p));
      }
}

TEST_CASE("tight constraints") {
  HPolyhedron p = sp_of(make_path(3), 1);
  TightInfo t = tight_constraint_count(p, qv({"1", "0", "1", "0", "1", "0"}));
  CHECK(t.tight_count == 6);
  CHECK(t.rank == 6);
  TightInfo interior = tight_constraint_count(p, qv({"2", "2", "2", "2", "2", "2"}));
  CHECK(interior.tight_count == 0);
  CHECK(interior.rank == 0);
  CHECK_THROWS_AS(tight_constraint_count(p, qv({"0", "0", "0", "0", "0", "0"})),
                  std::invalid_argument);
}

TEST_CASE("every vertex has full tight rank and passes containment") {
  std::vector<HPolyhedron> cases{worked_example_sp(), sp_of(make_net(), 1), sp_of(make_net(), 2),
                                 sp_of(make_cycle(5), 0), sp_of(make_cycle(5), 1)};
  for (const HPolyhedron& p : cases)
    for (const QVector& v : enumerate_vertices(p)) {
      CHECK(contains(p, v));
      TightInfo t = tight_constraint_count(p, v);
      CHECK(t.rank == p.dim);
      CHECK(t.tight_count >= p.dim);
    }
}

TEST_CASE("full vertices are a subset of all vertices") {
  HPolyhedron p = sp_of(make_net(), 1);
  auto all = vset(enumerate_vertices(p));
  for (const QVector& v : full_vertices(p, 6)) CHECK(all.count(v) == 1);
}

TEST_CASE("double description agrees with the oracle on random support antichains") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    int dim = 4 + static_cast<int>(rng() % 3);  // 4..6
    int want = 3 + static_cast<int>(rng() % 5);
    std::vector<std::vector<int>> supports;
    for (int k = 0; k < want; ++k) {
      std::vector<int> members;
      for (int i = 1; i <= dim; ++i)
        if (rng() % 3 == 0) members.push_back(i);
      if (members.empty()) members.push_back(1 + static_cast<int>(rng() % dim));
      supports.push_back(std::move(members));
    }
    // keep only the inclusion-minimal supports
    std::vector<PrimeSupport> facets;
    for (const auto& a : supports) {
      bool minimal = true;
      for (const auto& b : supports)
        if (a != b && std::includes(a.begin(), a.end(), b.begin(), b.end())) minimal = false;
      if (minimal) facets.push_back(PrimeSupport(dim, a));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    HPolyhedron p = build_sp(facets, dim);
    CHECK(vset(enumerate_vertices(p)) == vset(enumerate_vertices_by_tight_sets(p)));
  }
}

TEST_CASE("every one-facet is tight at some enumerated vertex") {
  // the polyhedron is pointed, so each facet (a nonempty face) carries a vertex
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : all_connected_graphs(n))
      for (int kind = 0; kind < 3; ++kind) {
        HPolyhedron p = sp_of(g, kind);
        std::vector<QVector> vs = enumerate_vertices(p);
        for (const PrimeSupport& f : p.one_facets) {
          bool touched = false;
          for (const QVector& v : vs) {
            Rat sum = 0;
            for (int i : f.members) sum += v[i - 1];
            if (sum == 1) {
              touched = true;
              break;
            }
          }
          CHECK(touched);
        }
      }
}
