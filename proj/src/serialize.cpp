#include "sympoly/serialize.hpp"

namespace sympoly {

using nlohmann::json;

json ideal_json(const MonomialIdeal& ideal) {
  json j;
  j["dim"] = ideal.dim;
  j["gens"] = json::array();
  for (const Monomial& m : ideal.gens) {
    json row = json::array();
    for (const Int& e : m.exps) row.push_back(static_cast<long long>(e));
    j["gens"].push_back(std::move(row));
  }
  return j;
}

json primes_json(const std::vector<LabeledPrime>& primes) {
  json arr = json::array();
  for (const LabeledPrime& p : primes) {
    json item;
    item["support"] = p.support.members;
    const PrimeWitness& w = p.witnesses.front();
    if (w.from_cover)
      item["provenance"] = json{{"cover", w.cover}};
    else
      item["provenance"] = json{{"T", w.cut_set}, {"U", w.reps}};
    if (p.witnesses.size() > 1) {
      json extra = json::array();
      for (size_t k = 1; k < p.witnesses.size(); ++k) {
        const PrimeWitness& ww = p.witnesses[k];
        extra.push_back(ww.from_cover ? json{{"cover", ww.cover}}
                                      : json{{"T", ww.cut_set}, {"U", ww.reps}});
      }
      item["other_provenances"] = std::move(extra);
    }
    arr.push_back(std::move(item));
  }
  return arr;
}

json polyhedron_json(const HPolyhedron& p) {
  json j;
  j["dim"] = p.dim;
  j["one_facets"] = json::array();
  for (const PrimeSupport& f : p.one_facets) j["one_facets"].push_back(f.members);
  return j;
}

json qvector_json(const QVector& v) {
  json arr = json::array();
  for (const Rat& c : v) arr.push_back(rat_to_string(c));
  return arr;
}

json vertices_json(const Graph& g, IdealKind kind, const HPolyhedron& p,
                   const std::vector<QVector>& vertices) {
  json j;
  j["graph"] = to_graph6(g);
  j["kind"] = kind_name(kind);
  j["polyhedron"] = polyhedron_json(p);
  j["vertices"] = json::array();
  int n = g.order();
  for (const QVector& v : vertices) {
    bool full = true;
    for (int k = 1; k <= n && full; ++k)
      if (v[k - 1] + v[n + k - 1] == 0) full = false;
    json item;
    item["coords"] = qvector_json(v);
    item["sum"] = rat_to_string(coord_sum(v));
    item["full"] = full;
    j["vertices"].push_back(std::move(item));
  }
  return j;
}

json invariant_report_json(const InvariantReport& r) {
  json j;
  j["graph"] = r.graph_id;
  j["kind"] = kind_name(r.kind);
  j["waldschmidt"] = rat_to_string(r.waldschmidt_value);
  j["areg"] = rat_to_string(r.areg_value);
  j["vertex_count"] = r.vertex_count;
  j["full_vertex_count"] = r.full_vertex_count;
  j["ell"] = r.ell;
  j["ell_lex"] = r.ell_lex;
  return j;
}

json theorem_report_json(const TheoremReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["corpus"] = r.corpus;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  j["failures"] = json::array();
  for (const TheoremFailure& f : r.failures)
    j["failures"].push_back(json{{"graph", f.graph_id}, {"detail", f.detail}});
  return j;
}

json conjecture_report_json(const ConjectureReport& r) {
  json j;
  j["graph"] = r.graph_id;
  j["ell"] = r.ell;
  j["ell_lex"] = r.ell_lex;
  j["areg_gin"] = rat_to_string(r.areg_gin);
  j["areg_inid"] = rat_to_string(r.areg_inid);
  j["gin_matches_ell"] = (r.areg_gin == Rat(r.ell));
  j["inid_matches_ell_lex"] = (r.areg_inid == Rat(r.ell_lex));
  return j;
}

}  // namespace sympoly
