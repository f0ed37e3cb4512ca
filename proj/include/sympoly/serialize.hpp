#ifndef SYMPOLY_SERIALIZE_HPP
#define SYMPOLY_SERIALIZE_HPP

#include <json.hpp>

#include "sympoly/invariants.hpp"

namespace sympoly {

// Wire formats.  Rationals travel as strings "p/q" in lowest terms ("0" and
// plain integers permitted); supports and vertex labels are 1-based.

nlohmann::json ideal_json(const MonomialIdeal& ideal);
nlohmann::json primes_json(const std::vector<LabeledPrime>& primes);
nlohmann::json polyhedron_json(const HPolyhedron& p);
nlohmann::json qvector_json(const QVector& v);
nlohmann::json vertices_json(const Graph& g, IdealKind kind, const HPolyhedron& p,
                             const std::vector<QVector>& vertices);
nlohmann::json invariant_report_json(const InvariantReport& r);
nlohmann::json theorem_report_json(const TheoremReport& r);
nlohmann::json conjecture_report_json(const ConjectureReport& r);

}  // namespace sympoly

#endif
