#include "sympoly/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace sympoly {

Monomial::Monomial(int d, std::vector<Int> e) : dim(d), exps(std::move(e)) {
  if (dim < 1) throw std::invalid_argument("monomial: positive ambient dimension required");
  if (static_cast<int>(exps.size()) != dim)
    throw std::invalid_argument("monomial: exponent vector length mismatch");
  for (const Int& x : exps)
    if (x < 0) throw std::invalid_argument("monomial: negative exponent");
}

Monomial Monomial::squarefree(int dim, const std::vector<int>& indices) {
  std::vector<Int> e(dim, 0);
  for (int i : indices) {
    if (i < 1 || i > dim) throw std::invalid_argument("monomial: index out of range");
    e[i - 1] = 1;
  }
  return Monomial(dim, std::move(e));
}

Int Monomial::degree() const {
  Int d = 0;
  for (const Int& x : exps) d += x;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (dim != other.dim) return false;
  for (int i = 0; i < dim; ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (const Int& x : exps)
    if (x > 1) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < dim; ++i)
    if (exps[i] > 0) s.push_back(i + 1);
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.dim != b.dim) throw std::invalid_argument("lcm: dimension mismatch");
  std::vector<Int> e(a.dim);
  for (int i = 0; i < a.dim; ++i) e[i] = std::max(a.exps[i], b.exps[i]);
  return Monomial(a.dim, std::move(e));
}

Monomial product(const Monomial& a, const Monomial& b) {
  if (a.dim != b.dim) throw std::invalid_argument("product: dimension mismatch");
  std::vector<Int> e(a.dim);
  for (int i = 0; i < a.dim; ++i) e[i] = a.exps[i] + b.exps[i];
  return Monomial(a.dim, std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  Int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // within a degree, earlier variables first: x1x2 before x1x3 before x2x3
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

PrimeSupport::PrimeSupport(int d, std::vector<int> m) : dim(d), members(std::move(m)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw std::invalid_argument("prime support: empty member set");
  if (members.front() < 1 || members.back() > dim)
    throw std::invalid_argument("prime support: member out of range");
}

bool PrimeSupport::contains(const PrimeSupport& o) const {
  return std::includes(members.begin(), members.end(), o.members.begin(), o.members.end());
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("minimalize: empty generator list");
  int dim = gens.front().dim;
  for (const Monomial& m : gens)
    if (m.dim != dim) throw std::invalid_argument("minimalize: mixed ambient dimensions");
  std::vector<Monomial> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> keep;
  for (const Monomial& m : sorted) {
    bool divisible = false;
    for (const Monomial& k : keep) {
      if (k.degree() > m.degree()) break;  // keep is degree-sorted
      if (k.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) keep.push_back(m);
  }
  return MonomialIdeal{dim, std::move(keep), true};
}

namespace {

void require_edges(const Graph& g, const char* what) {
  if (g.edge_count() == 0)
    throw std::domain_error(std::string(what) + ": edgeless graph has no ideal here");
}

// The path constructions are supposed to hand back antichains already; a
// violation would mean the enumeration itself is wrong.
void check_antichain(const std::vector<Monomial>& gens, const char* what) {
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = 0; b < gens.size(); ++b)
      if (a != b && gens[a].divides(gens[b]))
        throw std::logic_error(std::string(what) + ": generator set is not an antichain");
}

}  // namespace

MonomialIdeal edge_ideal(const Graph& g) {
  require_edges(g, "edge_ideal");
  int dim = 2 * g.order();
  std::vector<Monomial> gens;
  for (auto [a, b] : g.edges()) gens.push_back(Monomial::squarefree(dim, {a, b}));
  std::sort(gens.begin(), gens.end(), canonical_less);
  return MonomialIdeal{dim, std::move(gens), true};
}

MonomialIdeal gin_ideal(const Graph& g) {
  require_edges(g, "gin_ideal");
  int n = g.order(), dim = 2 * n;
  std::vector<Monomial> gens;
  for (const VertexPath& p : enumerate_induced_paths(g)) {
    std::vector<int> idx{p.vertices.front(), p.vertices.back()};
    for (size_t k = 1; k + 1 < p.vertices.size(); ++k) idx.push_back(n + p.vertices[k]);
    gens.push_back(Monomial::squarefree(dim, idx));
  }
  check_antichain(gens, "gin_ideal");
  std::sort(gens.begin(), gens.end(), canonical_less);
  return MonomialIdeal{dim, std::move(gens), true};
}

MonomialIdeal inid_ideal(const Graph& g) {
  require_edges(g, "inid_ideal");
  int n = g.order(), dim = 2 * n;
  std::vector<Monomial> gens;
  for (const VertexPath& p : enumerate_admissible_paths(g)) {
    int i = p.vertices.front(), j = p.vertices.back();
    // leading term x_i y_j of the edge binomial, times x over the interior
    // vertices above j and y over those below i (reduced GB coefficients)
    std::vector<int> idx{i, n + j};
    for (size_t k = 1; k + 1 < p.vertices.size(); ++k) {
      int v = p.vertices[k];
      idx.push_back(v > j ? v : n + v);
    }
    gens.push_back(Monomial::squarefree(dim, idx));
  }
  check_antichain(gens, "inid_ideal");
  std::sort(gens.begin(), gens.end(), canonical_less);
  return MonomialIdeal{dim, std::move(gens), true};
}

Int alpha(const MonomialIdeal& ideal) {
  if (ideal.gens.empty()) throw std::domain_error("alpha: zero ideal");
  Int best = ideal.gens.front().degree();
  for (const Monomial& m : ideal.gens) best = std::min(best, m.degree());
  return best;
}

Int max_gen_degree(const MonomialIdeal& ideal) {
  if (ideal.gens.empty()) throw std::domain_error("max_gen_degree: zero ideal");
  if (!ideal.minimal) throw std::invalid_argument("max_gen_degree: input not minimalized");
  Int best = 0;
  for (const Monomial& m : ideal.gens) best = std::max(best, m.degree());
  return best;
}

bool symbolic_membership(const std::vector<PrimeSupport>& primes, int m, const Monomial& z) {
  if (m < 1) throw std::invalid_argument("symbolic_membership: power must be positive");
  for (const PrimeSupport& p : primes) {
    if (p.dim != z.dim) throw std::invalid_argument("symbolic_membership: dimension mismatch");
    Int sum = 0;
    for (int i : p.members) sum += z.exps[i - 1];
    if (sum < m) return false;
  }
  return true;
}

namespace {

// All monomials of total degree m supported on the given variables.
void degree_m_monomials(int dim, const std::vector<int>& vars, size_t pos, int left,
                        std::vector<Int>& cur, std::vector<Monomial>& out) {
  if (pos + 1 == vars.size()) {
    cur[vars[pos] - 1] = left;
    out.push_back(Monomial(dim, cur));
    cur[vars[pos] - 1] = 0;
    return;
  }
  for (int take = 0; take <= left; ++take) {
    cur[vars[pos] - 1] = take;
    degree_m_monomials(dim, vars, pos + 1, left - take, cur, out);
    cur[vars[pos] - 1] = 0;
  }
}

}  // namespace

MonomialIdeal symbolic_power(const std::vector<PrimeSupport>& primes, int m) {
  if (m < 1) throw std::invalid_argument("symbolic_power: power must be positive");
  if (primes.empty()) throw std::invalid_argument("symbolic_power: empty prime list");
  int dim = primes.front().dim;
  for (const PrimeSupport& p : primes)
    if (p.dim != dim) throw std::invalid_argument("symbolic_power: mixed dimensions");

  // Intersect small prime powers first; keeps the intermediate sets tight.
  std::vector<PrimeSupport> order = primes;
  std::sort(order.begin(), order.end());

  std::vector<Monomial> acc;
  bool first = true;
  std::vector<Int> scratch(dim, 0);
  for (const PrimeSupport& p : order) {
    std::vector<Monomial> power;
    degree_m_monomials(dim, p.members, 0, m, scratch, power);
    if (first) {
      acc = minimalize(power).gens;
      first = false;
      continue;
    }
    std::set<std::vector<Int>> seen;
    std::vector<Monomial> next;
    for (const Monomial& a : acc)
      for (const Monomial& b : power) {
        Monomial l = lcm(a, b);
        if (seen.insert(l.exps).second) next.push_back(std::move(l));
      }
    acc = minimalize(next).gens;
  }
  return MonomialIdeal{dim, std::move(acc), true};
}

MonomialIdeal ordinary_power(const MonomialIdeal& ideal, int m) {
  if (m < 1) throw std::invalid_argument("ordinary_power: power must be positive");
  if (ideal.gens.empty()) throw std::invalid_argument("ordinary_power: zero ideal");
  std::vector<Monomial> products;
  // multisets of m generator indices, nondecreasing
  auto rec = [&](auto&& self, size_t from, int left, const Monomial& partial) -> void {
    if (left == 0) {
      products.push_back(partial);
      return;
    }
    for (size_t k = from; k < ideal.gens.size(); ++k)
      self(self, k, left - 1, product(partial, ideal.gens[k]));
  };
  Monomial one(ideal.dim, std::vector<Int>(ideal.dim, 0));
  rec(rec, 0, m, one);
  return minimalize(products);
}

bool is_minimal_generator(const std::vector<PrimeSupport>& primes, int q, const Monomial& z) {
  if (q < 1) throw std::invalid_argument("is_minimal_generator: power must be positive");
  if (!symbolic_membership(primes, q, z)) return false;
  for (int i = 0; i < z.dim; ++i) {
    if (z.exps[i] == 0) continue;
    Monomial dec = z;
    dec.exps[i] -= 1;
    if (symbolic_membership(primes, q, dec)) return false;
  }
  return true;
}

std::string monomial_to_string(const Monomial& m, int n_split) {
  std::string out;
  for (int i = 1; i <= m.dim; ++i) {
    const Int& e = m.exps[i - 1];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    if (n_split > 0 && i > n_split)
      out += "y" + std::to_string(i - n_split);
    else
      out += "x" + std::to_string(i);
    if (e != 1) out += "^" + e.str();
  }
  return out.empty() ? "1" : out;
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json j;
  j["dim"] = ideal.dim;
  j["gens"] = nlohmann::json::array();
  for (const Monomial& m : ideal.gens) {
    nlohmann::json row = nlohmann::json::array();
    for (const Int& e : m.exps) row.push_back(static_cast<long long>(e));
    j["gens"].push_back(std::move(row));
  }
  return j.dump();
}

MonomialIdeal ideal_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("ideal json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("gens"))
    throw std::invalid_argument("ideal json: expected {dim, gens}");
  int dim = j["dim"].get<int>();
  std::vector<Monomial> gens;
  for (const auto& row : j["gens"]) {
    std::vector<Int> e;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw std::invalid_argument("ideal json: exponents must be nonnegative integers");
      e.push_back(Int(v.get<long long>()));
    }
    gens.push_back(Monomial(dim, std::move(e)));
  }
  if (gens.empty()) throw std::invalid_argument("ideal json: no generators");
  return minimalize(gens);
}

}  // namespace sympoly
