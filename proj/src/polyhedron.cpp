#include "sympoly/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympoly {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(size_t nbits) { return Bits((nbits + 63) / 64, 0); }
void set_bit(Bits& b, size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

Bits bit_and(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

bool subset_of(const Bits& a, const Bits& b) {
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

int popcount(const Bits& b) {
  int c = 0;
  for (std::uint64_t w : b) c += __builtin_popcountll(w);
  return c;
}

struct Ray {
  std::vector<Int> v;  // integer direction, gcd-normalized
  Bits tight;          // constraint rows satisfied with equality
};

void gcd_normalize(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) return;
  }
  if (g > 1)
    for (Int& x : v) x /= g;
}

Int dot(const std::vector<Int>& c, const std::vector<Int>& v) {
  Int s = 0;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s += c[i] * v[i];
  return s;
}

// Extreme rays of { x in R^D : x >= 0, row * x >= 0 for each row }, by the
// double description method seeded with the orthant.  Rows are inserted one
// at a time; adjacency of parents is decided combinatorially.
std::vector<Ray> dd_cone(int D, const std::vector<std::vector<Int>>& rows) {
  size_t total_rows = D + rows.size();
  std::vector<Ray> rays;
  for (int i = 0; i < D; ++i) {
    Ray r;
    r.v.assign(D, 0);
    r.v[i] = 1;
    r.tight = make_bits(total_rows);
    for (int k = 0; k < D; ++k)
      if (k != i) set_bit(r.tight, k);
    rays.push_back(std::move(r));
  }
  for (size_t k = 0; k < rows.size(); ++k) {
    const std::vector<Int>& row = rows[k];
    size_t row_idx = D + k;
    std::vector<Int> val(rays.size());
    std::vector<size_t> pos, zero, neg;
    for (size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(row, rays[r].v);
      if (val[r] > 0)
        pos.push_back(r);
      else if (val[r] < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }
    if (neg.empty()) {
      for (size_t r : zero) set_bit(rays[r].tight, row_idx);
      continue;
    }
    std::vector<Ray> born;
    for (size_t p : pos)
      for (size_t m : neg) {
        Bits common = bit_and(rays[p].tight, rays[m].tight);
        if (popcount(common) < D - 2) continue;
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != m && subset_of(common, rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        Ray nr;
        nr.v.resize(D);
        for (int i = 0; i < D; ++i) nr.v[i] = val[p] * rays[m].v[i] - val[m] * rays[p].v[i];
        gcd_normalize(nr.v);
        set_bit(common, row_idx);
        nr.tight = std::move(common);
        born.push_back(std::move(nr));
      }
    std::vector<Ray> next;
    next.reserve(pos.size() + zero.size() + born.size());
    for (size_t r : pos) next.push_back(std::move(rays[r]));
    for (size_t r : zero) {
      set_bit(rays[r].tight, row_idx);
      next.push_back(std::move(rays[r]));
    }
    for (Ray& r : born) next.push_back(std::move(r));
    rays = std::move(next);
  }
  return rays;
}

int rank_of(std::vector<std::vector<Rat>> m) {
  int rank = 0;
  size_t cols = m.empty() ? 0 : m.front().size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Solves the square system m * x = rhs; empty result when singular.
QVector solve_square(std::vector<std::vector<Rat>> m, QVector rhs) {
  size_t n = m.size();
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(m[c], m[pivot]);
    std::swap(rhs[c], rhs[pivot]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
      rhs[r] -= f * rhs[c];
    }
  }
  QVector x(n);
  for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

std::vector<int> active_coords(const HPolyhedron& p) {
  std::vector<char> used(p.dim + 1, 0);
  for (const PrimeSupport& f : p.one_facets)
    for (int i : f.members) used[i] = 1;
  std::vector<int> act;
  for (int i = 1; i <= p.dim; ++i)
    if (used[i]) act.push_back(i);
  return act;
}

}  // namespace

HPolyhedron build_sp(const std::vector<PrimeSupport>& primes, int dim) {
  if (primes.empty()) throw std::invalid_argument("build_sp: empty prime list");
  for (const PrimeSupport& p : primes) {
    if (p.dim != dim) throw std::invalid_argument("build_sp: dimension mismatch");
    if (p.members.empty() || p.members.back() > dim)
      throw std::invalid_argument("build_sp: support out of range");
  }
  std::vector<PrimeSupport> facets = primes;
  std::sort(facets.begin(), facets.end());
  for (size_t a = 0; a < facets.size(); ++a)
    for (size_t b = 0; b < facets.size(); ++b)
      if (a != b && facets[a].contains(facets[b]))
        throw std::invalid_argument("build_sp: comparable supports (non-minimal prime input)");
  return HPolyhedron{dim, std::move(facets)};
}

bool contains(const HPolyhedron& p, const QVector& a) {
  if (static_cast<int>(a.size()) != p.dim) throw std::invalid_argument("contains: dimension mismatch");
  for (const Rat& x : a)
    if (x < 0) return false;
  for (const PrimeSupport& f : p.one_facets) {
    Rat sum = 0;
    for (int i : f.members) sum += a[i - 1];
    if (sum < 1) return false;
  }
  return true;
}

std::vector<QVector> enumerate_vertices(const HPolyhedron& p) {
  // Coordinates outside every one-facet are zero at any vertex; drop them and
  // homogenize: cone { (a, t) >= 0 : sum_{M} a_i - t >= 0 }.
  std::vector<int> act = active_coords(p);
  int D = static_cast<int>(act.size()) + 1;
  std::vector<int> pos_of(p.dim + 1, -1);
  for (size_t i = 0; i < act.size(); ++i) pos_of[act[i]] = static_cast<int>(i);
  std::vector<std::vector<Int>> rows;
  rows.reserve(p.one_facets.size());
  for (const PrimeSupport& f : p.one_facets) {
    std::vector<Int> row(D, 0);
    for (int i : f.members) row[pos_of[i]] = 1;
    row[D - 1] = -1;
    rows.push_back(std::move(row));
  }
  std::vector<QVector> out;
  for (const Ray& r : dd_cone(D, rows)) {
    const Int& t = r.v[D - 1];
    if (t <= 0) continue;  // recession directions
    QVector a(p.dim, Rat(0));
    for (size_t i = 0; i < act.size(); ++i) a[act[i] - 1] = Rat(r.v[i], t);
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<QVector> full_vertices(const HPolyhedron& p, int n) {
  if (p.dim != 2 * n) throw std::invalid_argument("full_vertices: dim must equal 2n");
  std::vector<QVector> out;
  for (QVector& a : enumerate_vertices(p)) {
    bool full = true;
    for (int j = 1; j <= n && full; ++j)
      if (a[j - 1] + a[n + j - 1] == 0) full = false;
    if (full) out.push_back(std::move(a));
  }
  return out;
}

Rat min_coord_sum(const HPolyhedron& p) {
  std::vector<QVector> vs = enumerate_vertices(p);
  if (vs.empty()) throw std::logic_error("min_coord_sum: no vertices");
  Rat best = coord_sum(vs.front());
  for (const QVector& v : vs) best = std::min(best, coord_sum(v));
  return best;
}

Rat max_vertex_coord_sum(const HPolyhedron& p) {
  std::vector<QVector> vs = enumerate_vertices(p);
  if (vs.empty()) throw std::logic_error("max_vertex_coord_sum: no vertices");
  Rat best = coord_sum(vs.front());
  for (const QVector& v : vs) best = std::max(best, coord_sum(v));
  return best;
}

Rat lp_min_sum(const HPolyhedron& p) {
  // Dual of { min 1.a : sum_M a >= 1, a >= 0 }:
  //   max 1.y  s.t.  for each coordinate i: sum_{M containing i} y_M <= 1.
  // The slack basis is feasible, so a single simplex phase suffices.
  std::vector<int> act = active_coords(p);
  size_t nvar = p.one_facets.size();
  size_t nrow = act.size();
  size_t cols = nvar + nrow + 1;
  std::vector<std::vector<Rat>> t(nrow + 1, std::vector<Rat>(cols, Rat(0)));
  for (size_t j = 0; j < nvar; ++j) t[0][j] = -1;  // maximize sum y
  for (size_t r = 0; r < nrow; ++r) {
    for (size_t j = 0; j < nvar; ++j) {
      const std::vector<int>& mem = p.one_facets[j].members;
      if (std::binary_search(mem.begin(), mem.end(), act[r])) t[r + 1][j] = 1;
    }
    t[r + 1][nvar + r] = 1;
    t[r + 1][cols - 1] = 1;
  }
  std::vector<size_t> basis(nrow);
  for (size_t r = 0; r < nrow; ++r) basis[r] = nvar + r;
  while (true) {
    size_t enter = cols - 1;
    for (size_t j = 0; j + 1 < cols; ++j)
      if (t[0][j] < 0) {
        enter = j;  // Bland: smallest eligible index
        break;
      }
    if (enter == cols - 1) break;
    size_t leave = 0;
    bool found = false;
    Rat best_ratio = 0;
    for (size_t r = 1; r <= nrow; ++r) {
      if (t[r][enter] <= 0) continue;
      Rat ratio = t[r][cols - 1] / t[r][enter];
      if (!found || ratio < best_ratio ||
          (ratio == best_ratio && basis[r - 1] < basis[leave - 1])) {
        best_ratio = ratio;
        leave = r;
        found = true;
      }
    }
    if (!found) throw std::logic_error("lp_min_sum: dual unbounded");
    Rat piv = t[leave][enter];
    for (Rat& x : t[leave]) x /= piv;
    for (size_t r = 0; r <= nrow; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rat f = t[r][enter];
      for (size_t c = 0; c < cols; ++c) t[r][c] -= f * t[leave][c];
    }
    basis[leave - 1] = enter;
  }
  return t[0][cols - 1];
}

TightInfo tight_constraint_count(const HPolyhedron& p, const QVector& a) {
  if (!contains(p, a)) throw std::invalid_argument("tight_constraint_count: point outside polyhedron");
  std::vector<std::vector<Rat>> normals;
  int count = 0;
  for (int i = 1; i <= p.dim; ++i)
    if (a[i - 1] == 0) {
      ++count;
      std::vector<Rat> e(p.dim, Rat(0));
      e[i - 1] = 1;
      normals.push_back(std::move(e));
    }
  for (const PrimeSupport& f : p.one_facets) {
    Rat sum = 0;
    for (int i : f.members) sum += a[i - 1];
    if (sum == 1) {
      ++count;
      std::vector<Rat> e(p.dim, Rat(0));
      for (int i : f.members) e[i - 1] = 1;
      normals.push_back(std::move(e));
    }
  }
  return TightInfo{count, rank_of(std::move(normals))};
}

std::vector<QVector> enumerate_vertices_by_tight_sets(const HPolyhedron& p) {
  int d = p.dim;
  std::vector<std::vector<Rat>> normals;
  QVector rhs_all;
  for (int i = 1; i <= d; ++i) {
    std::vector<Rat> e(d, Rat(0));
    e[i - 1] = 1;
    normals.push_back(std::move(e));
    rhs_all.push_back(0);
  }
  for (const PrimeSupport& f : p.one_facets) {
    std::vector<Rat> e(d, Rat(0));
    for (int i : f.members) e[i - 1] = 1;
    normals.push_back(std::move(e));
    rhs_all.push_back(1);
  }
  size_t m = normals.size();
  std::vector<QVector> out;
  std::vector<size_t> idx(d);
  auto rec = [&](auto&& self, size_t from, int depth) -> void {
    if (depth == d) {
      std::vector<std::vector<Rat>> sys;
      QVector rhs;
      for (int k = 0; k < d; ++k) {
        sys.push_back(normals[idx[k]]);
        rhs.push_back(rhs_all[idx[k]]);
      }
      QVector x = solve_square(std::move(sys), std::move(rhs));
      if (!x.empty() && contains(p, x)) out.push_back(std::move(x));
      return;
    }
    for (size_t k = from; k + (d - depth) <= m; ++k) {
      idx[depth] = k;
      self(self, k + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sympoly
