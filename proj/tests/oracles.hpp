#pragma once

// Independent brute-force reference computations used by the tests. None of
// these call into the code paths they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "twinned/numeric.hpp"
#include "twinned/poset.hpp"
#include "twinned/polytope.hpp"
#include "twinned/toric.hpp"

namespace oracle {

using twinned::IntVector;
using twinned::Mask;
using twinned::Poset;

// Every subset of {0..d-1} that is closed downward.
inline std::vector<Mask> ideals_by_filter(const Poset& p) {
  const int d = p.size();
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << d); ++s) {
    bool closed = true;
    for (int j = 0; j < d && closed; ++j)
      for (int i = 0; i < d && closed; ++i)
        if (((s >> j) & 1u) && p.less(i, j) && !((s >> i) & 1u)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

// Every permutation respecting every relation of p.
inline std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < perm.size() && ok; ++a)
      for (std::size_t b = a + 1; b < perm.size() && ok; ++b)
        if (p.less(perm[b], perm[a])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline bool has_common_extension(const Poset& p, const Poset& q) {
  const auto lq = linear_extensions(q);
  const std::set<std::vector<int>> in_q(lq.begin(), lq.end());
  for (const auto& perm : linear_extensions(p))
    if (in_q.count(perm)) return true;
  return false;
}

// All labeled posets on d elements: every transitive, irreflexive,
// antisymmetric relation, enumerated as subsets of the ordered pairs.
inline std::vector<Poset> all_posets(int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<Poset> out;
  for (unsigned s = 0; s < (1u << pairs.size()); ++s) {
    std::vector<std::vector<bool>> rel(d, std::vector<bool>(d, false));
    std::vector<std::pair<int, int>> chosen;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((s >> k) & 1u) {
        rel[pairs[k].first][pairs[k].second] = true;
        chosen.push_back(pairs[k]);
      }
    bool ok = true;
    for (int a = 0; a < d && ok; ++a)
      for (int b = 0; b < d && ok; ++b) {
        if (rel[a][b] && rel[b][a]) ok = false;
        for (int c = 0; c < d && ok; ++c)
          if (rel[a][b] && rel[b][c] && !rel[a][c]) ok = false;
      }
    if (ok) out.push_back(Poset::from_relations(d, chosen));
  }
  return out;
}

// Facets of conv(points) for d = 2 or 3 by trying every hyperplane through d
// of the points.
inline std::vector<twinned::HalfSpace> brute_hull(const std::vector<IntVector>& pts, int d) {
  std::set<twinned::HalfSpace> facets;
  const std::size_t n = pts.size();
  auto consider = [&](IntVector normal) {
    if (std::all_of(normal.begin(), normal.end(), [](auto x) { return x == 0; })) return;
    std::int64_t g = 0;
    for (auto x : normal) g = std::gcd(g, x < 0 ? -x : x);
    for (auto& x : normal) x /= g;
    for (int sign : {1, -1}) {
      IntVector a = normal;
      for (auto& x : a) x *= sign;
      std::int64_t best = 0;
      bool first = true;
      for (const auto& p : pts) {
        std::int64_t v = 0;
        for (int k = 0; k < d; ++k) v += a[k] * p[k];
        if (first || v > best) best = v;
        first = false;
      }
      std::vector<IntVector> tight;
      for (const auto& p : pts) {
        std::int64_t v = 0;
        for (int k = 0; k < d; ++k) v += a[k] * p[k];
        if (v == best) tight.push_back(p);
      }
      if (twinned::affine_rank(tight) == d - 1) facets.insert({a, best});
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      IntVector u(d), v(d);
      for (int k = 0; k < d; ++k) u[k] = pts[j][k] - pts[i][k];
      if (d == 2) {
        consider({-u[1], u[0]});
        continue;
      }
      for (std::size_t l = j + 1; l < n; ++l) {
        for (int k = 0; k < d; ++k) v[k] = pts[l][k] - pts[i][k];
        consider({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]});
      }
    }
  return {facets.begin(), facets.end()};
}

// All exponent vectors of the given total degree.
inline std::vector<IntVector> exponent_vectors(std::size_t nvars, int degree) {
  std::vector<IntVector> out;
  IntVector cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == nvars) {
      cur[v] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[v] = e;
      self(self, v + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

// Binomials u - v of the kernel of pi with deg u = deg v = degree, one per
// consecutive pair inside each fiber, found by listing every monomial of that
// degree and grouping by image.
inline std::vector<twinned::Binomial> kernel_in_degree(const twinned::VariableSet& vs, int degree) {
  std::map<IntVector, std::vector<twinned::Monomial>> fibers;
  for (const auto& e : exponent_vectors(vs.size(), degree)) {
    twinned::Monomial m(std::vector<twinned::Exponent>(e.begin(), e.end()));
    IntVector image(vs.d() + 1, 0);
    for (std::size_t v = 0; v < vs.size(); ++v)
      for (std::size_t k = 0; k < image.size(); ++k) image[k] += e[v] * vs.pi_image(v)[k];
    fibers[image].push_back(m);
  }
  std::vector<twinned::Binomial> out;
  for (const auto& [image, ms] : fibers)
    for (std::size_t k = 1; k < ms.size(); ++k) out.push_back({ms[k - 1], ms[k]});
  return out;
}

// True iff every degree-3 fiber of pi is connected by moves that swap a
// degree-2 factor for another with the same image. That is exactly the
// condition that the degree-2 binomials span the degree-3 part of the ideal.
inline bool cubic_fibers_connected(const twinned::VariableSet& vs) {
  auto image = [&](const IntVector& e) {
    IntVector out(vs.d() + 1, 0);
    for (std::size_t v = 0; v < vs.size(); ++v)
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += e[v] * vs.pi_image(v)[k];
    return out;
  };
  std::map<IntVector, std::vector<IntVector>> quad;
  for (const auto& e : exponent_vectors(vs.size(), 2)) quad[image(e)].push_back(e);
  std::map<IntVector, std::vector<IntVector>> cubic;
  for (const auto& e : exponent_vectors(vs.size(), 3)) cubic[image(e)].push_back(e);
  for (const auto& [img, ms] : cubic) {
    if (ms.size() < 2) continue;
    std::map<IntVector, std::size_t> index;
    for (std::size_t k = 0; k < ms.size(); ++k) index[ms[k]] = k;
    std::vector<std::size_t> parent(ms.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& m : ms)
      for (std::size_t v = 0; v < vs.size(); ++v) {
        if (!m[v]) continue;
        IntVector rest = m;
        --rest[v];
        for (const auto& alt : quad[image(rest)]) {
          IntVector other = alt;
          ++other[v];
          parent[find(index.at(m))] = find(index.at(other));
        }
      }
    for (std::size_t k = 1; k < ms.size(); ++k)
      if (find(k) != find(0)) return false;
  }
  return true;
}

}  // namespace oracle
