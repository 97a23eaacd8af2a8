#include "twinned/polytope.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "twinned/lp.hpp"

namespace twinned {

IntVector rho(Mask subset, int d) {
  IntVector v(d, 0);
  for (int i = 0; i < d; ++i) v[i] = (subset >> i) & 1u;
  return v;
}

std::vector<IntVector> PointConfiguration::nonzero_points() const {
  std::vector<IntVector> out;
  out.reserve(points.size() - 1);
  for (std::size_t k = 0; k < points.size(); ++k)
    if (k != origin_index) out.push_back(points[k]);
  return out;
}

PointConfiguration build_omega(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw InputError("posets have different sizes");
  PointConfiguration cfg;
  cfg.d = p.size();
  for (Mask ideal : enumerate_ideals(p).ideals)
    if (ideal) cfg.points.push_back(rho(ideal, cfg.d));
  for (Mask ideal : enumerate_ideals(q).ideals) {
    if (!ideal) continue;
    IntVector v = rho(ideal, cfg.d);
    for (auto& c : v) c = -c;
    cfg.points.push_back(std::move(v));
  }
  cfg.origin_index = cfg.points.size();
  cfg.points.emplace_back(cfg.d, 0);
  return cfg;
}

std::optional<InteriorCertificate> origin_in_interior(const PointConfiguration& cfg) {
  // Weights are written lambda_v = t + mu_v with t, mu >= 0; maximize t.
  const auto pts = cfg.nonzero_points();
  const std::size_t n = pts.size();
  const int d = cfg.d;
  LinearProgram lp;
  lp.objective.assign(n + 1, Rational(0));
  lp.objective[0] = 1;
  for (int k = 0; k < d; ++k) {
    RationalVector row(n + 1, Rational(0));
    for (std::size_t v = 0; v < n; ++v) {
      row[0] += pts[v][k];
      row[v + 1] = pts[v][k];
    }
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(0);
  }
  RationalVector total(n + 1, Rational(1));
  total[0] = static_cast<long>(n);
  lp.rows.push_back(std::move(total));
  lp.rhs.emplace_back(1);

  LpResult res = solve_lp(lp);
  if (res.status != LpStatus::kOptimal) throw InternalError("interior LP did not reach an optimum");
  if (res.value <= 0) return std::nullopt;
  InteriorCertificate cert;
  cert.weights.reserve(n);
  for (std::size_t v = 0; v < n; ++v) cert.weights.push_back(res.x[0] + res.x[v + 1]);
  if (!verify_certificate(cfg, cert)) throw InternalError("interior certificate failed re-evaluation");
  return cert;
}

bool verify_certificate(const PointConfiguration& cfg, const InteriorCertificate& cert) {
  const auto pts = cfg.nonzero_points();
  if (cert.weights.size() != pts.size()) return false;
  Rational sum = 0;
  RationalVector centroid(cfg.d, Rational(0));
  for (std::size_t v = 0; v < pts.size(); ++v) {
    if (cert.weights[v] <= 0) return false;
    sum += cert.weights[v];
    for (int k = 0; k < cfg.d; ++k) centroid[k] += cert.weights[v] * pts[v][k];
  }
  return sum == 1 && std::all_of(centroid.begin(), centroid.end(), [](const Rational& c) { return c == 0; });
}

namespace {

std::int64_t gcd_of(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

void make_primitive(IntVector& v) {
  const std::int64_t g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s = checked_add(s, checked_mul(a[k], b[k]));
  return s;
}

// Rank of a list of rational row vectors by Gaussian elimination.
int rank_of(std::vector<RationalVector> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

struct Ray {
  IntVector coords;
  boost::dynamic_bitset<> zeros;
};

}  // namespace

int affine_rank(std::span<const IntVector> points) {
  if (points.empty()) return -1;
  std::vector<RationalVector> rows;
  for (std::size_t k = 1; k < points.size(); ++k) {
    RationalVector r;
    for (std::size_t c = 0; c < points[k].size(); ++c) r.emplace_back(points[k][c] - points[0][c]);
    rows.push_back(std::move(r));
  }
  return rank_of(std::move(rows));
}

std::vector<HalfSpace> hull_halfspaces(std::span<const IntVector> vertices, int d) {
  // A valid inequality a·x <= b is a point (a, b) of the cone
  // { y : row_v · y >= 0 } with row_v = (-v, 1). Facets are its extreme rays.
  const std::size_t n = vertices.size();
  const int dim = d + 1;
  std::vector<IntVector> rows(n);
  for (std::size_t v = 0; v < n; ++v) {
    rows[v].resize(dim);
    for (int k = 0; k < d; ++k) rows[v][k] = -vertices[v][k];
    rows[v][d] = 1;
  }

  // Greedy choice of dim linearly independent rows for the initial simplex cone.
  std::vector<std::size_t> initial;
  std::vector<RationalVector> chosen;
  for (std::size_t v = 0; v < n && static_cast<int>(initial.size()) < dim; ++v) {
    auto trial = chosen;
    trial.emplace_back(rows[v].begin(), rows[v].end());
    if (rank_of(trial) == static_cast<int>(trial.size())) {
      chosen = std::move(trial);
      initial.push_back(v);
    }
  }
  if (static_cast<int>(initial.size()) < dim)
    throw InternalError("hull: vertex set is not full-dimensional");

  // Invert the initial block: ray k satisfies row_j · ray = [j == k].
  std::vector<RationalVector> aug(dim, RationalVector(2 * dim, Rational(0)));
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) aug[i][k] = chosen[i][k];
    aug[i][dim + i] = 1;
  }
  for (int c = 0; c < dim; ++c) {
    int piv = c;
    while (aug[piv][c] == 0) ++piv;
    std::swap(aug[piv], aug[c]);
    const Rational p = aug[c][c];
    for (auto& x : aug[c]) x /= p;
    for (int i = 0; i < dim; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (int k = 0; k < 2 * dim; ++k) aug[i][k] -= f * aug[c][k];
    }
  }
  std::vector<Ray> rays;
  boost::dynamic_bitset<> processed(n);
  for (auto v : initial) processed.set(v);
  for (int k = 0; k < dim; ++k) {
    // Column k of the inverse, scaled to a primitive integer vector.
    BigInt denom_lcm = 1;
    for (int i = 0; i < dim; ++i) denom_lcm = lcm(denom_lcm, denominator(aug[i][dim + k]));
    Ray ray;
    ray.coords.resize(dim);
    for (int i = 0; i < dim; ++i)
      ray.coords[i] = static_cast<std::int64_t>(numerator(Rational(aug[i][dim + k] * denom_lcm)));
    make_primitive(ray.coords);
    ray.zeros.resize(n);
    for (int j = 0; j < dim; ++j)
      if (j != k) ray.zeros.set(initial[j]);
    rays.push_back(std::move(ray));
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (processed.test(v)) continue;
    std::vector<std::int64_t> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(rows[v], rays[r].coords);
      if (value[r] > 0) pos.push_back(r);
      else if (value[r] < 0) neg.push_back(r);
    }
    processed.set(v);
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (value[r] == 0) rays[r].zeros.set(v);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] < 0) continue;
      Ray ray = rays[r];
      if (value[r] == 0) ray.zeros.set(v);
      next.push_back(std::move(ray));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        // Combinatorial adjacency test.
        boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
        if (static_cast<int>(common.count()) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(rays[r].zeros)) adjacent = false;
        if (!adjacent) continue;
        Ray ray;
        ray.coords.resize(dim);
        for (int k = 0; k < dim; ++k)
          ray.coords[k] = checked_add(checked_mul(value[p], rays[q].coords[k]),
                                      checked_mul(-value[q], rays[p].coords[k]));
        make_primitive(ray.coords);
        ray.zeros = common;
        ray.zeros.set(v);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }

  std::vector<HalfSpace> facets;
  for (auto& ray : rays) {
    HalfSpace h;
    h.normal.assign(ray.coords.begin(), ray.coords.begin() + d);
    if (std::all_of(h.normal.begin(), h.normal.end(), [](auto x) { return x == 0; })) continue;
    const std::int64_t g = gcd_of(h.normal);
    for (auto& x : h.normal) x /= g;
    if (ray.coords[d] % g != 0) throw InternalError("hull: facet offset is not integral");
    h.offset = ray.coords[d] / g;
    facets.push_back(std::move(h));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets;
}

bool contains(std::span<const HalfSpace> hrep, std::span<const Rational> point) {
  for (const auto& h : hrep) {
    Rational s = 0;
    for (std::size_t k = 0; k < h.normal.size(); ++k) s += h.normal[k] * point[k];
    if (s > h.offset) return false;
  }
  return true;
}

bool contains(std::span<const HalfSpace> hrep, std::span<const std::int64_t> point) {
  for (const auto& h : hrep) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < h.normal.size(); ++k) s += h.normal[k] * point[k];
    if (s > h.offset) return false;
  }
  return true;
}

Polytope::Polytope(PointConfiguration cfg)
    : cfg_(std::move(cfg)), vertices_(cfg_.nonzero_points()), cache_(std::make_shared<Cache>()) {
  if (affine_rank(vertices_) != cfg_.d) throw InternalError("polytope is not full-dimensional");
}

const std::vector<HalfSpace>& Polytope::halfspaces() const {
  std::call_once(cache_->once, [this] { cache_->facets = hull_halfspaces(vertices_, cfg_.d); });
  return cache_->facets;
}

nlohmann::json Polytope::to_json() const {
  nlohmann::json facets = nlohmann::json::array();
  for (const auto& h : halfspaces()) facets.push_back({{"normal", h.normal}, {"offset", h.offset}});
  return {{"d", cfg_.d}, {"vertices", vertices_}, {"facets", facets}};
}

}  // namespace twinned
