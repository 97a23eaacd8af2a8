#pragma once

#include <compare>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinned/numeric.hpp"
#include "twinned/poset.hpp"

namespace twinned {

/// Indicator vector of `subset` in Z^d.
IntVector rho(Mask subset, int d);

/// The lattice points of the twinned configuration: rho(I) for nonempty
/// ideals I of P, -rho(J) for nonempty ideals J of Q (both in canonical ideal
/// order), then the origin.
struct PointConfiguration {
  int d = 0;
  std::vector<IntVector> points;
  std::size_t origin_index = 0;

  std::vector<IntVector> nonzero_points() const;
};

PointConfiguration build_omega(const Poset& p, const Poset& q);

/// Strictly positive barycentric weights on the nonzero points (in the order
/// of PointConfiguration::nonzero_points) that sum to 1 and average to 0.
struct InteriorCertificate {
  RationalVector weights;
};

/// Decides whether the origin is an interior point by maximizing the smallest
/// barycentric weight with an exact LP. Returns a certificate iff that
/// optimum is positive.
std::optional<InteriorCertificate> origin_in_interior(const PointConfiguration& cfg);

/// Re-evaluates the certificate identities in exact arithmetic.
bool verify_certificate(const PointConfiguration& cfg, const InteriorCertificate& cert);

/// normal·x <= offset, with a primitive integer normal.
struct HalfSpace {
  IntVector normal;
  std::int64_t offset = 0;

  auto operator<=>(const HalfSpace&) const = default;
};

/// Irredundant facet description of conv(vertices) by double description on
/// the homogenized cone. Facets are sorted lexicographically. Throws
/// InternalError if the vertices do not affinely span R^d.
std::vector<HalfSpace> hull_halfspaces(std::span<const IntVector> vertices, int d);

/// Non-strict membership in the intersection of half-spaces.
bool contains(std::span<const HalfSpace> hrep, std::span<const Rational> point);
bool contains(std::span<const HalfSpace> hrep, std::span<const std::int64_t> point);

/// Affine rank of a point set (dimension of its affine hull).
int affine_rank(std::span<const IntVector> points);

/// The twinned polytope: V-representation from the configuration, facets
/// computed on first request and cached. Copies share the cache.
class Polytope {
 public:
  explicit Polytope(PointConfiguration cfg);

  int dim() const { return cfg_.d; }
  const PointConfiguration& configuration() const { return cfg_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& halfspaces() const;

  nlohmann::json to_json() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<HalfSpace> facets;
  };
  PointConfiguration cfg_;
  std::vector<IntVector> vertices_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace twinned
