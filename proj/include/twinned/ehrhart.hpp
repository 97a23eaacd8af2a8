#pragma once

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinned/numeric.hpp"
#include "twinned/polytope.hpp"

namespace twinned {

/// L(0), ..., L(t_max): lattice points in the dilates.
struct EhrhartCounts {
  std::vector<BigInt> values;
};

/// delta_0, ..., delta_d.
struct DeltaVector {
  std::vector<BigInt> entries;

  /// Normalized volume: the sum of the entries.
  BigInt volume() const;
  bool operator==(const DeltaVector&) const = default;
};

/// Lattice points v with normal·v <= t·offset for every half-space. Scans the
/// box [-t, t]^d, which is sufficient for polytopes inside [-1, 1]^d, and
/// splits the scan over `workers` threads (0 = hardware concurrency).
BigInt count_dilate(std::span<const HalfSpace> hrep, int d, int t, unsigned workers = 0);

EhrhartCounts ehrhart_counts(std::span<const HalfSpace> hrep, int d, int t_max);

/// delta_i = sum_{j<=i} (-1)^j C(d+1, j) L(i-j). Throws InternalError on a
/// negative entry.
DeltaVector delta_vector(const EhrhartCounts& counts, int d);

/// L(t) = sum_i delta_i C(t+d-i, d), for t = 0..t_max.
EhrhartCounts counts_from_delta(const DeltaVector& delta, int d, int t_max);

struct SymmetryFlags {
  bool symmetric = false;
  bool unimodal = false;
};

SymmetryFlags is_symmetric_unimodal(const DeltaVector& delta);

/// Origin interior and every facet at lattice distance one from it.
bool check_reflexive(std::span<const HalfSpace> hrep);

/// The origin is the only lattice point strictly inside. Scans [-radius, radius]^d.
bool check_fano(std::span<const HalfSpace> hrep, int d, int radius = 1);

/// For 2 <= t <= t_max every lattice point of the t-th dilate is a sum of t
/// points of `cfg` (the t-fold sumset is built incrementally).
bool check_normal(const PointConfiguration& cfg, std::span<const HalfSpace> hrep, int t_max);

nlohmann::json to_json(const DeltaVector& delta);
nlohmann::json to_json(const EhrhartCounts& counts);

}  // namespace twinned
