#include "twinned/ehrhart.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <thread>
#include <unordered_set>

namespace twinned {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt DeltaVector::volume() const {
  BigInt sum = 0;
  for (const auto& e : entries) sum += e;
  return sum;
}

namespace {

// Depth-first scan of the box [-radius, radius]^d against the facets, with
// partial dot products carried down and subtrees pruned when some facet can
// no longer be met. `visit` is called on every accepted point.
class BoxScan {
 public:
  BoxScan(std::span<const HalfSpace> hrep, int d, int radius, std::int64_t scale, bool strict)
      : hrep_(hrep), d_(d), radius_(radius), strict_(strict), slack_min_(hrep.size() * (d + 1), 0) {
    for (const auto& h : hrep) bound_.push_back(checked_mul(h.offset, scale));
    // slack_min_[f, k]: smallest value coordinates k..d-1 can add to facet f.
    for (std::size_t f = 0; f < hrep.size(); ++f)
      for (int k = d - 1; k >= 0; --k)
        slack_min_[f * (d + 1) + k] =
            slack_min_[f * (d + 1) + k + 1] - std::abs(hrep[f].normal[k]) * static_cast<std::int64_t>(radius);
  }

  template <class Visit>
  void run(int first_lo, int first_hi, Visit&& visit) const {
    std::vector<std::int64_t> partial(hrep_.size() * (d_ + 1), 0);
    IntVector point(d_, 0);
    descend(0, first_lo, first_hi, partial, point, visit);
  }

 private:
  template <class Visit>
  void descend(int k, int lo, int hi, std::vector<std::int64_t>& partial, IntVector& point, Visit& visit) const {
    const std::size_t stride = d_ + 1;
    for (int c = lo; c <= hi; ++c) {
      point[k] = c;
      for (std::size_t f = 0; f < hrep_.size(); ++f)
        partial[f * stride + k + 1] = partial[f * stride + k] + hrep_[f].normal[k] * c;
      if (prunable(k + 1, partial)) continue;
      if (k + 1 == d_) visit(point);
      else descend(k + 1, -radius_, radius_, partial, point, visit);
    }
  }

  // True iff some facet is violated for every completion of coordinates 0..k-1.
  bool prunable(int k, const std::vector<std::int64_t>& partial) const {
    const std::size_t stride = d_ + 1;
    for (std::size_t f = 0; f < hrep_.size(); ++f) {
      const std::int64_t limit = strict_ ? bound_[f] - 1 : bound_[f];
      if (partial[f * stride + k] + slack_min_[f * stride + k] > limit) return true;
    }
    return false;
  }

  std::span<const HalfSpace> hrep_;
  int d_;
  int radius_;
  bool strict_;
  std::vector<std::int64_t> bound_;
  std::vector<std::int64_t> slack_min_;
};

std::int64_t encode(const IntVector& p, int radius) {
  std::int64_t key = 0;
  for (auto c : p) key = key * (2 * radius + 1) + (c + radius);
  return key;
}

}  // namespace

BigInt count_dilate(std::span<const HalfSpace> hrep, int d, int t, unsigned workers) {
  if (t == 0) return 1;
  BoxScan scan(hrep, d, t, t, false);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(2 * t + 1));
  if (workers <= 1) {
    std::int64_t count = 0;
    scan.run(-t, t, [&](const IntVector&) { ++count; });
    return count;
  }
  // Split the first coordinate into contiguous slices; the sum is associative.
  std::vector<std::future<std::int64_t>> parts;
  const int span = 2 * t + 1;
  for (unsigned w = 0; w < workers; ++w) {
    const int lo = -t + static_cast<int>(w * span / workers);
    const int hi = -t + static_cast<int>((w + 1) * span / workers) - 1;
    if (lo > hi) continue;
    parts.push_back(std::async(std::launch::async, [&scan, lo, hi] {
      std::int64_t count = 0;
      scan.run(lo, hi, [&](const IntVector&) { ++count; });
      return count;
    }));
  }
  BigInt total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

EhrhartCounts ehrhart_counts(std::span<const HalfSpace> hrep, int d, int t_max) {
  EhrhartCounts out;
  for (int t = 0; t <= t_max; ++t) out.values.push_back(count_dilate(hrep, d, t));
  return out;
}

DeltaVector delta_vector(const EhrhartCounts& counts, int d) {
  if (static_cast<int>(counts.values.size()) < d + 1) throw InputError("delta vector needs L(0..d)");
  DeltaVector out;
  for (int i = 0; i <= d; ++i) {
    BigInt value = 0;
    for (int j = 0; j <= i; ++j) {
      BigInt term = binomial(d + 1, j) * counts.values[i - j];
      value += (j % 2 == 0) ? term : BigInt(-term);
    }
    if (value < 0) throw InternalError("negative delta entry at index " + std::to_string(i));
    out.entries.push_back(std::move(value));
  }
  return out;
}

EhrhartCounts counts_from_delta(const DeltaVector& delta, int d, int t_max) {
  EhrhartCounts out;
  for (int t = 0; t <= t_max; ++t) {
    BigInt value = 0;
    for (int i = 0; i < static_cast<int>(delta.entries.size()); ++i)
      value += delta.entries[i] * binomial(t + d - i, d);
    out.values.push_back(std::move(value));
  }
  return out;
}

SymmetryFlags is_symmetric_unimodal(const DeltaVector& delta) {
  const auto& e = delta.entries;
  SymmetryFlags flags;
  flags.symmetric = std::equal(e.begin(), e.end(), e.rbegin());
  std::size_t k = 0;
  while (k + 1 < e.size() && e[k] <= e[k + 1]) ++k;
  while (k + 1 < e.size() && e[k] >= e[k + 1]) ++k;
  flags.unimodal = k + 1 >= e.size();
  return flags;
}

bool check_reflexive(std::span<const HalfSpace> hrep) {
  if (hrep.empty()) return false;
  return std::all_of(hrep.begin(), hrep.end(), [](const HalfSpace& h) { return h.offset == 1; });
}

bool check_fano(std::span<const HalfSpace> hrep, int d, int radius) {
  if (hrep.empty()) return false;
  bool origin_inside = true;
  for (const auto& h : hrep)
    if (h.offset <= 0) origin_inside = false;
  if (!origin_inside) return false;
  int interior = 0;
  BoxScan scan(hrep, d, radius, 1, true);
  scan.run(-radius, radius, [&](const IntVector&) { ++interior; });
  return interior == 1;
}

bool check_normal(const PointConfiguration& cfg, std::span<const HalfSpace> hrep, int t_max) {
  const int d = cfg.d;
  if (t_max < 2) return true;
  const int radius = t_max;
  std::unordered_set<std::int64_t> sumset;
  std::vector<IntVector> frontier;
  for (const auto& p : cfg.points)
    if (sumset.insert(encode(p, radius)).second) frontier.push_back(p);
  for (int t = 2; t <= t_max; ++t) {
    // S_t = S_{t-1} + Omega. Since 0 is in Omega, S_{t-2} + Omega = S_{t-1}
    // and only the points new at step t-1 need extending.
    std::vector<IntVector> next;
    for (const auto& a : frontier)
      for (const auto& b : cfg.points) {
        IntVector c(d);
        for (int k = 0; k < d; ++k) c[k] = a[k] + b[k];
        if (sumset.insert(encode(c, radius)).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
    bool covered = true;
    BoxScan scan(hrep, d, t, t, false);
    scan.run(-t, t, [&](const IntVector& p) {
      if (covered && !sumset.count(encode(p, radius))) covered = false;
    });
    if (!covered) return false;
  }
  return true;
}

namespace {

nlohmann::json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

}  // namespace

nlohmann::json to_json(const DeltaVector& delta) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : delta.entries) out.push_back(big_json(e));
  return out;
}

nlohmann::json to_json(const EhrhartCounts& counts) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t t = 0; t < counts.values.size(); ++t)
    out.push_back({{"t", t}, {"L", big_json(counts.values[t])}});
  return out;
}

}  // namespace twinned
