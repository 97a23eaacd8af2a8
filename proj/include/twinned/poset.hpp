#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twinned {

/// Subset of {0, ..., d-1} as a bitmask. Labels are 0-based internally and
/// 1-based in every textual rendering.
using Mask = std::uint32_t;

inline constexpr int kMaxPosetSize = 24;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Renders a mask as "{1,2,4}" (1-based labels).
std::string format_mask(Mask m);

/// Finite strict partial order on {0, ..., d-1}, stored as its transitive
/// closure: `below(j)` is the set of i with i < j.
class Poset {
 public:
  /// Builds the transitive closure of `relations` (pairs (a, b) meaning a < b,
  /// 0-based). Throws InputError on out-of-range labels or when the closure
  /// contains a cycle; the message names the cycle.
  static Poset from_relations(int d, std::span<const std::pair<int, int>> relations);

  static Poset chain(int d);
  static Poset antichain(int d);

  int size() const { return static_cast<int>(below_.size()); }
  bool less(int i, int j) const { return (below_[j] >> i) & 1u; }
  Mask below(int j) const { return below_[j]; }
  Mask above(int i) const { return above_[i]; }

  /// Cover relations (a, b), 0-based, sorted.
  std::vector<std::pair<int, int>> covers() const;

  /// True iff `ideal` is a down-set.
  bool is_ideal(Mask ideal) const;
  /// True iff i is in `ideal` and no other member of `ideal` is above i.
  bool is_maximal_in(int i, Mask ideal) const {
    return ((ideal >> i) & 1u) && (above_[i] & ideal) == 0;
  }

  /// Poset with label perm[k] renamed to k; perm must be a linear extension
  /// for the result to have the natural order as one of its extensions.
  Poset relabel(std::span<const int> perm) const;

  bool operator==(const Poset&) const = default;

 private:
  explicit Poset(std::vector<Mask> below);
  std::vector<Mask> below_;
  std::vector<Mask> above_;
};

/// Parses "d; a<b a<c ..." (1-based labels, any generating relations).
Poset parse_poset(std::string_view text);

/// Canonical text form "d; a<b ..." listing cover relations only.
std::string serialize_poset(const Poset& p);

/// The lattice J(P) of down-sets, ordered by (cardinality, label-lex).
struct IdealFamily {
  std::vector<Mask> ideals;

  std::size_t size() const { return ideals.size(); }
  bool contains(Mask m) const;
};

/// Strict weak order used for every ideal listing: cardinality, then
/// lexicographic on the sorted label lists.
bool canonical_less(Mask a, Mask b);

IdealFamily enumerate_ideals(const Poset& p);

/// perm lists 0-based labels in order; true iff every relation of p is
/// respected. perm must be a permutation of {0, ..., d-1}.
bool is_linear_extension(const Poset& p, std::span<const int> perm);

/// Linear extension of both posets (topological sort of the union relation,
/// smallest available label first), or nullopt when the union has a cycle.
/// Throws InputError when sizes differ.
std::optional<std::vector<int>> common_linear_extension(const Poset& p, const Poset& q);

/// A directed cycle in the union relation (0-based labels, first label
/// repeated at the end), or empty when the union is acyclic.
std::vector<int> union_cycle(const Poset& p, const Poset& q);

/// Random poset: each pair i < j (as integers) becomes a relation with
/// probability num/den, then the result is transitively closed.
Poset random_poset(int d, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

/// Seeded uniformly random permutation of {0, ..., d-1}.
std::vector<int> random_permutation(int d, std::uint64_t seed);

/// Two independent random posets, the second with its labels shuffled, so
/// the pair may or may not share a linear extension.
std::pair<Poset, Poset> random_pair(int d, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

/// Two independent random posets relabeled by one shared random permutation;
/// that permutation's inverse order is always a common linear extension.
std::pair<Poset, Poset> random_compatible_pair(int d, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

/// Formats a 0-based permutation as 1-based digits ("2 1 3 4 5").
std::string format_permutation(std::span<const int> perm);

}  // namespace twinned
