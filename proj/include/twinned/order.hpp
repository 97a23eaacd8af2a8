#pragma once

#include <compare>
#include <vector>

#include "twinned/monomial.hpp"

namespace twinned {

/// Graded reverse-lexicographic order on a ranked variable list, optionally
/// split into blocks. `ranking` lists variable indices from the lowest-ranked
/// to the highest. `block_sizes` partitions the ranking into consecutive
/// ranges starting from the lowest; a higher block dominates every lower one,
/// and each block is compared by degree then reverse-lexicographically.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<std::size_t> ranking, std::vector<std::size_t> block_sizes = {});

  std::size_t nvars() const { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }
  std::size_t rank_of(std::size_t var) const { return rank_[var]; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  std::vector<std::size_t> ranking_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> block_sizes_;
};

}  // namespace twinned
