#include "twinned/order.hpp"

#include <numeric>

#include "twinned/errors.hpp"

namespace twinned {

MonomialOrder::MonomialOrder(std::vector<std::size_t> ranking, std::vector<std::size_t> block_sizes)
    : ranking_(std::move(ranking)), rank_(ranking_.size()), block_sizes_(std::move(block_sizes)) {
  const std::size_t n = ranking_.size();
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    if (ranking_[r] >= n || seen[ranking_[r]]) throw InputError("ranking is not a permutation of the variables");
    seen[ranking_[r]] = true;
    rank_[ranking_[r]] = r;
  }
  if (block_sizes_.empty()) block_sizes_.push_back(n);
  if (std::accumulate(block_sizes_.begin(), block_sizes_.end(), std::size_t{0}) != n)
    throw InputError("order blocks do not cover the ranking");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  std::size_t end = ranking_.size();
  for (auto it = block_sizes_.rbegin(); it != block_sizes_.rend(); ++it) {
    const std::size_t begin = end - *it;
    Exponent da = 0, db = 0;
    for (std::size_t r = begin; r < end; ++r) {
      da += a[ranking_[r]];
      db += b[ranking_[r]];
    }
    if (da != db) return da <=> db;
    // Lowest-ranked differing variable: the smaller exponent is the larger monomial.
    for (std::size_t r = begin; r < end; ++r) {
      const Exponent ea = a[ranking_[r]], eb = b[ranking_[r]];
      if (ea != eb) return eb <=> ea;
    }
    end = begin;
  }
  return std::strong_ordering::equal;
}

}  // namespace twinned
