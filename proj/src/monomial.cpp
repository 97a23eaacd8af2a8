#include "twinned/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "twinned/errors.hpp"

namespace twinned {

Exponent Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), Exponent{0}); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] && other.exps_[v]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t v = 0; v < out.exps_.size(); ++v) out.exps_[v] += b.exps_[v];
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < out.exps_.size(); ++v) {
    out.exps_[v] -= divisor.exps_[v];
    if (out.exps_[v] < 0) throw InternalError("monomial division is not exact");
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t v = 0; v < out.exps_.size(); ++v) out.exps_[v] = std::max(a.exps_[v], b.exps_[v]);
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
  return h;
}

}  // namespace twinned
