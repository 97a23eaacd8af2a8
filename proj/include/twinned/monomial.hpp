#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace twinned {

using Exponent = std::int32_t;

/// Dense exponent vector over a fixed variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t v) const { return exps_[v]; }
  Exponent& operator[](std::size_t v) { return exps_[v]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Exponent degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires divisor | *this.
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

/// first - second, with unit coefficients.
struct Binomial {
  Monomial first;
  Monomial second;

  Exponent degree() const { return std::max(first.degree(), second.degree()); }
  auto operator<=>(const Binomial&) const = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace twinned
