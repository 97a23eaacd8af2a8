#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinned/monomial.hpp"
#include "twinned/numeric.hpp"
#include "twinned/order.hpp"
#include "twinned/poset.hpp"

namespace twinned {

enum class VarKind { kX, kY, kZ };

/// x_I for a nonempty ideal I of P, y_J for a nonempty ideal J of Q, or z.
struct Variable {
  VarKind kind = VarKind::kZ;
  Mask ideal = 0;

  std::string name() const;
  auto operator<=>(const Variable&) const = default;
};

/// Variables of the toric ring in canonical order (X block, Y block, z last;
/// each block in canonical ideal order) with their images under pi. An image
/// is the exponent vector of t_1..t_d followed by the exponent of s.
class VariableSet {
 public:
  VariableSet(int d, std::vector<Variable> vars);

  int d() const { return d_; }
  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  const IntVector& pi_image(std::size_t i) const { return images_[i]; }

  std::size_t z() const { return vars_.size() - 1; }
  /// Index of x_I / y_J; the empty ideal maps to z. nullopt if absent.
  std::optional<std::size_t> find(VarKind kind, Mask ideal) const;
  std::size_t index_of(VarKind kind, Mask ideal) const;
  std::optional<std::size_t> find_by_name(const std::string& name) const;

  Monomial one() const { return Monomial(vars_.size()); }
  /// Product of the listed variables (repeats allowed).
  Monomial monomial(std::initializer_list<std::size_t> vars) const;

 private:
  int d_;
  std::vector<Variable> vars_;
  std::vector<IntVector> images_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

VariableSet build_variables(const Poset& p, const Poset& q);

/// Laurent exponent vector (t_1..t_d, s) of pi(m).
IntVector pi_eval(const VariableSet& vs, const Monomial& m);

/// True iff pi(first) == pi(second).
bool in_toric_ideal(const VariableSet& vs, const Binomial& b);

/// The quadratic binomial family: lattice relations of J(P) and of J(Q) over
/// incomparable pairs, and the mixed relations x_I y_J - x_{I-i} y_{J-i} for
/// every label i maximal in both I and J. The first monomial of each element
/// is the product x_I x_I' (resp. y_J y_J', x_I y_J).
std::vector<Binomial> family_G(const Poset& p, const Poset& q, const VariableSet& vs);

/// A generating set of the toric ideal (the kernel of pi), computed by
/// eliminating t_1..t_d, w, s from {v - pi(v)} plus t_1...t_d w - 1.
/// `main_order` orders the x/y/z block; `ambient_ranking` ranks t_1..t_d, w, s
/// (indices 0..d+1, lowest first), defaulting to that natural order. The
/// result is the reduced Groebner basis of the toric ideal for `main_order`.
std::vector<Binomial> toric_ideal_generators(const VariableSet& vs, const MonomialOrder& main_order,
                                             const std::vector<std::size_t>& ambient_ranking = {});
std::vector<Binomial> toric_ideal_generators(const VariableSet& vs);

/// Every binomial u - v with deg u = deg v = 2, pi(u) = pi(v), u > v under
/// `order`: the degree-2 component of the toric ideal spanned by binomials.
std::vector<Binomial> quadratic_binomials(const VariableSet& vs, const MonomialOrder& order);

std::string format_monomial(const VariableSet& vs, const Monomial& m);
/// "x{2,4}*x{1,2,3} - x{2}*x{1,2,3,4}"
std::string format_binomial(const VariableSet& vs, const Binomial& b);
nlohmann::json monomial_json(const VariableSet& vs, const Monomial& m);
nlohmann::json binomial_json(const VariableSet& vs, const Binomial& b);

/// Parses a product like "x{2}*x{1,2,3,4}*z^2".
Monomial parse_monomial(const VariableSet& vs, const std::string& text);

}  // namespace twinned
