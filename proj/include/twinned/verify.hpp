#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinned/ehrhart.hpp"
#include "twinned/groebner.hpp"
#include "twinned/polytope.hpp"
#include "twinned/poset.hpp"
#include "twinned/toric.hpp"

namespace twinned {

/// Both routes to the interior-origin question for one pair.
struct InteriorAnalysis {
  std::optional<std::vector<int>> common_extension;
  std::vector<int> union_cycle;
  std::optional<InteriorCertificate> certificate;

  bool agree() const { return common_extension.has_value() == certificate.has_value(); }
};

InteriorAnalysis analyze_interior(const Poset& p, const Poset& q);

/// Checks for the quadratic family G under one admissible order.
struct QuadraticFamilyReport {
  bool initial_is_first = false;   // every element of G has its first monomial initial
  bool g_is_groebner = false;      // S-pairs of G and all toric generators reduce to zero
  bool reduced_gb_quadratic = false;
  bool initials_from_g = false;    // in(reduced GB) ⊆ { first(g) : g in G }
  bool g_contains_reduced_gb = false;  // informational: reduced GB ⊆ G
  std::size_t g_size = 0;
  std::size_t reduced_gb_size = 0;
  int reduced_gb_max_degree = 0;

  bool passed() const { return initial_is_first && g_is_groebner && reduced_gb_quadratic && initials_from_g; }
  nlohmann::json to_json() const;
};

/// Throws InputError when the posets have no common linear extension (the
/// origin is then not interior and the statement does not apply).
/// `toric_gens` may supply a generating set of the toric ideal computed
/// earlier; otherwise it is computed by elimination under `order`.
QuadraticFamilyReport verify_quadratic_family(const Poset& p, const Poset& q, const MonomialOrder& order,
                               const std::vector<Binomial>* toric_gens = nullptr);

/// True iff the degree-2 binomials of the toric ideal generate all of it.
bool quadratically_generated(const VariableSet& vs, const std::vector<Binomial>& toric_gens,
                             const MonomialOrder& order);

/// Geometric consequences for a pair: lattice-point counts, delta vector and
/// the reflexive/Fano/normal flags. Normality is only tested up to t_max.
struct PolytopeReport {
  bool origin_interior = false;
  EhrhartCounts counts;
  DeltaVector delta;
  SymmetryFlags flags;
  bool reflexive = false;
  bool fano = false;
  std::optional<bool> normal;  // absent when t_max < 2 was requested
  int normal_t_max = 0;
  std::size_t facets = 0;
  std::size_t omega_size = 0;

  bool geometry_holds() const {
    return reflexive && fano && normal.value_or(false) && flags.symmetric && flags.unimodal;
  }
  nlohmann::json to_json() const;
};

PolytopeReport analyze_polytope(const Poset& p, const Poset& q, int t_max);

}  // namespace twinned
