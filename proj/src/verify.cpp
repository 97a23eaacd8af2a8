#include "twinned/verify.hpp"

#include <set>

#include "twinned/errors.hpp"

namespace twinned {

InteriorAnalysis analyze_interior(const Poset& p, const Poset& q) {
  InteriorAnalysis out;
  out.common_extension = common_linear_extension(p, q);
  if (!out.common_extension) out.union_cycle = union_cycle(p, q);
  out.certificate = origin_in_interior(build_omega(p, q));
  return out;
}

nlohmann::json QuadraticFamilyReport::to_json() const {
  return {{"initial_is_first", initial_is_first},
          {"g_is_groebner", g_is_groebner},
          {"reduced_gb_quadratic", reduced_gb_quadratic},
          {"initials_from_g", initials_from_g},
          {"g_contains_reduced_gb", g_contains_reduced_gb},
          {"g_size", g_size},
          {"reduced_gb_size", reduced_gb_size},
          {"reduced_gb_max_degree", reduced_gb_max_degree},
          {"passed", passed()}};
}

QuadraticFamilyReport verify_quadratic_family(const Poset& p, const Poset& q, const MonomialOrder& order,
                               const std::vector<Binomial>* toric_gens) {
  if (!common_linear_extension(p, q))
    throw InputError(
        "the posets have no common linear extension, so the origin is not an interior point "
        "of the twinned polytope and the quadratic family need not be a Groebner basis");
  const VariableSet vs = build_variables(p, q);
  const auto g = family_G(p, q, vs);
  QuadraticFamilyReport report;
  report.g_size = g.size();

  report.initial_is_first = true;
  for (const auto& b : g)
    if (order.compare(b.first, b.second) <= 0) report.initial_is_first = false;

  std::vector<Binomial> reduced;
  if (toric_gens) {
    reduced = buchberger(*toric_gens, order).elements;
  } else {
    reduced = toric_ideal_generators(vs, order);
  }
  report.reduced_gb_size = reduced.size();
  report.reduced_gb_max_degree = max_degree(reduced);
  report.reduced_gb_quadratic = report.reduced_gb_max_degree == 2;
  report.g_is_groebner = is_groebner(vs, g, reduced, order);

  std::set<Monomial> firsts;
  std::set<std::pair<Monomial, Monomial>> members;
  for (const auto& b : g) {
    firsts.insert(b.first);
    members.emplace(b.first, b.second);
  }
  report.initials_from_g = true;
  report.g_contains_reduced_gb = true;
  for (const auto& b : reduced) {
    if (!firsts.count(b.first)) report.initials_from_g = false;
    if (!members.count({b.first, b.second})) report.g_contains_reduced_gb = false;
  }
  return report;
}

bool quadratically_generated(const VariableSet& vs, const std::vector<Binomial>& toric_gens,
                             const MonomialOrder& order) {
  return ideal_equality(quadratic_binomials(vs, order), toric_gens, order);
}

nlohmann::json PolytopeReport::to_json() const {
  nlohmann::json out{{"origin_interior", origin_interior},
                     {"omega_size", omega_size},
                     {"facets", facets},
                     {"counts", twinned::to_json(counts)},
                     {"delta", twinned::to_json(delta)},
                     {"symmetric", flags.symmetric},
                     {"unimodal", flags.unimodal},
                     {"reflexive", reflexive},
                     {"fano", fano},
                     {"normal_t_max", normal_t_max}};
  out["normal"] = normal ? nlohmann::json(*normal) : nlohmann::json(nullptr);
  return out;
}

PolytopeReport analyze_polytope(const Poset& p, const Poset& q, int t_max) {
  PolytopeReport report;
  const Polytope poly(build_omega(p, q));
  const auto& hrep = poly.halfspaces();
  const int d = poly.dim();
  report.omega_size = poly.configuration().points.size();
  report.facets = hrep.size();
  report.origin_interior = std::all_of(hrep.begin(), hrep.end(), [](const HalfSpace& h) { return h.offset > 0; });
  report.counts = ehrhart_counts(hrep, d, d);
  report.delta = delta_vector(report.counts, d);
  report.flags = is_symmetric_unimodal(report.delta);
  report.reflexive = check_reflexive(hrep);
  report.fano = check_fano(hrep, d);
  report.normal_t_max = t_max;
  if (t_max >= 2) report.normal = check_normal(poly.configuration(), hrep, t_max);
  return report;
}

}  // namespace twinned
