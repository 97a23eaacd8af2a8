#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twinned/monomial.hpp"
#include "twinned/order.hpp"
#include "twinned/toric.hpp"

namespace twinned {

// ---------------------------------------------------------------------------
// Orders on the toric variables.
//
// Admissible orders are reverse-lexicographic with z lowest and with
// x_I' < x_I, y_J' < y_J whenever I' ⊂ I, J' ⊂ J. Rankings list variable
// indices of a VariableSet from lowest to highest.
// ---------------------------------------------------------------------------

/// Validates `ranking` and returns the order. Throws InputError naming the
/// first offending pair.
MonomialOrder make_order(const VariableSet& vs, std::vector<std::size_t> ranking);

/// z, then the Y block, then the X block, each block in canonical ideal
/// order (cardinality, then label-lex).
MonomialOrder default_order(const VariableSet& vs);

/// Uniformly random admissible ranking: a random topological sort of the
/// inclusion constraints, seeded.
MonomialOrder random_order(const VariableSet& vs, std::uint64_t seed);

/// Reads a ranking file: whitespace-separated variable names (e.g. "z y{1}
/// x{1} x{1,2}") from lowest to highest.
MonomialOrder parse_order(const VariableSet& vs, const std::string& text);

// ---------------------------------------------------------------------------
// Binomial Buchberger engine.
// ---------------------------------------------------------------------------

/// Order in which critical pairs are processed. Both yield the same reduced
/// basis; the choice only affects the route taken.
enum class PairSchedule { kDegree, kFifo };

struct GroebnerBasis {
  /// Each element oriented with its initial monomial first, sorted by
  /// initial monomial ascending.
  std::vector<Binomial> elements;
  MonomialOrder order;
  bool reduced = false;
};

/// Orients a binomial so that first > second. Returns nullopt for a zero
/// binomial (equal monomials).
std::optional<Binomial> orient(const Binomial& f, const MonomialOrder& order);

/// Fully reduced normal form of f modulo `basis` (whose elements must be
/// oriented). nullopt means f reduces to zero.
std::optional<Binomial> reduce(const Binomial& f, std::span<const Binomial> basis, const MonomialOrder& order);

/// S-binomial of two oriented binomials.
std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by `gens`.
GroebnerBasis buchberger(std::span<const Binomial> gens, const MonomialOrder& order,
                         PairSchedule schedule = PairSchedule::kDegree);

/// True iff every S-pair of `candidate` reduces to zero modulo `candidate`
/// and every element of `ideal_gens` does too. Throws InputError when some
/// candidate element lies outside the toric ideal.
bool is_groebner(const VariableSet& vs, std::span<const Binomial> candidate,
                 std::span<const Binomial> ideal_gens, const MonomialOrder& order);

/// Largest total degree of an element; 0 for the empty basis.
int max_degree(const GroebnerBasis& gb);
int max_degree(std::span<const Binomial> binomials);

/// True iff both generating sets span the same ideal.
bool ideal_equality(std::span<const Binomial> gens_a, std::span<const Binomial> gens_b,
                    const MonomialOrder& order);

}  // namespace twinned
