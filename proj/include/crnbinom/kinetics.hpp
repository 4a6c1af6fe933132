#pragma once

#include "crnbinom/network.hpp"

#include <stdexcept>
#include <vector>

namespace crnbinom {

/// Mass-action monomial of a complex: the product of species variables
/// raised to their stoichiometric coefficients. The zero complex maps to 1.
inline Monomial complex_monomial(const Complex& c) {
  std::vector<Monomial::Factor> factors;
  factors.reserve(c.terms().size());
  for (const auto& [id, coeff] : c.terms()) factors.emplace_back(species_var(id), coeff);
  return Monomial::from_factors(std::move(factors));
}

/// The binomial attached to a reversible reaction:
///   b_r = -k_f * m(reactant) + k_b * m(product).
/// Throws for irreversible reactions.
inline Polynomial reaction_binomial(const ReactionNetwork& net, int reaction_id) {
  const Reaction& r = net.reaction(reaction_id);
  if (!r.reversible) throw std::domain_error("reaction_binomial: reaction is irreversible");
  Monomial kf = Monomial::variable(rate_var(r.forward_rate));
  Monomial kb = Monomial::variable(rate_var(*r.backward_rate));
  return Polynomial::from_terms({
      {Rational(-1), kf.times(complex_monomial(r.reactant))},
      {Rational(1), kb.times(complex_monomial(r.product))},
  });
}

/// The monomial flux term of an irreversible reaction:
///   t_r = k_f * m(reactant).
/// Throws for reversible reactions.
inline Polynomial irreversible_term(const ReactionNetwork& net, int reaction_id) {
  const Reaction& r = net.reaction(reaction_id);
  if (r.reversible) throw std::domain_error("irreversible_term: reaction is reversible");
  return Polynomial::term(
      Rational(1),
      Monomial::variable(rate_var(r.forward_rate)).times(complex_monomial(r.reactant)));
}

/// Net mass-action flux of one reaction:
///   reversible:   k_f * m(reactant) - k_b * m(product)   (= -b_r)
///   irreversible: k_f * m(reactant)                      (= t_r)
inline Polynomial rate_term(const ReactionNetwork& net, int reaction_id) {
  const Reaction& r = net.reaction(reaction_id);
  return r.reversible ? -reaction_binomial(net, reaction_id)
                      : irreversible_term(net, reaction_id);
}

/// Steady-state generators, one per species in id order:
///   p_s = sum over reactions of net_change(r, s) * rate_term(r),
/// i.e. the right-hand sides of the mass-action ODE dx_s/dt = p_s.
inline std::vector<Polynomial> ode_generators(const ReactionNetwork& net) {
  std::vector<Polynomial> flux;
  flux.reserve(net.reaction_count());
  for (const Reaction& r : net.reactions()) flux.push_back(rate_term(net, r.id));

  std::vector<Polynomial> out(net.species_count());
  for (const Reaction& r : net.reactions()) {
    for (const auto& [id, coeff] : r.reactant.terms()) {
      int c = net_change(net, r.id, id);
      if (c != 0) out[static_cast<std::size_t>(id)] += flux[static_cast<std::size_t>(r.id)].scaled(Rational(c));
    }
    for (const auto& [id, coeff] : r.product.terms()) {
      if (r.reactant.coefficient(id) != 0) continue;  // already handled above
      int c = net_change(net, r.id, id);
      if (c != 0) out[static_cast<std::size_t>(id)] += flux[static_cast<std::size_t>(r.id)].scaled(Rational(c));
    }
  }
  return out;
}

/// The integer weight of reversible reaction r in the generator of species
/// s: reactant coefficient minus product coefficient, so that
///   p_s = sum_r decomposition_coefficient(r, s) * b_r
/// over an all-reversible network. Throws for irreversible reactions.
inline int decomposition_coefficient(const ReactionNetwork& net, int reaction_id, int species_id) {
  const Reaction& r = net.reaction(reaction_id);
  if (!r.reversible) throw std::domain_error("decomposition_coefficient: reaction is irreversible");
  return -net_change(net, reaction_id, species_id);
}

/// Verifies the decomposition identity on every species generator:
///   p_s = sum_rev c(r,s) * b_r + sum_irr net_change(r,s) * t_r.
inline bool check_decomposition(const ReactionNetwork& net) {
  std::vector<Polynomial> gens = ode_generators(net);
  ReactionPartition parts = partition(net);
  for (std::size_t s = 0; s < net.species_count(); ++s) {
    Polynomial sum;
    for (int rid : parts.reversible) {
      int c = decomposition_coefficient(net, rid, static_cast<int>(s));
      if (c != 0) sum += reaction_binomial(net, rid).scaled(Rational(c));
    }
    for (int rid : parts.irreversible) {
      int c = net_change(net, rid, static_cast<int>(s));
      if (c != 0) sum += irreversible_term(net, rid).scaled(Rational(c));
    }
    if (sum != gens[s]) return false;
  }
  return true;
}

}  // namespace crnbinom
