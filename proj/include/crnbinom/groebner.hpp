#pragma once

#include "crnbinom/kinetics.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace crnbinom {

/// Guardrails for the Buchberger oracle: it exists to cross-check small
/// instances, not to race the matrix test.
struct OracleBudget {
  std::size_t max_variables = 12;
  std::size_t max_generator_terms = 40;
  std::size_t max_pair_reductions = 10000;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reduced Groebner basis: monic elements, pairwise non-divisible leading
/// monomials, fully tail-reduced, sorted ascending by leading monomial.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> elements;
};

/// S-polynomial: with g = lcm(LM(p), LM(q)),
///   S = (g / LT(p)) * p - (g / LT(q)) * q,
/// cancelling the leading terms. Throws if either input is zero.
inline Polynomial s_polynomial(const Polynomial& p, const Polynomial& q,
                               const TermOrder& order = TermOrder{}) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("s_polynomial: zero input");
  const auto& [cp, mp] = p.leading_term(order);
  const auto& [cq, mq] = q.leading_term(order);
  Monomial g = Monomial::lcm(mp, mq);
  Polynomial left = p.times_monomial(g.divided_by(mp)).scaled(Rational(1) / cp);
  Polynomial right = q.times_monomial(g.divided_by(mq)).scaled(Rational(1) / cq);
  return left - right;
}

/// Full normal form of p modulo the basis list. Deterministic strategy: at
/// every step reduce the order-largest reducible term, using the first
/// basis element (in list order) whose leading monomial divides it.
inline Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                         const TermOrder& order = TermOrder{}) {
  Polynomial work = p;
  while (!work.is_zero()) {
    const Polynomial::Term* target = nullptr;
    const Polynomial* divisor = nullptr;
    // Stored terms are descending under the ambient order, so the first
    // reducible term found is already the largest; other orders need a
    // full scan.
    for (const Polynomial::Term& t : work.terms()) {
      const Polynomial* found = nullptr;
      for (const Polynomial& g : basis) {
        if (!g.is_zero() && g.leading_monomial(order).divides(t.second)) {
          found = &g;
          break;
        }
      }
      if (!found) continue;
      if (!target || order.greater(t.second, target->second)) {
        target = &t;
        divisor = found;
      }
      if (order.is_ambient()) break;
    }
    if (!target) return work;
    const auto& [gc, gm] = divisor->leading_term(order);
    work = work - divisor->times_monomial(target->second.divided_by(gm))
                      .scaled(target->first / gc);
  }
  return work;
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties by pair index) and the coprime-leading-monomial skip.
/// The result is the unique reduced Groebner basis for the order. Budget
/// overruns throw BudgetExceeded.
inline GroebnerBasis buchberger(std::vector<Polynomial> generators,
                                const TermOrder& order = TermOrder{},
                                const OracleBudget& budget = OracleBudget{}) {
  std::vector<Polynomial> basis;
  std::set<Variable> vars;
  std::size_t total_terms = 0;
  for (Polynomial& g : generators) {
    if (g.is_zero()) continue;
    total_terms += g.term_count();
    for (const auto& [c, m] : g.terms()) {
      for (const auto& [v, e] : m.factors()) vars.insert(v);
    }
    basis.push_back(std::move(g));
  }
  if (vars.size() > budget.max_variables) {
    throw BudgetExceeded("buchberger: " + std::to_string(vars.size()) +
                         " variables exceed the budget of " +
                         std::to_string(budget.max_variables));
  }
  if (total_terms > budget.max_generator_terms) {
    throw BudgetExceeded("buchberger: " + std::to_string(total_terms) +
                         " generator terms exceed the budget of " +
                         std::to_string(budget.max_generator_terms));
  }

  struct Pair {
    std::size_t i, j;
    int lcm_degree;
  };
  std::vector<Pair> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j,
                       Monomial::lcm(basis[i].leading_monomial(order),
                                     basis[j].leading_monomial(order))
                           .degree()});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (std::tie(a.lcm_degree, a.i, a.j) < std::tie(b.lcm_degree, b.i, b.j)) best = k;
    }
    Pair pair = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (basis[pair.i].leading_monomial(order).coprime_with(
            basis[pair.j].leading_monomial(order))) {
      continue;  // S-polynomial reduces to zero; skip without spending budget
    }
    if (++reductions > budget.max_pair_reductions) {
      throw BudgetExceeded("buchberger: pair reductions exceed the budget of " +
                           std::to_string(budget.max_pair_reductions));
    }
    Polynomial r = reduce(s_polynomial(basis[pair.i], basis[pair.j], order), basis, order);
    if (!r.is_zero()) {
      basis.push_back(std::move(r));
      push_pairs_for(basis.size() - 1);
    }
  }

  // Minimalize: sort ascending by leading monomial, then drop any element
  // whose leading monomial is divisible by an already-kept one (divisors
  // always sort earlier).
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.less(basis[a].leading_monomial(order), basis[b].leading_monomial(order));
  });
  std::vector<Polynomial> kept;
  for (std::size_t k : idx) {
    const Monomial& lm = basis[k].leading_monomial(order);
    bool redundant = false;
    for (const Polynomial& h : kept) {
      if (h.leading_monomial(order).divides(lm)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(basis[k]);
  }

  // Tail-reduce each element against the others, then normalize to monic.
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(kept.size() - 1);
    for (std::size_t h = 0; h < kept.size(); ++h) {
      if (h != k) others.push_back(kept[h]);
    }
    kept[k] = reduce(kept[k], others, order);
  }
  for (Polynomial& g : kept) g = g.scaled(Rational(1) / g.leading_term(order).first);
  std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  return GroebnerBasis{order, std::move(kept)};
}

struct GbBinomiality {
  bool strictly_binomial{};           // every reduced-basis element has exactly 2 terms
  bool binomial_allowing_monomials{}; // every element has at most 2 terms
};

/// Runs the oracle on the steady-state generators of a network (zero
/// generators dropped) under the ambient order.
inline GbBinomiality gb_binomiality(const ReactionNetwork& net,
                                    const OracleBudget& budget = OracleBudget{}) {
  std::vector<Polynomial> gens;
  for (Polynomial& p : ode_generators(net)) {
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  GroebnerBasis gb = buchberger(std::move(gens), TermOrder{}, budget);
  GbBinomiality out{true, true};
  for (const Polynomial& g : gb.elements) {
    if (g.term_count() > 2) out.binomial_allowing_monomials = false;
    if (g.term_count() != 2) out.strictly_binomial = false;
  }
  return out;
}

/// Ground truth for the matrix test: is the steady-state ideal generated by
/// polynomials with exactly two terms? Decided via the reduced basis.
inline bool binomiality_via_gb(const ReactionNetwork& net,
                               const OracleBudget& budget = OracleBudget{}) {
  return gb_binomiality(net, budget).strictly_binomial;
}

/// Whether two generator lists span the same ideal: each element of either
/// list reduces to zero modulo the reduced basis of the other.
inline bool ideal_equal(const std::vector<Polynomial>& first,
                        const std::vector<Polynomial>& second,
                        const TermOrder& order = TermOrder{},
                        const OracleBudget& budget = OracleBudget{}) {
  GroebnerBasis gb_first = buchberger(first, order, budget);
  GroebnerBasis gb_second = buchberger(second, order, budget);
  for (const Polynomial& p : first) {
    if (!reduce(p, gb_second.elements, order).is_zero()) return false;
  }
  for (const Polynomial& q : second) {
    if (!reduce(q, gb_first.elements, order).is_zero()) return false;
  }
  return true;
}

}  // namespace crnbinom
