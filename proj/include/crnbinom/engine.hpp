#pragma once

#include "crnbinom/kinetics.hpp"
#include "crnbinom/matrix.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crnbinom {

enum class VerdictKind { Binomial, NotBinomial, Inconclusive };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Binomial: return "Binomial";
    case VerdictKind::NotBinomial: return "NotBinomial";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

/// A reduced row with two or more nonzero entries: the evidence against a
/// binomial generating set.
struct WitnessRow {
  std::size_t row{};
  std::vector<std::size_t> support;
};

struct Verdict {
  VerdictKind kind{VerdictKind::Inconclusive};
  std::vector<Polynomial> generators;    // Binomial only; every entry is_binomial()
  std::vector<WitnessRow> witness_rows;  // NotBinomial / Inconclusive only
};

struct BinomialityReport {
  Verdict verdict;
  RationalMatrix coefficient_matrix;  // reversible columns, then irreversible columns
  RrefResult rref;
  std::size_t reversible_count{0};
  std::size_t irreversible_count{0};
  // Monomial steady-state generators read off irreversible pivot columns.
  std::vector<Polynomial> monomial_generators;
  bool monomial_generators_present{false};
  std::map<std::string, std::int64_t> timings_us;
};

/// Coefficient matrix of the reversible part: one row per species s, one
/// column per reversible reaction r, entry = decomposition_coefficient(r, s)
/// so that row s dotted with the reaction binomials equals p_s.
inline RationalMatrix build_binomial_matrix(const ReactionNetwork& net) {
  ReactionPartition parts = partition(net);
  std::vector<std::string> row_labels;
  row_labels.reserve(net.species_count());
  for (const std::string& s : net.species_names()) row_labels.push_back("p(" + s + ")");
  std::vector<std::string> col_labels;
  col_labels.reserve(parts.reversible.size());
  for (int rid : parts.reversible) col_labels.push_back("b(" + net.reaction(rid).name + ")");

  RationalMatrix m(net.species_count(), parts.reversible.size(), std::move(row_labels),
                   std::move(col_labels));
  for (std::size_t j = 0; j < parts.reversible.size(); ++j) {
    for (std::size_t s = 0; s < net.species_count(); ++s) {
      int c = decomposition_coefficient(net, parts.reversible[j], static_cast<int>(s));
      if (c != 0) m.at(s, j) = Rational(c);
    }
  }
  return m;
}

/// Coefficient block of the irreversible part: one column per irreversible
/// reaction r, entry = net_change(r, s), weighting the monomial flux terms
/// t_r in the generator decomposition.
inline RationalMatrix build_irreversible_matrix(const ReactionNetwork& net) {
  ReactionPartition parts = partition(net);
  std::vector<std::string> row_labels;
  row_labels.reserve(net.species_count());
  for (const std::string& s : net.species_names()) row_labels.push_back("p(" + s + ")");
  std::vector<std::string> col_labels;
  col_labels.reserve(parts.irreversible.size());
  for (int rid : parts.irreversible) col_labels.push_back("t(" + net.reaction(rid).name + ")");

  RationalMatrix m(net.species_count(), parts.irreversible.size(), std::move(row_labels),
                   std::move(col_labels));
  for (std::size_t j = 0; j < parts.irreversible.size(); ++j) {
    for (std::size_t s = 0; s < net.species_count(); ++s) {
      int c = net_change(net, parts.irreversible[j], static_cast<int>(s));
      if (c != 0) m.at(s, j) = Rational(c);
    }
  }
  return m;
}

/// Packages the outcome of a binomiality run. The monomial-generator flag
/// is derived from the list itself.
inline BinomialityReport assemble_report(Verdict verdict, RationalMatrix coefficient_matrix,
                                         RrefResult reduced, std::size_t reversible_count,
                                         std::size_t irreversible_count,
                                         std::vector<Polynomial> monomial_generators,
                                         std::map<std::string, std::int64_t> timings_us) {
  BinomialityReport rep;
  rep.verdict = std::move(verdict);
  rep.coefficient_matrix = std::move(coefficient_matrix);
  rep.rref = std::move(reduced);
  rep.reversible_count = reversible_count;
  rep.irreversible_count = irreversible_count;
  rep.monomial_generators = std::move(monomial_generators);
  rep.monomial_generators_present = !rep.monomial_generators.empty();
  rep.timings_us = std::move(timings_us);
  return rep;
}

namespace engine_detail {

inline std::int64_t elapsed_us(std::chrono::steady_clock::time_point from,
                               std::chrono::steady_clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::microseconds>(to - from).count();
}

inline void require_valid(const ReactionNetwork& net, const char* who) {
  std::vector<std::string> violations = validate(net);
  if (!violations.empty()) {
    throw std::invalid_argument(std::string(who) + ": invalid network: " + violations.front());
  }
}

}  // namespace engine_detail

/// Decides unconditional binomiality of an all-reversible network by exact
/// linear algebra: reduce the coefficient matrix; the steady-state ideal
/// has a binomial generating set exactly when every reduced row has at most
/// one nonzero entry, in which case the pivot-column binomials generate.
inline BinomialityReport test_reversible(const ReactionNetwork& net) {
  using clock = std::chrono::steady_clock;
  engine_detail::require_valid(net, "test_reversible");
  ReactionPartition parts = partition(net);
  if (!parts.irreversible.empty()) {
    throw std::invalid_argument("test_reversible: network has irreversible reactions");
  }

  auto t0 = clock::now();
  RationalMatrix m = build_binomial_matrix(net);
  if (!check_decomposition(net)) {
    throw std::logic_error("test_reversible: generator decomposition identity failed");
  }
  auto t1 = clock::now();
  RrefResult red = rref(m);
  auto t2 = clock::now();

  Verdict verdict;
  verdict.kind = VerdictKind::Binomial;
  for (std::size_t r = 0; r < red.matrix.rows(); ++r) {
    std::vector<std::size_t> support = row_support(red.matrix, r);
    if (support.size() > 1) {
      verdict.kind = VerdictKind::NotBinomial;
      verdict.witness_rows.push_back({r, std::move(support)});
    }
  }
  if (verdict.kind == VerdictKind::Binomial) {
    // Each nonzero row is a lone pivot, so the combined generators are
    // exactly the pivot-column binomials.
    for (std::size_t col : red.pivot_cols) {
      verdict.generators.push_back(reaction_binomial(net, parts.reversible[col]));
    }
  }
  auto t3 = clock::now();

  std::map<std::string, std::int64_t> timings{
      {"build", engine_detail::elapsed_us(t0, t1)},
      {"rref", engine_detail::elapsed_us(t1, t2)},
      {"combine", engine_detail::elapsed_us(t2, t3)},
  };
  return assemble_report(std::move(verdict), std::move(m), std::move(red),
                         parts.reversible.size(), 0, {}, std::move(timings));
}

/// General networks: reduce the stacked matrix [reversible | irreversible]
/// jointly. Every reduced row a singleton: Binomial, with the pivot columns
/// splitting into binomial generators (reversible side) and monomial
/// generators (irreversible side). Any wider row on a mixed network is only
/// Inconclusive, since row combinations might still hide a binomial basis;
/// on an all-reversible network it is a definitive NotBinomial.
inline BinomialityReport test_general(const ReactionNetwork& net) {
  using clock = std::chrono::steady_clock;
  engine_detail::require_valid(net, "test_general");
  ReactionPartition parts = partition(net);

  auto t0 = clock::now();
  RationalMatrix stacked = hstack(build_binomial_matrix(net), build_irreversible_matrix(net));
  if (!check_decomposition(net)) {
    throw std::logic_error("test_general: generator decomposition identity failed");
  }
  auto t1 = clock::now();
  RrefResult red = rref(stacked);
  auto t2 = clock::now();

  std::size_t rev_cols = parts.reversible.size();
  Verdict verdict;
  verdict.kind = VerdictKind::Binomial;
  for (std::size_t r = 0; r < red.matrix.rows(); ++r) {
    std::vector<std::size_t> support = row_support(red.matrix, r);
    if (support.size() > 1) {
      verdict.kind = parts.irreversible.empty() ? VerdictKind::NotBinomial
                                                : VerdictKind::Inconclusive;
      verdict.witness_rows.push_back({r, std::move(support)});
    }
  }
  std::vector<Polynomial> monomials;
  if (verdict.kind == VerdictKind::Binomial) {
    for (std::size_t col : red.pivot_cols) {
      if (col < rev_cols) {
        verdict.generators.push_back(reaction_binomial(net, parts.reversible[col]));
      } else {
        monomials.push_back(irreversible_term(net, parts.irreversible[col - rev_cols]));
      }
    }
  }
  auto t3 = clock::now();

  std::map<std::string, std::int64_t> timings{
      {"build", engine_detail::elapsed_us(t0, t1)},
      {"rref", engine_detail::elapsed_us(t1, t2)},
      {"combine", engine_detail::elapsed_us(t2, t3)},
  };
  return assemble_report(std::move(verdict), std::move(stacked), std::move(red),
                         parts.reversible.size(), parts.irreversible.size(),
                         std::move(monomials), std::move(timings));
}

}  // namespace crnbinom
