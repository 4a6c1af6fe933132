#pragma once

#include "crnbinom/engine.hpp"
#include "crnbinom/groebner.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

namespace crnbinom {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;

/// Process exit code for a verdict: Binomial 0, NotBinomial 1,
/// Inconclusive 2.
inline int exit_code_for(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Binomial: return 0;
    case VerdictKind::NotBinomial: return 1;
    case VerdictKind::Inconclusive: return 2;
  }
  return 2;
}

struct ReportOptions {
  bool emit_matrices = false;
  bool emit_generators = false;
};

/// Outcome of cross-checking a verdict against the Buchberger oracle.
struct OracleOutcome {
  bool completed{false};
  GbBinomiality result{};
  std::optional<bool> agrees;  // absent for Inconclusive (nothing to contradict)
  std::string error;           // budget message when not completed
};

/// Runs the oracle and records agreement: an unflagged Binomial verdict
/// must match strict binomiality, a flagged one the monomial-allowing
/// notion, and NotBinomial the strict notion's negation.
inline OracleOutcome oracle_crosscheck(const ReactionNetwork& net, const BinomialityReport& rep,
                                       const OracleBudget& budget = OracleBudget{}) {
  OracleOutcome out;
  try {
    out.result = gb_binomiality(net, budget);
    out.completed = true;
    switch (rep.verdict.kind) {
      case VerdictKind::Binomial:
        out.agrees = rep.monomial_generators_present ? out.result.binomial_allowing_monomials
                                                     : out.result.strictly_binomial;
        break;
      case VerdictKind::NotBinomial:
        out.agrees = !out.result.strictly_binomial;
        break;
      case VerdictKind::Inconclusive:
        break;
    }
  } catch (const BudgetExceeded& e) {
    out.error = e.what();
  }
  return out;
}

inline nlohmann::json matrix_to_json(const RationalMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", m.rows()},
                        {"cols", m.cols()},
                        {"row_labels", m.row_labels()},
                        {"col_labels", m.col_labels()},
                        {"entries", std::move(entries)}};
}

/// Serializes a report to the documented schema (version 1). Optional
/// blocks appear only when requested / applicable: "generators" and
/// "monomial_generators" with emit_generators on a Binomial verdict,
/// "matrices" with emit_matrices, "oracle" when an outcome is supplied.
inline nlohmann::json report_to_json(const BinomialityReport& rep, const ReactionNetwork& net,
                                     const ReportOptions& options = ReportOptions{},
                                     const std::optional<OracleOutcome>& oracle = std::nullopt) {
  VariableNames names = names_for(net);
  nlohmann::json doc;
  doc["schema_version"] = "1";
  doc["network"] = {{"species", net.species_count()},
                    {"reactions", net.reaction_count()},
                    {"reversible", rep.reversible_count},
                    {"irreversible", rep.irreversible_count}};
  doc["verdict"] = to_string(rep.verdict.kind);
  doc["monomial_generators_present"] = rep.monomial_generators_present;

  nlohmann::json witnesses = nlohmann::json::array();
  for (const WitnessRow& w : rep.verdict.witness_rows) {
    nlohmann::json supports = nlohmann::json::array();
    nlohmann::json labels = nlohmann::json::array();
    for (std::size_t c : w.support) {
      supports.push_back(c);
      labels.push_back(rep.rref.matrix.col_labels()[c]);
    }
    witnesses.push_back({{"row", w.row},
                         {"label", rep.rref.matrix.row_labels()[w.row]},
                         {"support", std::move(supports)},
                         {"support_labels", std::move(labels)}});
  }
  doc["witness_rows"] = std::move(witnesses);
  doc["timings_us"] = rep.timings_us;

  if (options.emit_generators) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Polynomial& g : rep.verdict.generators) gens.push_back(render(g, names));
    doc["generators"] = std::move(gens);
    if (rep.monomial_generators_present) {
      nlohmann::json monos = nlohmann::json::array();
      for (const Polynomial& g : rep.monomial_generators) monos.push_back(render(g, names));
      doc["monomial_generators"] = std::move(monos);
    }
  }
  if (options.emit_matrices) {
    doc["matrices"] = {{"coefficient", matrix_to_json(rep.coefficient_matrix)},
                       {"rref", matrix_to_json(rep.rref.matrix)}};
    doc["matrices"]["rref"]["rank"] = rep.rref.rank;
    doc["matrices"]["rref"]["pivot_cols"] = rep.rref.pivot_cols;
  }
  if (oracle.has_value()) {
    nlohmann::json o;
    o["completed"] = oracle->completed;
    if (oracle->completed) {
      o["strictly_binomial"] = oracle->result.strictly_binomial;
      o["binomial_allowing_monomials"] = oracle->result.binomial_allowing_monomials;
      if (oracle->agrees.has_value()) o["agrees"] = *oracle->agrees;
    } else {
      o["error"] = oracle->error;
    }
    doc["oracle"] = std::move(o);
  }
  return doc;
}

/// Human-oriented rendering of the same content as report_to_json.
inline std::string report_to_text(const BinomialityReport& rep, const ReactionNetwork& net,
                                  const ReportOptions& options = ReportOptions{},
                                  const std::optional<OracleOutcome>& oracle = std::nullopt) {
  VariableNames names = names_for(net);
  std::string out;
  out += "network: " + std::to_string(net.species_count()) + " species, " +
         std::to_string(net.reaction_count()) + " reactions (" +
         std::to_string(rep.reversible_count) + " reversible, " +
         std::to_string(rep.irreversible_count) + " irreversible)\n";
  out += "verdict: " + std::string(to_string(rep.verdict.kind)) + "\n";
  if (options.emit_generators && rep.verdict.kind == VerdictKind::Binomial) {
    out += "generators:\n";
    if (rep.verdict.generators.empty() && rep.monomial_generators.empty()) out += "  (none)\n";
    for (const Polynomial& g : rep.verdict.generators) out += "  " + render(g, names) + "\n";
    for (const Polynomial& g : rep.monomial_generators) {
      out += "  " + render(g, names) + "  (monomial)\n";
    }
  }
  if (!rep.verdict.witness_rows.empty()) {
    out += "witness rows:\n";
    for (const WitnessRow& w : rep.verdict.witness_rows) {
      out += "  " + rep.rref.matrix.row_labels()[w.row] + ": columns";
      for (std::size_t c : w.support) out += " " + rep.rref.matrix.col_labels()[c];
      out += "\n";
    }
  }
  if (options.emit_matrices) {
    out += "coefficient matrix:\n" + render(rep.coefficient_matrix);
    out += "rref (rank " + std::to_string(rep.rref.rank) + "):\n" + render(rep.rref.matrix);
  }
  out += "timings:";
  for (const auto& [phase, us] : rep.timings_us) {
    out += " " + phase + " " + std::to_string(us) + "us";
  }
  out += "\n";
  if (oracle.has_value()) {
    if (!oracle->completed) {
      out += "oracle: not completed (" + oracle->error + ")\n";
    } else {
      out += std::string("oracle: ") +
             (oracle->result.strictly_binomial ? "binomial"
              : oracle->result.binomial_allowing_monomials
                  ? "binomial allowing monomial generators"
                  : "not binomial");
      if (oracle->agrees.has_value()) {
        out += *oracle->agrees ? " (agrees)" : " (DISAGREES)";
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace crnbinom
