#pragma once

#include "crnbinom/polynomial.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crnbinom {

/// Formal nonnegative-integer combination of species: one side of a
/// reaction. The empty combination is the zero complex.
class Complex {
public:
  Complex() = default;

  /// Keys are species ids, values stoichiometric coefficients (>= 1).
  explicit Complex(std::map<int, int> terms) : terms_(std::move(terms)) {
    for (const auto& [id, coeff] : terms_) {
      if (coeff < 1) throw std::invalid_argument("Complex: coefficient must be at least 1");
    }
  }

  Complex(std::initializer_list<std::pair<const int, int>> terms)
      : Complex(std::map<int, int>(terms)) {}

  static Complex zero() { return Complex{}; }

  const std::map<int, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int coefficient(int species_id) const {
    auto it = terms_.find(species_id);
    return it == terms_.end() ? 0 : it->second;
  }

  friend bool operator==(const Complex&, const Complex&) = default;

private:
  std::map<int, int> terms_;
};

struct Reaction {
  int id{};
  std::string name;
  Complex reactant;
  Complex product;
  bool reversible{};
  int forward_rate{};                 // index into the rate table
  std::optional<int> backward_rate;   // present exactly when reversible
};

/// A mass-action reaction network: species, rate symbols, and reactions
/// between complexes. Construction is permissive; validate() reports every
/// structural violation as data.
class ReactionNetwork {
public:
  int add_species(std::string name) {
    species_.push_back(std::move(name));
    return static_cast<int>(species_.size()) - 1;
  }

  int add_rate(std::string name) {
    rates_.push_back(std::move(name));
    return static_cast<int>(rates_.size()) - 1;
  }

  /// Adds a reaction; reversibility is implied by the presence of a
  /// backward rate symbol. Returns the reaction id.
  int add_reaction(std::string name, Complex reactant, Complex product,
                   std::string forward_rate_name,
                   std::optional<std::string> backward_rate_name = std::nullopt) {
    Reaction r;
    r.id = static_cast<int>(reactions_.size());
    r.name = std::move(name);
    r.reactant = std::move(reactant);
    r.product = std::move(product);
    r.forward_rate = add_rate(std::move(forward_rate_name));
    if (backward_rate_name.has_value()) {
      r.backward_rate = add_rate(std::move(*backward_rate_name));
      r.reversible = true;
    }
    reactions_.push_back(std::move(r));
    return reactions_.back().id;
  }

  const std::vector<std::string>& species_names() const { return species_; }
  const std::vector<std::string>& rate_names() const { return rates_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }

  std::size_t species_count() const { return species_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }

  const std::string& species_name(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= species_.size()) {
      throw std::out_of_range("ReactionNetwork: unknown species id");
    }
    return species_[static_cast<std::size_t>(id)];
  }

  const std::string& rate_name(int index) const {
    if (index < 0 || static_cast<std::size_t>(index) >= rates_.size()) {
      throw std::out_of_range("ReactionNetwork: unknown rate index");
    }
    return rates_[static_cast<std::size_t>(index)];
  }

  const Reaction& reaction(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= reactions_.size()) {
      throw std::out_of_range("ReactionNetwork: unknown reaction id");
    }
    return reactions_[static_cast<std::size_t>(id)];
  }

  std::optional<int> find_species(const std::string& name) const {
    for (std::size_t i = 0; i < species_.size(); ++i) {
      if (species_[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
  }

private:
  std::vector<std::string> species_;
  std::vector<std::string> rates_;
  std::vector<Reaction> reactions_;
};

/// Structural equality: same species name sequence and the same reactions
/// (name, complexes, reversibility, rate symbols). Rate-table storage order
/// is derived data and does not participate.
inline bool operator==(const ReactionNetwork& a, const ReactionNetwork& b) {
  if (a.species_names() != b.species_names()) return false;
  if (a.reaction_count() != b.reaction_count()) return false;
  for (std::size_t i = 0; i < a.reaction_count(); ++i) {
    const Reaction& ra = a.reactions()[i];
    const Reaction& rb = b.reactions()[i];
    if (ra.name != rb.name || ra.reactant != rb.reactant || ra.product != rb.product ||
        ra.reversible != rb.reversible) {
      return false;
    }
    if (a.rate_name(ra.forward_rate) != b.rate_name(rb.forward_rate)) return false;
    if (ra.reversible &&
        a.rate_name(*ra.backward_rate) != b.rate_name(*rb.backward_rate)) {
      return false;
    }
  }
  return true;
}

/// Net stoichiometric change of a species across a reaction:
/// product coefficient minus reactant coefficient.
inline int net_change(const ReactionNetwork& net, int reaction_id, int species_id) {
  const Reaction& r = net.reaction(reaction_id);
  if (species_id < 0 || static_cast<std::size_t>(species_id) >= net.species_count()) {
    throw std::out_of_range("net_change: unknown species id");
  }
  return r.product.coefficient(species_id) - r.reactant.coefficient(species_id);
}

struct ReactionPartition {
  std::vector<int> reversible;
  std::vector<int> irreversible;
};

/// Splits reaction ids by reversibility, each part in ascending id order.
inline ReactionPartition partition(const ReactionNetwork& net) {
  ReactionPartition p;
  for (const Reaction& r : net.reactions()) {
    (r.reversible ? p.reversible : p.irreversible).push_back(r.id);
  }
  return p;
}

/// Checks every structural invariant and returns all violations found.
inline std::vector<std::string> validate(const ReactionNetwork& net) {
  std::vector<std::string> out;
  const auto n = static_cast<int>(net.species_count());

  std::map<std::string, int> species_seen;
  for (std::size_t i = 0; i < net.species_count(); ++i) {
    const std::string& name = net.species_names()[i];
    if (name.empty()) out.push_back("species " + std::to_string(i) + " has an empty name");
    if (++species_seen[name] == 2) out.push_back("duplicate species name '" + name + "'");
  }

  std::map<std::string, int> symbol_seen;
  for (const std::string& name : net.rate_names()) {
    if (name.empty()) out.push_back("empty rate symbol");
    if (++symbol_seen[name] == 2) out.push_back("duplicate rate symbol '" + name + "'");
  }
  for (const Reaction& r : net.reactions()) {
    if (r.name.empty()) out.push_back("reaction " + std::to_string(r.id) + " has an empty name");
    if (++symbol_seen[r.name] == 2) {
      out.push_back("symbol '" + r.name + "' used as both reaction and rate name or twice");
    }
  }

  std::set<int> rate_slots_used;
  std::vector<char> referenced(net.species_count(), 0);
  for (const Reaction& r : net.reactions()) {
    auto check_complex = [&](const Complex& c, const char* side) {
      for (const auto& [id, coeff] : c.terms()) {
        if (id < 0 || id >= n) {
          out.push_back("reaction '" + r.name + "' " + side + " references undeclared species id " +
                        std::to_string(id));
        } else {
          referenced[static_cast<std::size_t>(id)] = 1;
        }
        if (coeff < 1) {
          out.push_back("reaction '" + r.name + "' " + side + " has nonpositive coefficient");
        }
      }
    };
    check_complex(r.reactant, "reactant");
    check_complex(r.product, "product");
    if (r.reactant == r.product) {
      out.push_back("reaction '" + r.name + "' has equal reactant and product");
    }
    if (r.reversible != r.backward_rate.has_value()) {
      out.push_back("reaction '" + r.name + "' reversibility and backward rate disagree");
    }
    auto check_rate = [&](int index) {
      if (index < 0 || static_cast<std::size_t>(index) >= net.rate_names().size()) {
        out.push_back("reaction '" + r.name + "' references an unknown rate index");
      } else if (!rate_slots_used.insert(index).second) {
        out.push_back("rate symbol '" + net.rate_names()[static_cast<std::size_t>(index)] +
                      "' is shared by more than one reaction slot");
      }
    };
    check_rate(r.forward_rate);
    if (r.backward_rate.has_value()) check_rate(*r.backward_rate);
  }

  for (std::size_t i = 0; i < referenced.size(); ++i) {
    if (!referenced[i]) {
      out.push_back("species '" + net.species_names()[i] + "' is never referenced by a reaction");
    }
  }
  return out;
}

/// Display names for the ambient ring of a network.
inline VariableNames names_for(const ReactionNetwork& net) {
  return VariableNames{net.species_names(), net.rate_names()};
}

}  // namespace crnbinom
