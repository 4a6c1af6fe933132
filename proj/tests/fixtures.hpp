#pragma once

// Shared builders for the example networks and network transformations used
// across the test suites and the acceptance runner.

#include "crnbinom/crnbinom.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace testnets {

using namespace crnbinom;

// CO2 + H2 <=> CO + H2O, 2 CO <=> CO2 + C; species x1..x5.
inline ReactionNetwork water_gas() {
  ReactionNetwork net;
  for (int i = 1; i <= 5; ++i) net.add_species("x" + std::to_string(i));
  net.add_reaction("r1", Complex({{0, 1}, {1, 1}}), Complex({{2, 1}, {3, 1}}), "k12", "k21");
  net.add_reaction("r2", Complex({{2, 2}}), Complex({{0, 1}, {4, 1}}), "k34", "k43");
  return net;
}

// 4A <=> A + B.
inline ReactionNetwork four_a_ab() {
  ReactionNetwork net;
  net.add_species("A");
  net.add_species("B");
  net.add_reaction("r", Complex({{0, 4}}), Complex({{0, 1}, {1, 1}}), "kf", "kb");
  return net;
}

// 2A <=> 2B, 2A <=> A+B, A+B <=> 2B.
inline ReactionNetwork triangle() {
  ReactionNetwork net;
  net.add_species("A");
  net.add_species("B");
  net.add_reaction("r1", Complex({{0, 2}}), Complex({{1, 2}}), "k12", "k21");
  net.add_reaction("r2", Complex({{0, 2}}), Complex({{0, 1}, {1, 1}}), "k13", "k31");
  net.add_reaction("r3", Complex({{0, 1}, {1, 1}}), Complex({{1, 2}}), "k32", "k23");
  return net;
}

// Water-gas plus an irreversible decay of C back to CO2.
inline ReactionNetwork water_gas_with_decay() {
  ReactionNetwork net = water_gas();
  net.add_reaction("r3", Complex({{4, 1}}), Complex({{0, 1}}), "k5");
  return net;
}

// A <=> B together with the irreversible B -> A.
inline ReactionNetwork back_and_forth() {
  ReactionNetwork net;
  net.add_species("A");
  net.add_species("B");
  net.add_reaction("r1", Complex({{0, 1}}), Complex({{1, 1}}), "k1", "k2");
  net.add_reaction("r2", Complex({{1, 1}}), Complex({{0, 1}}), "g");
  return net;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(CRNBINOM_FIXTURES) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// --- structure-preserving transformations (verdict invariance probes) ---

// new_to_old[i] = old species id stored at new id i.
inline ReactionNetwork permute_species(const ReactionNetwork& net,
                                       const std::vector<int>& new_to_old) {
  std::vector<int> old_to_new(net.species_count());
  for (std::size_t i = 0; i < new_to_old.size(); ++i) {
    old_to_new[static_cast<std::size_t>(new_to_old[i])] = static_cast<int>(i);
  }
  auto remap = [&](const Complex& c) {
    std::map<int, int> terms;
    for (const auto& [id, coeff] : c.terms()) terms[old_to_new[static_cast<std::size_t>(id)]] = coeff;
    return Complex(std::move(terms));
  };
  ReactionNetwork out;
  for (int old_id : new_to_old) out.add_species(net.species_name(old_id));
  for (const Reaction& r : net.reactions()) {
    out.add_reaction(r.name, remap(r.reactant), remap(r.product), net.rate_name(r.forward_rate),
                     r.reversible ? std::optional<std::string>(net.rate_name(*r.backward_rate))
                                  : std::nullopt);
  }
  return out;
}

inline ReactionNetwork permute_reactions(const ReactionNetwork& net,
                                         const std::vector<int>& order) {
  ReactionNetwork out;
  for (const std::string& s : net.species_names()) out.add_species(s);
  for (int rid : order) {
    const Reaction& r = net.reaction(rid);
    out.add_reaction(r.name, r.reactant, r.product, net.rate_name(r.forward_rate),
                     r.reversible ? std::optional<std::string>(net.rate_name(*r.backward_rate))
                                  : std::nullopt);
  }
  return out;
}

inline ReactionNetwork rename_rates(const ReactionNetwork& net, const std::string& suffix) {
  ReactionNetwork out;
  for (const std::string& s : net.species_names()) out.add_species(s);
  for (const Reaction& r : net.reactions()) {
    out.add_reaction(r.name, r.reactant, r.product, net.rate_name(r.forward_rate) + suffix,
                     r.reversible
                         ? std::optional<std::string>(net.rate_name(*r.backward_rate) + suffix)
                         : std::nullopt);
  }
  return out;
}

// Swaps both sides of every reversible reaction along with its rate pair.
inline ReactionNetwork swap_reaction_sides(const ReactionNetwork& net) {
  ReactionNetwork out;
  for (const std::string& s : net.species_names()) out.add_species(s);
  for (const Reaction& r : net.reactions()) {
    if (r.reversible) {
      out.add_reaction(r.name, r.product, r.reactant, net.rate_name(*r.backward_rate),
                       net.rate_name(r.forward_rate));
    } else {
      out.add_reaction(r.name, r.reactant, r.product, net.rate_name(r.forward_rate), std::nullopt);
    }
  }
  return out;
}

// Deterministic size draw for fuzzing: bounds inclusive.
inline int draw_in(SplitMix64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

struct FuzzShape {
  int min_species{2}, max_species{6};
  int min_reactions{1}, max_reactions{6};
  int max_stoich{3};
  int max_species_per_complex{3};
  double reversible_fraction{1.0};
};

inline ReactionNetwork fuzz_network(std::uint64_t seed, const FuzzShape& shape) {
  SplitMix64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x12345);
  GenConfig cfg;
  cfg.seed = seed;
  cfg.species_count = draw_in(rng, shape.min_species, shape.max_species);
  cfg.reaction_count = draw_in(rng, shape.min_reactions, shape.max_reactions);
  cfg.max_stoich = draw_in(rng, 1, shape.max_stoich);
  cfg.max_species_per_complex = draw_in(rng, 1, shape.max_species_per_complex);
  cfg.reversible_fraction = shape.reversible_fraction;
  if (cfg.species_count == 1 && cfg.max_stoich == 1) cfg.max_stoich = 2;
  return generate(cfg);
}

}  // namespace testnets
