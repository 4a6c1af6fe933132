#pragma once

#include "crnbinom/network.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace crnbinom {

/// SplitMix64: tiny, deterministic, and trivially portable across
/// languages. state += 0x9E3779B97F4A7C15; z = state; z = (z ^ z>>30) *
/// 0xBF58476D1CE4E5B9; z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound) via modulo; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
    return next() % bound;
  }

  /// True with probability floor(fraction * 2^32) / 2^32.
  bool bernoulli(double fraction) {
    std::uint64_t threshold = static_cast<std::uint64_t>(fraction * 4294967296.0);
    return (next() & 0xFFFFFFFFULL) < threshold;
  }

private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 1;
  int species_count = 2;
  int reaction_count = 1;
  int max_stoich = 1;
  int max_species_per_complex = 1;
  double reversible_fraction = 1.0;
};

class GenerationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Deterministically generates a valid random network from a config.
///
/// Per reaction: draw the reactant complex (uniform size in
/// [1, max_species_per_complex] capped at the species count, distinct
/// species by redraw, coefficients uniform in [1, max_stoich]), draw the
/// product the same way redrawing until it differs from the reactant, then
/// decide reversibility. Species names are x1..xN, reaction names r1..rM,
/// rates kf<i>/kb<i>. Species left unreferenced afterwards are injected
/// with coefficient 1 into the reactant of reaction (id mod reaction_count),
/// which never equates the two sides because the species was on neither.
/// Configs that cannot produce two distinct complexes (or invalid ones)
/// throw GenerationError.
inline ReactionNetwork generate(const GenConfig& config) {
  if (config.species_count < 1) throw GenerationError("generate: species_count must be >= 1");
  if (config.reaction_count < 1) throw GenerationError("generate: reaction_count must be >= 1");
  if (config.max_stoich < 1) throw GenerationError("generate: max_stoich must be >= 1");
  if (config.max_species_per_complex < 1) {
    throw GenerationError("generate: max_species_per_complex must be >= 1");
  }
  if (config.reversible_fraction < 0.0 || config.reversible_fraction > 1.0) {
    throw GenerationError("generate: reversible_fraction must be in [0, 1]");
  }

  SplitMix64 rng(config.seed);
  const auto n = static_cast<std::uint64_t>(config.species_count);
  const std::uint64_t max_size =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(config.max_species_per_complex), n);

  auto draw_complex = [&]() {
    std::uint64_t size = 1 + rng.below(max_size);
    std::map<int, int> terms;
    while (terms.size() < size) {
      int id = static_cast<int>(rng.below(n));
      if (terms.count(id)) continue;
      terms[id] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.max_stoich)));
    }
    return Complex(std::move(terms));
  };

  struct Draft {
    Complex reactant, product;
    bool reversible;
  };
  std::vector<Draft> drafts;
  drafts.reserve(static_cast<std::size_t>(config.reaction_count));
  for (int r = 0; r < config.reaction_count; ++r) {
    Draft d;
    d.reactant = draw_complex();
    int attempts = 0;
    do {
      if (++attempts > 1000) {
        throw GenerationError("generate: cannot draw two distinct complexes; widen the config");
      }
      d.product = draw_complex();
    } while (d.product == d.reactant);
    d.reversible = rng.bernoulli(config.reversible_fraction);
    drafts.push_back(std::move(d));
  }

  // Coverage repair: every species must occur somewhere.
  std::vector<char> referenced(static_cast<std::size_t>(config.species_count), 0);
  for (const Draft& d : drafts) {
    for (const auto& [id, c] : d.reactant.terms()) referenced[static_cast<std::size_t>(id)] = 1;
    for (const auto& [id, c] : d.product.terms()) referenced[static_cast<std::size_t>(id)] = 1;
  }
  for (int s = 0; s < config.species_count; ++s) {
    if (referenced[static_cast<std::size_t>(s)]) continue;
    Draft& d = drafts[static_cast<std::size_t>(s % config.reaction_count)];
    std::map<int, int> terms = d.reactant.terms();
    terms[s] = 1;
    d.reactant = Complex(std::move(terms));
  }

  ReactionNetwork net;
  for (int s = 0; s < config.species_count; ++s) net.add_species("x" + std::to_string(s + 1));
  for (int r = 0; r < config.reaction_count; ++r) {
    const Draft& d = drafts[static_cast<std::size_t>(r)];
    std::string tag = std::to_string(r + 1);
    net.add_reaction("r" + tag, d.reactant, d.product, "kf" + tag,
                     d.reversible ? std::optional<std::string>("kb" + tag) : std::nullopt);
  }
  return net;
}

}  // namespace crnbinom
