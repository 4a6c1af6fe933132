#pragma once

#include <compare>
#include <cstdint>

namespace crnbinom {

enum class VarKind : std::uint8_t { Species = 0, Rate = 1 };

/// A variable of the ambient polynomial ring Q[k, x]: either a species
/// concentration or a rate constant. Identity is (kind, index); indices
/// follow the owning network's species ids and rate-table positions.
struct Variable {
  VarKind kind{VarKind::Species};
  int index{0};

  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;
};

constexpr Variable species_var(int index) { return {VarKind::Species, index}; }
constexpr Variable rate_var(int index) { return {VarKind::Rate, index}; }

}  // namespace crnbinom
