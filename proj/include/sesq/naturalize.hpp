#pragma once

#include <memory>
#include <optional>

#include "sesq/cellstruct.hpp"

namespace sesq {

struct Naturalization {
  std::shared_ptr<TableStructure> structure;  // same base, cells named by class representatives
  CellMap phi;                                // quotient map
};

// Quotient by the smallest congruence identifying both sides of every
// naturality square. Needs an enumerable structure over a table category.
Naturalization naturalize(const TwoCellStructure& h);

// The factorization psi = bar ∘ phi through the naturalization, if it exists
// as a structure morphism.
std::optional<CellMap> factor_through_naturalization(const TwoCellStructure& h, const TwoCellStructure& n,
                                                     const CellMap& psi);
bool check_reflection_property(const TwoCellStructure& h, const TwoCellStructure& n, const CellMap& psi);

}  // namespace sesq
