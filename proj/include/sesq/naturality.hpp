#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sesq/cellstruct.hpp"

namespace sesq {

// x ∈ H(A,B), z ∈ H(X,A): cod(x)z + x dom(z) = x cod(z) + dom(x)z
bool natural_wrt(const TwoCellStructure& h, CellId x, CellId z);

bool is_natural(const TwoCellStructure& h, CellId x);
bool is_natural(const TwoCellStructure& h, CellId x, std::span<const CellId> probes);
std::optional<CellId> naturality_counterexample(const TwoCellStructure& h, CellId x);

struct TwoCategoryVerdict {
  bool holds = true;
  std::size_t failing_pairs = 0;
  std::vector<std::pair<CellId, CellId>> failures;  // capped sample, canonical order
};

TwoCategoryVerdict two_category_verdict(const TwoCellStructure& h, std::size_t keep = 100);
bool is_two_category(const TwoCellStructure& h);

CellId hcomp(const TwoCellStructure& h, CellId x, CellId y);
// c1 + d2 + (−d1) + (−c2)
CellId commutator(const TwoCellStructure& h, CellId x, CellId y);

}  // namespace sesq
