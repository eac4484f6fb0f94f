#pragma once

#include "sesq/cellstruct.hpp"

namespace sesq {

// Every cospan's chosen pullback must be preserved by each H(D, -).
// Requires an enumerable structure over a table category.
ValidationReport is_cartesian(const TwoCellStructure& h);

// The unique w: P' -> P with p1 w = x p1' and p2 w = y p2'. Here `target`
// is the pullback of f: A -> C, g: B -> C, `source` that of f': A' -> C',
// g': B' -> C', and x: A' -> A, z: C' -> C, y: B' -> B with f x = z f' and
// g y = z g'.
CellId product_cell(const TwoCellStructure& h, const PullbackSquare& target, const PullbackSquare& source, CellId x,
                    CellId z, CellId y);

}  // namespace sesq
