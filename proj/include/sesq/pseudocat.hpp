#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sesq/algebra.hpp"
#include "sesq/cellstruct.hpp"
#include "sesq/constructions.hpp"

namespace sesq {

// A reflexive graph d, c: C1 -> C0, e: C0 -> C1 with composition m: C2 -> C1
// and the three coherence cells. In C2 the first projection is the later
// arrow: m<f,g> = fg.
struct PseudocategoryData {
  ObjectId c0, c1;
  MorphismId d, c, e, m;
  PullbackSquare c2;  // of (d, c)
  PullbackSquare c3;  // of (c2.p2, c2.p1): triples (f, g, h)
  CellId alpha, lambda, rho;
};

enum class CoherenceMode { natural, non_natural };
enum class Association { left, right };

struct CoherenceOptions {
  CoherenceMode mode = CoherenceMode::natural;
  std::vector<CellId> probes;  // naturality probes on non-enumerable structures
  Association c4 = Association::left;
};

// Morphisms derived from the data. Elements of C4 are quadruples (F, G, H, K).
struct PseudocategoryFrame {
  MorphismId e1, e2;  // f |-> (f, 1), (1, f)
  MorphismId m1, m2;  // (f, g, h) |-> (f, gh), (fg, h)
  MorphismId i0, i1, i2;  // (f, g) |-> (f, 1, g), (f, g, 1), (1, f, g)
  PullbackSquare c4;
  MorphismId F, G, H, K;
  MorphismId first3, last3;  // (F, G, H), (G, H, K)
  MorphismId mid_m, left_m, right_m;  // (F, GH, K), (FG, H, K), (F, G, HK)
  // Cones presenting C4 over C3 x C1 and C1 x C3, used as sources of
  // product cells.
  PullbackSquare triple_first, triple_last;
};

PseudocategoryFrame build_frame(const FiniteCategory& cat, const PseudocategoryData& data, Association assoc);

struct EquationStatus {
  std::string name;
  bool holds = true;
  std::vector<std::string> witnesses;
  std::string detail;
};

// Structural invariants first (as "structure" entries), then the equations of
// the chosen mode.
std::vector<EquationStatus> evaluate_coherence(const TwoCellStructure& h, const PseudocategoryData& data,
                                               const CoherenceOptions& opts = {});
ValidationReport check_pseudocategory(const TwoCellStructure& h, const PseudocategoryData& data,
                                      const CoherenceOptions& opts = {});

// Frame of an internal category (or precategory) in finite sets; the cells
// are left unset. Composition must be defined on every composable pair.
PseudocategoryData internal_category_frame(const FiniteCategory& sets, const InternalCategory& ic);

// ---------------------------------------------------------------- builders

struct GroupPseudocategory {
  FiniteCategory category;
  std::shared_ptr<const ConjugationStructure> structure;
  PseudocategoryData data;
};

// C0 = B, C1 = X ⋊ B, composition twisted by a central delta with bd(delta) = 1.
GroupPseudocategory build_group_pseudocategory(const CrossedModule& xm, int delta);

struct AdditivePseudocategory {
  FiniteCategory category;
  std::shared_ptr<const HomotopyStructure> structure;
  PseudocategoryData data;
  ObjectId a, b;
};

// C0 = B, C1 = A ⊕ B with c = (h 1). lambda, rho: A -> A and eta: B -> A are
// homotopy data killed by h.
AdditivePseudocategory build_additive_pseudocategory(const ChainComplex& a, const ChainComplex& b,
                                                     const ChainMapData& h, const HomotopyData& lambda,
                                                     const HomotopyData& rho, const HomotopyData& eta);

// Degree-wise direct sum; element (x, y) has index x * |B_k| + y.
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace sesq
