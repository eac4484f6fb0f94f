#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sesq/algebra.hpp"
#include "sesq/cellstruct.hpp"

namespace sesq {

// ---------------------------------------------------------------- lazy structures

// Cells are the morphisms themselves; all structure maps are identities.
class DiscreteStructure final : public TwoCellStructure {
 public:
  explicit DiscreteStructure(FiniteCategory base) : TwoCellStructure(std::move(base)) {}
  bool enumerable() const override { return base_.is_table(); }
  std::vector<CellId> cells(ObjectId a, ObjectId b) const override;
  MorphismId dom(CellId x) const override { return MorphismId(x.value); }
  MorphismId cod(CellId x) const override { return MorphismId(x.value); }
  CellId zero(MorphismId f) const override { return CellId(f.value); }
  CellId vsum(CellId v, CellId u) const override;
  CellId lwhisk(MorphismId g, CellId y) const override;
  CellId rwhisk(CellId x, MorphismId f) const override;
  std::optional<CellId> negate(CellId x) const override { return x; }
  std::optional<CellId> pair_cell(const PullbackSquare& sq, CellId x, CellId y) const override;
  std::string cell_name(CellId x) const override;
};

// H = hom × hom: a cell (k, h) goes h ⇒ k.
class CodiscreteStructure final : public TwoCellStructure {
 public:
  explicit CodiscreteStructure(FiniteCategory base) : TwoCellStructure(std::move(base)) {}
  bool enumerable() const override { return base_.is_table(); }
  std::vector<CellId> cells(ObjectId a, ObjectId b) const override;
  CellId make(MorphismId k, MorphismId h) const;
  MorphismId dom(CellId x) const override;
  MorphismId cod(CellId x) const override;
  CellId zero(MorphismId f) const override { return make(f, f); }
  CellId vsum(CellId v, CellId u) const override;
  CellId lwhisk(MorphismId g, CellId y) const override;
  CellId rwhisk(CellId x, MorphismId f) const override;
  std::optional<CellId> negate(CellId x) const override { return make(dom(x), cod(x)); }
  std::optional<CellId> pair_cell(const PullbackSquare& sq, CellId x, CellId y) const override;
  std::string cell_name(CellId x) const override;

 private:
  PayloadInterner cells_;
};

// Shared recipe for structures whose cells are pairs (x, f): f ⇒ D(x) + f, with
// pointwise sums and whiskering g(x,f)h = (gxh, gfh). Payload: [f, x...].
class ExtendedHomStructure : public TwoCellStructure {
 public:
  using Data = std::vector<int>;
  using TwoCellStructure::TwoCellStructure;

  bool enumerable() const override { return false; }
  CellId make(MorphismId f, Data x) const;
  MorphismId dom(CellId c) const override { return MorphismId(cells_.payload(c)[0]); }
  MorphismId cod(CellId c) const override;
  CellId zero(MorphismId f) const override;
  CellId vsum(CellId v, CellId u) const override;
  CellId lwhisk(MorphismId g, CellId y) const override;
  CellId rwhisk(CellId x, MorphismId f) const override;
  std::optional<CellId> negate(CellId x) const override;
  std::optional<CellId> pair_cell(const PullbackSquare& sq, CellId x, CellId y) const override;
  std::string cell_name(CellId c) const override;

  Data data(CellId c) const;

 protected:
  // (a, b) is the object pair of the input cell.
  virtual Data x_zero(ObjectId a, ObjectId b) const = 0;
  virtual Data x_sum(ObjectId a, ObjectId b, const Data& later, const Data& earlier) const = 0;
  virtual Data x_neg(ObjectId a, ObjectId b, const Data& x) const = 0;
  virtual Data x_left(MorphismId g, ObjectId a, ObjectId b, const Data& x) const = 0;
  virtual Data x_right(ObjectId a, ObjectId b, const Data& x, MorphismId f) const = 0;
  virtual Data x_pair(const PullbackSquare& sq, ObjectId d, const Data& x, const Data& y) const = 0;
  virtual Graph extend(MorphismId f, const Data& x) const = 0;
  virtual std::string x_name(CellId c) const;

  PayloadInterner cells_;
};

// Groups: cells (t, f) with t in the target group, f ⇒ t f(-) t^-1.
class ConjugationStructure final : public ExtendedHomStructure {
 public:
  using ExtendedHomStructure::ExtendedHomStructure;

 protected:
  Data x_zero(ObjectId a, ObjectId b) const override;
  Data x_sum(ObjectId a, ObjectId b, const Data& later, const Data& earlier) const override;
  Data x_neg(ObjectId a, ObjectId b, const Data& x) const override;
  Data x_left(MorphismId g, ObjectId a, ObjectId b, const Data& x) const override;
  Data x_right(ObjectId a, ObjectId b, const Data& x, MorphismId f) const override;
  Data x_pair(const PullbackSquare& sq, ObjectId d, const Data& x, const Data& y) const override;
  Graph extend(MorphismId f, const Data& x) const override;
  std::string x_name(CellId c) const override;
};

// Crossed modules: cells (t, f) with t: B -> X' a derivation along f0.
class DerivationStructure final : public ExtendedHomStructure {
 public:
  using ExtendedHomStructure::ExtendedHomStructure;

 protected:
  Data x_zero(ObjectId a, ObjectId b) const override;
  Data x_sum(ObjectId a, ObjectId b, const Data& later, const Data& earlier) const override;
  Data x_neg(ObjectId a, ObjectId b, const Data& x) const override;
  Data x_left(MorphismId g, ObjectId a, ObjectId b, const Data& x) const override;
  Data x_right(ObjectId a, ObjectId b, const Data& x, MorphismId f) const override;
  Data x_pair(const PullbackSquare& sq, ObjectId d, const Data& x, const Data& y) const override;
  Graph extend(MorphismId f, const Data& x) const override;
};

// Chain complexes: cells (t2, t1) attached to a source chain map f.
// Data layout: t2 values on A1, then t1 values on A0.
class HomotopyStructure final : public ExtendedHomStructure {
 public:
  using ExtendedHomStructure::ExtendedHomStructure;
  CellId make_homotopy(MorphismId f, const HomotopyData& t) const;
  HomotopyData homotopy(CellId c) const;

 protected:
  Data x_zero(ObjectId a, ObjectId b) const override;
  Data x_sum(ObjectId a, ObjectId b, const Data& later, const Data& earlier) const override;
  Data x_neg(ObjectId a, ObjectId b, const Data& x) const override;
  Data x_left(MorphismId g, ObjectId a, ObjectId b, const Data& x) const override;
  Data x_right(ObjectId a, ObjectId b, const Data& x, MorphismId f) const override;
  Data x_pair(const PullbackSquare& sq, ObjectId d, const Data& x, const Data& y) const override;
  Graph extend(MorphismId f, const Data& x) const override;
};

// Internal categories in finite sets: cells (k, t, h) with dt = h0, ct = k0.
class InternalTransformationStructure final : public TwoCellStructure {
 public:
  using TwoCellStructure::TwoCellStructure;
  bool enumerable() const override { return false; }
  CellId make(MorphismId k, std::vector<int> t, MorphismId h) const;
  std::vector<int> component(CellId c) const;  // t, indexed by source objects
  MorphismId dom(CellId c) const override;
  MorphismId cod(CellId c) const override;
  CellId zero(MorphismId f) const override;
  CellId vsum(CellId v, CellId u) const override;
  CellId lwhisk(MorphismId g, CellId y) const override;
  CellId rwhisk(CellId x, MorphismId f) const override;
  std::optional<CellId> negate(CellId x) const override;
  std::string cell_name(CellId c) const override;

 private:
  PayloadInterner cells_;  // [k, h, t...]
};

// ---------------------------------------------------------------- builders

std::shared_ptr<TableStructure> discrete(const FiniteCategory& cat);
std::shared_ptr<TableStructure> codiscrete(const FiniteCategory& cat);

// The action recipe: per-pair monoids M(A,B), functorial actions of morphisms on
// them, and D(x, f) moving the codomain.
struct ActionPresentation {
  std::map<std::pair<int, int>, FiniteMonoid> monoids;                  // keyed by (A, B)
  std::function<int(MorphismId g, ObjectId a, int x)> left;             // x ∈ M(A,B), g: B→C
  std::function<int(ObjectId b, int x, MorphismId f)> right;            // x ∈ M(A,B), f: A'→A
  std::function<MorphismId(ObjectId a, ObjectId b, int x, MorphismId f)> act;
};

std::shared_ptr<TableStructure> from_action(const FiniteCategory& cat, const ActionPresentation& p);

struct BuiltStructure {
  FiniteCategory category;
  std::shared_ptr<const TableStructure> structure;
};

BuiltStructure grp_conjugation(std::span<const FiniteGroup> groups);

struct ExtensionalBuild {
  FiniteCategory extensional;
  std::shared_ptr<const TwoCellStructure> lazy;
  std::vector<ObjectId> objects;
  Materialized table;
};

ExtensionalBuild xmod_derivations(std::span<const CrossedModule> xmods);
ExtensionalBuild chain_homotopies(std::span<const ChainComplex> complexes);

// Enumeration helpers shared with the pseudocategory builders.
std::vector<MorphismId> chain_maps(const FiniteCategory& cat, ObjectId a, ObjectId b);
std::vector<MorphismId> internal_functors(const FiniteCategory& cat, ObjectId a, ObjectId b);

struct InternalBuild {
  FiniteCategory extensional;
  std::shared_ptr<const InternalTransformationStructure> lazy;
  std::vector<ObjectId> objects;        // the presented internal categories
  std::vector<ObjectId> arrow_objects;  // A→ for each of them
  Materialized table;                   // over objects and arrow objects
};

InternalBuild internal_transformations(std::span<const InternalCategory> cats);
// (c→, 1, d→) ∈ H(A→, A), in the lazy structure.
CellId arrow_cell(const InternalBuild& build, ObjectId a);
bool is_internal_natural(const InternalTransformationStructure& h, CellId t);

struct OneObjectAction {
  std::function<int(int x, int f)> act;    // D(x, f) ∈ M, default f
  std::function<int(int g, int x)> left;   // default x
  std::function<int(int x, int f)> right;  // default x
};

BuiltStructure one_object(const FiniteMonoid& m, const FiniteGroup& cells, const OneObjectAction& action = {});

}  // namespace sesq
