#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sesq/fincat.hpp"

namespace sesq {

// Abstract 2-cell structure over a finite category. Enumerable structures list
// H(A,B); lazy ones only evaluate the operations.
class TwoCellStructure {
 public:
  explicit TwoCellStructure(FiniteCategory base) : base_(std::move(base)) {}
  virtual ~TwoCellStructure() = default;

  const FiniteCategory& base() const { return base_; }

  virtual bool enumerable() const = 0;
  virtual std::vector<CellId> cells(ObjectId a, ObjectId b) const;

  virtual MorphismId dom(CellId x) const = 0;
  virtual MorphismId cod(CellId x) const = 0;
  virtual CellId zero(MorphismId f) const = 0;
  // v + u, defined when dom(v) = cod(u)
  virtual CellId vsum(CellId v, CellId u) const = 0;
  virtual CellId lwhisk(MorphismId g, CellId y) const = 0;
  virtual CellId rwhisk(CellId x, MorphismId f) const = 0;

  // Default implementations search H(A,B); lazy structures override them.
  virtual std::optional<CellId> negate(CellId x) const;
  virtual std::optional<CellId> pair_cell(const PullbackSquare& square, CellId x, CellId y) const;

  virtual std::string cell_name(CellId x) const = 0;
  virtual std::optional<CellId> find_cell(std::string_view) const { return std::nullopt; }

  ObjectId source(CellId x) const { return base_.source(dom(x)); }
  ObjectId target(CellId x) const { return base_.target(dom(x)); }
  std::vector<CellId> all_cells() const;

 protected:
  FiniteCategory base_;
};

struct Cell {
  CellId id;
  ObjectId source, target;
  MorphismId dom, cod;
};

Cell resolve(const TwoCellStructure& h, CellId x);

CellId vcomp(const TwoCellStructure& h, CellId v, CellId u);
CellId lwhisker(const TwoCellStructure& h, MorphismId g, CellId y);
CellId rwhisker(const TwoCellStructure& h, CellId x, MorphismId f);
// Sum of a chain of cells, leftmost last: vsum_chain(h, {a, b, c}) = a + (b + c).
CellId vsum_chain(const TwoCellStructure& h, std::initializer_list<CellId> chain);
CellId inverse(const TwoCellStructure& h, CellId x);
bool is_invertible_structure(const TwoCellStructure& h);

ValidationReport validate_structure(const TwoCellStructure& h);

// A family of maps H(A,B) -> H'(A,B); the two bases are identified id-for-id.
using CellMap = std::unordered_map<CellId, CellId>;
ValidationReport check_structure_morphism(const CellMap& phi, const TwoCellStructure& h,
                                          const TwoCellStructure& h2);

// ---------------------------------------------------------------- tables

struct CellDecl {
  std::string name;
  int dom = -1;
  int cod = -1;
};

struct CellTables {
  std::vector<CellDecl> cells;
  std::vector<int> zero;                     // per morphism, -1 if absent
  std::map<std::pair<int, int>, int> vsum;   // (v, u) -> v + u
  std::map<std::pair<int, int>, int> lwhisk; // (g, y) -> g y
  std::map<std::pair<int, int>, int> rwhisk; // (x, f) -> x f
};

class TableStructure final : public TwoCellStructure {
 public:
  TableStructure(FiniteCategory base, CellTables tables);

  const CellTables& tables() const { return tables_; }
  std::size_t cell_count() const { return tables_.cells.size(); }

  bool enumerable() const override { return true; }
  std::vector<CellId> cells(ObjectId a, ObjectId b) const override;
  MorphismId dom(CellId x) const override;
  MorphismId cod(CellId x) const override;
  CellId zero(MorphismId f) const override;
  CellId vsum(CellId v, CellId u) const override;
  CellId lwhisk(MorphismId g, CellId y) const override;
  CellId rwhisk(CellId x, MorphismId f) const override;
  std::string cell_name(CellId x) const override;
  std::optional<CellId> find_cell(std::string_view name) const override;

  // Entries that exist but should not, or point outside the tables.
  ValidationReport shape_report() const;

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }
  CellTables tables_;
  std::unordered_map<std::string, int> by_name_;
  std::vector<std::vector<CellId>> by_pair_;
  std::unordered_map<std::uint64_t, int> vsum_, lwhisk_, rwhisk_;
};

// ---------------------------------------------------------------- lazy support

// Interns variable-length integer payloads as dense cell ids; safe for
// concurrent readers.
class PayloadInterner {
 public:
  CellId intern(std::vector<int> payload) const;
  const std::vector<int>& payload(CellId x) const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  mutable std::deque<std::vector<int>> payloads_;
  mutable std::unordered_map<std::size_t, std::vector<int>> by_hash_;
};

// Table snapshot of an enumerable (or enumerated-on-demand) structure over a
// chosen finite set of objects and hom-sets.
struct Materialized {
  FiniteCategory category;
  std::shared_ptr<TableStructure> structure;
  std::vector<ObjectId> object_origin;
  std::vector<MorphismId> morphism_origin;
  std::vector<CellId> cell_origin;
  std::unordered_map<MorphismId, MorphismId> morphism_index;
  std::unordered_map<CellId, CellId> cell_index;
};

using HomEnumerator = std::function<std::vector<MorphismId>(ObjectId, ObjectId)>;
using CellEnumerator = std::function<std::vector<CellId>(ObjectId, ObjectId, const std::vector<MorphismId>&)>;

struct Tabulation {
  FiniteCategory category;
  std::vector<ObjectId> object_origin;
  std::vector<MorphismId> morphism_origin;
  std::unordered_map<MorphismId, MorphismId> morphism_index;
};

Tabulation tabulate(const FiniteCategory& ext, std::span<const ObjectId> objects, const HomEnumerator& homs);
Materialized materialize(const TwoCellStructure& h, std::span<const ObjectId> objects, const HomEnumerator& homs,
                         const CellEnumerator& cells);
Materialized materialize(const TwoCellStructure& h);

}  // namespace sesq
