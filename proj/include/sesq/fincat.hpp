#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sesq/ids.hpp"
#include "sesq/report.hpp"

namespace sesq {

struct MorphismDecl {
  std::string name;
  int source = -1;
  int target = -1;
};

// Raw tables of a "table" category. Nothing here is validated; specio and the
// mutation tests edit these directly.
struct CategoryTables {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::vector<int> identities;   // per object, -1 if undeclared
  std::vector<int> composition;  // [g * n + f] = g∘f, -1 if absent

  void reset_composition();
  int composite(int g, int f) const { return composition[static_cast<std::size_t>(g) * morphisms.size() + f]; }
  void set_composite(int g, int f, int h) { composition[static_cast<std::size_t>(g) * morphisms.size() + f] = h; }
};

// graph[s][a] is the image of element a of sort s.
using Graph = std::vector<std::vector<int>>;

struct Operation {
  std::string name;
  std::vector<int> arg_sorts;
  int result_sort = 0;
  std::function<int(std::span<const int>)> eval;  // -1 where undefined
};

// Finite multi-sorted set with named operations; the objects of extensional
// categories (groups, crossed modules, chain complexes, internal categories).
class Carrier {
 public:
  struct Fibered {
    ObjectId left, right;
    std::vector<std::vector<std::pair<int, int>>> coords;
    std::vector<std::unordered_map<std::int64_t, int>> index;
  };

  explicit Carrier(std::vector<int> sort_sizes);

  int sort_count() const { return static_cast<int>(sizes_.size()); }
  int size(int sort) const { return sizes_.at(sort); }
  const std::vector<int>& sizes() const { return sizes_; }

  void add_operation(Operation op);
  const std::vector<Operation>& operations() const { return ops_; }
  const Operation* find_operation(std::string_view name) const;
  const Operation& operation(std::string_view name) const;
  int apply(std::string_view name, std::initializer_list<int> args) const;

  void set_labels(int sort, std::vector<std::string> labels);
  std::string label(int sort, int element) const;

  const Fibered* fibered() const { return fibered_ ? &*fibered_ : nullptr; }
  void set_fibered(Fibered f) { fibered_ = std::move(f); }
  std::pair<int, int> coords(int sort, int element) const;
  int element(int sort, int left, int right) const;

 private:
  std::vector<int> sizes_;
  std::vector<Operation> ops_;
  std::vector<std::vector<std::string>> labels_;
  std::optional<Fibered> fibered_;
};

namespace detail {
struct CategoryState;
}

struct PullbackSquare {
  ObjectId apex;
  MorphismId p1, p2;  // into the sources of f and g
  MorphismId f, g;
};

// Handle type: copies share the same immutable-after-build state. The
// extensional backend interns morphisms on demand behind a mutex, which is
// invisible to callers.
class FiniteCategory {
 public:
  enum class Backend { table, extensional };

  FiniteCategory();
  static FiniteCategory from_tables(CategoryTables tables);
  static FiniteCategory extensional();

  Backend backend() const;
  bool is_table() const { return backend() == Backend::table; }
  const CategoryTables& tables() const;
  bool same_as(const FiniteCategory& other) const { return state_ == other.state_; }

  std::size_t object_count() const;
  std::vector<ObjectId> objects() const;
  std::string object_name(ObjectId a) const;
  std::optional<ObjectId> find_object(std::string_view name) const;

  std::size_t morphism_count() const;
  std::vector<MorphismId> morphisms() const;
  const std::vector<MorphismId>& hom(ObjectId a, ObjectId b) const;  // table backend
  ObjectId source(MorphismId f) const;
  ObjectId target(MorphismId f) const;
  std::string morphism_name(MorphismId f) const;
  std::optional<MorphismId> find_morphism(std::string_view name) const;

  MorphismId identity(ObjectId a) const;
  MorphismId compose(MorphismId g, MorphismId f) const;
  // compose({h, g, f}) = h∘g∘f
  MorphismId compose(std::initializer_list<MorphismId> chain) const;

  // Extensional backend.
  ObjectId add_object(std::string name, std::shared_ptr<const Carrier> carrier);
  const Carrier& carrier(ObjectId a) const;
  std::shared_ptr<const Carrier> carrier_ptr(ObjectId a) const;
  MorphismId intern(ObjectId source, ObjectId target, Graph graph, std::string name = {}) const;
  const Graph& graph(MorphismId f) const;
  int apply(MorphismId f, int sort, int element) const;

  friend PullbackSquare find_pullback(const FiniteCategory&, MorphismId, MorphismId);

 private:
  explicit FiniteCategory(std::shared_ptr<detail::CategoryState> state);
  detail::CategoryState& state() const { return *state_; }
  std::shared_ptr<detail::CategoryState> state_;
};

ValidationReport validate_category(const FiniteCategory& cat);

PullbackSquare find_pullback(const FiniteCategory& cat, MorphismId f, MorphismId g);
MorphismId induced_into_pullback(const FiniteCategory& cat, const PullbackSquare& square, MorphismId x,
                                 MorphismId y);
// Exhaustive universal-property check (table backend).
bool is_pullback(const FiniteCategory& cat, const PullbackSquare& square);

}  // namespace sesq
