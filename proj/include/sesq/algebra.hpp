#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sesq/fincat.hpp"
#include "sesq/report.hpp"

namespace sesq {

struct FiniteMonoid {
  std::string name;
  std::vector<std::string> elements;
  std::vector<int> table;  // [a * n + b] = ab
  int unit = 0;

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * elements.size() + b]; }
  bool is_commutative() const;
  std::optional<int> find(std::string_view label) const;
  ValidationReport validate() const;
};

struct FiniteGroup {
  std::string name;
  std::vector<std::string> elements;
  std::vector<int> table;
  int unit = 0;
  std::vector<int> inverse;

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * elements.size() + b]; }
  int inv(int a) const { return inverse[a]; }
  bool is_abelian() const;
  bool is_central(int a) const;
  std::optional<int> find(std::string_view label) const;
  std::vector<int> generators() const;
  FiniteMonoid as_monoid() const { return FiniteMonoid{name, elements, table, unit}; }

  // Derives unit and inverses; throws InvalidPresentation unless the table is a group.
  static FiniteGroup from_table(std::string name, std::vector<std::string> elements, std::vector<int> table);
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral4();
  static FiniteGroup quaternion8();
  static FiniteGroup klein4();
  // Z<n>, S3, D4, Q8, V4
  static std::optional<FiniteGroup> named(std::string_view name);
};

// Maps A -> B respecting multiplication, canonically ordered.
std::vector<std::vector<int>> group_homomorphisms(const FiniteGroup& a, const FiniteGroup& b);

// Extends values on generators along a right-multiplication rule and keeps the
// consistent ones. `step(a_value, a, g)` gives the value at a*g.
std::vector<std::vector<int>> extend_from_generators(const FiniteGroup& a, int codomain_size, int unit_value,
                                                     const std::function<int(int, int, int)>& step);

struct CrossedModule {
  std::string name;
  FiniteGroup top;     // X
  FiniteGroup bottom;  // B
  std::vector<int> boundary;  // X -> B
  std::vector<int> action;    // [b * |X| + x] = b·x

  int act(int b, int x) const { return action[static_cast<std::size_t>(b) * top.size() + x]; }
  ValidationReport validate() const;
};

struct ChainComplex {
  std::string name;
  std::array<FiniteGroup, 3> groups;  // index = degree, abelian
  std::vector<int> d2;                // A2 -> A1
  std::vector<int> d1;                // A1 -> A0

  ValidationReport validate() const;
  // Z2 -(id)-> Z2 -(0)-> Z2
  static ChainComplex f3();
  // Z4 -(×2)-> Z4 -(×2)-> Z4
  static ChainComplex z4();
};

// Per-degree maps of a chain map and the two components of a homotopy.
struct ChainMapData {
  std::array<std::vector<int>, 3> maps;
};

struct HomotopyData {
  std::vector<int> t2;  // A1 -> B2
  std::vector<int> t1;  // A0 -> B1
};

// Internal category in finite sets: objects and arrows with dom, cod, unit and
// partial composition comp(f, g) = f∘g defined when dom f = cod g.
struct InternalCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> dom, cod;  // per arrow
  std::vector<int> unit;      // per object
  std::vector<int> comp;      // [f * |arrows| + g], -1 if undefined

  int compose(int f, int g) const { return comp[static_cast<std::size_t>(f) * arrows.size() + g]; }
  ValidationReport validate() const;
  static InternalCategory from_group(const FiniteGroup& g);
  // 0 -> 1
  static InternalCategory arrow_poset();
};

// Carriers with named operations used by the extensional categories.
std::shared_ptr<Carrier> group_carrier(const FiniteGroup& g);
std::shared_ptr<Carrier> crossed_module_carrier(const CrossedModule& x);  // sorts: X, B
std::shared_ptr<Carrier> complex_carrier(const ChainComplex& c);          // sort k = degree k
std::shared_ptr<Carrier> internal_category_carrier(const InternalCategory& c);  // sorts: C0, C1
std::shared_ptr<Carrier> plain_carrier(std::vector<int> sizes);

}  // namespace sesq
