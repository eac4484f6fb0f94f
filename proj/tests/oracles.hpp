#pragma once

// Reference computations used by the tests. They work on raw tables and
// plain integer arithmetic and never call the checkers they are compared to.

#include <cstddef>
#include <string>
#include <vector>

#include "sesq/algebra.hpp"
#include "sesq/cellstruct.hpp"

namespace oracle {

// Name of the first axiom instance that fails, empty if all hold.
std::string category_failure(const sesq::CategoryTables& c);
std::string structure_failure(const sesq::CategoryTables& c, const sesq::CellTables& t);

// Ordered pairs (x, z) of raw cells, z ending where x starts, with
// cod(x)z + x dom(z) != x cod(z) + dom(x)z.
std::size_t non_natural_pairs(const sesq::CategoryTables& c, const sesq::CellTables& t);

// Ordered pairs of group elements that do not commute.
std::size_t noncommuting_pairs(const sesq::FiniteGroup& g);

// |G| / |[G, G]| with the derived subgroup generated by commutators.
int abelianization_order(const sesq::FiniteGroup& g);

// ---------------------------------------------------------------- additive arithmetic
// Chain complexes of cyclic groups, maps as element tables.

struct Complex {
  int n[3];                 // Z_n in each degree
  std::vector<int> d2, d1;  // A2 -> A1, A1 -> A0
};

struct ChainMap {
  std::vector<int> c[3];
};

struct Homotopy {
  std::vector<int> t2, t1;  // A1 -> B2, A0 -> B1
};

// The five component identities of the pentagon in the additive case; all
// zero iff the pentagon holds. r = rho, l = lambda, n = eta.
bool additive_identities_hold(const Complex& a, const Complex& b, const ChainMap& h, const Homotopy& l,
                              const Homotopy& r, const Homotopy& n);
// The four naturality facts among the unitor cells of the pseudocategory on
// A + B, which carry eta in their B column: [x, y] = 0 and [x, eta] = 0.
bool unitors_natural(const Complex& a, const Complex& b, const Homotopy& l, const Homotopy& r,
                     const Homotopy& n);

// (-t2 s1 d, d t2 s1): components of the commutator of t after s, for
// homotopies s: A -> B, t: B -> C.
Homotopy commutator_closed_form(const Complex& a, const Complex& b, const Complex& c, const Homotopy& t,
                                const Homotopy& s);

}  // namespace oracle
