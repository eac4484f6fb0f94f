#pragma once

#include <string>
#include <vector>

#include "sesq/algebra.hpp"
#include "sesq/constructions.hpp"
#include "sesq/fincat.hpp"

namespace fixtures {

// The lattice 0 < a, b < 1 times BZ2; every cospan has a pullback.
inline sesq::FiniteCategory lattice_times_bz2() {
  const std::vector<std::string> pts{"0", "a", "b", "1"};
  auto leq = [](int p, int q) { return p == q || p == 0 || q == 3; };
  sesq::CategoryTables t;
  t.objects = pts;
  struct M {
    int p, q, g;
  };
  std::vector<M> ms;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      if (leq(p, q))
        for (int g = 0; g < 2; ++g) {
          ms.push_back({p, q, g});
          t.morphisms.push_back({pts[p] + pts[q] + "_" + std::to_string(g), p, q});
        }
  const int n = static_cast<int>(ms.size());
  auto find = [&](int p, int q, int g) {
    for (int i = 0; i < n; ++i)
      if (ms[i].p == p && ms[i].q == q && ms[i].g == g) return i;
    return -1;
  };
  t.identities.resize(4);
  for (int p = 0; p < 4; ++p) t.identities[p] = find(p, p, 0);
  t.reset_composition();
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (ms[f].q == ms[g].p) t.set_composite(g, f, find(ms[f].p, ms[g].q, (ms[f].g + ms[g].g) % 2));
  return sesq::FiniteCategory::from_tables(std::move(t));
}

inline sesq::FiniteMonoid trivial_monoid() { return sesq::FiniteMonoid{"1", {"e"}, {0}, 0}; }

// F1: one object, one morphism, cells Z2. F2: the same with S3.
inline sesq::BuiltStructure f1() { return sesq::one_object(trivial_monoid(), sesq::FiniteGroup::cyclic(2)); }
inline sesq::BuiltStructure f2() { return sesq::one_object(trivial_monoid(), sesq::FiniteGroup::symmetric3()); }

inline sesq::CrossedModule xmod_inversion() {
  // Z3 with Z2 acting by inversion, trivial boundary
  return sesq::CrossedModule{"XB", sesq::FiniteGroup::cyclic(3), sesq::FiniteGroup::cyclic(2), {0, 0, 0},
                             {0, 1, 2, 0, 2, 1}};
}

inline sesq::CrossedModule xmod_identity() {
  return sesq::CrossedModule{"XC", sesq::FiniteGroup::cyclic(2), sesq::FiniteGroup::cyclic(2), {0, 1},
                             {0, 1, 0, 1}};
}

}  // namespace fixtures
