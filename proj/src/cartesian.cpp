#include "sesq/cartesian.hpp"

#include <map>
#include <set>

#include "sesq/error.hpp"

namespace sesq {

namespace {

std::string square_name(const FiniteCategory& c, const PullbackSquare& sq) {
  return c.object_name(sq.apex) + "=pb(" + c.morphism_name(sq.f) + "," + c.morphism_name(sq.g) + ")";
}

}  // namespace

ValidationReport is_cartesian(const TwoCellStructure& h) {
  const auto& c = h.base();
  if (!h.enumerable() || !c.is_table())
    throw Error(Errc::unsupported_backend, "is_cartesian needs an enumerable structure over a table category");
  ValidationReport r;
  const auto objs = c.objects();
  for (auto f : c.morphisms())
    for (auto g : c.morphisms()) {
      if (c.target(f) != c.target(g)) continue;
      PullbackSquare sq;
      try {
        sq = find_pullback(c, f, g);
      } catch (const Error&) {
        r.add("missing-pullback", {c.morphism_name(f), c.morphism_name(g)}, "no pullback of this cospan");
        continue;
      }
      const auto a = c.source(f), b = c.source(g);
      const auto name = square_name(c, sq);
      for (auto d : objs) try {
        std::map<std::pair<CellId, CellId>, CellId> image;
        for (auto u : h.cells(d, sq.apex)) {
          const auto key = std::make_pair(h.lwhisk(sq.p1, u), h.lwhisk(sq.p2, u));
          auto [it, fresh] = image.emplace(key, u);
          if (!fresh)
            r.add("cartesian-injective", {c.object_name(d), name, h.cell_name(it->second), h.cell_name(u)},
                  "two cells with the same projections");
        }
        for (auto x : h.cells(d, a))
          for (auto y : h.cells(d, b)) {
            if (h.lwhisk(f, x) != h.lwhisk(g, y)) continue;
            if (!image.count({x, y}))
              r.add("cartesian-surjective", {c.object_name(d), name, h.cell_name(x), h.cell_name(y)},
                    "compatible pair without a mediating cell");
          }
        // mediators commute with precomposition
        for (const auto& [xy, u] : image)
          for (auto d2 : objs)
            for (auto k : c.hom(d2, d)) {
              const auto uk = h.rwhisk(u, k);
              if (h.lwhisk(sq.p1, uk) != h.rwhisk(xy.first, k) || h.lwhisk(sq.p2, uk) != h.rwhisk(xy.second, k))
                r.add("cartesian-naturality", {c.object_name(d), name, h.cell_name(u), c.morphism_name(k)},
                      "<x,y>k differs from <xk,yk>");
            }
      } catch (const Error& e) {
        r.add("cartesian-undefined", {c.object_name(d), name}, e.what());
      }
    }
  return r;
}

CellId product_cell(const TwoCellStructure& h, const PullbackSquare& target, const PullbackSquare& source, CellId x,
                    CellId z, CellId y) {
  const auto& c = h.base();
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::type_mismatch, what);
  };
  need(h.source(x) == c.source(source.f) && h.target(x) == c.source(target.f), "x is not typed A' -> A");
  need(h.source(y) == c.source(source.g) && h.target(y) == c.source(target.g), "y is not typed B' -> B");
  need(h.source(z) == c.target(source.f) && h.target(z) == c.target(target.f), "z is not typed C' -> C");
  need(h.lwhisk(target.f, x) == h.rwhisk(z, source.f), "f x differs from z f'");
  need(h.lwhisk(target.g, y) == h.rwhisk(z, source.g), "g y differs from z g'");
  auto w = h.pair_cell(target, h.rwhisk(x, source.p1), h.rwhisk(y, source.p2));
  if (!w) throw Error(Errc::not_cartesian_here, "no unique cell over " + c.object_name(target.apex));
  return *w;
}

}  // namespace sesq
