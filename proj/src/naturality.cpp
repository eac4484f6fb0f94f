#include "sesq/naturality.hpp"

#include "sesq/error.hpp"

namespace sesq {

namespace {

void require_chain(const TwoCellStructure& h, CellId x, CellId z) {
  if (h.source(x) != h.target(z))
    throw Error(Errc::not_composable_cells, h.cell_name(x) + " after " + h.cell_name(z));
}

CellId left_side(const TwoCellStructure& h, CellId x, CellId z) {
  return h.vsum(h.lwhisk(h.cod(x), z), h.rwhisk(x, h.dom(z)));
}

CellId right_side(const TwoCellStructure& h, CellId x, CellId z) {
  return h.vsum(h.rwhisk(x, h.cod(z)), h.lwhisk(h.dom(x), z));
}

}  // namespace

bool natural_wrt(const TwoCellStructure& h, CellId x, CellId z) {
  require_chain(h, x, z);
  return left_side(h, x, z) == right_side(h, x, z);
}

std::optional<CellId> naturality_counterexample(const TwoCellStructure& h, CellId x) {
  if (!h.enumerable()) throw Error(Errc::unsupported_backend, "is_natural needs enumeration or probes");
  const auto a = h.source(x);
  for (auto obj : h.base().objects())
    for (auto z : h.cells(obj, a))
      if (!natural_wrt(h, x, z)) return z;
  return std::nullopt;
}

bool is_natural(const TwoCellStructure& h, CellId x) { return !naturality_counterexample(h, x); }

bool is_natural(const TwoCellStructure& h, CellId x, std::span<const CellId> probes) {
  for (auto z : probes)
    if (h.target(z) == h.source(x) && !natural_wrt(h, x, z)) return false;
  return true;
}

TwoCategoryVerdict two_category_verdict(const TwoCellStructure& h, std::size_t keep) {
  if (!h.enumerable()) throw Error(Errc::unsupported_backend, "is_two_category needs enumeration");
  TwoCategoryVerdict v;
  const auto objs = h.base().objects();
  for (auto a : objs)
    for (auto b : objs)
      for (auto x : h.cells(a, b))
        for (auto xo : objs)
          for (auto z : h.cells(xo, a))
            if (!natural_wrt(h, x, z)) {
              v.holds = false;
              ++v.failing_pairs;
              if (v.failures.size() < keep) v.failures.emplace_back(x, z);
            }
  return v;
}

bool is_two_category(const TwoCellStructure& h) { return two_category_verdict(h, 0).holds; }

CellId hcomp(const TwoCellStructure& h, CellId x, CellId y) {
  require_chain(h, x, y);
  auto lhs = left_side(h, x, y);
  if (lhs != right_side(h, x, y))
    throw Error(Errc::not_natural_pair, h.cell_name(x) + " is not natural with respect to " + h.cell_name(y));
  return lhs;
}

CellId commutator(const TwoCellStructure& h, CellId x, CellId y) {
  require_chain(h, x, y);
  const auto c1 = h.lwhisk(h.cod(x), y);
  const auto c2 = h.rwhisk(x, h.cod(y));
  const auto d1 = h.lwhisk(h.dom(x), y);
  const auto d2 = h.rwhisk(x, h.dom(y));
  return vsum_chain(h, {c1, d2, inverse(h, d1), inverse(h, c2)});
}

}  // namespace sesq
