#include "sesq/naturalize.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sesq/error.hpp"
#include "sesq/naturality.hpp"

namespace sesq {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // keeps the smaller id as representative
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Naturalization naturalize(const TwoCellStructure& h) {
  if (!h.enumerable() || !h.base().is_table())
    throw Error(Errc::unsupported_backend, "naturalize needs an enumerable structure over a table category");
  // Work on a table snapshot so that ids are dense.
  const auto snap = materialize(h);
  const auto& t = *snap.structure;
  const auto& tab = t.tables();
  const auto& cat = t.base();
  const int n = static_cast<int>(t.cell_count());
  UnionFind uf(n);

  for (int x = 0; x < n; ++x)
    for (auto obj : cat.objects())
      for (auto z : t.cells(obj, t.source(CellId(x)))) {
        const CellId cx(x);
        const auto lhs = t.vsum(t.lwhisk(t.cod(cx), z), t.rwhisk(cx, t.dom(z)));
        const auto rhs = t.vsum(t.rwhisk(cx, t.cod(z)), t.lwhisk(t.dom(cx), z));
        uf.unite(lhs.value, rhs.value);
      }

  // congruence closure over the three operation tables
  for (bool changed = true; changed;) {
    changed = false;
    auto close = [&](const std::map<std::pair<int, int>, int>& table, bool left_cell, bool right_cell) {
      std::map<std::pair<int, int>, int> seen;
      for (const auto& [key, out] : table) {
        const std::pair<int, int> k{left_cell ? uf.find(key.first) : key.first,
                                    right_cell ? uf.find(key.second) : key.second};
        auto [it, fresh] = seen.emplace(k, out);
        if (!fresh) changed |= uf.unite(it->second, out);
      }
    };
    close(tab.vsum, true, true);
    close(tab.lwhisk, false, true);
    close(tab.rwhisk, true, false);
  }

  std::vector<int> rep_index(n, -1);
  CellTables q;
  for (int x = 0; x < n; ++x) {
    const int r = uf.find(x);
    if (tab.cells[x].dom != tab.cells[r].dom || tab.cells[x].cod != tab.cells[r].cod)
      throw Error(Errc::quotient_ill_typed, tab.cells[x].name + " is identified with " + tab.cells[r].name);
    if (r == x) {
      rep_index[x] = static_cast<int>(q.cells.size());
      q.cells.push_back(tab.cells[x]);
    }
  }
  auto cls = [&](int x) { return rep_index[uf.find(x)]; };
  for (int z : tab.zero) q.zero.push_back(z < 0 ? -1 : cls(z));
  for (const auto& [k, v] : tab.vsum) q.vsum[{cls(k.first), cls(k.second)}] = cls(v);
  for (const auto& [k, v] : tab.lwhisk) q.lwhisk[{k.first, cls(k.second)}] = cls(v);
  for (const auto& [k, v] : tab.rwhisk) q.rwhisk[{cls(k.first), k.second}] = cls(v);

  Naturalization out;
  out.structure = std::make_shared<TableStructure>(cat, std::move(q));
  for (int x = 0; x < n; ++x) out.phi.emplace(snap.cell_origin[x], CellId(cls(x)));
  return out;
}

std::optional<CellMap> factor_through_naturalization(const TwoCellStructure& h, const TwoCellStructure& n,
                                                     const CellMap& psi) {
  const auto nat = naturalize(h);
  // Candidates for each class: the values psi takes on it. phi is onto, so
  // there is at most one consistent choice.
  std::map<CellId, std::vector<CellId>> candidates;
  for (const auto& [x, cls] : nat.phi) {
    auto it = psi.find(x);
    if (it == psi.end()) return std::nullopt;
    auto& c = candidates[cls];
    if (std::find(c.begin(), c.end(), it->second) == c.end()) c.push_back(it->second);
  }
  CellMap bar;
  for (const auto& [cls, c] : candidates) {
    if (c.size() != 1) return std::nullopt;
    bar.emplace(cls, c.front());
  }
  if (!check_structure_morphism(bar, *nat.structure, n).empty()) return std::nullopt;
  return bar;
}

bool check_reflection_property(const TwoCellStructure& h, const TwoCellStructure& n, const CellMap& psi) {
  if (!is_two_category(n)) return false;
  return factor_through_naturalization(h, n, psi).has_value();
}

}  // namespace sesq
