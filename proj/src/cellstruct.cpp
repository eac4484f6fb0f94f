#include "sesq/cellstruct.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "sesq/error.hpp"

namespace sesq {

std::vector<CellId> TwoCellStructure::cells(ObjectId, ObjectId) const {
  throw Error(Errc::unsupported_backend, "structure does not enumerate its cells");
}

std::vector<CellId> TwoCellStructure::all_cells() const {
  std::vector<CellId> out;
  for (auto a : base_.objects())
    for (auto b : base_.objects()) {
      auto cs = cells(a, b);
      out.insert(out.end(), cs.begin(), cs.end());
    }
  return out;
}

std::optional<CellId> TwoCellStructure::negate(CellId x) const {
  if (!enumerable()) throw Error(Errc::unsupported_backend, "inverse search needs enumeration");
  const auto dx = dom(x), cx = cod(x);
  for (auto y : cells(source(x), target(x))) {
    if (dom(y) != cx || cod(y) != dx) continue;
    if (vsum(x, y) == zero(cx) && vsum(y, x) == zero(dx)) return y;
  }
  return std::nullopt;
}

std::optional<CellId> TwoCellStructure::pair_cell(const PullbackSquare& sq, CellId x, CellId y) const {
  if (!enumerable()) throw Error(Errc::unsupported_backend, "pairing search needs enumeration");
  std::optional<CellId> found;
  for (auto u : cells(source(x), sq.apex)) {
    if (lwhisk(sq.p1, u) == x && lwhisk(sq.p2, u) == y) {
      if (found) return std::nullopt;
      found = u;
    }
  }
  return found;
}

Cell resolve(const TwoCellStructure& h, CellId x) {
  auto d = h.dom(x);
  return Cell{x, h.base().source(d), h.base().target(d), d, h.cod(x)};
}

CellId vcomp(const TwoCellStructure& h, CellId v, CellId u) {
  if (h.dom(v) != h.cod(u))
    throw Error(Errc::not_vertically_composable, h.cell_name(v) + " + " + h.cell_name(u));
  return h.vsum(v, u);
}

CellId lwhisker(const TwoCellStructure& h, MorphismId g, CellId y) {
  if (h.base().source(g) != h.target(y))
    throw Error(Errc::not_whiskerable, h.base().morphism_name(g) + " . " + h.cell_name(y));
  return h.lwhisk(g, y);
}

CellId rwhisker(const TwoCellStructure& h, CellId x, MorphismId f) {
  if (h.base().target(f) != h.source(x))
    throw Error(Errc::not_whiskerable, h.cell_name(x) + " . " + h.base().morphism_name(f));
  return h.rwhisk(x, f);
}

CellId vsum_chain(const TwoCellStructure& h, std::initializer_list<CellId> chain) {
  if (chain.size() == 0) throw Error(Errc::not_vertically_composable, "empty sum");
  auto it = std::rbegin(chain);
  CellId acc = *it++;
  for (; it != std::rend(chain); ++it) acc = vcomp(h, *it, acc);
  return acc;
}

CellId inverse(const TwoCellStructure& h, CellId x) {
  if (auto y = h.negate(x)) return *y;
  throw Error(Errc::not_invertible, h.cell_name(x));
}

bool is_invertible_structure(const TwoCellStructure& h) {
  for (auto x : h.all_cells())
    if (!h.negate(x)) return false;
  return true;
}

// ---------------------------------------------------------------- validation

namespace {

class StructureValidator {
 public:
  StructureValidator(const TwoCellStructure& h, ValidationReport& r) : h_(h), c_(h.base()), r_(r) {}

  void run() {
    const auto objs = c_.objects();
    const std::size_t n = objs.size();
    cells_.assign(n * n, {});
    for (auto a : objs)
      for (auto b : objs) cells_[a.value * n + b.value] = h_.cells(a, b);
    n_ = n;
    typing(objs);
    if (!typed_) return;  // later equations assume typed cells
    group1(objs);
    group2(objs);
    group3(objs);
  }

 private:
  const std::vector<CellId>& H(ObjectId a, ObjectId b) const { return cells_[a.value * n_ + b.value]; }
  std::string cn(CellId x) const { return h_.cell_name(x); }
  std::string mn(MorphismId f) const { return c_.morphism_name(f); }

  template <class F>
  std::optional<CellId> attempt(F&& op, const std::string& what) {
    try {
      return op();
    } catch (const Error& e) {
      if (reported_.insert(what).second) r_.add("table-total", {what}, e.what());
      return std::nullopt;
    }
  }
  std::optional<CellId> zero(MorphismId f) {
    return attempt([&] { return h_.zero(f); }, "zero " + mn(f));
  }
  std::optional<CellId> sum(CellId v, CellId u) {
    return attempt([&] { return h_.vsum(v, u); }, "plus " + cn(v) + " + " + cn(u));
  }
  std::optional<CellId> lw(MorphismId g, CellId y) {
    return attempt([&] { return h_.lwhisk(g, y); }, "lwhisk " + mn(g) + " . " + cn(y));
  }
  std::optional<CellId> rw(CellId x, MorphismId f) {
    return attempt([&] { return h_.rwhisk(x, f); }, "rwhisk " + cn(x) + " . " + mn(f));
  }
  std::optional<MorphismId> comp(MorphismId g, MorphismId f) {
    try {
      return c_.compose(g, f);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  void typing(const std::vector<ObjectId>& objs) {
    for (auto a : objs)
      for (auto b : objs)
        for (auto x : H(a, b)) {
          auto d = h_.dom(x), c = h_.cod(x);
          bool ok = d.valid() && c.valid() && c_.source(d) == a && c_.target(d) == b && c_.source(c) == a &&
                    c_.target(c) == b;
          if (!ok) {
            r_.add("cell-typing", {cn(x)}, "dom/cod do not lie in one hom-set");
            typed_ = false;
          }
        }
    for (auto a : objs)
      for (auto b : objs)
        for (auto f : c_.hom(a, b)) {
          auto z = zero(f);
          if (!z) continue;
          if (h_.source(*z) != a || h_.target(*z) != b || h_.dom(*z) != f || h_.cod(*z) != f)
            r_.add("zero-dom-cod", {mn(f), cn(*z)}, "dom(0_f) = f = cod(0_f)");
        }
  }

  void group1(const std::vector<ObjectId>& objs) {
    for (auto a : objs)
      for (auto b : objs)
        for (auto y : H(a, b)) {
          for (auto cobj : objs)
            for (auto g : c_.hom(b, cobj)) {
              auto gy = lw(g, y);
              if (!gy) continue;
              if (h_.dom(*gy) != comp(g, h_.dom(y)))
                r_.add("dom-lwhisk", {mn(g), cn(y)}, "dom(gy) = g dom(y)");
              if (h_.cod(*gy) != comp(g, h_.cod(y)))
                r_.add("cod-lwhisk", {mn(g), cn(y)}, "cod(gy) = g cod(y)");
            }
          for (auto a2 : objs)
            for (auto f : c_.hom(a2, a)) {
              auto yf = rw(y, f);
              if (!yf) continue;
              if (h_.dom(*yf) != comp(h_.dom(y), f))
                r_.add("dom-rwhisk", {cn(y), mn(f)}, "dom(xf) = dom(x) f");
              if (h_.cod(*yf) != comp(h_.cod(y), f))
                r_.add("cod-rwhisk", {cn(y), mn(f)}, "cod(xf) = cod(x) f");
            }
        }
    for (auto f : c_.morphisms())
      for (auto g : c_.morphisms()) {
        if (c_.target(f) != c_.source(g)) continue;
        auto gf = comp(g, f);
        auto zf = zero(f), zg = zero(g);
        if (!gf) continue;
        auto zgf = zero(*gf);
        if (!zgf) continue;
        if (zf) {
          auto v = lw(g, *zf);
          if (v && *v != *zgf) r_.add("zero-lwhisk", {mn(g), mn(f)}, "g 0_f = 0_{gf}");
        }
        if (zg) {
          auto v = rw(*zg, f);
          if (v && *v != *zgf) r_.add("zero-rwhisk", {mn(g), mn(f)}, "0_g f = 0_{gf}");
        }
      }
    for (auto a : objs)
      for (auto b : objs) {
        const auto& hab = H(a, b);
        for (auto x : hab)
          for (auto x2 : hab) {
            if (h_.dom(x) != h_.cod(x2)) continue;
            auto s = sum(x, x2);
            if (!s) continue;
            for (auto a2 : objs)
              for (auto f : c_.hom(a2, a)) {
                auto lhs = rw(*s, f);
                auto p = rw(x, f), q = rw(x2, f);
                if (!lhs || !p || !q) continue;
                auto rhs = sum(*p, *q);
                if (rhs && *lhs != *rhs) r_.add("sum-rwhisk", {cn(x), cn(x2), mn(f)}, "(x + x')f = xf + x'f");
              }
            for (auto cobj : objs)
              for (auto g : c_.hom(b, cobj)) {
                auto lhs = lw(g, *s);
                auto p = lw(g, x), q = lw(g, x2);
                if (!lhs || !p || !q) continue;
                auto rhs = sum(*p, *q);
                if (rhs && *lhs != *rhs) r_.add("sum-lwhisk", {mn(g), cn(x), cn(x2)}, "g(y + y') = gy + gy'");
              }
          }
      }
  }

  void group2(const std::vector<ObjectId>& objs) {
    for (auto a : objs)
      for (auto b : objs)
        for (auto y : H(a, b)) {
          auto ida = c_.identity(a), idb = c_.identity(b);
          if (auto v = lw(idb, y); v && *v != y) r_.add("lwhisk-unit", {cn(y)}, "1 x = x");
          if (auto v = rw(y, ida); v && *v != y) r_.add("rwhisk-unit", {cn(y)}, "x 1 = x");
          for (auto cobj : objs)
            for (auto g : c_.hom(b, cobj)) {
              auto gy = lw(g, y);
              for (auto dobj : objs)
                for (auto g2 : c_.hom(cobj, dobj)) {
                  auto g2g = comp(g2, g);
                  if (!gy || !g2g) continue;
                  auto lhs = lw(g2, *gy), rhs = lw(*g2g, y);
                  if (lhs && rhs && *lhs != *rhs) r_.add("lwhisk-assoc", {mn(g2), mn(g), cn(y)}, "g'(gy) = (g'g)y");
                }
              for (auto a2 : objs)
                for (auto f : c_.hom(a2, a)) {
                  auto yf = rw(y, f);
                  if (!gy || !yf) continue;
                  auto lhs = lw(g, *yf), rhs = rw(*gy, f);
                  if (lhs && rhs && *lhs != *rhs)
                    r_.add("whisk-interchange", {mn(g), cn(y), mn(f)}, "g'(xf) = (g'x)f");
                }
            }
          for (auto a2 : objs)
            for (auto f : c_.hom(a2, a)) {
              auto yf = rw(y, f);
              for (auto a3 : objs)
                for (auto f2 : c_.hom(a3, a2)) {
                  auto ff2 = comp(f, f2);
                  if (!yf || !ff2) continue;
                  auto lhs = rw(*yf, f2), rhs = rw(y, *ff2);
                  if (lhs && rhs && *lhs != *rhs) r_.add("rwhisk-assoc", {cn(y), mn(f), mn(f2)}, "(xf)f' = x(ff')");
                }
            }
        }
  }

  void group3(const std::vector<ObjectId>& objs) {
    for (auto a : objs)
      for (auto b : objs) {
        const auto& hab = H(a, b);
        for (auto x : hab) {
          auto zc = zero(h_.cod(x)), zd = zero(h_.dom(x));
          if (zc) {
            auto v = sum(*zc, x);
            if (v && *v != x) r_.add("sum-left-unit", {cn(x)}, "0_{cod x} + x = x");
          }
          if (zd) {
            auto v = sum(x, *zd);
            if (v && *v != x) r_.add("sum-right-unit", {cn(x)}, "x + 0_{dom x} = x");
          }
        }
        for (auto x : hab)
          for (auto x2 : hab) {
            if (h_.dom(x) != h_.cod(x2)) continue;
            auto s = sum(x, x2);
            if (!s) continue;
            if (h_.dom(*s) != h_.dom(x2) || h_.cod(*s) != h_.cod(x))
              r_.add("sum-dom-cod", {cn(x), cn(x2)}, "dom(x + x') = dom(x'), cod(x + x') = cod(x)");
            for (auto x3 : hab) {
              if (h_.dom(x2) != h_.cod(x3)) continue;
              auto s23 = sum(x2, x3);
              if (!s23) continue;
              if (h_.dom(*s) != h_.cod(x3) || h_.dom(x) != h_.cod(*s23)) continue;  // reported above
              auto lhs = sum(*s, x3), rhs = sum(x, *s23);
              if (lhs && rhs && *lhs != *rhs) r_.add("sum-assoc", {cn(x), cn(x2), cn(x3)}, "(x + x') + x'' = x + (x' + x'')");
            }
          }
      }
  }

  const TwoCellStructure& h_;
  const FiniteCategory& c_;
  ValidationReport& r_;
  std::vector<std::vector<CellId>> cells_;
  std::size_t n_ = 0;
  bool typed_ = true;
  std::set<std::string> reported_;
};

}  // namespace

ValidationReport validate_structure(const TwoCellStructure& h) {
  if (!h.enumerable() || !h.base().is_table())
    throw Error(Errc::unsupported_backend, "validate_structure needs an enumerated structure over a table category");
  ValidationReport report;
  if (const auto* t = dynamic_cast<const TableStructure*>(&h)) report.merge(t->shape_report());
  StructureValidator(h, report).run();
  return report;
}

ValidationReport check_structure_morphism(const CellMap& phi, const TwoCellStructure& h,
                                          const TwoCellStructure& h2) {
  const auto& c = h.base();
  const auto& c2 = h2.base();
  if (c.object_count() != c2.object_count() || c.morphism_count() != c2.morphism_count())
    throw Error(Errc::shape_mismatch, "structures live over different categories");
  for (auto f : c.morphisms())
    if (c.source(f) != c2.source(f) || c.target(f) != c2.target(f))
      throw Error(Errc::shape_mismatch, "structures live over different categories");
  auto at = [&](CellId x) -> CellId {
    auto it = phi.find(x);
    if (it == phi.end()) throw Error(Errc::shape_mismatch, "phi is undefined on " + h.cell_name(x));
    return it->second;
  };
  const auto objs = c.objects();
  for (auto a : objs)
    for (auto b : objs)
      for (auto x : h.cells(a, b)) {
        auto y = at(x);
        if (h2.source(y) != a || h2.target(y) != b)
          throw Error(Errc::shape_mismatch, "phi moves " + h.cell_name(x) + " to another hom-pair");
      }
  ValidationReport r;
  for (auto a : objs)
    for (auto b : objs) {
      const auto hab = h.cells(a, b);
      for (auto x : hab) {
        auto px = at(x);
        if (h2.dom(px) != h.dom(x)) r.add("phi-dom", {h.cell_name(x)}, "dom' phi = dom");
        if (h2.cod(px) != h.cod(x)) r.add("phi-cod", {h.cell_name(x)}, "cod' phi = cod");
        for (auto x2 : hab) {
          if (h.dom(x) != h.cod(x2)) continue;
          auto px2 = at(x2);
          if (h2.dom(px) != h2.cod(px2)) continue;  // already reported
          if (at(h.vsum(x, x2)) != h2.vsum(px, px2))
            r.add("phi-sum", {h.cell_name(x), h.cell_name(x2)}, "phi(x + x') = phi x +' phi x'");
        }
        for (auto cobj : objs)
          for (auto g : c.hom(b, cobj))
            if (at(h.lwhisk(g, x)) != h2.lwhisk(g, px))
              r.add("phi-lwhisk", {c.morphism_name(g), h.cell_name(x)}, "phi(gx) = g phi(x)");
        for (auto a2 : objs)
          for (auto f : c.hom(a2, a))
            if (at(h.rwhisk(x, f)) != h2.rwhisk(px, f))
              r.add("phi-rwhisk", {h.cell_name(x), c.morphism_name(f)}, "phi(xf) = phi(x) f");
      }
      for (auto f : c.hom(a, b))
        if (at(h.zero(f)) != h2.zero(f)) r.add("phi-zero", {c.morphism_name(f)}, "phi 0 = 0'");
    }
  return r;
}

// ---------------------------------------------------------------- tables

TableStructure::TableStructure(FiniteCategory base, CellTables tables)
    : TwoCellStructure(std::move(base)), tables_(std::move(tables)) {
  if (!base_.is_table()) throw Error(Errc::unsupported_backend, "table structures need a table category");
  tables_.zero.resize(base_.morphism_count(), -1);
  const auto n = base_.object_count();
  by_pair_.assign(n * n, {});
  const int nm = static_cast<int>(base_.morphism_count());
  for (std::size_t i = 0; i < tables_.cells.size(); ++i) {
    const auto& c = tables_.cells[i];
    by_name_.emplace(c.name, static_cast<int>(i));
    if (c.dom >= 0 && c.dom < nm) {
      auto f = MorphismId(c.dom);
      by_pair_[base_.source(f).value * n + base_.target(f).value].emplace_back(static_cast<int>(i));
    }
  }
  for (auto [k, v] : tables_.vsum) vsum_.emplace(key(k.first, k.second), v);
  for (auto [k, v] : tables_.lwhisk) lwhisk_.emplace(key(k.first, k.second), v);
  for (auto [k, v] : tables_.rwhisk) rwhisk_.emplace(key(k.first, k.second), v);
}

std::vector<CellId> TableStructure::cells(ObjectId a, ObjectId b) const {
  const auto n = base_.object_count();
  return by_pair_.at(a.value * n + b.value);
}

MorphismId TableStructure::dom(CellId x) const { return MorphismId(tables_.cells.at(x.value).dom); }
MorphismId TableStructure::cod(CellId x) const { return MorphismId(tables_.cells.at(x.value).cod); }

CellId TableStructure::zero(MorphismId f) const {
  int z = tables_.zero.at(f.value);
  if (z < 0) throw Error(Errc::missing_entry, "no zero cell for " + base_.morphism_name(f));
  return CellId(z);
}

CellId TableStructure::vsum(CellId v, CellId u) const {
  if (dom(v) != cod(u)) throw Error(Errc::not_vertically_composable, cell_name(v) + " + " + cell_name(u));
  auto it = vsum_.find(key(v.value, u.value));
  if (it == vsum_.end()) throw Error(Errc::missing_entry, "no entry " + cell_name(v) + " + " + cell_name(u));
  return CellId(it->second);
}

CellId TableStructure::lwhisk(MorphismId g, CellId y) const {
  if (base_.source(g) != target(y)) throw Error(Errc::not_whiskerable, base_.morphism_name(g) + " . " + cell_name(y));
  auto it = lwhisk_.find(key(g.value, y.value));
  if (it == lwhisk_.end())
    throw Error(Errc::missing_entry, "no entry " + base_.morphism_name(g) + " . " + cell_name(y));
  return CellId(it->second);
}

CellId TableStructure::rwhisk(CellId x, MorphismId f) const {
  if (base_.target(f) != source(x)) throw Error(Errc::not_whiskerable, cell_name(x) + " . " + base_.morphism_name(f));
  auto it = rwhisk_.find(key(x.value, f.value));
  if (it == rwhisk_.end())
    throw Error(Errc::missing_entry, "no entry " + cell_name(x) + " . " + base_.morphism_name(f));
  return CellId(it->second);
}

std::string TableStructure::cell_name(CellId x) const {
  if (!x.valid() || x.value >= static_cast<int>(tables_.cells.size())) return "<cell " + std::to_string(x.value) + ">";
  return tables_.cells[x.value].name;
}

std::optional<CellId> TableStructure::find_cell(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return CellId(it->second);
}

ValidationReport TableStructure::shape_report() const {
  ValidationReport r;
  const int nc = static_cast<int>(tables_.cells.size());
  const int nm = static_cast<int>(base_.morphism_count());
  auto cell_ok = [&](int x) { return x >= 0 && x < nc; };
  auto mor_ok = [&](int f) { return f >= 0 && f < nm; };
  auto cname = [&](int x) { return cell_ok(x) ? tables_.cells[x].name : std::to_string(x); };
  auto mname = [&](int f) { return mor_ok(f) ? base_.morphism_name(MorphismId(f)) : std::to_string(f); };
  for (int x = 0; x < nc; ++x)
    if (!mor_ok(tables_.cells[x].dom) || !mor_ok(tables_.cells[x].cod))
      r.add("cell-typing", {tables_.cells[x].name}, "dom/cod is not a morphism");
  for (int f = 0; f < nm; ++f)
    if (tables_.zero[f] >= nc) r.add("table-range", {mname(f)}, "zero entry out of range");
  for (auto [k, v] : tables_.vsum) {
    if (!cell_ok(k.first) || !cell_ok(k.second) || !cell_ok(v)) {
      r.add("table-range", {cname(k.first), cname(k.second)}, "plus entry out of range");
      continue;
    }
    if (tables_.cells[k.first].dom != tables_.cells[k.second].cod)
      r.add("sum-partiality", {cname(k.first), cname(k.second)}, "plus entry for a pair with dom(v) != cod(u)");
  }
  for (auto [k, v] : tables_.lwhisk) {
    if (!mor_ok(k.first) || !cell_ok(k.second) || !cell_ok(v)) {
      r.add("table-range", {mname(k.first), cname(k.second)}, "lwhisk entry out of range");
      continue;
    }
    if (!mor_ok(tables_.cells[k.second].dom)) continue;
    if (base_.source(MorphismId(k.first)) != base_.target(MorphismId(tables_.cells[k.second].dom)))
      r.add("lwhisk-typing", {mname(k.first), cname(k.second)}, "lwhisk entry for a non-whiskerable pair");
  }
  for (auto [k, v] : tables_.rwhisk) {
    if (!cell_ok(k.first) || !mor_ok(k.second) || !cell_ok(v)) {
      r.add("table-range", {cname(k.first), mname(k.second)}, "rwhisk entry out of range");
      continue;
    }
    if (!mor_ok(tables_.cells[k.first].dom)) continue;
    if (base_.target(MorphismId(k.second)) != base_.source(MorphismId(tables_.cells[k.first].dom)))
      r.add("rwhisk-typing", {cname(k.first), mname(k.second)}, "rwhisk entry for a non-whiskerable pair");
  }
  return r;
}

// ---------------------------------------------------------------- interning

CellId PayloadInterner::intern(std::vector<int> payload) const {
  std::size_t h = payload.size();
  for (int v : payload) h = h * 1000003u + static_cast<std::size_t>(v + 1);
  {
    std::shared_lock lock(mu_);
    if (auto it = by_hash_.find(h); it != by_hash_.end())
      for (int id : it->second)
        if (payloads_[id] == payload) return CellId(id);
  }
  std::unique_lock lock(mu_);
  auto& bucket = by_hash_[h];
  for (int id : bucket)
    if (payloads_[id] == payload) return CellId(id);
  int id = static_cast<int>(payloads_.size());
  payloads_.push_back(std::move(payload));
  bucket.push_back(id);
  return CellId(id);
}

const std::vector<int>& PayloadInterner::payload(CellId x) const {
  std::shared_lock lock(mu_);
  return payloads_.at(x.value);
}

std::size_t PayloadInterner::size() const {
  std::shared_lock lock(mu_);
  return payloads_.size();
}

// ---------------------------------------------------------------- materialize

Tabulation tabulate(const FiniteCategory& ext, std::span<const ObjectId> objects, const HomEnumerator& homs) {
  Tabulation out;
  CategoryTables t;
  std::unordered_map<ObjectId, int> obj_index;
  for (auto a : objects) {
    obj_index.emplace(a, static_cast<int>(t.objects.size()));
    t.objects.push_back(ext.object_name(a));
    out.object_origin.push_back(a);
  }
  for (auto a : objects)
    for (auto b : objects)
      for (auto f : homs(a, b)) {
        if (out.morphism_index.count(f)) continue;
        out.morphism_index.emplace(f, MorphismId(static_cast<int>(t.morphisms.size())));
        t.morphisms.push_back(MorphismDecl{ext.morphism_name(f), obj_index.at(a), obj_index.at(b)});
        out.morphism_origin.push_back(f);
      }
  t.identities.resize(t.objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    auto it = out.morphism_index.find(ext.identity(objects[i]));
    if (it == out.morphism_index.end())
      throw Error(Errc::invalid_presentation, "hom enumeration misses an identity");
    t.identities[i] = it->second.value;
  }
  t.reset_composition();
  const int n = static_cast<int>(t.morphisms.size());
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (t.morphisms[f].target != t.morphisms[g].source) continue;
      auto h = ext.compose(out.morphism_origin[g], out.morphism_origin[f]);
      auto it = out.morphism_index.find(h);
      if (it == out.morphism_index.end())
        throw Error(Errc::invalid_presentation, "hom enumeration is not closed under composition");
      t.set_composite(g, f, it->second.value);
    }
  out.category = FiniteCategory::from_tables(std::move(t));
  return out;
}

namespace {

// Fills `out.structure` from h, given out.category and the morphism maps.
void fill_cells(const TwoCellStructure& h, Materialized& out,
                const std::function<std::vector<CellId>(ObjectId, ObjectId)>& cells_of) {
  const auto& tcat = out.category;
  CellTables ct;
  std::set<std::string> names;
  for (auto a : tcat.objects())
    for (auto b : tcat.objects())
      for (auto x : cells_of(a, b)) {
        if (out.cell_index.count(x)) continue;
        CellId id(static_cast<int>(ct.cells.size()));
        out.cell_index.emplace(x, id);
        out.cell_origin.push_back(x);
        std::string name = h.cell_name(x);
        if (!names.insert(name).second) name += "_" + std::to_string(id.value);
        ct.cells.push_back(
            CellDecl{name, out.morphism_index.at(h.dom(x)).value, out.morphism_index.at(h.cod(x)).value});
      }
  auto to_cell = [&](CellId x) {
    auto it = out.cell_index.find(x);
    if (it == out.cell_index.end()) throw Error(Errc::invalid_presentation, "cell enumeration is not closed");
    return it->second.value;
  };
  ct.zero.assign(tcat.morphism_count(), -1);
  for (auto f : tcat.morphisms()) ct.zero[f.value] = to_cell(h.zero(out.morphism_origin[f.value]));
  const int nc = static_cast<int>(ct.cells.size());
  std::vector<std::vector<int>> by_cod(tcat.morphism_count());
  for (int y = 0; y < nc; ++y) by_cod[ct.cells[y].cod].push_back(y);
  for (int x = 0; x < nc; ++x) {
    const auto ox = out.cell_origin[x];
    const auto cx = ct.cells[x];
    for (int y : by_cod[cx.dom]) ct.vsum[{x, y}] = to_cell(h.vsum(ox, out.cell_origin[y]));
    const auto src = tcat.source(MorphismId(cx.dom)), tgt = tcat.target(MorphismId(cx.dom));
    for (auto cobj : tcat.objects())
      for (auto g : tcat.hom(tgt, cobj))
        ct.lwhisk[{g.value, x}] = to_cell(h.lwhisk(out.morphism_origin[g.value], ox));
    for (auto a2 : tcat.objects())
      for (auto f : tcat.hom(a2, src))
        ct.rwhisk[{x, f.value}] = to_cell(h.rwhisk(ox, out.morphism_origin[f.value]));
  }
  out.structure = std::make_shared<TableStructure>(tcat, std::move(ct));
}

}  // namespace

Materialized materialize(const TwoCellStructure& h, std::span<const ObjectId> objects, const HomEnumerator& homs,
                         const CellEnumerator& cells) {
  Tabulation tab = tabulate(h.base(), objects, homs);
  Materialized out;
  out.object_origin = tab.object_origin;
  out.morphism_origin = tab.morphism_origin;
  out.morphism_index = tab.morphism_index;
  out.category = tab.category;
  fill_cells(h, out, [&](ObjectId a, ObjectId b) {
    std::vector<MorphismId> ext_hom;
    for (auto f : out.category.hom(a, b)) ext_hom.push_back(out.morphism_origin[f.value]);
    return cells(out.object_origin[a.value], out.object_origin[b.value], ext_hom);
  });
  return out;
}

// Same base category, ids preserved for objects and morphisms.
Materialized materialize(const TwoCellStructure& h) {
  if (!h.enumerable() || !h.base().is_table())
    throw Error(Errc::unsupported_backend, "materialize(h) needs an enumerable structure over a table category");
  Materialized out;
  out.category = h.base();
  out.object_origin = out.category.objects();
  out.morphism_origin = out.category.morphisms();
  for (auto f : out.morphism_origin) out.morphism_index.emplace(f, f);
  fill_cells(h, out, [&](ObjectId a, ObjectId b) { return h.cells(a, b); });
  return out;
}

}  // namespace sesq
