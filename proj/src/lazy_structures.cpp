#include <algorithm>
#include <numeric>

#include "sesq/constructions.hpp"
#include "sesq/error.hpp"

namespace sesq {

namespace {

std::string join(const std::vector<int>& v, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i > from) out += '_';
    out += std::to_string(v[i]);
  }
  return out;
}

std::optional<MorphismId> try_induced(const FiniteCategory& c, const PullbackSquare& sq, MorphismId x,
                                      MorphismId y) {
  try {
    return induced_into_pullback(c, sq, x, y);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

// ---------------------------------------------------------------- discrete

std::vector<CellId> DiscreteStructure::cells(ObjectId a, ObjectId b) const {
  std::vector<CellId> out;
  for (auto f : base_.hom(a, b)) out.emplace_back(f.value);
  return out;
}

CellId DiscreteStructure::vsum(CellId v, CellId u) const {
  if (v != u) throw Error(Errc::not_vertically_composable, cell_name(v) + " + " + cell_name(u));
  return v;
}

CellId DiscreteStructure::lwhisk(MorphismId g, CellId y) const {
  return CellId(base_.compose(g, MorphismId(y.value)).value);
}

CellId DiscreteStructure::rwhisk(CellId x, MorphismId f) const {
  return CellId(base_.compose(MorphismId(x.value), f).value);
}

std::optional<CellId> DiscreteStructure::pair_cell(const PullbackSquare& sq, CellId x, CellId y) const {
  auto u = try_induced(base_, sq, MorphismId(x.value), MorphismId(y.value));
  if (!u) return std::nullopt;
  return CellId(u->value);
}

std::string DiscreteStructure::cell_name(CellId x) const {
  return "[" + base_.morphism_name(MorphismId(x.value)) + "]";
}

// ---------------------------------------------------------------- codiscrete

std::vector<CellId> CodiscreteStructure::cells(ObjectId a, ObjectId b) const {
  std::vector<CellId> out;
  for (auto k : base_.hom(a, b))
    for (auto h : base_.hom(a, b)) out.push_back(make(k, h));
  return out;
}

CellId CodiscreteStructure::make(MorphismId k, MorphismId h) const {
  if (base_.source(k) != base_.source(h) || base_.target(k) != base_.target(h))
    throw Error(Errc::type_mismatch, "codiscrete cell between non-parallel morphisms");
  return cells_.intern({k.value, h.value});
}

MorphismId CodiscreteStructure::dom(CellId x) const { return MorphismId(cells_.payload(x)[1]); }
MorphismId CodiscreteStructure::cod(CellId x) const { return MorphismId(cells_.payload(x)[0]); }

CellId CodiscreteStructure::vsum(CellId v, CellId u) const {
  if (dom(v) != cod(u)) throw Error(Errc::not_vertically_composable, cell_name(v) + " + " + cell_name(u));
  return make(cod(v), dom(u));
}

CellId CodiscreteStructure::lwhisk(MorphismId g, CellId y) const {
  return make(base_.compose(g, cod(y)), base_.compose(g, dom(y)));
}

CellId CodiscreteStructure::rwhisk(CellId x, MorphismId f) const {
  return make(base_.compose(cod(x), f), base_.compose(dom(x), f));
}

std::optional<CellId> CodiscreteStructure::pair_cell(const PullbackSquare& sq, CellId x, CellId y) const {
  auto k = try_induced(base_, sq, cod(x), cod(y));
  auto h = try_induced(base_, sq, dom(x), dom(y));
  if (!k || !h) return std::nullopt;
  return make(*k, *h);
}

std::string CodiscreteStructure::cell_name(CellId x) const {
  return "[" + base_.morphism_name(cod(x)) + "|" + base_.morphism_name(dom(x)) + "]";
}

// ---------------------------------------------------------------- extended hom

CellId ExtendedHomStructure::make(MorphismId f, Data x) const {
  x.insert(x.begin(), f.value);
  return cells_.intern(std::move(x));
}

ExtendedHomStructure::Data ExtendedHomStructure::data(CellId c) const {
  const auto& p = cells_.payload(c);
  return Data(p.begin() + 1, p.end());
}

MorphismId ExtendedHomStructure::cod(CellId c) const {
  auto f = dom(c);
  return base_.intern(base_.source(f), base_.target(f), extend(f, data(c)));
}

CellId ExtendedHomStructure::zero(MorphismId f) const {
  return make(f, x_zero(base_.source(f), base_.target(f)));
}

CellId ExtendedHomStructure::vsum(CellId v, CellId u) const {
  if (dom(v) != cod(u)) throw Error(Errc::not_vertically_composable, cell_name(v) + " + " + cell_name(u));
  auto f = dom(u);
  return make(f, x_sum(base_.source(f), base_.target(f), data(v), data(u)));
}

CellId ExtendedHomStructure::lwhisk(MorphismId g, CellId y) const {
  if (base_.source(g) != target(y)) throw Error(Errc::not_whiskerable, "g . y");
  return make(base_.compose(g, dom(y)), x_left(g, source(y), target(y), data(y)));
}

CellId ExtendedHomStructure::rwhisk(CellId x, MorphismId f) const {
  if (base_.target(f) != source(x)) throw Error(Errc::not_whiskerable, "x . f");
  return make(base_.compose(dom(x), f), x_right(source(x), target(x), data(x), f));
}

std::optional<CellId> ExtendedHomStructure::negate(CellId x) const {
  return make(cod(x), x_neg(source(x), target(x), data(x)));
}

std::optional<CellId> ExtendedHomStructure::pair_cell(const PullbackSquare& sq, CellId x, CellId y) const {
  auto f = try_induced(base_, sq, dom(x), dom(y));
  if (!f) return std::nullopt;
  auto data_xy = x_pair(sq, source(x), data(x), data(y));
  if (std::any_of(data_xy.begin(), data_xy.end(), [](int v) { return v < 0; })) return std::nullopt;
  auto u = make(*f, std::move(data_xy));
  if (lwhisk(sq.p1, u) != x || lwhisk(sq.p2, u) != y) return std::nullopt;
  return u;
}

std::string ExtendedHomStructure::cell_name(CellId c) const { return x_name(c); }

std::string ExtendedHomStructure::x_name(CellId c) const {
  return "[" + base_.morphism_name(dom(c)) + "|" + join(cells_.payload(c), 1) + "]";
}

// ---------------------------------------------------------------- conjugation

using Data = ExtendedHomStructure::Data;

Data ConjugationStructure::x_zero(ObjectId, ObjectId b) const { return {base_.carrier(b).apply("one", {})}; }

Data ConjugationStructure::x_sum(ObjectId, ObjectId b, const Data& later, const Data& earlier) const {
  return {base_.carrier(b).apply("mul", {later[0], earlier[0]})};
}

Data ConjugationStructure::x_neg(ObjectId, ObjectId b, const Data& x) const {
  return {base_.carrier(b).apply("inv", {x[0]})};
}

Data ConjugationStructure::x_left(MorphismId g, ObjectId, ObjectId, const Data& x) const {
  return {base_.apply(g, 0, x[0])};
}

Data ConjugationStructure::x_right(ObjectId, ObjectId, const Data& x, MorphismId) const { return x; }

Data ConjugationStructure::x_pair(const PullbackSquare& sq, ObjectId, const Data& x, const Data& y) const {
  return {base_.carrier(sq.apex).element(0, x[0], y[0])};
}

Graph ConjugationStructure::extend(MorphismId f, const Data& x) const {
  const auto& b = base_.carrier(base_.target(f));
  const int t = x[0], tinv = b.apply("inv", {t});
  Graph g = base_.graph(f);
  for (int& v : g[0]) v = b.apply("mul", {b.apply("mul", {t, v}), tinv});
  return g;
}

std::string ConjugationStructure::x_name(CellId c) const {
  const auto f = dom(c);
  return "[" + base_.carrier(base_.target(f)).label(0, data(c)[0]) + "|" + base_.morphism_name(f) + "]";
}

// ---------------------------------------------------------------- derivations
// sorts: 0 = X, 1 = B; t: B_source -> X_target

Data DerivationStructure::x_zero(ObjectId a, ObjectId b) const {
  return Data(base_.carrier(a).size(1), base_.carrier(b).apply("oneX", {}));
}

Data DerivationStructure::x_sum(ObjectId, ObjectId b, const Data& later, const Data& earlier) const {
  const auto& cb = base_.carrier(b);
  Data out(later.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = cb.apply("mulX", {later[i], earlier[i]});
  return out;
}

Data DerivationStructure::x_neg(ObjectId, ObjectId b, const Data& x) const {
  const auto& cb = base_.carrier(b);
  Data out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = cb.apply("invX", {x[i]});
  return out;
}

Data DerivationStructure::x_left(MorphismId g, ObjectId, ObjectId, const Data& x) const {
  Data out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = base_.apply(g, 0, x[i]);
  return out;
}

Data DerivationStructure::x_right(ObjectId, ObjectId, const Data& x, MorphismId f) const {
  const auto& f0 = base_.graph(f)[1];
  Data out(f0.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[f0[i]];
  return out;
}

Data DerivationStructure::x_pair(const PullbackSquare& sq, ObjectId, const Data& x, const Data& y) const {
  const auto& apex = base_.carrier(sq.apex);
  Data out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = apex.element(0, x[i], y[i]);
  return out;
}

Graph DerivationStructure::extend(MorphismId f, const Data& t) const {
  const auto& src = base_.carrier(base_.source(f));
  const auto& tgt = base_.carrier(base_.target(f));
  Graph g = base_.graph(f);
  for (int x = 0; x < src.size(0); ++x) g[0][x] = tgt.apply("mulX", {t[src.apply("bd", {x})], g[0][x]});
  for (int b = 0; b < src.size(1); ++b) g[1][b] = tgt.apply("mulB", {tgt.apply("bd", {t[b]}), g[1][b]});
  return g;
}

// ---------------------------------------------------------------- homotopies
// sort k = degree k; data = t2 on A1 (into B2), then t1 on A0 (into B1)

CellId HomotopyStructure::make_homotopy(MorphismId f, const HomotopyData& t) const {
  Data x = t.t2;
  x.insert(x.end(), t.t1.begin(), t.t1.end());
  return make(f, std::move(x));
}

HomotopyData HomotopyStructure::homotopy(CellId c) const {
  const auto& src = base_.carrier(source(c));
  Data x = data(c);
  const auto n1 = static_cast<std::size_t>(src.size(1));
  return HomotopyData{Data(x.begin(), x.begin() + n1), Data(x.begin() + n1, x.end())};
}

Data HomotopyStructure::x_zero(ObjectId a, ObjectId b) const {
  const auto& ca = base_.carrier(a);
  const auto& cb = base_.carrier(b);
  Data x(ca.size(1), cb.apply("zero2", {}));
  x.resize(ca.size(1) + ca.size(0), cb.apply("zero1", {}));
  return x;
}

Data HomotopyStructure::x_sum(ObjectId a, ObjectId b, const Data& later, const Data& earlier) const {
  const auto n1 = static_cast<std::size_t>(base_.carrier(a).size(1));
  const auto& cb = base_.carrier(b);
  Data out(later.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = cb.apply(i < n1 ? "add2" : "add1", {later[i], earlier[i]});
  return out;
}

Data HomotopyStructure::x_neg(ObjectId a, ObjectId b, const Data& x) const {
  const auto n1 = static_cast<std::size_t>(base_.carrier(a).size(1));
  const auto& cb = base_.carrier(b);
  Data out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = cb.apply(i < n1 ? "neg2" : "neg1", {x[i]});
  return out;
}

Data HomotopyStructure::x_left(MorphismId g, ObjectId a, ObjectId, const Data& x) const {
  const auto n1 = static_cast<std::size_t>(base_.carrier(a).size(1));
  const auto& gg = base_.graph(g);
  Data out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i < n1 ? gg[2][x[i]] : gg[1][x[i]];
  return out;
}

Data HomotopyStructure::x_right(ObjectId a, ObjectId, const Data& x, MorphismId f) const {
  const auto n1 = static_cast<std::size_t>(base_.carrier(a).size(1));
  const auto& fg = base_.graph(f);
  Data out;
  for (int v : fg[1]) out.push_back(x[v]);
  for (int v : fg[0]) out.push_back(x[n1 + v]);
  return out;
}

Data HomotopyStructure::x_pair(const PullbackSquare& sq, ObjectId d, const Data& x, const Data& y) const {
  const auto n1 = static_cast<std::size_t>(base_.carrier(d).size(1));
  const auto& apex = base_.carrier(sq.apex);
  Data out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = apex.element(i < n1 ? 2 : 1, x[i], y[i]);
  return out;
}

Graph HomotopyStructure::extend(MorphismId f, const Data& x) const {
  const auto& src = base_.carrier(base_.source(f));
  const auto& tgt = base_.carrier(base_.target(f));
  const auto n1 = static_cast<std::size_t>(src.size(1));
  auto t2 = [&](int a) { return x[a]; };
  auto t1 = [&](int a) { return x[n1 + a]; };
  Graph g = base_.graph(f);
  for (int a = 0; a < src.size(2); ++a) g[2][a] = tgt.apply("add2", {g[2][a], t2(src.apply("d2", {a}))});
  for (int a = 0; a < src.size(1); ++a)
    g[1][a] = tgt.apply("add1", {tgt.apply("add1", {g[1][a], t1(src.apply("d1", {a}))}), tgt.apply("d2", {t2(a)})});
  for (int a = 0; a < src.size(0); ++a) g[0][a] = tgt.apply("add0", {g[0][a], tgt.apply("d1", {t1(a)})});
  return g;
}

// ---------------------------------------------------------------- internal transformations
// sorts: 0 = objects, 1 = arrows

CellId InternalTransformationStructure::make(MorphismId k, std::vector<int> t, MorphismId h) const {
  t.insert(t.begin(), {k.value, h.value});
  return cells_.intern(std::move(t));
}

std::vector<int> InternalTransformationStructure::component(CellId c) const {
  const auto& p = cells_.payload(c);
  return std::vector<int>(p.begin() + 2, p.end());
}

MorphismId InternalTransformationStructure::dom(CellId c) const { return MorphismId(cells_.payload(c)[1]); }
MorphismId InternalTransformationStructure::cod(CellId c) const { return MorphismId(cells_.payload(c)[0]); }

CellId InternalTransformationStructure::zero(MorphismId f) const {
  const auto& b = base_.carrier(base_.target(f));
  std::vector<int> t;
  for (int v : base_.graph(f)[0]) t.push_back(b.apply("e", {v}));
  return make(f, std::move(t), f);
}

CellId InternalTransformationStructure::vsum(CellId v, CellId u) const {
  if (dom(v) != cod(u)) throw Error(Errc::not_vertically_composable, cell_name(v) + " + " + cell_name(u));
  const auto& b = base_.carrier(target(v));
  auto t = component(v), s = component(u);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = b.apply("m", {t[i], s[i]});
  return make(cod(v), std::move(t), dom(u));
}

CellId InternalTransformationStructure::lwhisk(MorphismId g, CellId y) const {
  if (base_.source(g) != target(y)) throw Error(Errc::not_whiskerable, "g . y");
  auto t = component(y);
  for (int& v : t) v = base_.apply(g, 1, v);
  return make(base_.compose(g, cod(y)), std::move(t), base_.compose(g, dom(y)));
}

CellId InternalTransformationStructure::rwhisk(CellId x, MorphismId f) const {
  if (base_.target(f) != source(x)) throw Error(Errc::not_whiskerable, "x . f");
  auto t = component(x);
  std::vector<int> out;
  for (int v : base_.graph(f)[0]) out.push_back(t[v]);
  return make(base_.compose(cod(x), f), std::move(out), base_.compose(dom(x), f));
}

std::optional<CellId> InternalTransformationStructure::negate(CellId x) const {
  const auto& b = base_.carrier(target(x));
  auto t = component(x);
  for (int& v : t) {
    int found = -1;
    const int unit_dom = b.apply("e", {b.apply("d", {v})});
    const int unit_cod = b.apply("e", {b.apply("c", {v})});
    for (int u = 0; u < b.size(1) && found < 0; ++u)
      if (b.apply("m", {u, v}) == unit_dom && b.apply("m", {v, u}) == unit_cod) found = u;
    if (found < 0) return std::nullopt;
    v = found;
  }
  return make(dom(x), std::move(t), cod(x));
}

std::string InternalTransformationStructure::cell_name(CellId c) const {
  return "[" + base_.morphism_name(cod(c)) + "|" + join(component(c)) + "|" + base_.morphism_name(dom(c)) + "]";
}

}  // namespace sesq
