#include <algorithm>
#include <numeric>

#include "sesq/constructions.hpp"
#include "sesq/error.hpp"

namespace sesq {

namespace {

// Rebuild the group on one sort of a carrier from its named operations.
FiniteGroup group_on_sort(const Carrier& c, int sort, const std::string& mul, const std::string& name) {
  const int n = c.size(sort);
  std::vector<std::string> labels(n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    labels[a] = c.label(sort, a);
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = c.apply(mul, {a, b});
  }
  return FiniteGroup::from_table(name, std::move(labels), std::move(table));
}

// Identity first, so that it keeps its "id_" name.
std::vector<MorphismId> intern_all(const FiniteCategory& cat, ObjectId a, ObjectId b,
                                   const std::vector<Graph>& graphs, const std::string& prefix) {
  if (a == b) cat.identity(a);
  std::vector<MorphismId> out;
  for (std::size_t k = 0; k < graphs.size(); ++k)
    out.push_back(cat.intern(a, b, graphs[k],
                             prefix + "_" + cat.object_name(a) + "_" + cat.object_name(b) + "_" + std::to_string(k)));
  return out;
}

template <class Fn>
void product_for_each(const std::vector<int>& radix, Fn fn) {
  std::vector<int> digit(radix.size(), 0);
  for (int r : radix)
    if (r == 0) return;
  while (true) {
    fn(digit);
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
    if (k == digit.size()) return;
  }
}

bool is_xmod_map(const FiniteCategory& cat, ObjectId a, ObjectId b, const Graph& g) {
  const auto& ca = cat.carrier(a);
  const auto& cb = cat.carrier(b);
  const auto& f1 = g[0];
  const auto& f0 = g[1];
  for (int x = 0; x < ca.size(0); ++x)
    for (int y = 0; y < ca.size(0); ++y)
      if (f1[ca.apply("mulX", {x, y})] != cb.apply("mulX", {f1[x], f1[y]})) return false;
  for (int x = 0; x < ca.size(1); ++x)
    for (int y = 0; y < ca.size(1); ++y)
      if (f0[ca.apply("mulB", {x, y})] != cb.apply("mulB", {f0[x], f0[y]})) return false;
  for (int x = 0; x < ca.size(0); ++x)
    if (cb.apply("bd", {f1[x]}) != f0[ca.apply("bd", {x})]) return false;
  for (int p = 0; p < ca.size(1); ++p)
    for (int x = 0; x < ca.size(0); ++x)
      if (f1[ca.apply("act", {p, x})] != cb.apply("act", {f0[p], f1[x]})) return false;
  return true;
}

std::vector<MorphismId> xmod_maps(const FiniteCategory& cat, ObjectId a, ObjectId b) {
  const auto& ca = cat.carrier(a);
  const auto& cb = cat.carrier(b);
  auto tops = group_homomorphisms(group_on_sort(ca, 0, "mulX", "X"), group_on_sort(cb, 0, "mulX", "X"));
  auto bottoms = group_homomorphisms(group_on_sort(ca, 1, "mulB", "B"), group_on_sort(cb, 1, "mulB", "B"));
  std::vector<Graph> graphs;
  for (const auto& f1 : tops)
    for (const auto& f0 : bottoms) {
      Graph g{f1, f0};
      if (is_xmod_map(cat, a, b, g)) graphs.push_back(std::move(g));
    }
  return intern_all(cat, a, b, graphs, "h");
}

bool is_functor_graph(const Carrier& ca, const Carrier& cb, const Graph& g) {
  const auto& f0 = g[0];
  const auto& f1 = g[1];
  for (int x = 0; x < ca.size(0); ++x)
    if (f1[ca.apply("e", {x})] != cb.apply("e", {f0[x]})) return false;
  for (int a = 0; a < ca.size(1); ++a)
    for (int b = 0; b < ca.size(1); ++b) {
      const int ab = ca.apply("m", {a, b});
      if (ab < 0) continue;
      if (cb.apply("m", {f1[a], f1[b]}) != f1[ab]) return false;
    }
  return true;
}

std::shared_ptr<Carrier> arrow_carrier(const InternalCategory& c) {
  const int n = static_cast<int>(c.arrows.size());
  auto car = plain_carrier({n, n});
  auto ident = [](std::span<const int> a) { return a[0]; };
  car->add_operation(Operation{"d", {1}, 0, ident});
  car->add_operation(Operation{"c", {1}, 0, ident});
  car->add_operation(Operation{"e", {0}, 1, ident});
  car->add_operation(Operation{"m", {1, 1}, 1, [](std::span<const int> a) { return a[0] == a[1] ? a[0] : -1; }});
  car->set_labels(0, c.arrows);
  car->set_labels(1, c.arrows);
  return car;
}

std::vector<std::vector<int>> all_functions(int from, int to) {
  std::vector<std::vector<int>> out;
  product_for_each(std::vector<int>(from, to), [&](const std::vector<int>& d) { out.push_back(d); });
  if (from == 0) out.push_back({});
  return out;
}

}  // namespace

// ---------------------------------------------------------------- discrete / codiscrete

std::shared_ptr<TableStructure> discrete(const FiniteCategory& cat) {
  return materialize(DiscreteStructure(cat)).structure;
}

std::shared_ptr<TableStructure> codiscrete(const FiniteCategory& cat) {
  return materialize(CodiscreteStructure(cat)).structure;
}

// ---------------------------------------------------------------- from_action

std::shared_ptr<TableStructure> from_action(const FiniteCategory& cat, const ActionPresentation& p) {
  if (!cat.is_table()) throw Error(Errc::unsupported_backend, "from_action needs a table category");
  const auto objs = cat.objects();
  auto monoid = [&](ObjectId a, ObjectId b) -> const FiniteMonoid& {
    auto it = p.monoids.find({a.value, b.value});
    if (it == p.monoids.end())
      throw Error(Errc::invalid_presentation,
                  "no cell monoid for (" + cat.object_name(a) + ", " + cat.object_name(b) + ")");
    return it->second;
  };

  // D must be a monoid action landing in the same hom-set.
  for (auto a : objs)
    for (auto b : objs) {
      const auto& hom = cat.hom(a, b);
      if (hom.empty()) continue;
      const auto& m = monoid(a, b);
      for (auto f : hom) {
        auto witness = [&](std::vector<std::string> w, const std::string& what) {
          return Error(Errc::action_axiom_violation, what + " at " + [&] {
            std::string s;
            for (auto& x : w) s += (s.empty() ? "" : ", ") + x;
            return s;
          }());
        };
        if (p.act(a, b, m.unit, f) != f) throw witness({m.elements[m.unit], cat.morphism_name(f)}, "D(0,f) = f fails");
        for (int x = 0; x < m.size(); ++x) {
          auto fx = p.act(a, b, x, f);
          if (cat.source(fx) != a || cat.target(fx) != b)
            throw witness({m.elements[x], cat.morphism_name(f)}, "D(x,f) leaves the hom-set");
          for (int x2 = 0; x2 < m.size(); ++x2)
            if (p.act(a, b, m.mul(x2, x), f) != p.act(a, b, x2, fx))
              throw witness({m.elements[x2], m.elements[x], cat.morphism_name(f)}, "D(x'+x,f) = D(x',D(x,f)) fails");
        }
      }
    }

  CellTables t;
  std::map<std::pair<int, int>, int> index;  // (x, f)
  for (auto a : objs)
    for (auto b : objs) {
      const auto& hom = cat.hom(a, b);
      if (hom.empty()) continue;
      const auto& m = monoid(a, b);
      for (auto f : hom)
        for (int x = 0; x < m.size(); ++x) {
          index[{x, f.value}] = static_cast<int>(t.cells.size());
          t.cells.push_back(CellDecl{"[" + m.elements[x] + "|" + cat.morphism_name(f) + "]", f.value,
                                     p.act(a, b, x, f).value});
        }
    }
  t.zero.assign(cat.morphism_count(), -1);
  for (auto f : cat.morphisms()) t.zero[f.value] = index.at({monoid(cat.source(f), cat.target(f)).unit, f.value});

  for (const auto& [key, u] : index) {
    const auto [x, fv] = key;
    const MorphismId f(fv);
    const auto a = cat.source(f), b = cat.target(f);
    const auto& m = monoid(a, b);
    const auto fx = p.act(a, b, x, f);
    for (int x2 = 0; x2 < m.size(); ++x2) t.vsum[{index.at({x2, fx.value}), u}] = index.at({m.mul(x2, x), fv});
    for (auto c : objs) {
      for (auto g : cat.hom(b, c)) {
        const int gx = p.left ? p.left(g, a, x) : x;
        t.lwhisk[{g.value, u}] = index.at({gx, cat.compose(g, f).value});
      }
      for (auto h : cat.hom(c, a)) {
        const int xh = p.right ? p.right(b, x, h) : x;
        t.rwhisk[{u, h.value}] = index.at({xh, cat.compose(f, h).value});
      }
    }
  }
  return std::make_shared<TableStructure>(cat, std::move(t));
}

// ---------------------------------------------------------------- groups

BuiltStructure grp_conjugation(std::span<const FiniteGroup> groups) {
  auto ext = FiniteCategory::extensional();
  std::vector<ObjectId> objs;
  for (const auto& g : groups) objs.push_back(ext.add_object(g.name, group_carrier(g)));
  std::map<std::pair<int, int>, std::vector<MorphismId>> homs;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) {
      std::vector<Graph> graphs;
      for (auto& h : group_homomorphisms(groups[i], groups[j])) graphs.push_back({h});
      homs[{objs[i].value, objs[j].value}] = intern_all(ext, objs[i], objs[j], graphs, "h");
    }
  auto tab = tabulate(ext, objs, [&](ObjectId a, ObjectId b) { return homs.at({a.value, b.value}); });

  ActionPresentation p;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) p.monoids[{static_cast<int>(i), static_cast<int>(j)}] = groups[j].as_monoid();
  p.left = [&](MorphismId g, ObjectId, int x) { return ext.apply(tab.morphism_origin[g.value], 0, x); };
  p.right = [](ObjectId, int x, MorphismId) { return x; };
  p.act = [&](ObjectId a, ObjectId b, int t, MorphismId f) {
    const auto& gb = groups[b.value];
    Graph g = ext.graph(tab.morphism_origin[f.value]);
    for (int& v : g[0]) v = gb.mul(gb.mul(t, v), gb.inv(t));
    return tab.morphism_index.at(ext.intern(tab.object_origin[a.value], tab.object_origin[b.value], std::move(g)));
  };
  return BuiltStructure{tab.category, from_action(tab.category, p)};
}

// ---------------------------------------------------------------- crossed modules

ExtensionalBuild xmod_derivations(std::span<const CrossedModule> xmods) {
  auto ext = FiniteCategory::extensional();
  std::vector<ObjectId> objs;
  for (const auto& x : xmods) {
    auto r = x.validate();
    if (!r.empty()) throw Error(Errc::invalid_presentation, "crossed module " + x.name + ": " + r.findings()[0].axiom);
    objs.push_back(ext.add_object(x.name, crossed_module_carrier(x)));
  }
  auto lazy = std::make_shared<DerivationStructure>(ext);
  std::map<std::pair<int, int>, std::vector<MorphismId>> homs;
  for (auto a : objs)
    for (auto b : objs) homs[{a.value, b.value}] = xmod_maps(ext, a, b);

  auto cells = [&](ObjectId a, ObjectId b, const std::vector<MorphismId>& hom) {
    const auto& ca = ext.carrier(a);
    const auto& cb = ext.carrier(b);
    const auto bottom = group_on_sort(ca, 1, "mulB", "B");
    std::vector<CellId> out;
    for (auto f : hom) {
      const auto& f0 = ext.graph(f)[1];
      // t(b g) = t(b) · (f0(b) · t(g))
      auto ts = extend_from_generators(bottom, cb.size(0), cb.apply("oneX", {}), [&](int v, int p, int tg) {
        return cb.apply("mulX", {v, cb.apply("act", {f0[p], tg})});
      });
      for (auto& t : ts) {
        auto c = lazy->make(f, t);
        if (!is_xmod_map(ext, a, b, ext.graph(lazy->cod(c))))
          throw Error(Errc::invalid_presentation, "derivation with an invalid codomain on " + ext.morphism_name(f));
        out.push_back(c);
      }
    }
    return out;
  };
  auto table = materialize(*lazy, objs, [&](ObjectId a, ObjectId b) { return homs.at({a.value, b.value}); }, cells);
  return ExtensionalBuild{ext, lazy, objs, std::move(table)};
}

// ---------------------------------------------------------------- chain complexes

std::vector<MorphismId> chain_maps(const FiniteCategory& cat, ObjectId a, ObjectId b) {
  const auto& ca = cat.carrier(a);
  const auto& cb = cat.carrier(b);
  std::array<std::vector<std::vector<int>>, 3> per_degree;
  for (int k = 0; k < 3; ++k) {
    const auto s = std::to_string(k);
    per_degree[k] = group_homomorphisms(group_on_sort(ca, k, "add" + s, "A" + s), group_on_sort(cb, k, "add" + s, "B" + s));
  }
  std::vector<Graph> graphs;
  product_for_each({static_cast<int>(per_degree[0].size()), static_cast<int>(per_degree[1].size()),
                    static_cast<int>(per_degree[2].size())},
                   [&](const std::vector<int>& d) {
                     Graph g{per_degree[0][d[0]], per_degree[1][d[1]], per_degree[2][d[2]]};
                     for (int x = 0; x < ca.size(2); ++x)
                       if (cb.apply("d2", {g[2][x]}) != g[1][ca.apply("d2", {x})]) return;
                     for (int x = 0; x < ca.size(1); ++x)
                       if (cb.apply("d1", {g[1][x]}) != g[0][ca.apply("d1", {x})]) return;
                     graphs.push_back(std::move(g));
                   });
  std::sort(graphs.begin(), graphs.end());
  return intern_all(cat, a, b, graphs, "h");
}

ExtensionalBuild chain_homotopies(std::span<const ChainComplex> complexes) {
  auto ext = FiniteCategory::extensional();
  std::vector<ObjectId> objs;
  for (const auto& c : complexes) {
    auto r = c.validate();
    if (!r.empty()) throw Error(Errc::invalid_presentation, "complex " + c.name + ": " + r.findings()[0].axiom);
    objs.push_back(ext.add_object(c.name, complex_carrier(c)));
  }
  auto lazy = std::make_shared<HomotopyStructure>(ext);
  std::map<std::pair<int, int>, std::vector<MorphismId>> homs;
  for (auto a : objs)
    for (auto b : objs) homs[{a.value, b.value}] = chain_maps(ext, a, b);

  auto cells = [&](ObjectId a, ObjectId b, const std::vector<MorphismId>& hom) {
    const auto& ca = ext.carrier(a);
    const auto& cb = ext.carrier(b);
    auto t2s = group_homomorphisms(group_on_sort(ca, 1, "add1", "A1"), group_on_sort(cb, 2, "add2", "B2"));
    auto t1s = group_homomorphisms(group_on_sort(ca, 0, "add0", "A0"), group_on_sort(cb, 1, "add1", "B1"));
    std::vector<CellId> out;
    for (auto f : hom)
      for (const auto& t2 : t2s)
        for (const auto& t1 : t1s) out.push_back(lazy->make_homotopy(f, HomotopyData{t2, t1}));
    return out;
  };
  auto table = materialize(*lazy, objs, [&](ObjectId a, ObjectId b) { return homs.at({a.value, b.value}); }, cells);
  return ExtensionalBuild{ext, lazy, objs, std::move(table)};
}

// ---------------------------------------------------------------- internal categories

std::vector<MorphismId> internal_functors(const FiniteCategory& cat, ObjectId a, ObjectId b) {
  const auto& ca = cat.carrier(a);
  const auto& cb = cat.carrier(b);
  const int na0 = ca.size(0), na1 = ca.size(1), nb1 = cb.size(1);
  std::vector<Graph> graphs;
  for (const auto& f0 : all_functions(na0, cb.size(0))) {
    // candidate images of each arrow respecting d and c
    std::vector<std::vector<int>> options(na1);
    bool empty = false;
    for (int x = 0; x < na1 && !empty; ++x) {
      for (int y = 0; y < nb1; ++y)
        if (cb.apply("d", {y}) == f0[ca.apply("d", {x})] && cb.apply("c", {y}) == f0[ca.apply("c", {x})])
          options[x].push_back(y);
      empty = options[x].empty();
    }
    if (empty) continue;
    std::vector<int> radix;
    for (auto& o : options) radix.push_back(static_cast<int>(o.size()));
    auto visit = [&](const std::vector<int>& d) {
      std::vector<int> f1(na1);
      for (int x = 0; x < na1; ++x) f1[x] = options[x][d[x]];
      Graph g{f0, f1};
      if (is_functor_graph(ca, cb, g)) graphs.push_back(std::move(g));
    };
    if (na1 == 0)
      visit({});
    else
      product_for_each(radix, visit);
  }
  std::sort(graphs.begin(), graphs.end());
  return intern_all(cat, a, b, graphs, "F");
}

namespace {

std::vector<CellId> transformations(const FiniteCategory& ext, const InternalTransformationStructure& h, ObjectId a,
                                    ObjectId b, const std::vector<MorphismId>& hom) {
  const auto& ca = ext.carrier(a);
  const auto& cb = ext.carrier(b);
  std::vector<CellId> out;
  for (auto k : hom)
    for (auto hh : hom) {
      const auto& k0 = ext.graph(k)[0];
      const auto& h0 = ext.graph(hh)[0];
      std::vector<std::vector<int>> options(ca.size(0));
      bool empty = false;
      for (int x = 0; x < ca.size(0) && !empty; ++x) {
        for (int y = 0; y < cb.size(1); ++y)
          if (cb.apply("d", {y}) == h0[x] && cb.apply("c", {y}) == k0[x]) options[x].push_back(y);
        empty = options[x].empty();
      }
      if (empty) continue;
      std::vector<int> radix;
      for (auto& o : options) radix.push_back(static_cast<int>(o.size()));
      auto visit = [&](const std::vector<int>& d) {
        std::vector<int> t(options.size());
        for (std::size_t x = 0; x < t.size(); ++x) t[x] = options[x][d[x]];
        out.push_back(h.make(k, std::move(t), hh));
      };
      if (options.empty())
        visit({});
      else
        product_for_each(radix, visit);
    }
  return out;
}

}  // namespace

InternalBuild internal_transformations(std::span<const InternalCategory> cats) {
  auto ext = FiniteCategory::extensional();
  InternalBuild out{ext, nullptr, {}, {}, {}};
  for (const auto& c : cats) {
    auto r = c.validate();
    if (!r.empty())
      throw Error(Errc::invalid_presentation, "internal category " + c.name + ": " + r.findings()[0].axiom);
    out.objects.push_back(ext.add_object(c.name, internal_category_carrier(c)));
  }
  for (const auto& c : cats) out.arrow_objects.push_back(ext.add_object("arr[" + c.name + "]", arrow_carrier(c)));
  auto lazy = std::make_shared<InternalTransformationStructure>(ext);
  out.lazy = lazy;

  std::vector<ObjectId> all = out.objects;
  all.insert(all.end(), out.arrow_objects.begin(), out.arrow_objects.end());
  std::map<std::pair<int, int>, std::vector<MorphismId>> homs;
  for (auto a : all)
    for (auto b : all) homs[{a.value, b.value}] = internal_functors(ext, a, b);
  out.table = materialize(
      *lazy, all, [&](ObjectId a, ObjectId b) { return homs.at({a.value, b.value}); },
      [&](ObjectId a, ObjectId b, const std::vector<MorphismId>& hom) { return transformations(ext, *lazy, a, b, hom); });
  return out;
}

CellId arrow_cell(const InternalBuild& build, ObjectId a) {
  auto it = std::find(build.objects.begin(), build.objects.end(), a);
  if (it == build.objects.end())
    throw Error(Errc::unknown_object, "no internal category registered as object " + std::to_string(a.value));
  const auto arr = build.arrow_objects[it - build.objects.begin()];
  const auto& ext = build.extensional;
  const auto& ca = ext.carrier(a);
  const int n = ca.size(1);
  std::vector<int> d(n), c(n), ed(n), ec(n), ident(n);
  for (int x = 0; x < n; ++x) {
    d[x] = ca.apply("d", {x});
    c[x] = ca.apply("c", {x});
    ed[x] = ca.apply("e", {d[x]});
    ec[x] = ca.apply("e", {c[x]});
    ident[x] = x;
  }
  auto dom_functor = ext.intern(arr, a, Graph{d, ed});
  auto cod_functor = ext.intern(arr, a, Graph{c, ec});
  return build.lazy->make(cod_functor, ident, dom_functor);
}

bool is_internal_natural(const InternalTransformationStructure& h, CellId t) {
  const auto& base = h.base();
  const auto& ca = base.carrier(h.source(t));
  const auto& cb = base.carrier(h.target(t));
  const auto comp = h.component(t);
  const auto& k1 = base.graph(h.cod(t))[1];
  const auto& h1 = base.graph(h.dom(t))[1];
  for (int a = 0; a < ca.size(1); ++a) {
    const int lhs = cb.apply("m", {k1[a], comp[ca.apply("d", {a})]});
    const int rhs = cb.apply("m", {comp[ca.apply("c", {a})], h1[a]});
    if (lhs != rhs) return false;
  }
  return true;
}

// ---------------------------------------------------------------- one object

BuiltStructure one_object(const FiniteMonoid& m, const FiniteGroup& cells, const OneObjectAction& action) {
  auto report = m.validate();
  if (!report.empty()) throw Error(Errc::invalid_presentation, "monoid " + m.name + ": " + report.findings()[0].axiom);
  CategoryTables t;
  t.objects = {"o"};
  for (const auto& e : m.elements) t.morphisms.push_back(MorphismDecl{e, 0, 0});
  t.identities = {m.unit};
  t.reset_composition();
  for (int g = 0; g < m.size(); ++g)
    for (int f = 0; f < m.size(); ++f) t.set_composite(g, f, m.mul(g, f));
  auto cat = FiniteCategory::from_tables(std::move(t));

  ActionPresentation p;
  p.monoids[{0, 0}] = cells.as_monoid();
  p.left = [&](MorphismId g, ObjectId, int x) { return action.left ? action.left(g.value, x) : x; };
  p.right = [&](ObjectId, int x, MorphismId f) { return action.right ? action.right(x, f.value) : x; };
  p.act = [&](ObjectId, ObjectId, int x, MorphismId f) {
    return action.act ? MorphismId(action.act(x, f.value)) : f;
  };
  return BuiltStructure{cat, from_action(cat, p)};
}

}  // namespace sesq
