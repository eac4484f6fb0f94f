// Name resolution and derive directives for parsed .sesq documents.
#include <charconv>
#include <set>

#include "sesq/constructions.hpp"
#include "sesq/error.hpp"
#include "sesq/specio.hpp"

namespace sesq {

namespace {

struct Abort {};

using NameIndex = std::map<std::string, int>;

class Loader {
 public:
  explicit Loader(std::vector<Diagnostic>& diags) : diags_(diags) {}

  std::optional<LoadedSpec> run(const SpecDocument& doc) {
    const Block* category = nullptr;
    const Block* cells = nullptr;
    const Block* derive = nullptr;
    const Block* pseudocat = nullptr;
    auto single = [&](const Block*& slot, const Block& b) {
      if (slot) error(b.span, "second " + b.kind + (b.kind == "derive" ? " directive" : " block"));
      else slot = &b;
    };
    for (const auto& b : doc.blocks) {
      try {
        if (b.kind == "group") load_group(b);
        else if (b.kind == "monoid") load_monoid(b);
        else if (b.kind == "xmod") load_xmod(b);
        else if (b.kind == "complex") load_complex(b);
        else if (b.kind == "intcat") load_intcat(b);
        else if (b.kind == "chainmap") load_chainmap(b);
        else if (b.kind == "homotopy") load_homotopy(b);
        else if (b.kind == "category") single(category, b);
        else if (b.kind == "cells") single(cells, b);
        else if (b.kind == "derive") single(derive, b);
        else if (b.kind == "pseudocat") single(pseudocat, b);
      } catch (Abort&) {
      }
    }
    if (!diags_.empty()) return std::nullopt;
    try {
      if (category) load_category(*category);
      if (cells) {
        if (!category) error(cells->span, "cells block needs a category block");
        if (derive) error(derive->span, "derive directive conflicts with the explicit cells block");
        load_cells(*cells);
      }
      if (derive) run_derive(*derive, category != nullptr);
      if (pseudocat) load_pseudocat(*pseudocat);
    } catch (Abort&) {
    }
    if (!diags_.empty()) return std::nullopt;
    return std::move(spec_);
  }

 private:
  [[noreturn]] void fail(const Span& s, const std::string& msg) {
    error(s, msg);
    throw Abort{};
  }
  void error(const Span& s, const std::string& msg) {
    diags_.push_back(Diagnostic{"ResolveError", "ResolveError", s, msg});
  }

  static Span arg_span(const Decl& d, std::size_t i) { return i < d.arg_spans.size() ? d.arg_spans[i] : d.span; }

  int find(const NameIndex& idx, const Decl& d, std::size_t i, const std::string& what) {
    auto it = idx.find(d.args[i]);
    if (it == idx.end()) fail(arg_span(d, i), "unknown " + what + " '" + d.args[i] + "'");
    return it->second;
  }

  void declare(NameIndex& idx, const Decl& d, const std::string& what) {
    if (!idx.emplace(d.args[0], static_cast<int>(idx.size())).second)
      fail(arg_span(d, 0), "duplicate " + what + " '" + d.args[0] + "'");
  }

  template <class Map>
  void fresh(const Map& m, const Block& b) {
    if (m.count(b.name)) fail(b.span, "duplicate " + b.kind + " '" + b.name + "'");
  }

  int degree(const Decl& d, int lo, int hi) {
    int v = -1;
    const auto& s = d.args[0];
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < lo || v > hi)
      fail(arg_span(d, 0), "degree must be between " + std::to_string(lo) + " and " + std::to_string(hi));
    return v;
  }

  static NameIndex index_of(const std::vector<std::string>& names) {
    NameIndex idx;
    for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], static_cast<int>(i));
    return idx;
  }

  void set_entry(std::vector<int>& table, std::size_t at, int value, const Decl& d) {
    if (table[at] >= 0) fail(d.span, "duplicate '" + d.keyword + "' entry");
    table[at] = value;
  }

  // elements and a complete multiplication table
  std::pair<std::vector<std::string>, std::vector<int>> mul_table(const Block& b) {
    NameIndex idx;
    std::vector<std::string> elems;
    for (const auto& d : b.decls)
      if (d.keyword == "elem") {
        declare(idx, d, "element");
        elems.push_back(d.args[0]);
      }
    if (elems.empty()) fail(b.span, b.kind + " " + b.name + " has no elements");
    const auto n = elems.size();
    std::vector<int> table(n * n, -1);
    for (const auto& d : b.decls)
      if (d.keyword == "mul") {
        const int x = find(idx, d, 0, "element"), y = find(idx, d, 1, "element"), z = find(idx, d, 2, "element");
        set_entry(table, x * n + y, z, d);
      }
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i] < 0) fail(b.span, b.kind + " " + b.name + ": no entry for " + elems[i / n] + " * " + elems[i % n]);
    return {elems, table};
  }

  void load_group(const Block& b) {
    fresh(pres().groups, b);
    auto [elems, table] = mul_table(b);
    try {
      pres().groups.emplace(b.name, FiniteGroup::from_table(b.name, elems, table));
    } catch (const Error& e) {
      fail(b.span, e.what());
    }
  }

  void load_monoid(const Block& b) {
    fresh(pres().monoids, b);
    auto [elems, table] = mul_table(b);
    const int n = static_cast<int>(elems.size());
    int unit = -1;
    for (int u = 0; u < n && unit < 0; ++u) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = table[u * n + x] == x && table[x * n + u] == x;
      if (ok) unit = u;
    }
    if (unit < 0) fail(b.span, "monoid " + b.name + " has no unit");
    FiniteMonoid m{b.name, elems, table, unit};
    auto r = m.validate();
    if (!r.empty()) fail(b.span, "monoid " + b.name + ": " + r.findings()[0].axiom);
    pres().monoids.emplace(b.name, std::move(m));
  }

  const FiniteGroup& group(const Decl& d, std::size_t i) {
    auto it = pres().groups.find(d.args[i]);
    if (it == pres().groups.end()) fail(arg_span(d, i), "unknown group '" + d.args[i] + "'");
    return it->second;
  }

  void load_xmod(const Block& b) {
    fresh(pres().xmods, b);
    const FiniteGroup* top = nullptr;
    const FiniteGroup* bottom = nullptr;
    for (const auto& d : b.decls) {
      if (d.keyword == "top") {
        if (top) fail(d.span, "second 'top' declaration");
        top = &group(d, 0);
      }
      if (d.keyword == "bottom") {
        if (bottom) fail(d.span, "second 'bottom' declaration");
        bottom = &group(d, 0);
      }
    }
    if (!top || !bottom) fail(b.span, "xmod " + b.name + " needs both 'top' and 'bottom'");
    CrossedModule x{b.name, *top, *bottom, std::vector<int>(top->size(), -1),
                    std::vector<int>(static_cast<std::size_t>(top->size()) * bottom->size(), -1)};
    const auto ti = index_of(top->elements), bi = index_of(bottom->elements);
    for (const auto& d : b.decls) {
      if (d.keyword == "diff") set_entry(x.boundary, find(ti, d, 0, "element of " + top->name), find(bi, d, 1, "element of " + bottom->name), d);
      if (d.keyword == "act") {
        const int s = find(bi, d, 0, "element of " + bottom->name), e = find(ti, d, 1, "element of " + top->name);
        set_entry(x.action, static_cast<std::size_t>(s) * top->size() + e, find(ti, d, 2, "element of " + top->name), d);
      }
    }
    for (int e = 0; e < top->size(); ++e)
      if (x.boundary[e] < 0) fail(b.span, "xmod " + b.name + ": no 'diff' entry for " + top->elements[e]);
    for (std::size_t i = 0; i < x.action.size(); ++i)
      if (x.action[i] < 0)
        fail(b.span, "xmod " + b.name + ": no 'act' entry for " + bottom->elements[i / top->size()] + " . " +
                         top->elements[i % top->size()]);
    pres().xmods.emplace(b.name, std::move(x));
  }

  void load_complex(const Block& b) {
    fresh(pres().complexes, b);
    ChainComplex c;
    c.name = b.name;
    bool have[3] = {false, false, false};
    for (const auto& d : b.decls)
      if (d.keyword == "degree") {
        const int k = degree(d, 0, 2);
        if (have[k]) fail(d.span, "degree " + std::to_string(k) + " declared twice");
        have[k] = true;
        c.groups[k] = group(d, 1);
      }
    for (int k = 0; k < 3; ++k)
      if (!have[k]) fail(b.span, "complex " + b.name + " has no degree " + std::to_string(k));
    c.d2.assign(c.groups[2].size(), -1);
    c.d1.assign(c.groups[1].size(), -1);
    for (const auto& d : b.decls)
      if (d.keyword == "diff") {
        const int k = degree(d, 1, 2);
        auto& map = k == 2 ? c.d2 : c.d1;
        set_entry(map, find(index_of(c.groups[k].elements), d, 1, "element of degree " + std::to_string(k)),
                  find(index_of(c.groups[k - 1].elements), d, 2, "element of degree " + std::to_string(k - 1)), d);
      }
    for (int k = 1; k < 3; ++k) {
      const auto& map = k == 2 ? c.d2 : c.d1;
      for (std::size_t x = 0; x < map.size(); ++x)
        if (map[x] < 0)
          fail(b.span, "complex " + b.name + ": no 'diff " + std::to_string(k) + "' entry for " + c.groups[k].elements[x]);
    }
    pres().complexes.emplace(b.name, std::move(c));
  }

  void load_intcat(const Block& b) {
    fresh(pres().intcats, b);
    InternalCategory c;
    c.name = b.name;
    NameIndex objs, arrows;
    for (const auto& d : b.decls)
      if (d.keyword == "object") {
        declare(objs, d, "object");
        c.objects.push_back(d.args[0]);
      }
    for (const auto& d : b.decls)
      if (d.keyword == "arrow") {
        declare(arrows, d, "arrow");
        c.arrows.push_back(d.args[0]);
        c.dom.push_back(find(objs, d, 1, "object"));
        c.cod.push_back(find(objs, d, 2, "object"));
      }
    const auto n = c.arrows.size();
    c.unit.assign(c.objects.size(), -1);
    c.comp.assign(n * n, -1);
    for (const auto& d : b.decls) {
      if (d.keyword == "unit") {
        const int o = find(objs, d, 0, "object"), a = find(arrows, d, 1, "arrow");
        if (c.dom[a] != o || c.cod[a] != o) fail(d.span, "unit " + d.args[1] + " is not an endo-arrow of " + d.args[0]);
        set_entry(c.unit, o, a, d);
      }
      if (d.keyword == "mul") {
        const int f = find(arrows, d, 0, "arrow"), g = find(arrows, d, 1, "arrow"), h = find(arrows, d, 2, "arrow");
        if (c.dom[f] != c.cod[g]) fail(d.span, "typing clash: " + d.args[0] + " * " + d.args[1] + " is not composable");
        if (c.dom[h] != c.dom[g] || c.cod[h] != c.cod[f])
          fail(arg_span(d, 2), "typing clash: " + d.args[2] + " does not go from dom " + d.args[1] + " to cod " + d.args[0]);
        set_entry(c.comp, f * n + g, h, d);
      }
    }
    for (std::size_t o = 0; o < c.objects.size(); ++o)
      if (c.unit[o] < 0) fail(b.span, "intcat " + b.name + ": no unit for " + c.objects[o]);
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g)
        if (c.dom[f] == c.cod[g] && c.comp[f * n + g] < 0)
          fail(b.span, "intcat " + b.name + ": no 'mul' entry for " + c.arrows[f] + " * " + c.arrows[g]);
    pres().intcats.emplace(b.name, std::move(c));
  }

  const ChainComplex& complex(const std::string& name, const Span& s) {
    auto it = pres().complexes.find(name);
    if (it == pres().complexes.end()) fail(s, "unknown complex '" + name + "'");
    return it->second;
  }

  // map k x = y with x in source degree k - shift and y in target degree k
  std::array<std::vector<int>, 3> degree_maps(const Block& b, int shift) {
    const auto& src = complex(b.header[0], b.span);
    const auto& dst = complex(b.header[1], b.span);
    std::array<std::vector<int>, 3> maps;
    for (int k = shift; k < 3; ++k) maps[k].assign(src.groups[k - shift].size(), -1);
    for (const auto& d : b.decls) {
      const int k = degree(d, shift, 2);
      set_entry(maps[k], find(index_of(src.groups[k - shift].elements), d, 1, "source element"),
                find(index_of(dst.groups[k].elements), d, 2, "target element"), d);
    }
    for (int k = shift; k < 3; ++k)
      for (std::size_t x = 0; x < maps[k].size(); ++x)
        if (maps[k][x] < 0)
          fail(b.span, b.kind + " " + b.name + ": no 'map " + std::to_string(k) + "' entry for " +
                           src.groups[k - shift].elements[x]);
    return maps;
  }

  void load_chainmap(const Block& b) {
    fresh(pres().chainmaps, b);
    pres().chainmaps.emplace(b.name, NamedChainMap{b.header[0], b.header[1], ChainMapData{degree_maps(b, 0)}});
  }

  void load_homotopy(const Block& b) {
    fresh(pres().homotopies, b);
    auto maps = degree_maps(b, 1);
    pres().homotopies.emplace(b.name, NamedHomotopy{b.header[0], b.header[1], HomotopyData{maps[2], maps[1]}});
  }

  // ------------------------------------------------------------ category and cells

  void load_category(const Block& b) {
    CategoryTables t;
    for (const auto& d : b.decls)
      if (d.keyword == "object") {
        declare(objects_, d, "object");
        t.objects.push_back(d.args[0]);
      }
    for (const auto& d : b.decls)
      if (d.keyword == "morphism") {
        declare(morphisms_, d, "morphism");
        t.morphisms.push_back(MorphismDecl{d.args[0], find(objects_, d, 1, "object"), find(objects_, d, 2, "object")});
      }
    t.identities.assign(t.objects.size(), -1);
    t.reset_composition();
    auto mname = [&](int m) { return t.morphisms[m].name; };
    for (const auto& d : b.decls) {
      if (d.keyword == "id") {
        const int a = find(objects_, d, 0, "object"), f = find(morphisms_, d, 1, "morphism");
        if (t.morphisms[f].source != a || t.morphisms[f].target != a)
          fail(d.span, "typing clash: " + d.args[1] + " is not an endomorphism of " + d.args[0]);
        set_entry(t.identities, a, f, d);
      }
      if (d.keyword == "compose") {
        const int g = find(morphisms_, d, 0, "morphism"), f = find(morphisms_, d, 1, "morphism"),
                  h = find(morphisms_, d, 2, "morphism");
        if (t.morphisms[f].target != t.morphisms[g].source)
          fail(d.span, "typing clash: " + mname(g) + " . " + mname(f) + " is not composable (" + mname(f) + " ends at " +
                           t.objects[t.morphisms[f].target] + ", " + mname(g) + " starts at " +
                           t.objects[t.morphisms[g].source] + ")");
        if (t.morphisms[h].source != t.morphisms[f].source || t.morphisms[h].target != t.morphisms[g].target)
          fail(arg_span(d, 2), "typing clash: " + mname(h) + " is not parallel to " + mname(g) + " . " + mname(f));
        if (t.composite(g, f) >= 0) fail(d.span, "duplicate 'compose' entry");
        t.set_composite(g, f, h);
      }
    }
    spec_.category = FiniteCategory::from_tables(std::move(t));
  }

  void load_cells(const Block& b) {
    const auto& ct = spec_.category->tables();
    CellTables t;
    NameIndex cells;
    auto src = [&](int m) { return ct.morphisms[m].source; };
    auto tgt = [&](int m) { return ct.morphisms[m].target; };
    for (const auto& d : b.decls)
      if (d.keyword == "cell") {
        declare(cells, d, "cell");
        const int f = find(morphisms_, d, 1, "morphism"), g = find(morphisms_, d, 2, "morphism");
        if (src(f) != src(g) || tgt(f) != tgt(g))
          fail(d.span, "typing clash: " + d.args[1] + " and " + d.args[2] + " are not parallel");
        t.cells.push_back(CellDecl{d.args[0], f, g});
      }
    t.zero.assign(ct.morphisms.size(), -1);
    auto cell_src = [&](int c) { return src(t.cells[c].dom); };
    auto cell_tgt = [&](int c) { return tgt(t.cells[c].dom); };
    auto put = [&](std::map<std::pair<int, int>, int>& m, int x, int y, int w, const Decl& d) {
      if (!m.emplace(std::pair{x, y}, w).second) fail(d.span, "duplicate '" + d.keyword + "' entry");
    };
    for (const auto& d : b.decls) {
      if (d.keyword == "zero") {
        const int f = find(morphisms_, d, 0, "morphism"), z = find(cells, d, 1, "cell");
        set_entry(t.zero, f, z, d);
      } else if (d.keyword == "plus") {
        const int v = find(cells, d, 0, "cell"), u = find(cells, d, 1, "cell"), w = find(cells, d, 2, "cell");
        if (t.cells[v].dom != t.cells[u].cod)
          fail(d.span, "typing clash in plus " + d.args[0] + " + " + d.args[1] + ": dom(" + d.args[0] +
                           ") = " + ct.morphisms[t.cells[v].dom].name + " but cod(" + d.args[1] +
                           ") = " + ct.morphisms[t.cells[u].cod].name);
        put(t.vsum, v, u, w, d);
      } else if (d.keyword == "lwhisk") {
        const int g = find(morphisms_, d, 0, "morphism"), u = find(cells, d, 1, "cell"), w = find(cells, d, 2, "cell");
        if (src(g) != cell_tgt(u))
          fail(d.span, "typing clash in lwhisk: " + d.args[0] + " starts at " + ct.objects[src(g)] + " but " +
                           d.args[1] + " ends at " + ct.objects[cell_tgt(u)]);
        put(t.lwhisk, g, u, w, d);
      } else if (d.keyword == "rwhisk") {
        const int u = find(cells, d, 0, "cell"), h = find(morphisms_, d, 1, "morphism"), w = find(cells, d, 2, "cell");
        if (tgt(h) != cell_src(u))
          fail(d.span, "typing clash in rwhisk: " + d.args[1] + " ends at " + ct.objects[tgt(h)] + " but " +
                           d.args[0] + " starts at " + ct.objects[cell_src(u)]);
        put(t.rwhisk, u, h, w, d);
      }
    }
    spec_.structure = std::make_shared<TableStructure>(*spec_.category, std::move(t));
  }

  // ------------------------------------------------------------ derive

  struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> named;
  };

  template <class T>
  std::vector<T> lookup_all(const std::map<std::string, T>& m, const std::vector<std::string>& names,
                            const std::string& what, const Block& b) {
    std::vector<T> out;
    for (const auto& n : names) {
      auto it = m.find(n);
      if (it == m.end()) fail(b.span, "unknown " + what + " '" + n + "'");
      out.push_back(it->second);
    }
    if (out.empty()) fail(b.span, "derive " + b.name + " needs at least one " + what);
    return out;
  }

  void use_table(FiniteCategory cat, std::shared_ptr<const TwoCellStructure> h) {
    spec_.category = std::move(cat);
    spec_.structure = std::move(h);
  }

  void run_derive(const Block& b, bool have_category) {
    Args args;
    for (const auto& a : b.header) {
      auto eq = a.find('=');
      if (eq == std::string::npos) args.positional.push_back(a);
      else args.named[a.substr(0, eq)] = a.substr(eq + 1);
    }
    auto named = [&](const std::string& key) {
      auto it = args.named.find(key);
      if (it == args.named.end()) fail(b.span, "derive " + b.name + " needs " + key + "=...");
      return it->second;
    };
    const bool on_category = b.name == "discrete" || b.name == "codiscrete";
    if (on_category && !have_category) fail(b.span, "derive " + b.name + " needs a category block");
    if (!on_category && have_category) fail(b.span, "derive " + b.name + " builds its own category; drop the category block");
    spec_.builder = b.name;
    try {
      if (b.name == "discrete") {
        spec_.structure = discrete(*spec_.category);
      } else if (b.name == "codiscrete") {
        spec_.structure = codiscrete(*spec_.category);
      } else if (b.name == "conjugation") {
        auto groups = lookup_all(pres().groups, args.positional, "group", b);
        auto built = grp_conjugation(groups);
        use_table(built.category, built.structure);
      } else if (b.name == "derivations") {
        auto built = xmod_derivations(lookup_all(pres().xmods, args.positional, "xmod", b));
        use_table(built.table.category, built.table.structure);
      } else if (b.name == "homotopies") {
        auto built = chain_homotopies(lookup_all(pres().complexes, args.positional, "complex", b));
        use_table(built.table.category, built.table.structure);
      } else if (b.name == "internal") {
        auto built = internal_transformations(lookup_all(pres().intcats, args.positional, "intcat", b));
        use_table(built.table.category, built.table.structure);
      } else if (b.name == "one-object") {
        if (args.positional.size() != 2) fail(b.span, "derive one-object needs a monoid and a group");
        FiniteMonoid m;
        if (auto it = pres().monoids.find(args.positional[0]); it != pres().monoids.end()) m = it->second;
        else if (auto g = pres().groups.find(args.positional[0]); g != pres().groups.end()) m = g->second.as_monoid();
        else fail(b.span, "unknown monoid '" + args.positional[0] + "'");
        auto cells = lookup_all(pres().groups, {args.positional[1]}, "group", b);
        auto built = one_object(m, cells[0]);
        use_table(built.category, built.structure);
      } else if (b.name == "group-pseudocat") {
        if (args.positional.size() != 1) fail(b.span, "derive group-pseudocat needs one xmod");
        const auto xm = lookup_all(pres().xmods, args.positional, "xmod", b)[0];
        const auto label = named("delta");
        auto delta = xm.top.find(label);
        if (!delta) fail(b.span, "delta '" + label + "' is not an element of " + xm.top.name);
        auto built = build_group_pseudocategory(xm, *delta);
        use_table(built.category, built.structure);
        spec_.pseudocat = built.data;
      } else if (b.name == "additive-pseudocat") {
        if (args.positional.size() != 2) fail(b.span, "derive additive-pseudocat needs complexes A and B");
        const auto& A = complex(args.positional[0], b.span);
        const auto& B = complex(args.positional[1], b.span);
        auto map_of = [&](const std::string& key, const std::string& s, const std::string& t) {
          auto name = named(key);
          auto it = pres().chainmaps.find(name);
          if (it == pres().chainmaps.end()) fail(b.span, "unknown chainmap '" + name + "'");
          if (it->second.source != s || it->second.target != t)
            fail(b.span, "chainmap " + name + " must go " + s + " -> " + t);
          return it->second.data;
        };
        auto homotopy_of = [&](const std::string& key, const std::string& s, const std::string& t) {
          auto name = named(key);
          auto it = pres().homotopies.find(name);
          if (it == pres().homotopies.end()) fail(b.span, "unknown homotopy '" + name + "'");
          if (it->second.source != s || it->second.target != t)
            fail(b.span, "homotopy " + name + " must go " + s + " -> " + t);
          return it->second.data;
        };
        const auto& a = args.positional[0];
        const auto& bn = args.positional[1];
        auto h = map_of("map", a, bn);
        auto lambda = homotopy_of("lambda", a, a);
        auto rho = homotopy_of("rho", a, a);
        auto eta = homotopy_of("eta", bn, a);
        auto built = build_additive_pseudocategory(A, B, h, lambda, rho, eta);
        use_table(built.category, built.structure);
        spec_.pseudocat = built.data;
      } else {
        fail(b.span, "unknown builder '" + b.name +
                         "'; expected discrete, codiscrete, conjugation, derivations, homotopies, internal, one-object, "
                         "group-pseudocat or additive-pseudocat");
      }
    } catch (const Error& e) {
      const std::string code(to_string(e.code()));
      std::string msg = e.what();
      if (msg.rfind(code + ": ", 0) == 0) msg.erase(0, code.size() + 2);
      diags_.push_back(Diagnostic{"BuildError", code, b.span, msg});
      throw Abort{};
    } catch (const std::exception& e) {
      diags_.push_back(Diagnostic{"BuildError", "InvalidPresentation", b.span, e.what()});
      throw Abort{};
    }
  }

  // ------------------------------------------------------------ pseudocat

  void load_pseudocat(const Block& b) {
    if (spec_.pseudocat) fail(b.span, "pseudocat block conflicts with derive " + spec_.builder);
    if (!spec_.category || !spec_.structure) fail(b.span, "pseudocat block needs a category and a 2-cell structure");
    std::map<std::string, const Decl*> fields;
    for (const auto& d : b.decls)
      if (!fields.emplace(d.keyword, &d).second) fail(d.span, "duplicate field '" + d.keyword + "'");
    for (const char* k : {"C0", "C1", "d", "c", "e", "m", "C2", "C3", "alpha", "lambda", "rho"})
      if (!fields.count(k)) fail(b.span, std::string("pseudocat block is missing field ") + k);
    const auto& cat = *spec_.category;
    auto obj = [&](const char* k, std::size_t i = 0) {
      const Decl& d = *fields[k];
      auto o = cat.find_object(d.args[i]);
      if (!o) fail(arg_span(d, i), "unknown object '" + d.args[i] + "'");
      return *o;
    };
    auto mor = [&](const char* k, std::size_t i = 0) {
      const Decl& d = *fields[k];
      auto m = cat.find_morphism(d.args[i]);
      if (!m) fail(arg_span(d, i), "unknown morphism '" + d.args[i] + "'");
      return *m;
    };
    auto cell = [&](const char* k) {
      const Decl& d = *fields[k];
      auto c = spec_.structure->find_cell(d.args[0]);
      if (!c) fail(arg_span(d, 0), "unknown cell '" + d.args[0] + "'");
      return *c;
    };
    for (const char* k : {"C2", "C3"})
      if (fields[k]->args.size() != 3) fail(fields[k]->span, std::string(k) + " needs (apex, p1, p2)");
    PseudocategoryData p;
    p.c0 = obj("C0");
    p.c1 = obj("C1");
    p.d = mor("d");
    p.c = mor("c");
    p.e = mor("e");
    p.m = mor("m");
    p.c2 = PullbackSquare{obj("C2", 0), mor("C2", 1), mor("C2", 2), p.d, p.c};
    p.c3 = PullbackSquare{obj("C3", 0), mor("C3", 1), mor("C3", 2), p.c2.p2, p.c2.p1};
    p.alpha = cell("alpha");
    p.lambda = cell("lambda");
    p.rho = cell("rho");
    spec_.pseudocat = p;
  }

  Presentations& pres() { return spec_.presentations; }

  std::vector<Diagnostic>& diags_;
  LoadedSpec spec_;
  NameIndex objects_, morphisms_;
};

}  // namespace

LoadResult load(const SpecDocument& doc) {
  LoadResult r;
  Loader l(r.diagnostics);
  r.spec = l.run(doc);
  return r;
}

LoadResult load_text(std::string_view text) {
  auto p = parse(text);
  if (!p.document) return LoadResult{std::nullopt, std::move(p.diagnostics)};
  return load(*p.document);
}

}  // namespace sesq
