#include "sesq/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "sesq/error.hpp"

namespace sesq {

namespace {

std::optional<int> index_of(const std::vector<std::string>& labels, std::string_view label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<int>(it - labels.begin());
}

// Closure of permutation generators; labels are shortest words over `names`.
FiniteGroup permutation_group(std::string name, const std::vector<std::vector<int>>& gens,
                              const std::vector<std::string>& names) {
  const std::size_t deg = gens.front().size();
  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> perms{id};
  std::vector<std::string> labels{"e"};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t k = 0; k < perms.size(); ++k)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<int> p(deg);
      for (std::size_t i = 0; i < deg; ++i) p[i] = perms[k][gens[g][i]];  // perms[k] ∘ gens[g]
      if (index.count(p)) continue;
      index.emplace(p, static_cast<int>(perms.size()));
      perms.push_back(p);
      labels.push_back(k == 0 ? names[g] : labels[k] + names[g]);
    }
  const int n = static_cast<int>(perms.size());
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> p(deg);
      for (std::size_t i = 0; i < deg; ++i) p[i] = perms[a][perms[b][i]];
      table[a * n + b] = index.at(p);
    }
  return FiniteGroup::from_table(std::move(name), std::move(labels), std::move(table));
}

}  // namespace

// ---------------------------------------------------------------- monoids and groups

bool FiniteMonoid::is_commutative() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteMonoid::find(std::string_view label) const { return index_of(elements, label); }

ValidationReport FiniteMonoid::validate() const {
  ValidationReport r;
  const int n = size();
  if (static_cast<int>(table.size()) != n * n) {
    r.add("monoid-table", {name}, "table has the wrong size");
    return r;
  }
  for (int v : table)
    if (v < 0 || v >= n) {
      r.add("monoid-closure", {name}, "table entry out of range");
      return r;
    }
  if (unit < 0 || unit >= n) {
    r.add("monoid-unit", {name}, "unit out of range");
    return r;
  }
  for (int a = 0; a < n; ++a)
    if (mul(unit, a) != a || mul(a, unit) != a) r.add("monoid-unit", {name, elements[a]}, "unit law");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          r.add("monoid-assoc", {name, elements[a], elements[b], elements[c]}, "(ab)c = a(bc)");
  return r;
}

bool FiniteGroup::is_abelian() const { return as_monoid().is_commutative(); }

bool FiniteGroup::is_central(int a) const {
  for (int b = 0; b < size(); ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteGroup::find(std::string_view label) const { return index_of(elements, label); }

std::vector<int> FiniteGroup::generators() const {
  std::vector<int> gens;
  std::vector<bool> in(size(), false);
  in[unit] = true;
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < size(); ++a)
        if (in[a])
          for (int g : gens)
            if (!in[mul(a, g)]) in[mul(a, g)] = grew = true;
    }
  };
  for (int a = 0; a < size(); ++a)
    if (!in[a]) {
      gens.push_back(a);
      close();
    }
  return gens;
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> elements, std::vector<int> table) {
  FiniteMonoid m{name, elements, table, 0};
  const int n = m.size();
  if (n == 0 || static_cast<int>(table.size()) != n * n)
    throw Error(Errc::invalid_presentation, "group " + name + ": table must be n x n with n > 0");
  for (int v : table)
    if (v < 0 || v >= n) throw Error(Errc::invalid_presentation, "group " + name + ": table entry out of range");
  int unit = -1;
  for (int e = 0; e < n && unit < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = m.mul(e, a) == a && m.mul(a, e) == a;
    if (ok) unit = e;
  }
  if (unit < 0) throw Error(Errc::invalid_presentation, "group " + name + ": no unit");
  m.unit = unit;
  if (!m.validate().empty()) throw Error(Errc::invalid_presentation, "group " + name + ": not associative");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.mul(a, b) == unit && m.mul(b, a) == unit) inv[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv[a] < 0) throw Error(Errc::invalid_presentation, "group " + name + ": " + elements[a] + " has no inverse");
  return FiniteGroup{std::move(name), std::move(elements), std::move(table), unit, std::move(inv)};
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::string> el;
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a) {
    el.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  }
  return from_table("Z" + std::to_string(n), el, t);
}

FiniteGroup FiniteGroup::symmetric3() {
  // Transpositions and 3-cycles of {1,2,3}, applied right to left.
  std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels{"e", "s12", "s13", "s23", "r", "rr"};
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> p(3);
      for (int i = 0; i < 3; ++i) p[i] = perms[a][perms[b][i]];
      t[a * 6 + b] = static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  return from_table("S3", labels, t);
}

FiniteGroup FiniteGroup::dihedral4() {
  return permutation_group("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}}, {"r", "s"});
}

FiniteGroup FiniteGroup::quaternion8() {
  // element = 4*sign + unit, units 1, i, j, k
  static const int prod[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<std::string> labels{"1", "i", "j", "k", "m1", "mi", "mj", "mk"};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& p = prod[a % 4][b % 4];
      int sign = (a / 4) ^ (b / 4) ^ p[0];
      t[a * 8 + b] = sign * 4 + p[1];
    }
  return from_table("Q8", labels, t);
}

FiniteGroup FiniteGroup::klein4() {
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
  return from_table("V4", {"00", "01", "10", "11"}, t);
}

std::optional<FiniteGroup> FiniteGroup::named(std::string_view name) {
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  if (name == "V4") return klein4();
  if (name.size() >= 2 && name[0] == 'Z') {
    int n = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') return std::nullopt;
      n = n * 10 + (ch - '0');
      if (n > 64) return std::nullopt;
    }
    if (n >= 1) return cyclic(n);
  }
  return std::nullopt;
}

std::vector<std::vector<int>> extend_from_generators(const FiniteGroup& a, int codomain_size, int unit_value,
                                                     const std::function<int(int, int, int)>& step) {
  const auto gens = a.generators();
  std::vector<std::vector<int>> out;
  std::vector<int> choice(gens.size(), 0);
  const int n = a.size();
  while (true) {
    std::vector<int> val(n, -1);
    val[a.unit] = unit_value;
    std::deque<int> queue{a.unit};
    bool ok = true;
    while (ok && !queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < gens.size() && ok; ++gi) {
        int y = a.mul(x, gens[gi]);
        int v = step(val[x], x, choice[gi]);
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(val);
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == codomain_size) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> group_homomorphisms(const FiniteGroup& a, const FiniteGroup& b) {
  return extend_from_generators(a, b.size(), b.unit, [&](int val, int, int g) { return b.mul(val, g); });
}

// ---------------------------------------------------------------- crossed modules

ValidationReport CrossedModule::validate() const {
  ValidationReport r;
  const int nx = top.size(), nb = bottom.size();
  if (static_cast<int>(boundary.size()) != nx || static_cast<int>(action.size()) != nx * nb) {
    r.add("xmod-shape", {name}, "boundary or action table has the wrong size");
    return r;
  }
  for (int v : boundary)
    if (v < 0 || v >= nb) {
      r.add("xmod-shape", {name}, "boundary value out of range");
      return r;
    }
  for (int v : action)
    if (v < 0 || v >= nx) {
      r.add("xmod-shape", {name}, "action value out of range");
      return r;
    }
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      if (boundary[top.mul(x, y)] != bottom.mul(boundary[x], boundary[y]))
        r.add("xmod-boundary-hom", {name, top.elements[x], top.elements[y]}, "d(xy) = d(x)d(y)");
  for (int x = 0; x < nx; ++x)
    if (act(bottom.unit, x) != x) r.add("xmod-action-unit", {name, top.elements[x]}, "1·x = x");
  for (int b = 0; b < nb; ++b)
    for (int b2 = 0; b2 < nb; ++b2)
      for (int x = 0; x < nx; ++x)
        if (act(bottom.mul(b, b2), x) != act(b, act(b2, x)))
          r.add("xmod-action-compat", {name, bottom.elements[b], bottom.elements[b2], top.elements[x]},
                "(bb')·x = b·(b'·x)");
  for (int b = 0; b < nb; ++b)
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < nx; ++y)
        if (act(b, top.mul(x, y)) != top.mul(act(b, x), act(b, y)))
          r.add("xmod-action-automorphism", {name, bottom.elements[b], top.elements[x], top.elements[y]},
                "b·(xy) = (b·x)(b·y)");
  for (int b = 0; b < nb; ++b)
    for (int x = 0; x < nx; ++x)
      if (boundary[act(b, x)] != bottom.mul(bottom.mul(b, boundary[x]), bottom.inv(b)))
        r.add("xmod-equivariance", {name, bottom.elements[b], top.elements[x]}, "d(b·x) = b d(x) b^-1");
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      if (act(boundary[x], y) != top.mul(top.mul(x, y), top.inv(x)))
        r.add("xmod-peiffer", {name, top.elements[x], top.elements[y]}, "d(x)·y = x y x^-1");
  return r;
}

// ---------------------------------------------------------------- chain complexes

ValidationReport ChainComplex::validate() const {
  ValidationReport r;
  for (int k = 0; k < 3; ++k)
    if (!groups[k].is_abelian()) r.add("complex-abelian", {name, groups[k].name}, "degree groups are abelian");
  if (static_cast<int>(d2.size()) != groups[2].size() || static_cast<int>(d1.size()) != groups[1].size()) {
    r.add("complex-shape", {name}, "differential has the wrong size");
    return r;
  }
  for (int v : d2)
    if (v < 0 || v >= groups[1].size()) {
      r.add("complex-shape", {name}, "d2 value out of range");
      return r;
    }
  for (int v : d1)
    if (v < 0 || v >= groups[0].size()) {
      r.add("complex-shape", {name}, "d1 value out of range");
      return r;
    }
  for (int a = 0; a < groups[2].size(); ++a)
    for (int b = 0; b < groups[2].size(); ++b)
      if (d2[groups[2].mul(a, b)] != groups[1].mul(d2[a], d2[b]))
        r.add("complex-hom", {name, "d2"}, "d2 is additive");
  for (int a = 0; a < groups[1].size(); ++a)
    for (int b = 0; b < groups[1].size(); ++b)
      if (d1[groups[1].mul(a, b)] != groups[0].mul(d1[a], d1[b]))
        r.add("complex-hom", {name, "d1"}, "d1 is additive");
  for (int a = 0; a < groups[2].size(); ++a)
    if (d1[d2[a]] != groups[0].unit) r.add("complex-dd", {name, groups[2].elements[a]}, "d1 d2 = 0");
  return r;
}

ChainComplex ChainComplex::f3() {
  auto z2 = FiniteGroup::cyclic(2);
  return ChainComplex{"F3", {z2, z2, z2}, {0, 1}, {0, 0}};
}

ChainComplex ChainComplex::z4() {
  auto z4 = FiniteGroup::cyclic(4);
  return ChainComplex{"C4", {z4, z4, z4}, {0, 2, 0, 2}, {0, 2, 0, 2}};
}

// ---------------------------------------------------------------- internal categories

ValidationReport InternalCategory::validate() const {
  ValidationReport r;
  const int no = static_cast<int>(objects.size()), na = static_cast<int>(arrows.size());
  if (static_cast<int>(dom.size()) != na || static_cast<int>(cod.size()) != na ||
      static_cast<int>(unit.size()) != no || static_cast<int>(comp.size()) != na * na) {
    r.add("intcat-shape", {name}, "tables have the wrong size");
    return r;
  }
  for (int f = 0; f < na; ++f)
    if (dom[f] < 0 || dom[f] >= no || cod[f] < 0 || cod[f] >= no) {
      r.add("intcat-shape", {name, arrows[f]}, "dom/cod out of range");
      return r;
    }
  for (int x = 0; x < no; ++x) {
    if (unit[x] < 0 || unit[x] >= na) {
      r.add("intcat-shape", {name, objects[x]}, "unit out of range");
      return r;
    }
    if (dom[unit[x]] != x || cod[unit[x]] != x) r.add("intcat-unit-typing", {name, objects[x]}, "de = 1 = ce");
  }
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      int h = compose(f, g);
      bool composable = dom[f] == cod[g];
      if (composable != (h >= 0 && h < na)) {
        r.add("intcat-comp-domain", {name, arrows[f], arrows[g]}, "m defined exactly on composable pairs");
        continue;
      }
      if (composable && (dom[h] != dom[g] || cod[h] != cod[f]))
        r.add("intcat-comp-typing", {name, arrows[f], arrows[g]}, "dm = d pi2, cm = c pi1");
    }
  if (!r.empty()) return r;
  for (int f = 0; f < na; ++f)
    if (compose(unit[cod[f]], f) != f || compose(f, unit[dom[f]]) != f)
      r.add("intcat-unit-law", {name, arrows[f]}, "m(e c f, f) = f = m(f, e d f)");
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      if (dom[f] != cod[g]) continue;
      for (int h = 0; h < na; ++h) {
        if (dom[g] != cod[h]) continue;
        if (compose(compose(f, g), h) != compose(f, compose(g, h)))
          r.add("intcat-assoc", {name, arrows[f], arrows[g], arrows[h]}, "(fg)h = f(gh)");
      }
    }
  return r;
}

InternalCategory InternalCategory::from_group(const FiniteGroup& g) {
  InternalCategory c;
  c.name = "B" + g.name;
  c.objects = {"o"};
  c.arrows = g.elements;
  c.dom.assign(g.size(), 0);
  c.cod.assign(g.size(), 0);
  c.unit = {g.unit};
  c.comp = g.table;
  return c;
}

InternalCategory InternalCategory::arrow_poset() {
  InternalCategory c;
  c.name = "I2";
  c.objects = {"p", "q"};
  c.arrows = {"1p", "1q", "u"};
  c.dom = {0, 1, 0};
  c.cod = {0, 1, 1};
  c.unit = {0, 1};
  c.comp = {0, -1, -1, -1, 1, 2, -1, -1, -1};
  // u∘1p = u
  c.comp[2 * 3 + 0] = 2;
  return c;
}

// ---------------------------------------------------------------- carriers

namespace {

Operation unary(std::string name, int from, int to, std::vector<int> table) {
  return Operation{std::move(name), {from}, to, [t = std::move(table)](std::span<const int> a) {
                     return a[0] < 0 ? -1 : t[a[0]];
                   }};
}

Operation binary(std::string name, int s1, int s2, int to, int width, std::vector<int> table) {
  return Operation{std::move(name), {s1, s2}, to, [t = std::move(table), width](std::span<const int> a) {
                     return a[0] < 0 || a[1] < 0 ? -1 : t[static_cast<std::size_t>(a[0]) * width + a[1]];
                   }};
}

Operation constant(std::string name, int sort, int value) {
  return Operation{std::move(name), {}, sort, [value](std::span<const int>) { return value; }};
}

void add_group_ops(Carrier& c, const FiniteGroup& g, int sort, const std::string& suffix) {
  c.add_operation(binary("mul" + suffix, sort, sort, sort, g.size(), g.table));
  c.add_operation(unary("inv" + suffix, sort, sort, g.inverse));
  c.add_operation(constant("one" + suffix, sort, g.unit));
  c.set_labels(sort, g.elements);
}

}  // namespace

std::shared_ptr<Carrier> group_carrier(const FiniteGroup& g) {
  auto c = std::make_shared<Carrier>(std::vector<int>{g.size()});
  add_group_ops(*c, g, 0, "");
  return c;
}

std::shared_ptr<Carrier> crossed_module_carrier(const CrossedModule& x) {
  auto c = std::make_shared<Carrier>(std::vector<int>{x.top.size(), x.bottom.size()});
  add_group_ops(*c, x.top, 0, "X");
  add_group_ops(*c, x.bottom, 1, "B");
  c->add_operation(unary("bd", 0, 1, x.boundary));
  c->add_operation(binary("act", 1, 0, 0, x.top.size(), x.action));
  return c;
}

std::shared_ptr<Carrier> complex_carrier(const ChainComplex& k) {
  auto c = std::make_shared<Carrier>(std::vector<int>{k.groups[0].size(), k.groups[1].size(), k.groups[2].size()});
  for (int d = 0; d < 3; ++d) {
    const auto& g = k.groups[d];
    const auto s = std::to_string(d);
    c->add_operation(binary("add" + s, d, d, d, g.size(), g.table));
    c->add_operation(unary("neg" + s, d, d, g.inverse));
    c->add_operation(constant("zero" + s, d, g.unit));
    c->set_labels(d, g.elements);
  }
  c->add_operation(unary("d1", 1, 0, k.d1));
  c->add_operation(unary("d2", 2, 1, k.d2));
  return c;
}

std::shared_ptr<Carrier> internal_category_carrier(const InternalCategory& k) {
  const int no = static_cast<int>(k.objects.size()), na = static_cast<int>(k.arrows.size());
  auto c = std::make_shared<Carrier>(std::vector<int>{no, na});
  c->add_operation(unary("d", 1, 0, k.dom));
  c->add_operation(unary("c", 1, 0, k.cod));
  c->add_operation(unary("e", 0, 1, k.unit));
  c->add_operation(binary("m", 1, 1, 1, na, k.comp));
  c->set_labels(0, k.objects);
  c->set_labels(1, k.arrows);
  return c;
}

std::shared_ptr<Carrier> plain_carrier(std::vector<int> sizes) { return std::make_shared<Carrier>(std::move(sizes)); }

}  // namespace sesq
