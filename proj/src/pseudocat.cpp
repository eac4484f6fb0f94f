#include "sesq/pseudocat.hpp"

#include <functional>

#include "sesq/cartesian.hpp"
#include "sesq/error.hpp"
#include "sesq/naturality.hpp"

namespace sesq {

namespace {

MorphismId pair(const FiniteCategory& cat, const PullbackSquare& sq, MorphismId x, MorphismId y) {
  return induced_into_pullback(cat, sq, x, y);
}

// Raised when a sum of cells is ill-typed; carries the two morphisms that
// should have matched.
struct SumMismatch {
  MorphismId later_dom, earlier_cod;
};

// First element on which two parallel morphisms differ, rendered through
// the given coordinates of the source.
std::string disagreement(const FiniteCategory& cat, MorphismId f, MorphismId g,
                         const std::vector<MorphismId>& coords) {
  if (cat.is_table() || cat.source(f) != cat.source(g) || cat.target(f) != cat.target(g)) return {};
  const auto& gf = cat.graph(f);
  const auto& gg = cat.graph(g);
  for (std::size_t s = 0; s < gf.size(); ++s)
    for (std::size_t i = 0; i < gf[s].size(); ++i) {
      if (gf[s][i] == gg[s][i]) continue;
      std::string out = "at (";
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (k) out += ",";
        const auto c = coords[k];
        out += cat.carrier(cat.target(c)).label(static_cast<int>(s), cat.apply(c, static_cast<int>(s), static_cast<int>(i)));
      }
      const auto& tgt = cat.carrier(cat.target(f));
      return out + "): " + tgt.label(static_cast<int>(s), gf[s][i]) + " vs " + tgt.label(static_cast<int>(s), gg[s][i]);
    }
  return {};
}

class Evaluator {
 public:
  Evaluator(const TwoCellStructure& h, const PseudocategoryData& d, const CoherenceOptions& o)
      : h_(h), cat_(h.base()), d_(d), opts_(o) {}

  std::vector<EquationStatus> run() {
    structural();
    try {
      fr_ = build_frame(cat_, d_, opts_.c4);
    } catch (const Error& e) {
      out_.push_back({"frame", false, {}, e.what()});
      return out_;
    }
    z0_ = h_.zero(cat_.identity(d_.c0));
    z1_ = h_.zero(cat_.identity(d_.c1));
    const auto& f = fr_;
    const std::vector<MorphismId> quad{f.F, f.G, f.H, f.K};
    const std::vector<MorphismId> duo{d_.c2.p1, d_.c2.p2};

    equation("pentagon", quad, [&] {
      const auto alpha0 = product_cell(h_, d_.c2, f.triple_first, d_.alpha, z0_, z1_);
      const auto zero_alpha = product_cell(h_, d_.c2, f.triple_last, z1_, z0_, d_.alpha);
      const auto lhs = chain({h_.lwhisk(d_.m, alpha0), h_.rwhisk(d_.alpha, f.mid_m), h_.lwhisk(d_.m, zero_alpha)});
      const auto rhs = chain({h_.rwhisk(d_.alpha, f.left_m), h_.rwhisk(d_.alpha, f.right_m)});
      return std::make_pair(lhs, rhs);
    });
    if (opts_.mode == CoherenceMode::natural) {
      equation("middle-triangle", duo, [&] {
        const auto lhs = chain({h_.lwhisk(d_.m, cross(d_.rho, z1_)), h_.rwhisk(d_.alpha, f.i0)});
        return std::make_pair(lhs, h_.lwhisk(d_.m, cross(z1_, d_.lambda)));
      });
      naturality("natural-alpha", d_.alpha);
      naturality("natural-lambda", d_.lambda);
      naturality("natural-rho", d_.rho);
    } else {
      equation("middle-triangle", duo, [&] {
        const auto rhs = chain({neg(h_.lwhisk(d_.m, cross(d_.rho, z1_))), h_.lwhisk(d_.m, cross(z1_, d_.lambda))});
        return std::make_pair(h_.rwhisk(d_.alpha, f.i0), rhs);
      });
      equation("left-triangle", duo, [&] {
        const auto rhs = chain({neg(h_.lwhisk(d_.m, cross(d_.lambda, z1_))), h_.rwhisk(d_.lambda, d_.m)});
        return std::make_pair(h_.rwhisk(d_.alpha, f.i2), rhs);
      });
      equation("right-triangle", duo, [&] {
        const auto rhs = chain({neg(h_.rwhisk(d_.rho, d_.m)), h_.lwhisk(d_.m, cross(z1_, d_.rho))});
        return std::make_pair(h_.rwhisk(d_.alpha, f.i1), rhs);
      });
      const std::pair<const char*, CellId> unitors[] = {{"lambda", d_.lambda}, {"rho", d_.rho}};
      for (auto [xn, x] : unitors)
        for (auto [zn, z] : unitors) {
          EquationStatus st{std::string("unitor-naturality[") + xn + "," + zn + "]", true, {}, {}};
          try {
            st.holds = natural_wrt(h_, x, z);
            if (!st.holds) {
              st.witnesses = {h_.cell_name(x), h_.cell_name(z)};
              st.detail = std::string(xn) + " is not natural with respect to " + zn;
            }
          } catch (const Error& e) {
            st.holds = false;
            st.detail = e.what();
          }
          out_.push_back(std::move(st));
        }
    }
    return out_;
  }

 private:
  void expect(const std::string& name, bool ok, std::vector<std::string> w, const std::string& detail) {
    out_.push_back({"structure:" + name, ok, ok ? std::vector<std::string>{} : std::move(w), ok ? "" : detail});
  }

  void structural() {
    auto name = [&](MorphismId f) { return cat_.morphism_name(f); };
    auto guard = [&](const std::string& what, const std::function<void()>& fn) {
      try {
        fn();
      } catch (const Error& e) {
        expect(what, false, {}, e.what());
      }
    };
    const auto one0 = cat_.identity(d_.c0), one1 = cat_.identity(d_.c1);
    const auto p1 = d_.c2.p1, p2 = d_.c2.p2;
    guard("reflexive-graph", [&] {
      expect("unit-domain", cat_.compose(d_.d, d_.e) == one0, {name(d_.d), name(d_.e)}, "de differs from 1");
      expect("unit-codomain", cat_.compose(d_.c, d_.e) == one0, {name(d_.c), name(d_.e)}, "ce differs from 1");
      expect("composite-domain", cat_.compose(d_.d, d_.m) == cat_.compose(d_.d, p2), {name(d_.m)}, "dm differs from d p2");
      expect("composite-codomain", cat_.compose(d_.c, d_.m) == cat_.compose(d_.c, p1), {name(d_.m)},
             "cm differs from c p1");
    });
    guard("pullbacks", [&] {
      expect("pullback-c2", d_.c2.f == d_.d && d_.c2.g == d_.c && cat_.compose(d_.d, p1) == cat_.compose(d_.c, p2),
             {cat_.object_name(d_.c2.apex)}, "C2 is not a square over (d, c)");
      expect("pullback-c3",
             d_.c3.f == p2 && d_.c3.g == p1 && cat_.compose(p2, d_.c3.p1) == cat_.compose(p1, d_.c3.p2),
             {cat_.object_name(d_.c3.apex)}, "C3 is not a square over (p2, p1)");
      if (cat_.is_table()) {
        if (!is_pullback(cat_, d_.c2)) throw Error(Errc::missing_pullback, "C2 is not a pullback");
        if (!is_pullback(cat_, d_.c3)) throw Error(Errc::missing_pullback, "C3 is not a pullback");
      }
    });
    PseudocategoryFrame f;
    try {
      f = build_frame(cat_, d_, opts_.c4);
    } catch (const Error&) {
      return;  // reported by run()
    }
    auto typed = [&](const std::string& what, CellId x, MorphismId dom, MorphismId cod) {
      guard(what, [&] {
        expect(what, h_.dom(x) == dom && h_.cod(x) == cod, {h_.cell_name(x)},
               "expected " + name(dom) + " => " + name(cod) + ", got " + name(h_.dom(x)) + " => " + name(h_.cod(x)));
      });
    };
    typed("alpha-typing", d_.alpha, cat_.compose(d_.m, f.m1), cat_.compose(d_.m, f.m2));
    typed("lambda-typing", d_.lambda, cat_.compose(d_.m, f.e2), one1);
    typed("rho-typing", d_.rho, cat_.compose(d_.m, f.e1), one1);
    auto boundary = [&](const std::string& what, CellId x, MorphismId leg, MorphismId base_of_zero) {
      guard(what, [&] {
        expect(what, h_.lwhisk(leg, x) == h_.zero(base_of_zero), {h_.cell_name(x), name(leg)},
               name(leg) + " whiskered with the cell is not a zero cell");
      });
    };
    boundary("lambda-domain", d_.lambda, d_.d, d_.d);
    boundary("lambda-codomain", d_.lambda, d_.c, d_.c);
    boundary("rho-domain", d_.rho, d_.d, d_.d);
    boundary("rho-codomain", d_.rho, d_.c, d_.c);
    guard("alpha-boundary", [&] {
      boundary("alpha-domain", d_.alpha, d_.d, cat_.compose({d_.d, p2, d_.c3.p2}));
      boundary("alpha-codomain", d_.alpha, d_.c, cat_.compose({d_.c, p1, d_.c3.p1}));
    });
    guard("unitors-agree", [&] {
      expect("unitors-agree", h_.rwhisk(d_.lambda, d_.e) == h_.rwhisk(d_.rho, d_.e),
             {h_.cell_name(d_.lambda), h_.cell_name(d_.rho)}, "lambda e differs from rho e");
    });
    const std::pair<const char*, CellId> cells[] = {{"alpha", d_.alpha}, {"lambda", d_.lambda}, {"rho", d_.rho}};
    for (auto [n, x] : cells)
      guard(std::string(n) + "-invertible", [&] {
        auto inv = h_.negate(x);
        const bool ok = inv && h_.vsum(x, *inv) == h_.zero(h_.cod(x)) && h_.vsum(*inv, x) == h_.zero(h_.dom(x));
        expect(std::string(n) + "-invertible", ok, {h_.cell_name(x)}, "no inverse cell");
      });
  }

  CellId sum(CellId v, CellId u) {
    if (h_.dom(v) != h_.cod(u)) throw SumMismatch{h_.dom(v), h_.cod(u)};
    return h_.vsum(v, u);
  }
  CellId chain(std::initializer_list<CellId> cs) {
    std::vector<CellId> v(cs);
    CellId acc = v.back();
    for (auto it = v.rbegin() + 1; it != v.rend(); ++it) acc = sum(*it, acc);
    return acc;
  }
  CellId neg(CellId x) {
    auto y = h_.negate(x);
    if (!y) throw Error(Errc::not_invertible, h_.cell_name(x));
    return *y;
  }
  // x × y over C2 with zero on C0
  CellId cross(CellId x, CellId y) { return product_cell(h_, d_.c2, d_.c2, x, z0_, y); }

  void equation(const std::string& name, const std::vector<MorphismId>& coords,
                const std::function<std::pair<CellId, CellId>()>& sides) {
    EquationStatus st{name, true, {}, {}};
    try {
      auto [lhs, rhs] = sides();
      if (lhs != rhs) {
        st.holds = false;
        st.witnesses = {h_.cell_name(lhs), h_.cell_name(rhs)};
        st.detail = "sides differ";
        if (h_.cod(lhs) != h_.cod(rhs)) st.detail += " " + disagreement(cat_, h_.cod(lhs), h_.cod(rhs), coords);
      }
    } catch (const SumMismatch& m) {
      st.holds = false;
      st.witnesses = {cat_.morphism_name(m.later_dom), cat_.morphism_name(m.earlier_cod)};
      st.detail = "ill-typed sum " + disagreement(cat_, m.later_dom, m.earlier_cod, coords);
    } catch (const Error& e) {
      st.holds = false;
      st.detail = e.what();
    }
    out_.push_back(std::move(st));
  }

  void naturality(const std::string& name, CellId x) {
    EquationStatus st{name, true, {}, {}};
    try {
      if (h_.enumerable()) {
        if (auto z = naturality_counterexample(h_, x)) {
          st.holds = false;
          st.witnesses = {h_.cell_name(x), h_.cell_name(*z)};
        }
      } else {
        std::vector<CellId> probes = opts_.probes;
        if (probes.empty()) {
          probes = {d_.alpha, d_.lambda, d_.rho, z0_, z1_};
          for (auto m : {d_.d, d_.c, d_.e, d_.m}) probes.push_back(h_.zero(m));
        }
        for (auto z : probes)
          if (h_.target(z) == h_.source(x) && !natural_wrt(h_, x, z)) {
            st.holds = false;
            st.witnesses = {h_.cell_name(x), h_.cell_name(z)};
            break;
          }
      }
      if (!st.holds) st.detail = "not natural with respect to the second cell";
    } catch (const Error& e) {
      st.holds = false;
      st.detail = e.what();
    }
    out_.push_back(std::move(st));
  }

  const TwoCellStructure& h_;
  const FiniteCategory& cat_;
  const PseudocategoryData& d_;
  const CoherenceOptions& opts_;
  PseudocategoryFrame fr_;
  CellId z0_, z1_;
  std::vector<EquationStatus> out_;
};

}  // namespace

PseudocategoryFrame build_frame(const FiniteCategory& cat, const PseudocategoryData& d, Association assoc) {
  PseudocategoryFrame f;
  const auto& c2 = d.c2;
  const auto& c3 = d.c3;
  const auto p1 = c2.p1, p2 = c2.p2, q1 = c3.p1, q2 = c3.p2;
  const auto one1 = cat.identity(d.c1);
  const auto one2 = cat.identity(c2.apex);
  f.e1 = pair(cat, c2, one1, cat.compose(d.e, d.d));
  f.e2 = pair(cat, c2, cat.compose(d.e, d.c), one1);
  f.m1 = pair(cat, c2, cat.compose(p1, q1), cat.compose(d.m, q2));
  f.m2 = pair(cat, c2, cat.compose(d.m, q1), cat.compose(p2, q2));
  f.i0 = pair(cat, c3, cat.compose(f.e1, p1), cat.compose(f.e2, p2));
  f.i1 = pair(cat, c3, one2, cat.compose(f.e1, p2));
  f.i2 = pair(cat, c3, cat.compose(f.e2, p1), one2);

  if (assoc == Association::left) {
    f.c4 = find_pullback(cat, cat.compose(p2, q2), p1);
    const auto r1 = f.c4.p1, r2 = f.c4.p2;
    f.F = cat.compose({p1, q1, r1});
    f.G = cat.compose({p2, q1, r1});
    f.H = cat.compose({p2, q2, r1});
    f.K = cat.compose(p2, r2);
  } else {
    f.c4 = find_pullback(cat, p2, cat.compose(p1, q1));
    const auto r1 = f.c4.p1, r2 = f.c4.p2;
    f.F = cat.compose(p1, r1);
    f.G = cat.compose(p2, r1);
    f.H = cat.compose({p2, q1, r2});
    f.K = cat.compose({p2, q2, r2});
  }
  auto duo = [&](MorphismId x, MorphismId y) { return pair(cat, c2, x, y); };
  auto trio = [&](MorphismId x, MorphismId y, MorphismId z) { return pair(cat, c3, duo(x, y), duo(y, z)); };
  f.first3 = trio(f.F, f.G, f.H);
  f.last3 = trio(f.G, f.H, f.K);
  f.mid_m = trio(f.F, cat.compose(d.m, duo(f.G, f.H)), f.K);
  f.left_m = trio(cat.compose(d.m, duo(f.F, f.G)), f.H, f.K);
  f.right_m = trio(f.F, f.G, cat.compose(d.m, duo(f.H, f.K)));
  f.triple_first = PullbackSquare{f.c4.apex, f.first3, f.K, cat.compose({d.d, p2, q2}), d.c};
  f.triple_last = PullbackSquare{f.c4.apex, f.F, f.last3, d.d, cat.compose({d.c, p1, q1})};
  return f;
}

std::vector<EquationStatus> evaluate_coherence(const TwoCellStructure& h, const PseudocategoryData& data,
                                               const CoherenceOptions& opts) {
  return Evaluator(h, data, opts).run();
}

ValidationReport check_pseudocategory(const TwoCellStructure& h, const PseudocategoryData& data,
                                      const CoherenceOptions& opts) {
  ValidationReport r;
  for (auto& st : evaluate_coherence(h, data, opts))
    if (!st.holds) r.add(st.name, st.witnesses, st.detail);
  return r;
}

PseudocategoryData internal_category_frame(const FiniteCategory& sets, const InternalCategory& ic) {
  const int n0 = static_cast<int>(ic.objects.size()), n1 = static_cast<int>(ic.arrows.size());
  auto cat = sets;
  auto c0 = plain_carrier({n0});
  c0->set_labels(0, ic.objects);
  auto c1 = plain_carrier({n1});
  c1->set_labels(0, ic.arrows);
  PseudocategoryData d;
  d.c0 = cat.add_object(ic.name + "0", c0);
  d.c1 = cat.add_object(ic.name + "1", c1);
  d.d = cat.intern(d.c1, d.c0, Graph{ic.dom}, ic.name + ".d");
  d.c = cat.intern(d.c1, d.c0, Graph{ic.cod}, ic.name + ".c");
  d.e = cat.intern(d.c0, d.c1, Graph{ic.unit}, ic.name + ".e");
  d.c2 = find_pullback(cat, d.d, d.c);
  const auto& c2 = cat.carrier(d.c2.apex);
  std::vector<int> m(c2.size(0));
  for (int i = 0; i < c2.size(0); ++i) {
    auto [f, g] = c2.coords(0, i);
    m[i] = ic.compose(f, g);
    if (m[i] < 0)
      throw Error(Errc::invalid_presentation,
                  "composition undefined on composable pair (" + ic.arrows[f] + ", " + ic.arrows[g] + ")");
  }
  d.m = cat.intern(d.c2.apex, d.c1, Graph{m}, ic.name + ".m");
  d.c3 = find_pullback(cat, d.c2.p2, d.c2.p1);
  return d;
}

// ---------------------------------------------------------------- group case

FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.size(), nh = h.size();
  std::vector<std::string> labels;
  std::vector<int> table(static_cast<std::size_t>(ng * nh) * (ng * nh));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) labels.push_back("(" + g.elements[a] + "," + h.elements[b] + ")");
  for (int x = 0; x < ng * nh; ++x)
    for (int y = 0; y < ng * nh; ++y)
      table[static_cast<std::size_t>(x) * (ng * nh) + y] = g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
  return FiniteGroup::from_table(g.name + "x" + h.name, std::move(labels), std::move(table));
}

GroupPseudocategory build_group_pseudocategory(const CrossedModule& xm, int delta) {
  const auto& X = xm.top;
  const auto& B = xm.bottom;
  if (delta < 0 || delta >= X.size()) throw Error(Errc::invalid_presentation, "delta is not an element of X");
  // delta is checked before the crossed-module axioms so that its own
  // failures are reported as such
  if (!X.is_central(delta)) throw Error(Errc::delta_not_central, "delta = " + X.elements[delta]);
  if (xm.boundary.at(delta) != B.unit) throw Error(Errc::delta_not_in_kernel, "delta = " + X.elements[delta]);
  auto report = xm.validate();
  if (!report.empty()) throw Error(Errc::invalid_presentation, "crossed module " + xm.name + ": " + report.findings()[0].axiom);

  // X ⋊ B: (x, b)(x', b') = (x (b·x'), b b'), index x * |B| + b
  const int nx = X.size(), nb = B.size(), n = nx * nb;
  std::vector<std::string> labels;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < nx; ++x)
    for (int b = 0; b < nb; ++b) labels.push_back("(" + X.elements[x] + "," + B.elements[b] + ")");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int x = u / nb, b = u % nb, x2 = v / nb, b2 = v % nb;
      table[static_cast<std::size_t>(u) * n + v] = X.mul(x, xm.act(b, x2)) * nb + B.mul(b, b2);
    }
  const auto semi = FiniteGroup::from_table(X.name + "|x" + B.name, std::move(labels), std::move(table));

  auto cat = FiniteCategory::extensional();
  PseudocategoryData d;
  auto c0car = group_carrier(B);
  auto c1car = group_carrier(semi);
  d.c0 = cat.add_object("C0", c0car);
  d.c1 = cat.add_object("C1", c1car);
  std::vector<int> dg(n), cg(n), eg(nb);
  for (int u = 0; u < n; ++u) {
    dg[u] = u % nb;
    cg[u] = B.mul(xm.boundary[u / nb], u % nb);
  }
  for (int b = 0; b < nb; ++b) eg[b] = X.unit * nb + b;
  d.d = cat.intern(d.c1, d.c0, Graph{dg}, "d");
  d.c = cat.intern(d.c1, d.c0, Graph{cg}, "c");
  d.e = cat.intern(d.c0, d.c1, Graph{eg}, "e");
  d.c2 = find_pullback(cat, d.d, d.c);
  const auto& c2 = cat.carrier(d.c2.apex);
  std::vector<int> mg(c2.size(0));
  const int dinv = X.inv(delta);
  for (int i = 0; i < c2.size(0); ++i) {
    auto [later, earlier] = c2.coords(0, i);
    const int x2 = later / nb, x = earlier / nb, b = earlier % nb;
    // x' + x - delta + b·delta
    mg[i] = X.mul(X.mul(X.mul(x2, x), dinv), xm.act(b, delta)) * nb + b;
  }
  d.m = cat.intern(d.c2.apex, d.c1, Graph{mg}, "m");
  d.c3 = find_pullback(cat, d.c2.p2, d.c2.p1);

  auto h = std::make_shared<ConjugationStructure>(cat);
  const auto frame = build_frame(cat, d, Association::left);
  const int shift = delta * nb + B.unit;  // (delta, 0)
  d.rho = h->make(cat.compose(d.m, frame.e1), {shift});
  d.lambda = h->make(cat.compose(d.m, frame.e2), {shift});
  d.alpha = h->zero(cat.compose(d.m, frame.m1));
  return GroupPseudocategory{cat, h, d};
}

// ---------------------------------------------------------------- additive case

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex s;
  s.name = a.name + "+" + b.name;
  for (int k = 0; k < 3; ++k) s.groups[k] = product_group(a.groups[k], b.groups[k]);
  auto lift = [&](const std::vector<int>& da, const std::vector<int>& db, int from) {
    const int nb = b.groups[from].size(), nb_to = b.groups[from - 1].size();
    std::vector<int> out;
    for (int x = 0; x < a.groups[from].size(); ++x)
      for (int y = 0; y < nb; ++y) out.push_back(da[x] * nb_to + db[y]);
    return out;
  };
  s.d2 = lift(a.d2, b.d2, 2);
  s.d1 = lift(a.d1, b.d1, 1);
  return s;
}

namespace {

// Degree-wise boundary D(t) = t d + d t of homotopy data t: S -> T.
std::array<std::vector<int>, 3> boundary_of(const ChainComplex& s, const ChainComplex& t, const HomotopyData& h) {
  std::array<std::vector<int>, 3> out;
  for (int x = 0; x < s.groups[2].size(); ++x) out[2].push_back(h.t2[s.d2[x]]);
  for (int x = 0; x < s.groups[1].size(); ++x) out[1].push_back(t.groups[1].mul(h.t1[s.d1[x]], t.d2[h.t2[x]]));
  for (int x = 0; x < s.groups[0].size(); ++x) out[0].push_back(t.d1[h.t1[x]]);
  return out;
}

void check_sizes(const ChainComplex& s, const ChainComplex& t, const HomotopyData& h, const char* what) {
  auto in_range = [](const std::vector<int>& v, int n, int m) {
    if (static_cast<int>(v.size()) != n) return false;
    for (int x : v)
      if (x < 0 || x >= m) return false;
    return true;
  };
  if (!in_range(h.t2, s.groups[1].size(), t.groups[2].size()) || !in_range(h.t1, s.groups[0].size(), t.groups[1].size()))
    throw Error(Errc::invalid_presentation, std::string(what) + ": homotopy tables have the wrong shape");
}

}  // namespace

AdditivePseudocategory build_additive_pseudocategory(const ChainComplex& a, const ChainComplex& b,
                                                     const ChainMapData& hmap, const HomotopyData& lambda,
                                                     const HomotopyData& rho, const HomotopyData& eta) {
  for (const auto* c : {&a, &b}) {
    auto r = c->validate();
    if (!r.empty()) throw Error(Errc::invalid_presentation, "complex " + c->name + ": " + r.findings()[0].axiom);
  }
  for (int k = 0; k < 3; ++k)
    if (static_cast<int>(hmap.maps[k].size()) != a.groups[k].size())
      throw Error(Errc::invalid_presentation, "h: wrong table size in degree " + std::to_string(k));
  for (int x = 0; x < a.groups[2].size(); ++x)
    if (b.d2[hmap.maps[2][x]] != hmap.maps[1][a.d2[x]]) throw Error(Errc::invalid_presentation, "h is not a chain map");
  for (int x = 0; x < a.groups[1].size(); ++x)
    if (b.d1[hmap.maps[1][x]] != hmap.maps[0][a.d1[x]]) throw Error(Errc::invalid_presentation, "h is not a chain map");
  check_sizes(a, a, lambda, "lambda");
  check_sizes(a, a, rho, "rho");
  check_sizes(b, a, eta, "eta");
  // h kills lambda, rho and eta
  const std::pair<const char*, const HomotopyData*> sides[] = {{"lambda", &lambda}, {"rho", &rho}, {"eta", &eta}};
  for (auto [n, t] : sides) {
    for (int v : t->t2)
      if (hmap.maps[2][v] != b.groups[2].unit) throw Error(Errc::side_condition_violation, std::string("h ") + n + " != 0");
    for (int v : t->t1)
      if (hmap.maps[1][v] != b.groups[1].unit) throw Error(Errc::side_condition_violation, std::string("h ") + n + " != 0");
  }

  const auto sum = direct_sum(a, b);
  auto cat = FiniteCategory::extensional();
  PseudocategoryData d;
  d.c0 = cat.add_object("C0", complex_carrier(b));
  d.c1 = cat.add_object("C1", complex_carrier(sum));
  const auto ob_a = cat.add_object("A", complex_carrier(a));
  auto idx = [&](int k, int x, int y) { return x * b.groups[k].size() + y; };
  auto afst = [&](int k, int v) { return v / b.groups[k].size(); };
  auto bsnd = [&](int k, int v) { return v % b.groups[k].size(); };
  Graph dg(3), cg(3), eg(3);
  for (int k = 0; k < 3; ++k) {
    const auto& A = a.groups[k];
    const auto& B = b.groups[k];
    for (int v = 0; v < sum.groups[k].size(); ++v) {
      dg[k].push_back(bsnd(k, v));
      cg[k].push_back(B.mul(hmap.maps[k][afst(k, v)], bsnd(k, v)));
    }
    for (int y = 0; y < B.size(); ++y) eg[k].push_back(idx(k, A.unit, y));
  }
  d.d = cat.intern(d.c1, d.c0, dg, "d");
  d.c = cat.intern(d.c1, d.c0, cg, "c");
  d.e = cat.intern(d.c0, d.c1, eg, "e");
  d.c2 = find_pullback(cat, d.d, d.c);

  const auto Dl = boundary_of(a, a, lambda);
  const auto Dr = boundary_of(a, a, rho);
  const auto De = boundary_of(b, a, eta);
  const auto& c2 = cat.carrier(d.c2.apex);
  Graph mg(3);
  for (int k = 0; k < 3; ++k) {
    const auto& A = a.groups[k];
    for (int i = 0; i < c2.size(k); ++i) {
      auto [later, earlier] = c2.coords(k, i);
      const int u = afst(k, later), v = afst(k, earlier), y = bsnd(k, earlier);
      // (1 - D rho) u + (1 - D lambda) v - D eta y
      int x = A.mul(u, A.inv(Dr[k][u]));
      x = A.mul(x, A.mul(v, A.inv(Dl[k][v])));
      x = A.mul(x, A.inv(De[k][y]));
      mg[k].push_back(idx(k, x, y));
    }
  }
  d.m = cat.intern(d.c2.apex, d.c1, mg, "m");
  d.c3 = find_pullback(cat, d.c2.p2, d.c2.p1);

  auto h = std::make_shared<HomotopyStructure>(cat);
  const auto frame = build_frame(cat, d, Association::left);
  auto unitor = [&](const HomotopyData& t, MorphismId source) {
    HomotopyData out;
    for (int v = 0; v < sum.groups[1].size(); ++v)
      out.t2.push_back(idx(2, a.groups[2].mul(t.t2[afst(1, v)], eta.t2[bsnd(1, v)]), b.groups[2].unit));
    for (int v = 0; v < sum.groups[0].size(); ++v)
      out.t1.push_back(idx(1, a.groups[1].mul(t.t1[afst(0, v)], eta.t1[bsnd(0, v)]), b.groups[1].unit));
    return h->make_homotopy(source, out);
  };
  d.lambda = unitor(lambda, cat.compose(d.m, frame.e2));
  d.rho = unitor(rho, cat.compose(d.m, frame.e1));

  // alpha on (f, g, k) is alpha i1 on (f, g) plus alpha i2 on (1, k): both
  // determined by the triangle equations, and alpha is additive.
  auto inv = [&](CellId x) { return inverse(*h, x); };
  const auto z0 = h->zero(cat.identity(d.c0));
  const auto z1 = h->zero(cat.identity(d.c1));
  const auto zero_rho = product_cell(*h, d.c2, d.c2, z1, z0, d.rho);
  const auto lambda_zero = product_cell(*h, d.c2, d.c2, d.lambda, z0, z1);
  const auto ai1 = h->vsum(inv(h->rwhisk(d.rho, d.m)), h->lwhisk(d.m, zero_rho));
  const auto ai2 = h->vsum(inv(h->lwhisk(d.m, lambda_zero)), h->rwhisk(d.lambda, d.m));
  const auto t_i1 = h->homotopy(ai1);
  const auto t_i2 = h->homotopy(ai2);
  const auto& c3 = cat.carrier(d.c3.apex);
  auto alpha_at = [&](int k, int z, const std::vector<int>& ti1, const std::vector<int>& ti2) {
    // coordinates (u1, u2, u3, y) of the triple
    auto [qa, qb] = c3.coords(k, z);
    auto [f, g] = c2.coords(k, qa);
    auto [g2, l] = c2.coords(k, qb);
    (void)g2;
    const int u1 = afst(k, f), u2 = afst(k, g), u3 = afst(k, l), y = bsnd(k, l);
    const auto& A = a.groups[k];
    const auto& B = b.groups[k];
    auto enc2 = [&](int u, int v, int w) {
      const int earlier = idx(k, v, w);
      const int later = idx(k, u, B.mul(hmap.maps[k][v], w));
      return c2.element(k, later, earlier);
    };
    const auto& S = sum.groups[k + 1];
    return S.mul(ti1[enc2(u1, u2, y)], ti2[enc2(A.unit, u3, B.unit)]);
  };
  HomotopyData ta;
  for (int z = 0; z < c3.size(1); ++z) ta.t2.push_back(alpha_at(1, z, t_i1.t2, t_i2.t2));
  for (int z = 0; z < c3.size(0); ++z) ta.t1.push_back(alpha_at(0, z, t_i1.t1, t_i2.t1));
  d.alpha = h->make_homotopy(cat.compose(d.m, frame.m1), ta);
  return AdditivePseudocategory{cat, h, d, ob_a, d.c0};
}

}  // namespace sesq
