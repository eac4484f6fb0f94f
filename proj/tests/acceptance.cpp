// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sesq/cartesian.hpp"
#include "sesq/constructions.hpp"
#include "sesq/error.hpp"
#include "sesq/naturality.hpp"
#include "sesq/naturalize.hpp"
#include "sesq/pseudocat.hpp"
#include "sesq/specio.hpp"

using namespace sesq;

namespace {

struct Named {
  std::string name;
  std::shared_ptr<const TwoCellStructure> h;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::shared_ptr<TableStructure> shifted_action(const FiniteCategory& cat) {
  // cells (x, f): f => f shifted by x in the BZ2 coordinate
  ActionPresentation p;
  for (auto a : cat.objects())
    for (auto b : cat.objects()) p.monoids[{a.value, b.value}] = FiniteGroup::cyclic(2).as_monoid();
  p.left = [](MorphismId, ObjectId, int x) { return x; };
  p.right = [](ObjectId, int x, MorphismId) { return x; };
  p.act = [&cat](ObjectId, ObjectId, int x, MorphismId f) {
    auto name = cat.morphism_name(f);
    const int g = (name.back() - '0' + x) % 2;
    name.back() = static_cast<char>('0' + g);
    return *cat.find_morphism(name);
  };
  return from_action(cat, p);
}

std::vector<Named> table_fixtures() {
  std::vector<Named> out;
  const auto lattice = fixtures::lattice_times_bz2();
  out.push_back({"discrete(lattice x BZ2)", discrete(lattice)});
  out.push_back({"codiscrete(lattice x BZ2)", codiscrete(lattice)});
  out.push_back({"from_action(lattice x BZ2)", shifted_action(lattice)});
  const std::vector<FiniteGroup> groups{FiniteGroup::cyclic(2), FiniteGroup::cyclic(4), FiniteGroup::symmetric3()};
  out.push_back({"grp_conjugation[Z2,Z4,S3]", grp_conjugation(groups).structure});
  const std::vector<CrossedModule> xmods{fixtures::xmod_inversion(), fixtures::xmod_identity()};
  out.push_back({"xmod_derivations[XB,XC]", xmod_derivations(xmods).table.structure});
  const std::vector<ChainComplex> complexes{ChainComplex::f3(), ChainComplex::z4()};
  out.push_back({"chain_homotopies[F3,C4]", chain_homotopies(complexes).table.structure});
  const std::vector<InternalCategory> ics{InternalCategory::from_group(FiniteGroup::cyclic(2)),
                                          InternalCategory::arrow_poset()};
  out.push_back({"internal_transformations[BZ2,I2]", internal_transformations(ics).table.structure});
  out.push_back({"one_object[F1]", fixtures::f1().structure});
  out.push_back({"one_object[F2]", fixtures::f2().structure});
  return out;
}

const TableStructure& as_table(const TwoCellStructure& h) { return dynamic_cast<const TableStructure&>(h); }

// ---------------------------------------------------------------- 1

bool criterion1(std::ostream& log) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (const auto& f : table_fixtures()) {
    auto r = validate_category(f.h->base());
    r.merge(validate_structure(*f.h));
    log << "  " << f.name << ": " << f.h->all_cells().size() << " cells, " << r.size() << " findings\n";
    ok &= r.empty();
  }
  const double dt = seconds_since(t0);
  log << "  total " << dt << " s\n";
  return ok && dt < 10.0;
}

// ---------------------------------------------------------------- 2

bool criterion2(std::ostream& log) {
  std::mt19937 rng(20240601);
  bool ok = true;
  for (const auto& f : table_fixtures()) {
    const auto& base = f.h->base().tables();
    const auto& cells = as_table(*f.h).tables();
    if (!oracle::category_failure(base).empty() || !oracle::structure_failure(base, cells).empty()) {
      log << "  " << f.name << ": oracle rejects the unmutated fixture\n";
      ok = false;
      continue;
    }
    int breaking = 0, detected = 0, extra = 0;
    for (int i = 0; i < 50; ++i) {
      auto c = base;
      auto t = cells;
      const int nm = static_cast<int>(c.morphisms.size()), nc = static_cast<int>(t.cells.size());
      auto fresh = [&](int old, int n) {
        std::uniform_int_distribution<int> d(-1, n - 1);
        int v;
        do v = d(rng);
        while (v == old);
        return v;
      };
      auto mutate_map = [&](std::map<std::pair<int, int>, int>& m) {
        auto it = m.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, m.size() - 1)(rng));
        const int v = fresh(it->second, nc);
        if (v < 0) m.erase(it);
        else it->second = v;
      };
      switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: {
          std::vector<std::size_t> defined;
          for (std::size_t k = 0; k < c.composition.size(); ++k)
            if (c.composition[k] >= 0) defined.push_back(k);
          const auto k = defined[std::uniform_int_distribution<std::size_t>(0, defined.size() - 1)(rng)];
          c.composition[k] = fresh(c.composition[k], nm);
          break;
        }
        case 1: mutate_map(t.vsum); break;
        case 2: mutate_map(t.lwhisk); break;
        default: mutate_map(t.rwhisk); break;
      }
      const bool broken = !oracle::category_failure(c).empty() || !oracle::structure_failure(c, t).empty();
      bool flagged;
      try {
        auto cat = FiniteCategory::from_tables(c);
        TableStructure h(cat, t);
        flagged = !validate_category(cat).empty() || !validate_structure(h).empty();
      } catch (const std::exception& e) {
        log << "  " << f.name << ": checker threw " << e.what() << "\n";
        flagged = false;
      }
      breaking += broken;
      detected += broken && flagged;
      extra += !broken && flagged;
    }
    log << "  " << f.name << ": 50 mutations, " << breaking << " break an axiom, " << detected << " detected";
    if (extra) log << ", " << extra << " flagged without breaking";
    log << "\n";
    ok &= detected == breaking;
  }
  return ok;
}

// ---------------------------------------------------------------- 3

bool criterion3(std::ostream& log) {
  bool ok = true;
  for (const auto& f : table_fixtures()) {
    const auto& h = *f.h;
    const auto v = two_category_verdict(h, 0);
    std::size_t exhaustive = 0;
    for (auto x : h.all_cells())
      for (auto z : h.all_cells())
        if (h.target(z) == h.source(x) && !natural_wrt(h, x, z)) ++exhaustive;
    const auto raw = oracle::non_natural_pairs(h.base().tables(), as_table(h).tables());
    const bool agree = v.holds == (exhaustive == 0) && v.failing_pairs == exhaustive && exhaustive == raw;
    log << "  " << f.name << ": is_two_category=" << v.holds << " failing=" << v.failing_pairs
        << " exhaustive=" << exhaustive << " raw=" << raw << "\n";
    ok &= agree;
  }
  const auto f2 = fixtures::f2();
  const auto s3 = oracle::noncommuting_pairs(FiniteGroup::symmetric3());
  const auto count = two_category_verdict(*f2.structure, 0).failing_pairs;
  log << "  F2 failing pairs " << count << ", noncommuting ordered pairs in S3 " << s3 << "\n";
  return ok && count == s3;
}

// ---------------------------------------------------------------- 4

bool criterion4(std::ostream& log) {
  const std::vector<InternalCategory> ics{InternalCategory::from_group(FiniteGroup::cyclic(2)),
                                          InternalCategory::arrow_poset()};
  const auto b = internal_transformations(ics);
  const auto& table = *b.table.structure;
  std::size_t cells = 0, agree = 0, internal = 0, probes_ok = 0;
  for (auto a : b.objects)
    for (auto x : table.all_cells()) {
      if (b.table.object_origin[table.source(x).value] != a) continue;
      const auto t = b.table.cell_origin[x.value];
      ++cells;
      const bool in = is_internal_natural(*b.lazy, t);
      agree += in == natural_wrt(*b.lazy, t, arrow_cell(b, a));
      if (!in) continue;
      ++internal;
      bool all = true;
      for (auto z : table.all_cells())
        if (table.target(z) == table.source(x)) all &= natural_wrt(table, x, z);
      probes_ok += all;
    }
  log << "  " << cells << " cells, " << agree << " agree with naturality against the arrow cell; " << internal
      << " internally natural, " << probes_ok << " natural against every probe\n";
  return cells > 0 && agree == cells && probes_ok == internal;
}

// ---------------------------------------------------------------- 5

oracle::Complex oracle_complex(const ChainComplex& c) {
  return oracle::Complex{{c.groups[0].size(), c.groups[1].size(), c.groups[2].size()}, c.d2, c.d1};
}

bool criterion5(std::ostream& log) {
  const std::vector<ChainComplex> complexes{ChainComplex::f3()};
  const auto b = chain_homotopies(complexes);
  const auto& lazy = dynamic_cast<const HomotopyStructure&>(*b.lazy);
  const auto& table = *b.table.structure;
  const auto f3 = oracle_complex(complexes[0]);
  std::size_t pairs = 0, equal = 0, nonzero = 0;
  for (auto x : table.all_cells())
    for (auto y : table.all_cells()) {
      if (table.target(y) != table.source(x)) continue;
      ++pairs;
      const auto c = commutator(table, x, y);
      const auto got = lazy.homotopy(b.table.cell_origin[c.value]);
      const auto want = oracle::commutator_closed_form(f3, f3, f3, {lazy.homotopy(b.table.cell_origin[x.value]).t2,
                                                                    lazy.homotopy(b.table.cell_origin[x.value]).t1},
                                                       {lazy.homotopy(b.table.cell_origin[y.value]).t2,
                                                        lazy.homotopy(b.table.cell_origin[y.value]).t1});
      equal += got.t2 == want.t2 && got.t1 == want.t1;
      bool nz = false;
      for (int v : want.t2) nz |= v != 0;
      for (int v : want.t1) nz |= v != 0;
      nonzero += nz;
    }
  log << "  " << pairs << " composable pairs, " << equal << " match (-t2 s1 d, d t2 s1), " << nonzero << " nonzero\n";
  return pairs > 0 && equal == pairs && nonzero > 0;
}

// ---------------------------------------------------------------- 6

bool criterion6(std::ostream& log) {
  bool ok = true;
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::symmetric3(), FiniteGroup::dihedral4(),
                        FiniteGroup::quaternion8()}) {
    const auto f = one_object(fixtures::trivial_monoid(), g);
    const auto n = naturalize(*f.structure);
    const int want = oracle::abelianization_order(g);
    log << "  " << g.name << ": naturalization has " << n.structure->cell_count() << " cells, abelianization order "
        << want << "\n";
    ok &= static_cast<int>(n.structure->cell_count()) == want;
  }
  const auto h = fixtures::f2();
  const auto k = fixtures::f1();
  const auto s3 = FiniteGroup::symmetric3();
  CellMap sign, bogus;
  for (auto x : h.structure->all_cells()) {
    const auto name = h.structure->cell_name(x);
    const bool odd = name.rfind("[s", 0) == 0;
    sign[x] = *k.structure->find_cell(odd ? "[1|e]" : "[0|e]");
    bogus[x] = *k.structure->find_cell(name == "[s12|e]" ? "[1|e]" : "[0|e]");
  }
  const bool refl = check_reflection_property(*h.structure, *k.structure, sign);
  const bool rejects = !check_reflection_property(*h.structure, *k.structure, bogus);
  log << "  S3 -> Z2 sign map factors: " << refl << "; non-homomorphism rejected: " << rejects << "\n";
  return ok && refl && rejects;
}

// ---------------------------------------------------------------- 7

CellTables delete_cell(const CellTables& t, int victim) {
  CellTables out;
  auto re = [&](int x) { return x < victim ? x : x - 1; };
  for (int i = 0; i < static_cast<int>(t.cells.size()); ++i)
    if (i != victim) out.cells.push_back(t.cells[i]);
  for (int z : t.zero) out.zero.push_back(z == victim ? -1 : re(z));
  for (const auto& [k, w] : t.vsum)
    if (k.first != victim && k.second != victim && w != victim) out.vsum[{re(k.first), re(k.second)}] = re(w);
  for (const auto& [k, w] : t.lwhisk)
    if (k.second != victim && w != victim) out.lwhisk[{k.first, re(k.second)}] = re(w);
  for (const auto& [k, w] : t.rwhisk)
    if (k.first != victim && w != victim) out.rwhisk[{re(k.first), k.second}] = re(w);
  return out;
}

bool criterion7(std::ostream& log) {
  const auto cat = fixtures::lattice_times_bz2();
  const auto d = is_cartesian(*discrete(cat));
  const auto c = is_cartesian(*codiscrete(cat));
  log << "  discrete: " << d.size() << " findings; codiscrete: " << c.size() << " findings\n";
  const auto sq = find_pullback(cat, *cat.find_morphism("a1_0"), *cat.find_morphism("b1_0"));
  const auto full = codiscrete(cat);
  int victim = -1;
  for (auto x : full->cells(sq.apex, sq.apex))
    if (full->dom(x) != full->cod(x)) {
      victim = x.value;
      break;
    }
  TableStructure cut(cat, delete_cell(full->tables(), victim));
  const auto r = is_cartesian(cut);
  log << "  deleted " << full->cell_name(CellId(victim)) << " over apex " << cat.object_name(sq.apex) << ": "
      << r.size() << " findings";
  if (!r.empty()) {
    log << ", first " << r.findings()[0].axiom << " [";
    for (const auto& w : r.findings()[0].witnesses) log << w << " ";
    log << "]";
  }
  log << "\n";
  return d.empty() && c.empty() && !r.empty() && !r.findings()[0].witnesses.empty();
}

// ---------------------------------------------------------------- 8

bool all_hold(const std::vector<EquationStatus>& eqs, std::ostream& log, const std::string& label) {
  bool ok = true;
  for (const auto& e : eqs)
    if (!e.holds) {
      ok = false;
      log << "  " << label << ": " << e.name << " fails " << e.detail << "\n";
    }
  return ok;
}

bool criterion8(std::ostream& log) {
  bool ok = true;
  auto sets = FiniteCategory::extensional();
  {
    auto d = internal_category_frame(sets, InternalCategory::from_group(FiniteGroup::cyclic(2)));
    DiscreteStructure h(sets);
    const auto fr = build_frame(sets, d, Association::left);
    d.alpha = h.zero(sets.compose(d.m, fr.m1));
    d.lambda = h.zero(sets.compose(d.m, fr.e2));
    d.rho = h.zero(sets.compose(d.m, fr.e1));
    const bool n = all_hold(evaluate_coherence(h, d, {CoherenceMode::natural}), log, "BZ2 discrete natural");
    const bool nn = all_hold(evaluate_coherence(h, d, {CoherenceMode::non_natural}), log, "BZ2 discrete non-natural");
    log << "  BZ2 under discrete: natural " << n << ", non-natural " << nn << "\n";
    ok &= n && nn;
  }
  {
    // precategories: composition need not be associative or unital
    auto twisted = InternalCategory::from_group(FiniteGroup::cyclic(3));
    twisted.name = "P";
    twisted.comp = {0, 2, 1, 1, 0, 2, 2, 1, 0};  // a - b
    auto bs3 = InternalCategory::from_group(FiniteGroup::symmetric3());
    for (const auto& ic : {twisted, InternalCategory::arrow_poset(), bs3}) {
      auto d = internal_category_frame(sets, ic);
      CodiscreteStructure h(sets);
      const auto fr = build_frame(sets, d, Association::left);
      const auto one = sets.identity(d.c1);
      d.alpha = h.make(sets.compose(d.m, fr.m2), sets.compose(d.m, fr.m1));
      d.lambda = h.make(one, sets.compose(d.m, fr.e2));
      d.rho = h.make(one, sets.compose(d.m, fr.e1));
      const bool n = all_hold(evaluate_coherence(h, d, {CoherenceMode::natural}), log, ic.name + " codiscrete");
      const bool nn = all_hold(evaluate_coherence(h, d, {CoherenceMode::non_natural}), log, ic.name + " codiscrete");
      log << "  " << ic.name << " under codiscrete: natural " << n << ", non-natural " << nn << "\n";
      ok &= n && nn;
    }
  }
  {
    // on two elements every unital magma is associative, so break a 3-element one
    auto ic = InternalCategory::from_group(FiniteGroup::cyclic(3));
    ic.name = "M";
    ic.comp = {0, 1, 2, 1, 1, 0, 2, 0, 0};
    auto d = internal_category_frame(sets, ic);
    DiscreteStructure h(sets);
    const auto fr = build_frame(sets, d, Association::left);
    d.alpha = h.zero(sets.compose(d.m, fr.m1));
    d.lambda = h.zero(sets.compose(d.m, fr.e2));
    d.rho = h.zero(sets.compose(d.m, fr.e1));
    bool pentagon_fails = false;
    std::vector<std::string> witness;
    for (const auto& e : evaluate_coherence(h, d, {CoherenceMode::natural}))
      if (e.name == "pentagon" && !e.holds) {
        pentagon_fails = true;
        witness = e.witnesses;
      }
    log << "  non-associative m under discrete: pentagon fails " << pentagon_fails << ", witness [";
    for (const auto& w : witness) log << w << " ";
    log << "]\n";
    ok &= pentagon_fails && !witness.empty();
  }
  return ok;
}

// ---------------------------------------------------------------- 9

bool criterion9(std::ostream& log) {
  const auto g = build_group_pseudocategory(fixtures::xmod_inversion(), 1);
  const bool passes = all_hold(evaluate_coherence(*g.structure, g.data, {CoherenceMode::non_natural}), log, "Z3/Z2");
  const auto s3 = FiniteGroup::symmetric3();
  const auto one = FiniteGroup::cyclic(1);
  CrossedModule x{"XS", s3, one, std::vector<int>(6, 0), {0, 1, 2, 3, 4, 5}};
  std::string raised = "nothing";
  try {
    build_group_pseudocategory(x, *s3.find("s12"));
  } catch (const Error& e) {
    raised = std::string(to_string(e.code()));
  }
  log << "  X=Z3, B=Z2, delta=1 non-natural: " << passes << "; X=S3, B=1, delta=(12) raises " << raised << "\n";
  return passes && raised == "DeltaNotCentral";
}

// ---------------------------------------------------------------- 10

struct RandomAdditive {
  std::mt19937& rng;

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  // a random homomorphism Z_m -> Z_n, biased away from zero
  std::vector<int> hom(int m, int n) {
    std::vector<int> valid;
    for (int c = 1; c < n; ++c)
      if ((c * m) % n == 0) valid.push_back(c);
    const int c = valid.empty() || pick(4) == 0 ? 0 : valid[pick(static_cast<int>(valid.size()))];
    std::vector<int> v(m);
    for (int x = 0; x < m; ++x) v[x] = (c * x) % n;
    return v;
  }

  static std::vector<int> after(const std::vector<int>& g, const std::vector<int>& f) {
    std::vector<int> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
    return r;
  }
  static bool is_zero(const std::vector<int>& v) {
    for (int x : v)
      if (x) return false;
    return true;
  }

  ChainComplex complex(const std::string& name, int order) {
    while (true) {
      ChainComplex c;
      c.name = name;
      for (int k = 0; k < 3; ++k) c.groups[k] = FiniteGroup::cyclic(order);
      c.d2 = hom(c.groups[2].size(), c.groups[1].size());
      c.d1 = hom(c.groups[1].size(), c.groups[0].size());
      if (is_zero(after(c.d1, c.d2))) return c;
    }
  }
};

struct AdditiveOutcome {
  bool pentagon, identities, oracle_natural, checker_natural;
};

AdditiveOutcome random_additive(RandomAdditive& gen, int order) {
  const auto A = gen.complex("A", order);
  const auto B = gen.complex("B", order);
  const int a0 = A.groups[0].size(), a1 = A.groups[1].size(), a2 = A.groups[2].size();
  const int b0 = B.groups[0].size(), b1 = B.groups[1].size();
  std::vector<int> h0;
  do h0 = gen.hom(a0, b0);
  while (!RandomAdditive::is_zero(RandomAdditive::after(h0, A.d1)));
  ChainMapData h{{h0, std::vector<int>(a1, 0), std::vector<int>(a2, 0)}};
  auto homotopy = [&](int s1, int s0) { return HomotopyData{gen.hom(s1, a2), gen.hom(s0, a1)}; };
  const auto lambda = homotopy(a1, a0), rho = homotopy(a1, a0), eta = homotopy(b1, b0);
  const auto p = build_additive_pseudocategory(A, B, h, lambda, rho, eta);
  AdditiveOutcome out{false, false, false, true};
  for (const auto& e : evaluate_coherence(*p.structure, p.data, {CoherenceMode::non_natural})) {
    if (e.name == "pentagon") out.pentagon = e.holds;
    if (e.name.rfind("unitor-naturality", 0) == 0) out.checker_natural &= e.holds;
  }
  const auto oa = oracle_complex(A), ob = oracle_complex(B);
  const oracle::Homotopy l{lambda.t2, lambda.t1}, r{rho.t2, rho.t1}, n{eta.t2, eta.t1};
  out.identities = oracle::additive_identities_hold(oa, ob, {{h.maps[0], h.maps[1], h.maps[2]}}, l, r, n);
  out.oracle_natural = oracle::unitors_natural(oa, ob, l, r, n);
  return out;
}

bool criterion10(std::ostream& log) {
  std::mt19937 rng(7);
  RandomAdditive gen{rng};
  int agree = 0, passing = 0, natural_cases = 0, natural_pass = 0;
  const int total = 20;
  for (int i = 0; i < total; ++i) {
    const auto o = random_additive(gen, 2 + i % 2);
    agree += o.pentagon == o.identities && o.oracle_natural == o.checker_natural;
    passing += o.pentagon;
    natural_cases += o.oracle_natural;
    natural_pass += o.oracle_natural && o.pentagon;
  }
  log << "  " << total << " instances: " << agree << " agree with the five identities and unitor naturality, " << passing
      << " pass the pentagon; " << natural_cases << " have natural unitors, " << natural_pass << " of them pass\n";
  // few random draws have natural unitors, so sample more of those until there are ten
  int extra = 0, extra_pass = 0, extra_agree = 0;
  for (int tries = 0; tries < 5000 && extra < 10; ++tries) {
    const auto o = random_additive(gen, 2 + tries % 2);
    if (!o.oracle_natural) continue;
    ++extra;
    extra_pass += o.pentagon;
    extra_agree += o.pentagon == o.identities && o.checker_natural;
  }
  log << "  resampled: " << extra << " instances with natural unitors, " << extra_pass << " pass the pentagon\n";
  return agree == total && natural_pass == natural_cases && extra == 10 && extra_pass == extra &&
         extra_agree == extra;
}

// ---------------------------------------------------------------- 11

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool structured(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds) {
    if (d.kind != "ParseError" && d.kind != "ResolveError" && d.kind != "BuildError") return false;
    if (d.message.empty() || d.code.empty()) return false;
  }
  return true;
}

bool criterion11(std::ostream& log) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(SESQ_CORPUS_DIR))
    if (e.path().extension() == ".sesq") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  int exact = 0;
  std::vector<std::string> small;
  for (const auto& f : files) {
    const auto text = slurp(f);
    auto p = parse(text);
    if (p.document && serialize(*p.document) == text) ++exact;
    else log << "  round trip differs: " << f.filename() << "\n";
    if (text.size() < 4000) small.push_back(text);
  }
  log << "  corpus: " << exact << "/" << files.size() << " files round-trip bit-exactly\n";

  std::mt19937 rng(11);
  int crashes = 0, unstructured = 0, parsed = 0, loaded = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string s;
    if (i % 2 == 0) {
      s.resize(std::uniform_int_distribution<int>(0, 256)(rng));
      for (auto& c : s) c = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
    } else {
      // corpus text with a few random bytes overwritten, inserted or removed
      s = small[std::uniform_int_distribution<std::size_t>(0, small.size() - 1)(rng)];
      const int edits = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int e = 0; e < edits && !s.empty(); ++e) {
        const auto at = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
        const char byte = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
          case 0: s[at] = byte; break;
          case 1: s.insert(s.begin() + static_cast<long>(at), byte); break;
          default: s.erase(at, 1); break;
        }
      }
    }
    try {
      auto p = parse(s);
      if (!structured(p.diagnostics) || (!p.document && p.diagnostics.empty())) ++unstructured;
      if (!p.document) continue;
      ++parsed;
      const auto canon = serialize(*p.document);
      auto again = parse(canon);
      if (!again.document || serialize(*again.document) != canon) ++unstructured;
      auto l = load(*p.document);
      if (!structured(l.diagnostics) || (!l.spec && l.diagnostics.empty())) ++unstructured;
      loaded += l.spec.has_value();
    } catch (...) {
      ++crashes;
    }
  }
  log << "  fuzz: 10000 inputs, " << parsed << " parsed, " << loaded << " loaded, " << crashes << " escaped exceptions, "
      << unstructured << " unstructured results\n";
  return exact == static_cast<int>(files.size()) && !files.empty() && crashes == 0 && unstructured == 0;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::ostream&)>>> criteria = {
      {"axiom soundness of every builder", criterion1},
      {"mutation kill rate against the brute-force axiom oracle", criterion2},
      {"is_two_category agrees with exhaustive naturality", criterion3},
      {"internal naturality equals naturality against the arrow cell", criterion4},
      {"commutator closed form on F3", criterion5},
      {"naturalization order equals abelianization order", criterion6},
      {"cartesianness of discrete and codiscrete, witness after a deletion", criterion7},
      {"pseudocategory degeneracies", criterion8},
      {"group pseudocategory", criterion9},
      {"additive pentagon against the five identities", criterion10},
      {"DSL round trip and fuzzing", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    bool ok;
    try {
      ok = criteria[i].second(log);
    } catch (const std::exception& e) {
      log << "  exception: " << e.what() << "\n";
      ok = false;
    }
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n"
              << log.str() << std::flush;
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
